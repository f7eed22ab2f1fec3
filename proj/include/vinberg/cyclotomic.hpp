#pragma once

// Exact arithmetic in Z[zeta_N], used for Coxeter matrices whose entries
// -2cos(pi/m) do not lie in a supported quadratic field.

#include <vector>

#include "vinberg/ring.hpp"

namespace vinberg {

class CyclotomicField {
 public:
  /// Polynomial in zeta of degree < phi(N).
  using Poly = std::vector<Integer>;

  explicit CyclotomicField(int order);

  int order() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const Poly& minimal_polynomial() const { return phi_; }

  Poly integer(long c) const;
  /// zeta^j + zeta^-j = 2cos(2 pi j / N)
  Poly two_cos(int j) const;

  Poly add(const Poly& x, const Poly& y) const;
  Poly sub(const Poly& x, const Poly& y) const;
  Poly mul(const Poly& x, const Poly& y) const;
  bool is_zero(const Poly& x) const;
  bool equal(const Poly& x, const Poly& y) const { return is_zero(sub(x, y)); }
  /// Image under the automorphism zeta -> zeta^k.
  Poly galois(const Poly& x, int k) const;

  /// Real part of the image under zeta -> exp(2 pi i k / N).
  long double evaluate(const Poly& x, int k) const;
  /// Exact zero test, otherwise a sign certified against the rounding
  /// error of evaluate(); throws when the value is too close to call.
  int sign(const Poly& x, int k) const;
  /// Exponents k in [1, N/2] coprime to N: one per real embedding of the
  /// maximal real subfield.
  std::vector<int> real_embeddings() const;

  /// Determinant by expansion over column subsets (no division).
  Poly determinant(const std::vector<std::vector<Poly>>& m) const;

 private:
  Poly reduce(Poly x) const;
  int n_;
  Poly phi_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, constant term
/// first.
std::vector<Integer> cyclotomic_polynomial(int n);

}  // namespace vinberg
