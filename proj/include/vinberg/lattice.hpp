#pragma once

// Lorentzian lattices O^(n+1) with an exact Gram matrix, roots and
// reflections.

#include <optional>
#include <string>
#include <vector>

#include "vinberg/linalg.hpp"
#include "vinberg/ring.hpp"

namespace vinberg {

using Vector = std::vector<RingElement>;
using FieldVector = std::vector<FieldElement>;

FieldVector to_field(const Vector& v);
std::string to_string(const Vector& v);
std::string to_string(const FieldVector& v);

/// Lexicographic order on the Z-coordinates (a0, b0, a1, b1, ...).
bool lex_less(const Vector& x, const Vector& y);

class GramForm {
 public:
  GramForm() = default;
  /// Throws on a non-square or non-symmetric matrix.
  GramForm(FieldSpec field, RingMatrix gram);
  static GramForm diagonal(FieldSpec field, const std::vector<RingElement>& entries);

  const FieldSpec& field() const { return field_; }
  /// Hyperbolic dimension; the matrix has size n + 1.
  size_t n() const { return gram_.rows() - 1; }
  size_t dim() const { return gram_.rows(); }
  const RingMatrix& gram() const { return gram_; }

  /// Exponent of the discriminant group L*/L (canonical associate).
  const RingElement& invariant_factor_exponent() const { return exponent_; }
  /// Totally positive divisors of 2 * exponent, one per class modulo unit squares.
  const std::vector<RingElement>& root_norms() const { return root_norms_; }

  /// G v
  Vector apply(const Vector& v) const;
  FieldVector apply(const FieldVector& v) const;

 private:
  FieldSpec field_;
  RingMatrix gram_;
  RingElement exponent_;
  std::vector<RingElement> root_norms_;
};

RingElement inner_product(const Vector& u, const Vector& v, const GramForm& f);
FieldElement inner_product(const FieldVector& u, const FieldVector& v, const GramForm& f);
FieldElement inner_product(const Vector& u, const FieldVector& v, const GramForm& f);

struct AdmissibilityReport {
  bool signature_ok = false;
  bool conjugate_definite_ok = false;
  bool admissible() const { return signature_ok && conjugate_definite_ok; }
  std::string reason() const;
};

AdmissibilityReport check_admissible(const GramForm& f);

/// Primitive crystallographic lattice vector of totally positive norm.
class Root {
 public:
  /// Throws unless all three invariants hold.
  Root(Vector e, const GramForm& f);

  const Vector& e() const { return e_; }
  const RingElement& norm() const { return s_; }

 private:
  Vector e_;
  RingElement s_;
};

/// Divides s = (e,e) into 2 (G e)_i for every i. Throws unless s is
/// totally positive.
bool is_crystallographic(const Vector& e, const GramForm& f);
bool is_primitive(const Vector& e);
/// e divided by the canonical gcd of its coordinates.
Vector make_primitive(const Vector& e);

Vector reflect(const Vector& x, const Root& r, const GramForm& f);
FieldVector reflect(const FieldVector& x, const Root& r, const GramForm& f);

/// Every lattice vector e with (e,e) = s and (e,u0) = k, in lexicographic
/// order.
std::vector<Vector> enumerate_fixed_norm_and_height(const GramForm& f, const FieldVector& u0, const RingElement& s,
                                                    const FieldElement& k);

}  // namespace vinberg
