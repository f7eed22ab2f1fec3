#pragma once

// Lattice points of fixed norm and fixed height against a timelike vector.
//
// A vector e is written as (k/N) u0 + w with w in u0^perp. The coordinates
// searched are z_j = -(e, c_j) >= 0 for the cone roots c_j and
// z_i = (e, f_i) for a saturated lattice basis f_i of the rest of u0^perp.
// On both real embeddings (w,w) is a positive definite quadratic form in z,
// so a Fincke-Pohst search over the intersection of the two ellipsoids is
// finite. Every candidate leaf is re-verified exactly.

#include <vector>

#include "vinberg/lattice.hpp"

namespace vinberg {

class ShellEnumerator {
 public:
  /// cone: linearly independent lattice vectors orthogonal to u0; results
  /// satisfy (e, c) <= 0 for each of them.
  ShellEnumerator(const GramForm& f, FieldVector u0, std::vector<Vector> cone, unsigned threads = 1);

  /// All e with (e,e) = s, (e,u0) = k and the cone inequalities, sorted
  /// lexicographically. Vectors h in `halfspaces` add (e, h) <= 0; they
  /// also prune the search where that is sound.
  std::vector<Vector> enumerate(const RingElement& s, const FieldElement& k,
                                const std::vector<Vector>& halfspaces = {}) const;

  const FieldElement& basepoint_norm() const { return u0_norm_; }
  const FieldVector& basepoint() const { return u0_; }

  /// Leaves visited by the last enumerate call on this object (diagnostic).
  unsigned long long last_leaf_count() const { return leaves_; }

 private:
  struct Work;
  struct Halfspace {
    const Vector* h;
    long double alpha;               // (e,h) at z = 0
    std::vector<long double> beta;   // d(e,h)/dz_a
    size_t prune_from;               // levels below this are cone levels with beta >= 0
    size_t positive_from;            // ... with beta > 0
  };
  void search(Work& w, int level) const;
  void leaf(Work& w) const;
  bool push_halfspaces(Work& w, size_t level) const;

  const GramForm* form_;
  FieldSpec field_;
  FieldVector u0_;
  FieldElement u0_norm_;
  size_t n_ = 0;     // number of z coordinates (= hyperbolic dimension)
  size_t cone_ = 0;  // leading z coordinates constrained to be >= 0
  unsigned threads_ = 1;

  // e * denom = column 0 * k + sum_a sign_a * z_a * column (a+1)
  RingMatrix scaled_inverse_;
  Integer denom_;

  // q(z) = sum_j d_j (z_j + sum_{i>j} u_ji z_i)^2 on each embedding
  std::vector<long double> d1_, d2_;
  std::vector<std::vector<long double>> u1_, u2_;
  std::vector<std::vector<long double>> m1_;  // q on the identity embedding
  long double omega1_ = 0, omega2_ = 0;

  mutable unsigned long long leaves_ = 0;
};

}  // namespace vinberg
