#pragma once

// Independent reference computations used only by the tests.

#include <mpfr.h>

#include <functional>
#include <string>
#include <vector>

#include "vinberg/lattice.hpp"

namespace oracle {

using namespace vinberg;

/// Sign of a + b*w evaluated in 200-bit interval arithmetic; 0 only for the
/// zero element.
inline int interval_sign(const RingElement& x, Embedding which) {
  if (x.is_zero()) return 0;
  const FieldSpec& f = x.field();
  mpfr_t lo, hi, t_lo, t_hi, w_lo, w_hi;
  for (auto* v : {&lo, &hi, &t_lo, &t_hi, &w_lo, &w_hi}) mpfr_init2(*v, 200);
  // w = (1 +- sqrt d)/2 or +- sqrt d
  if (f.is_rational()) {
    mpfr_set_zero(w_lo, 1);
    mpfr_set_zero(w_hi, 1);
  } else {
    mpfr_sqrt_ui(w_lo, static_cast<unsigned long>(f.d()), MPFR_RNDD);
    mpfr_sqrt_ui(w_hi, static_cast<unsigned long>(f.d()), MPFR_RNDU);
    if (which == Embedding::Conjugate) {
      mpfr_neg(t_lo, w_hi, MPFR_RNDD);
      mpfr_neg(t_hi, w_lo, MPFR_RNDU);
      mpfr_swap(w_lo, t_lo);
      mpfr_swap(w_hi, t_hi);
    }
    if (f.omega_trace() == 1) {
      mpfr_add_ui(w_lo, w_lo, 1, MPFR_RNDD);
      mpfr_add_ui(w_hi, w_hi, 1, MPFR_RNDU);
      mpfr_div_ui(w_lo, w_lo, 2, MPFR_RNDD);
      mpfr_div_ui(w_hi, w_hi, 2, MPFR_RNDU);
    }
  }
  // b * w as an interval
  mpfr_t b;
  mpfr_init2(b, 200);
  mpfr_set_z(b, x.b().get_mpz_t(), MPFR_RNDN);
  if (x.b() >= 0) {
    mpfr_mul(t_lo, b, w_lo, MPFR_RNDD);
    mpfr_mul(t_hi, b, w_hi, MPFR_RNDU);
  } else {
    mpfr_mul(t_lo, b, w_hi, MPFR_RNDD);
    mpfr_mul(t_hi, b, w_lo, MPFR_RNDU);
  }
  mpfr_add_z(lo, t_lo, x.a().get_mpz_t(), MPFR_RNDD);
  mpfr_add_z(hi, t_hi, x.a().get_mpz_t(), MPFR_RNDU);
  int s = 2;
  if (mpfr_sgn(lo) > 0) s = 1;
  if (mpfr_sgn(hi) < 0) s = -1;
  for (auto* v : {&lo, &hi, &t_lo, &t_hi, &w_lo, &w_hi, &b}) mpfr_clear(*v);
  return s;  // 2 means undecided at this precision
}

/// Every vector with coordinates a + b*w, |a|,|b| <= box, of the given norm
/// and height.
inline std::vector<Vector> brute_force_shell(const GramForm& f, const FieldVector& u0, const RingElement& s,
                                             const FieldElement& k, long box) {
  const size_t dim = f.dim();
  const bool quad = !f.field().is_rational();
  std::vector<Vector> out;
  Vector e(dim, RingElement(f.field()));
  // Once the remaining coordinates of G u0 vanish the height is fixed.
  const FieldVector gu0 = f.apply(u0);
  size_t settled = dim;
  while (settled > 0 && gu0[settled - 1].is_zero()) --settled;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == settled && i < dim) {
      FieldElement h(RingElement(f.field()));
      for (size_t j = 0; j < i; ++j) h += FieldElement(e[j]) * gu0[j];
      if (!(h == k)) return;
    }
    if (i == dim) {
      if (inner_product(e, e, f) == s && inner_product(e, u0, f) == k) out.push_back(e);
      return;
    }
    for (long a = -box; a <= box; ++a)
      for (long b = quad ? -box : 0; b <= (quad ? box : 0); ++b) {
        e[i] = RingElement(f.field(), a, b);
        rec(i + 1);
      }
  };
  rec(0);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

/// Characteristic polynomial det(xI - m) by Faddeev-LeVerrier, constant
/// term first.
inline std::vector<FieldElement> characteristic_polynomial(const FieldMatrix& m) {
  const size_t n = m.rows();
  const FieldSpec f = n ? m(0, 0).field() : FieldSpec();
  auto zero = [&] { return FieldElement(RingElement(f)); };
  std::vector<FieldElement> c(n + 1, zero());
  c[n] = FieldElement::integer(f, 1);
  FieldMatrix mk(n, n, zero());  // M_k
  for (size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k)/k
    FieldMatrix next(n, n, zero());
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        FieldElement acc = zero();
        for (size_t l = 0; l < n; ++l) acc += m(i, l) * mk(l, j);
        next(i, j) = acc;
      }
    for (size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    FieldElement tr = zero();
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) tr += m(i, l) * mk(l, i);
    c[n - k] = -tr / FieldElement::integer(f, static_cast<long>(k));
  }
  return c;
}

struct SignCounts {
  size_t positive = 0, negative = 0, zero = 0;
};

/// Eigenvalue sign counts of a symmetric matrix via Descartes' rule, exact
/// because the characteristic polynomial is real-rooted.
inline SignCounts eigen_signs(const FieldMatrix& m) {
  const auto c = characteristic_polynomial(m);
  SignCounts out;
  while (out.zero < c.size() && c[out.zero].is_zero()) ++out.zero;
  auto variations = [&](bool flip) {
    size_t v = 0;
    int last = 0;
    for (size_t i = out.zero; i < c.size(); ++i) {
      int s = sign_under_embedding(c[i], Embedding::Identity);
      if (s == 0) continue;
      if (flip && i % 2 == 1) s = -s;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  out.positive = variations(false);
  out.negative = variations(true);
  return out;
}

}  // namespace oracle
