#pragma once

#include "vinberg/lattice.hpp"

namespace fixtures {

using namespace vinberg;

inline FieldSpec q5() { return FieldSpec::quadratic(5); }
inline RingElement phi() { return RingElement::omega(q5()); }
inline RingElement z5(long a, long b = 0) { return RingElement(q5(), a, b); }

/// Gram matrix of the [3,5,3] simplex reflection group over Z[phi].
inline GramForm form_353() {
  RingMatrix g(4, 4, z5(0));
  for (int i = 0; i < 4; ++i) g(i, i) = z5(2);
  g(0, 1) = g(1, 0) = z5(-1);
  g(1, 2) = g(2, 1) = -phi();
  g(2, 3) = g(3, 2) = z5(-1);
  return GramForm(q5(), g);
}

inline FieldVector basepoint_353() {
  const FieldElement half(z5(1), 2);
  return {half * FieldElement(z5(3)), FieldElement(z5(3)), FieldElement(z5(0, 2)), FieldElement(phi())};
}

inline GramForm lorentz(size_t n, FieldSpec field = FieldSpec::rational(), RingElement head = RingElement()) {
  std::vector<RingElement> diag(n + 1, RingElement::integer(field, 1));
  diag[0] = head.is_zero() ? RingElement::integer(field, -1) : head;
  return GramForm::diagonal(field, diag);
}

inline FieldVector unit_basepoint(size_t n, FieldSpec field = FieldSpec::rational()) {
  FieldVector u(n + 1, FieldElement(RingElement(field)));
  u[0] = FieldElement::integer(field, 1);
  return u;
}

}  // namespace fixtures
