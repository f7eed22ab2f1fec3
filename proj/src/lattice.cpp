#include "vinberg/lattice.hpp"

#include "vinberg/enumerate.hpp"

namespace vinberg {

FieldVector to_field(const Vector& v) { return FieldVector(v.begin(), v.end()); }

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

std::string to_string(const FieldVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

bool lex_less(const Vector& x, const Vector& y) {
  const size_t n = std::min(x.size(), y.size());
  for (size_t i = 0; i < n; ++i) {
    if (x[i].a() != y[i].a()) return x[i].a() < y[i].a();
    if (x[i].b() != y[i].b()) return x[i].b() < y[i].b();
  }
  return x.size() < y.size();
}

GramForm::GramForm(FieldSpec field, RingMatrix gram) : field_(field), gram_(std::move(gram)) {
  if (!gram_.square() || gram_.rows() < 2) throw Error("Gram matrix must be square of size at least 2");
  if (!is_symmetric(gram_)) throw Error("Gram matrix is not symmetric");
  for (size_t i = 0; i < gram_.rows(); ++i)
    for (size_t j = 0; j < gram_.cols(); ++j) {
      const RingElement& x = gram_(i, j);
      if (!x.field().is_rational() && !(x.field() == field_)) throw Error("Gram entry outside the declared field");
      gram_(i, j) = RingElement(field_, x.a(), x.b());
    }

  const FieldMatrix g = to_field(gram_);
  const FieldElement det = determinant(g);
  if (det.is_zero()) throw Error("Gram matrix is degenerate");
  const FieldMatrix inv = inverse(g);
  RingElement content(field_);
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) content = gcd(content, (inv(i, j) * det).to_ring());
  exponent_ = canonical_associate(divide_exact(det.to_ring(), content));
  root_norms_ = totally_positive_divisors(exponent_ * 2);
}

GramForm GramForm::diagonal(FieldSpec field, const std::vector<RingElement>& entries) {
  RingMatrix g(entries.size(), entries.size(), RingElement(field));
  for (size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return GramForm(field, std::move(g));
}

Vector GramForm::apply(const Vector& v) const {
  if (v.size() != dim()) throw Error("dimension mismatch");
  Vector out(dim(), RingElement(field_));
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j)
      if (!gram_(i, j).is_zero() && !v[j].is_zero()) out[i] += gram_(i, j) * v[j];
  return out;
}

FieldVector GramForm::apply(const FieldVector& v) const {
  if (v.size() != dim()) throw Error("dimension mismatch");
  FieldVector out(dim(), FieldElement(RingElement(field_)));
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j)
      if (!gram_(i, j).is_zero() && !v[j].is_zero()) out[i] += FieldElement(gram_(i, j)) * v[j];
  return out;
}

RingElement inner_product(const Vector& u, const Vector& v, const GramForm& f) {
  if (u.size() != f.dim()) throw Error("dimension mismatch");
  const Vector gv = f.apply(v);
  RingElement out(f.field());
  for (size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero()) out += u[i] * gv[i];
  return out;
}

FieldElement inner_product(const FieldVector& u, const FieldVector& v, const GramForm& f) {
  if (u.size() != f.dim()) throw Error("dimension mismatch");
  const FieldVector gv = f.apply(v);
  FieldElement out(RingElement(f.field()));
  for (size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero()) out += u[i] * gv[i];
  return out;
}

FieldElement inner_product(const Vector& u, const FieldVector& v, const GramForm& f) {
  return inner_product(to_field(u), v, f);
}

std::string AdmissibilityReport::reason() const {
  if (!signature_ok) return "signature is not (n,1)";
  if (!conjugate_definite_ok) return "conjugate form is not positive definite";
  return "admissible";
}

AdmissibilityReport check_admissible(const GramForm& f) {
  AdmissibilityReport r;
  const Inertia in = inertia(to_field(f.gram()));
  r.signature_ok = in.negative == 1 && in.zero == 0 && in.positive == f.n();
  if (f.field().is_rational()) {
    r.conjugate_definite_ok = true;
  } else {
    r.conjugate_definite_ok = definite_rank_class(conjugate(f.gram())).kind == Definiteness::PositiveDefinite;
  }
  return r;
}

bool is_primitive(const Vector& e) {
  RingElement g;
  for (const auto& x : e) g = gcd(g, x);
  return !g.is_zero() && g.is_unit();
}

Vector make_primitive(const Vector& e) {
  RingElement g;
  for (const auto& x : e) g = gcd(g, x);
  if (g.is_zero()) throw Error("cannot make the zero vector primitive");
  Vector out;
  out.reserve(e.size());
  for (const auto& x : e) out.push_back(divide_exact(x, g));
  return out;
}

bool is_crystallographic(const Vector& e, const GramForm& f) {
  const RingElement s = inner_product(e, e, f);
  if (!is_totally_positive(s)) throw Error("crystallographic test needs a totally positive norm");
  for (const auto& x : f.apply(e))
    if (!divides(s, x * 2)) return false;
  return true;
}

Root::Root(Vector e, const GramForm& f) : e_(std::move(e)) {
  if (e_.size() != f.dim()) throw Error("root has the wrong dimension");
  s_ = inner_product(e_, e_, f);
  if (!is_totally_positive(s_)) throw Error("root " + to_string(e_) + " has norm " + s_.str() + ", not totally positive");
  if (!is_primitive(e_)) throw Error("root " + to_string(e_) + " is not primitive");
  if (!is_crystallographic(e_, f)) throw Error("root " + to_string(e_) + " is not crystallographic");
}

Vector reflect(const Vector& x, const Root& r, const GramForm& f) {
  const RingElement c = inner_product(r.e(), x, f) * 2;
  if (c.is_zero()) return x;
  const RingElement q = divide_exact(c, r.norm());
  Vector out = x;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= q * r.e()[i];
  return out;
}

FieldVector reflect(const FieldVector& x, const Root& r, const GramForm& f) {
  const FieldElement c = inner_product(r.e(), x, f) * FieldElement::integer(f.field(), 2);
  if (c.is_zero()) return x;
  const FieldElement q = c / FieldElement(r.norm());
  FieldVector out = x;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= q * FieldElement(r.e()[i]);
  return out;
}

std::vector<Vector> enumerate_fixed_norm_and_height(const GramForm& f, const FieldVector& u0, const RingElement& s,
                                                    const FieldElement& k) {
  if (!check_admissible(f).admissible()) throw Error("form is not admissible");
  if (!is_totally_positive(s)) throw Error("norm must be totally positive");
  ShellEnumerator en(f, u0, {});
  return en.enumerate(s, k);
}

}  // namespace vinberg
