#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "vinberg/coxeter.hpp"

using namespace vinberg;
using namespace fixtures;

namespace {

std::vector<Root> roots_353() {
  const GramForm f = form_353();
  return {Root({z5(1), z5(0), z5(0), z5(0)}, f), Root({z5(0), z5(0), z5(1), z5(0)}, f),
          Root({z5(0), z5(0), z5(0), z5(1)}, f), Root({z5(-1), z5(-1), -phi(), -phi()}, f)};
}

// Path order e1 - e4 - e2 - e3 of the [3,5,3] simplex.
CoxeterDiagram diagram_353_path() {
  const auto r = roots_353();
  return CoxeterDiagram(form_353(), {r[0], r[3], r[2], r[1]});
}

}  // namespace

TEST_CASE("dihedral labels from exact q") {
  const auto r = roots_353();
  const GramForm f = form_353();
  CHECK(label_edge(r[2], r[3], f) == EdgeLabel::weight(5));
  CHECK(label_edge(r[0], r[3], f) == EdgeLabel::weight(3));
  CHECK(label_edge(r[0], r[1], f) == EdgeLabel::orthogonal());
  const FieldSpec q;
  CHECK(label_from_q(FieldElement::integer(q, 2)) == EdgeLabel::weight(4));
  CHECK(label_from_q(FieldElement::integer(q, 3)) == EdgeLabel::weight(6));
  CHECK(label_from_q(FieldElement::integer(q, 4)) == EdgeLabel::thick());
  CHECK(label_from_q(FieldElement::integer(q, 5)) == EdgeLabel::dashed());
  CHECK_THROWS_AS(label_from_q(FieldElement(RingElement(q, 1), 2)), Error);
  // 4cos^2(2pi/5) is the other root of z^2 - 3z + 1 and is no Coxeter angle
  CHECK_THROWS_AS(label_from_q(FieldElement(z5(2) - phi())), Error);
  // 4cos^2(pi/10) = (5+sqrt5)/2 and 4cos^2(pi/8) = 2+sqrt2, 4cos^2(pi/12) = 2+sqrt3
  CHECK(label_from_q(FieldElement(z5(2) + phi())) == EdgeLabel::weight(10));
  CHECK(label_from_q(FieldElement(RingElement(FieldSpec::quadratic(2), 2, 1))) == EdgeLabel::weight(8));
  CHECK(label_from_q(FieldElement(RingElement(FieldSpec::quadratic(3), 2, 1))) == EdgeLabel::weight(12));
}

TEST_CASE("[3,5,3] diagram, classification and export") {
  const CoxeterDiagram d = diagram_353_path();
  CHECK(export_diagram(d, DiagramFormat::Text) == "1 -- 2 [3]\n2 -- 3 [5]\n3 -- 4 [3]");
  auto c = classify_subdiagram(d, {0, 1});
  CHECK(c.kind == SubdiagramKind::Elliptic);
  CHECK(c.rank == 2);
  c = classify_subdiagram(d, {0, 1, 2, 3});
  CHECK(c.kind == SubdiagramKind::Other);
  const auto fv = check_finite_volume(d);
  CHECK(fv.finite_volume);
  CHECK(fv.compact);
  CHECK(fv.ordinary_vertices == 4);
  CHECK(fv.ideal_vertices == 0);
  CHECK(diagram_automorphisms(d).order == 2);

  const std::string json = export_diagram(d, DiagramFormat::Json);
  const CoxeterDiagram back = diagram_from_json(json, form_353());
  CHECK(export_diagram(back, DiagramFormat::Json) == json);
  const std::string dot = export_diagram(d, DiagramFormat::Dot);
  CHECK(dot.rfind("graph coxeter {", 0) == 0);
  CHECK(dot.find("v2 -- v3 [color=\"black:black:black\", label=\"5\"]") != std::string::npos);
  CHECK_THROWS_AS(parse_diagram_format("svg"), Error);
}

TEST_CASE("small diagrams") {
  const GramForm f = lorentz(2);
  const FieldSpec q;
  const Root a({RingElement(q, 0), RingElement(q, 1), RingElement(q, 0)}, f);
  const Root b({RingElement(q, 0), RingElement(q, 0), RingElement(q, 1)}, f);
  CoxeterDiagram one(f, {a});
  CHECK(one.size() == 1);
  CHECK(export_diagram(one, DiagramFormat::Text).empty());
  CHECK_FALSE(check_finite_volume(one).finite_volume);
  CoxeterDiagram two(f, {a, b});
  CHECK(export_diagram(two, DiagramFormat::Text).empty());
  CHECK(export_diagram(CoxeterDiagram(f, {}), DiagramFormat::Text).empty());

  const Root e3({RingElement(q, 1), RingElement(q, -1), RingElement(q, 1)}, f);
  CoxeterDiagram thick(f, {a, e3});
  const auto c = classify_subdiagram(thick, {0, 1});
  CHECK(label_edge(a, e3, f) == EdgeLabel::thick());
  CHECK(c.kind == SubdiagramKind::Parabolic);
  CHECK(c.rank == 1);
  CHECK_THROWS_AS(CoxeterDiagram(f, {a, Root({RingElement(q, 0), RingElement(q, 1), RingElement(q, 1)}, f)}), Error);
}

TEST_CASE("triangle groups agree with the Gauss-Bonnet area") {
  std::vector<int> ms{0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  int checked = 0;
  for (int p : ms)
    for (int q : ms)
      for (int r : ms) {
        if (p > q || q > r) continue;
        auto inv = [](int m) { return m == 0 ? 0.0 : 1.0 / m; };
        // area = pi (1 - 1/p - 1/q - 1/r)
        const double defect = 1.0 - inv(p) - inv(q) - inv(r);
        const bool finite = defect > 1e-12;
        const int ideal = (p == 0) + (q == 0) + (r == 0);
        const LabelDiagram d = triangle_diagram(p, q, r);
        const FiniteVolumeReport fv = check_finite_volume(d);
        CHECK_MESSAGE(fv.finite_volume == finite, p << "," << q << "," << r);
        if (finite) {
          CHECK(fv.compact == (ideal == 0));
          CHECK(fv.ideal_vertices == static_cast<size_t>(ideal));
          CHECK(fv.ordinary_vertices == static_cast<size_t>(3 - ideal));
        }
        ++checked;
      }
  CHECK(checked == 364);
}

TEST_CASE("classification agrees with the characteristic polynomial oracle") {
  const CoxeterDiagram d = diagram_353_path();
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<size_t> s;
    for (size_t i = 0; i < 4; ++i)
      if (mask >> i & 1) s.push_back(i);
    const auto cls = classify_subdiagram(d, s);
    const auto sig = oracle::eigen_signs(to_field(d.gram_matrix(s)));
    const bool elliptic = sig.negative == 0 && sig.zero == 0;
    CHECK((cls.kind == SubdiagramKind::Elliptic) == elliptic);
  }
}

TEST_CASE("automorphisms match brute force and preserve labels") {
  const CoxeterDiagram d = diagram_353_path();
  const auto g = diagram_automorphisms(d);
  std::vector<size_t> p(d.size());
  std::iota(p.begin(), p.end(), 0);
  auto q = [&](size_t i, size_t j) {
    return FieldElement(d.gram(i, j) * d.gram(i, j) * 4) / FieldElement(d.root(i).norm() * d.root(j).norm());
  };
  long count = 0;
  do {
    bool ok = true;
    for (size_t i = 0; i < d.size() && ok; ++i)
      for (size_t j = 0; j < d.size() && ok; ++j) ok = q(i, j) == q(p[i], p[j]);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(g.order == count);
  for (const auto& gen : g.generators)
    for (size_t i = 0; i < d.size(); ++i)
      for (size_t j = 0; j < d.size(); ++j) CHECK(d.label(i, j) == d.label(gen[i], gen[j]));
}

TEST_CASE("unit rescaling changes no label or class") {
  const auto r = roots_353();
  const GramForm f = form_353();
  // phi^2 is a totally positive unit
  const RingElement u = phi() * phi();
  std::vector<Root> scaled;
  for (const auto& x : r) {
    Vector e = x.e();
    for (auto& c : e) c = c * u;
    scaled.emplace_back(e, f);
  }
  const CoxeterDiagram a(f, r), b(f, scaled);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(a.label(i, j) == b.label(i, j));
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<size_t> s;
    for (size_t i = 0; i < 4; ++i)
      if (mask >> i & 1) s.push_back(i);
    CHECK(classify_subdiagram(a, s).kind == classify_subdiagram(b, s).kind);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(5) == std::vector<Integer>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  const CyclotomicField k(14);
  // 2cos(pi/7) satisfies x^3 - x^2 - 2x + 1
  const auto x = k.two_cos(1);
  const auto x2 = k.mul(x, x), x3 = k.mul(x2, x);
  CHECK(k.is_zero(k.add(k.sub(k.sub(x3, x2), k.mul(k.integer(2), x)), k.integer(1))));
}
