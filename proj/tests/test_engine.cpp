#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vinberg/engine.hpp"

using namespace vinberg;
using namespace fixtures;

namespace {

bool same_up_to_sign(const Vector& x, const Vector& y) {
  if (x == y) return true;
  Vector neg = y;
  for (auto& c : neg) c = -c;
  return x == neg;
}

void check_roots_consistent(const std::vector<Root>& roots, const GramForm& f, const FieldVector& u0) {
  for (size_t i = 0; i < roots.size(); ++i) {
    CHECK(is_primitive(roots[i].e()));
    CHECK(is_crystallographic(roots[i].e(), f));
    CHECK(sign_under_embedding(inner_product(roots[i].e(), u0, f), Embedding::Identity) <= 0);
    for (size_t j = 0; j < i; ++j)
      CHECK(sign_under_embedding(inner_product(roots[i].e(), roots[j].e(), f), Embedding::Identity) <= 0);
  }
}

}  // namespace

TEST_CASE("353 simplex end to end") {
  const GramForm f = form_353();
  const RunVerdict v = run(f, {}, basepoint_353());
  REQUIRE(v.outcome == Outcome::Reflective);
  CHECK(v.stabilizer_roots == 3);
  REQUIRE(v.polyhedron.roots.size() == 4);
  CHECK(v.polyhedron.compact);
  CHECK(v.polyhedron.ordinary_vertices == 4);
  CHECK(v.polyhedron.ideal_vertices == 0);
  const Vector expected{z5(1), z5(1), phi(), phi()};
  CHECK(same_up_to_sign(v.polyhedron.roots[3].e(), expected));
  check_roots_consistent(v.polyhedron.roots, f, v.basepoint);
}

TEST_CASE("first root matches a brute-force minimum") {
  for (size_t n : {2u, 3u, 4u}) {
    CAPTURE(n);
    const GramForm f = lorentz(n);
    const FieldVector u0 = unit_basepoint(n);
    const auto stab = stabilizer_chamber(f, u0);
    const auto next = next_root(f, u0, stab);
    REQUIRE(next);

    // smallest priority among admissible vectors in a box
    std::optional<FieldElement> best;
    const long box = 4;
    Vector e(f.dim(), RingElement(f.field()));
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == f.dim()) {
        const RingElement s = inner_product(e, e, f);
        if (sign_under_embedding(s, Embedding::Identity) <= 0) return;
        const FieldElement k = inner_product(e, u0, f);
        if (sign_under_embedding(k, Embedding::Identity) >= 0) return;
        if (!is_primitive(e) || !is_crystallographic(e, f)) return;
        for (const auto& r : stab)
          if (sign_under_embedding(inner_product(e, r.e(), f), Embedding::Identity) > 0) return;
        const FieldElement p = k * k / FieldElement(s);
        if (!best || compare_by_identity_embedding(p, *best) == std::strong_ordering::less) best = p;
        return;
      }
      for (long a = -box; a <= box; ++a) {
        e[i] = RingElement::integer(f.field(), a);
        rec(i + 1);
      }
    };
    rec(0);
    REQUIRE(best);
    CHECK(root_priority(*next, f, u0) == *best);
  }
}

TEST_CASE("search order and acceptance conditions") {
  const GramForm f = lorentz(9);
  const RunVerdict v = run(f);
  REQUIRE(v.outcome == Outcome::Reflective);
  const auto& roots = v.polyhedron.roots;
  check_roots_consistent(roots, f, v.basepoint);
  for (size_t i = v.stabilizer_roots + 1; i < roots.size(); ++i) {
    const auto c = compare_by_identity_embedding(root_priority(roots[i - 1], f, v.basepoint),
                                                 root_priority(roots[i], f, v.basepoint));
    CHECK(c != std::strong_ordering::greater);
  }
}

TEST_CASE("unit form small dimensions give simplices") {
  for (size_t n = 2; n <= 9; ++n) {
    CAPTURE(n);
    const RunVerdict v = run(lorentz(n));
    REQUIRE(v.outcome == Outcome::Reflective);
    CHECK(v.polyhedron.roots.size() == n + 1);
    CHECK(v.polyhedron.finite_volume);
    CHECK(v.polyhedron.compact == false);
  }
}

TEST_CASE("polyhedra over quadratic rings are compact") {
  const FieldSpec q2 = FieldSpec::quadratic(2), q5f = FieldSpec::quadratic(5);
  const std::vector<GramForm> forms{lorentz(3, q2, RingElement(q2, -1, -1)), lorentz(4, q2, RingElement(q2, -1, -1)),
                                    lorentz(3, q5f, -RingElement::omega(q5f))};
  for (const auto& f : forms) {
    const RunVerdict v = run(f);
    REQUIRE(v.outcome == Outcome::Reflective);
    CHECK(v.polyhedron.compact);
    CHECK(v.polyhedron.ideal_vertices == 0);
    check_roots_consistent(v.polyhedron.roots, f, v.basepoint);
  }
}

TEST_CASE("halfspace pruning agrees with filtering afterwards") {
  const GramForm f = lorentz(10);
  const FieldVector u0 = unit_basepoint(10);
  const RunVerdict v = run(f);
  REQUIRE(v.outcome == Outcome::Reflective);
  REQUIRE(v.basepoint == u0);
  std::vector<Vector> cone, walls;
  for (const auto& r : v.polyhedron.roots)
    (inner_product(r.e(), u0, f).is_zero() ? cone : walls).push_back(r.e());
  // with every wall nothing survives
  walls.resize(1);
  const ShellEnumerator en(f, u0, cone);
  size_t nonempty = 0;
  for (long s : {1, 2})
    for (long k = -1; k >= -12; --k) {
      const RingElement sr = RingElement::integer(f.field(), s);
      const FieldElement kf = FieldElement::integer(f.field(), k);
      std::vector<Vector> filtered;
      for (auto& e : en.enumerate(sr, kf)) {
        bool ok = true;
        for (const auto& h : walls)
          if (sign_under_embedding(inner_product(e, h, f), Embedding::Identity) > 0) ok = false;
        if (ok) filtered.push_back(e);
      }
      CHECK(en.enumerate(sr, kf, walls) == filtered);
      nonempty += filtered.size();
    }
  CHECK(nonempty > 0);
}

TEST_CASE("thread count does not change the result") {
  const GramForm f = lorentz(11);
  RunConfig one, many;
  many.threads = 8;
  const RunVerdict a = run(f, one), b = run(f, many);
  REQUIRE(a.polyhedron.roots.size() == b.polyhedron.roots.size());
  for (size_t i = 0; i < a.polyhedron.roots.size(); ++i) CHECK(a.polyhedron.roots[i].e() == b.polyhedron.roots[i].e());
  CHECK(a.shells_searched == b.shells_searched);
}

TEST_CASE("caps make a run inconclusive") {
  const GramForm f = lorentz(12);
  RunConfig cfg;
  cfg.max_roots = 13;
  const RunVerdict v = run(f, cfg);
  CHECK(v.outcome == Outcome::Inconclusive);
  CHECK(v.cap_hit == "max_roots");
  cfg.max_roots = 1000;
  cfg.max_norm_shells = 1;
  CHECK(run(f, cfg).cap_hit == "max_norm_shells");
  cfg.max_norm_shells = 0;
  cfg.check_interval = 0;
  CHECK_THROWS_AS(run(f, cfg), Error);
  cfg.check_interval = 1;
  cfg.max_roots = 5;
  CHECK_THROWS_AS(run(f, cfg), Error);
}

TEST_CASE("non-admissible forms are rejected") {
  std::vector<RingElement> d{RingElement::integer(FieldSpec(), 1), RingElement::integer(FieldSpec(), 1),
                             RingElement::integer(FieldSpec(), 1)};
  CHECK_THROWS_AS(run(GramForm::diagonal(FieldSpec(), d)), Error);
}
