#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "vinberg/enumerate.hpp"
#include "vinberg/lattice.hpp"

using namespace vinberg;
using namespace fixtures;

TEST_CASE("inner products on the [3,5,3] form") {
  const GramForm f = form_353();
  const Vector e1{z5(1), z5(0), z5(0), z5(0)};
  const Vector e3{z5(0), z5(0), z5(0), z5(1)};
  const Vector e4{z5(-1), z5(-1), -phi(), -phi()};
  CHECK(inner_product(e1, e4, f) == z5(-1));
  CHECK(inner_product(e3, e4, f) == -phi());
  CHECK(inner_product(e1, Vector(4, z5(0)), f).is_zero());
}

TEST_CASE("admissibility") {
  CHECK(check_admissible(lorentz(3)).admissible());
  const FieldSpec k = q5();
  CHECK(check_admissible(lorentz(7, k, -phi())).admissible());
  // -sqrt2 has conjugate +sqrt2, so this form is admissible as well
  const FieldSpec q2 = FieldSpec::quadratic(2);
  CHECK(check_admissible(lorentz(2, q2, RingElement(q2, 0, -1))).admissible());
  // a rational Lorentzian form read over Q(sqrt2) has an indefinite conjugate
  const auto bad = check_admissible(lorentz(2, q2));
  CHECK(bad.signature_ok);
  CHECK_FALSE(bad.conjugate_definite_ok);
  CHECK_FALSE(check_admissible(GramForm::diagonal(FieldSpec(), {RingElement(FieldSpec(), 1), RingElement(FieldSpec(), 1)}))
                  .admissible());
  CHECK(check_admissible(form_353()).admissible());
}

TEST_CASE("non-symmetric Gram is rejected") {
  RingMatrix g(2, 2, RingElement(FieldSpec(), 0));
  g(0, 1) = RingElement(FieldSpec(), 1);
  CHECK_THROWS_AS(GramForm(FieldSpec(), g), Error);
}

TEST_CASE("reflections") {
  const GramForm f = lorentz(3);
  const Root r(Vector{RingElement(FieldSpec(), 0), RingElement(FieldSpec(), 1), RingElement(FieldSpec(), 0),
                      RingElement(FieldSpec(), 0)},
               f);
  const Vector img = reflect(r.e(), r, f);
  CHECK(img[1] == RingElement(FieldSpec(), -1));
  const Vector perp{RingElement(FieldSpec(), 3), RingElement(FieldSpec(), 0), RingElement(FieldSpec(), 1),
                    RingElement(FieldSpec(), 1)};
  CHECK(reflect(perp, r, f) == perp);

  const GramForm g = form_353();
  const Root e4(Vector{z5(-1), z5(-1), -phi(), -phi()}, g);
  const Vector e1{z5(1), z5(0), z5(0), z5(0)};
  CHECK(reflect(e1, e4, g) == Vector{z5(0), z5(-1), -phi(), -phi()});
}

TEST_CASE("reflection is an exact isometric involution on random pairs") {
  const GramForm f = form_353();
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> small(-3, 3);
  const std::vector<Vector> roots{{z5(1), z5(0), z5(0), z5(0)},
                                  {z5(0), z5(0), z5(1), z5(0)},
                                  {z5(1), z5(1), phi(), phi()},
                                  {z5(0), z5(1), phi(), z5(0, 1)}};
  std::vector<Root> valid;
  for (const auto& v : roots) {
    if (is_totally_positive(inner_product(v, v, f)) && is_primitive(v) && is_crystallographic(v, f)) valid.emplace_back(v, f);
  }
  REQUIRE(valid.size() >= 3);
  for (int trial = 0; trial < 500; ++trial) {
    Vector x(4), y(4);
    for (int i = 0; i < 4; ++i) {
      x[i] = z5(small(rng), small(rng));
      y[i] = z5(small(rng), small(rng));
    }
    const Root& r = valid[trial % valid.size()];
    const Vector rx = reflect(x, r, f), ry = reflect(y, r, f);
    CHECK(reflect(rx, r, f) == x);
    CHECK(inner_product(rx, ry, f) == inner_product(x, y, f));
  }
}

TEST_CASE("crystallographic and primitive checks") {
  const GramForm f = form_353();
  CHECK(is_crystallographic({z5(0), z5(0), z5(1), z5(0)}, f));
  const GramForm l = lorentz(2);
  const FieldSpec q;
  CHECK(is_crystallographic({RingElement(q, 0), RingElement(q, 1), RingElement(q, 1)}, l));
  CHECK(make_primitive({RingElement(q, 2), RingElement(q, 4), RingElement(q, 6)}) ==
        Vector{RingElement(q, 1), RingElement(q, 2), RingElement(q, 3)});
  CHECK(make_primitive({z5(2), z5(0, 2)}) == Vector{z5(1), phi()});
  CHECK_THROWS_AS(make_primitive({RingElement(q, 0)}), Error);
  CHECK_THROWS_AS(Root({RingElement(q, 0), RingElement(q, 2), RingElement(q, 0)}, l), Error);
  CHECK_THROWS_AS(Root({RingElement(q, 1), RingElement(q, 0), RingElement(q, 0)}, l), Error);
}

TEST_CASE("root constructor rejects random invalid vectors") {
  const GramForm f = lorentz(3);
  const FieldSpec q;
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> c(-6, 6);
  int accepted = 0, rejected = 0;
  for (int t = 0; t < 2000; ++t) {
    Vector v(4);
    for (auto& x : v) x = RingElement(q, c(rng));
    const RingElement s = inner_product(v, v, f);
    bool valid = is_totally_positive(s) && is_primitive(v) && is_crystallographic(v, f);
    try {
      Root r(v, f);
      CHECK(valid);
      ++accepted;
    } catch (const Error&) {
      CHECK_FALSE(valid);
      ++rejected;
    }
  }
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}

TEST_CASE("discriminant exponent and root norms") {
  CHECK(lorentz(3).invariant_factor_exponent() == RingElement(FieldSpec(), 1));
  CHECK(lorentz(3).root_norms().size() == 2);
  const GramForm f2 = GramForm::diagonal(FieldSpec(), {RingElement(FieldSpec(), -2), RingElement(FieldSpec(), 1),
                                                       RingElement(FieldSpec(), 1)});
  CHECK(f2.invariant_factor_exponent() == RingElement(FieldSpec(), 2));
  CHECK(f2.root_norms().size() == 3);
}

TEST_CASE("shell enumeration example") {
  const GramForm f = lorentz(2);
  const FieldSpec q;
  auto out = enumerate_fixed_norm_and_height(f, unit_basepoint(2), RingElement(q, 2), FieldElement::integer(q, 0));
  CHECK(out.size() == 4);
  CHECK(out == oracle::brute_force_shell(f, unit_basepoint(2), RingElement(q, 2), FieldElement::integer(q, 0), 2));

  const GramForm g = form_353();
  const FieldVector u0 = basepoint_353();
  const FieldElement k = inner_product(Vector{z5(1), z5(1), phi(), phi()}, u0, g);
  auto shell = enumerate_fixed_norm_and_height(g, u0, z5(2), k);
  CHECK(std::find(shell.begin(), shell.end(), Vector{z5(1), z5(1), phi(), phi()}) != shell.end());
  auto neg = enumerate_fixed_norm_and_height(g, u0, z5(2), -k);
  CHECK(std::find(neg.begin(), neg.end(), Vector{z5(-1), z5(-1), -phi(), -phi()}) != neg.end());
}

TEST_CASE("shell with negative conjugate radius is empty") {
  const GramForm g = form_353();
  const FieldVector u0 = basepoint_353();
  // The identity radius s - k^2/N is always positive here since N < 0, so
  // emptiness is forced by a large conjugate of k.
  const FieldElement k(z5(0, -40));
  CHECK(enumerate_fixed_norm_and_height(g, u0, z5(2), k).empty());
}

TEST_CASE("enumeration matches brute force on small rational shells") {
  const FieldSpec q;
  std::vector<GramForm> forms{lorentz(2), lorentz(3),
                              GramForm::diagonal(q, {RingElement(q, -2), RingElement(q, 1), RingElement(q, 1)}),
                              GramForm::diagonal(q, {RingElement(q, -3), RingElement(q, 1), RingElement(q, 1)})};
  for (const auto& f : forms) {
    const FieldVector u0 = unit_basepoint(f.n());
    const long head = -f.gram()(0, 0).a().get_si();
    for (long s = 1; s <= 6; ++s)
      for (long k = -4; k <= 0; ++k) {
        // |x0| = |k|/head and |xi| <= sqrt(s + head x0^2) bound the box
        const long box = 2 + static_cast<long>(std::sqrt(static_cast<double>(s + 16 * head)));
        const auto fast = ShellEnumerator(f, u0, {}).enumerate(RingElement(q, s), FieldElement::integer(q, k));
        const auto slow = oracle::brute_force_shell(f, u0, RingElement(q, s), FieldElement::integer(q, k), box);
        CHECK(fast == slow);
      }
  }
}

TEST_CASE("enumeration matches brute force over Z[phi]") {
  const FieldSpec k5 = q5();
  const GramForm f = lorentz(2, k5, -phi());
  const FieldVector u0 = unit_basepoint(2, k5);
  for (const RingElement& s : {z5(1), z5(2), z5(2, 1), z5(1, 1)}) {
    if (!is_totally_positive(s)) continue;
    for (long a = -3; a <= 0; ++a)
      for (long b = -2; b <= 0; ++b) {
        const FieldElement k(RingElement(k5, a, b));
        const auto fast = ShellEnumerator(f, u0, {}).enumerate(s, k);
        const auto slow = oracle::brute_force_shell(f, u0, s, k, 4);
        CHECK(fast == slow);
      }
  }
}

TEST_CASE("cone constraints and thread count do not change results") {
  const FieldSpec q;
  const GramForm f = lorentz(3);
  const FieldVector u0 = unit_basepoint(3);
  std::vector<Vector> cone{{RingElement(q, 0), RingElement(q, -1), RingElement(q, 1), RingElement(q, 0)}};
  const auto all = ShellEnumerator(f, u0, {}).enumerate(RingElement(q, 2), FieldElement::integer(q, -2));
  std::vector<Vector> expected;
  for (const auto& v : all)
    if (sign_under_embedding(inner_product(v, cone[0], f), Embedding::Identity) <= 0) expected.push_back(v);
  CHECK(ShellEnumerator(f, u0, cone, 1).enumerate(RingElement(q, 2), FieldElement::integer(q, -2)) == expected);
  CHECK(ShellEnumerator(f, u0, cone, 8).enumerate(RingElement(q, 2), FieldElement::integer(q, -2)) == expected);
}

TEST_CASE("interval oracle agrees with exact signs") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-1000000000L, 1000000000L);
  for (int d : {2, 3, 5, 13, 17}) {
    const FieldSpec f = FieldSpec::quadratic(d);
    for (int t = 0; t < 2000; ++t) {
      const RingElement x(f, c(rng), c(rng));
      for (Embedding e : {Embedding::Identity, Embedding::Conjugate}) {
        const int o = oracle::interval_sign(x, e);
        if (o != 2) CHECK(sign_under_embedding(x, e) == o);
      }
    }
  }
}
