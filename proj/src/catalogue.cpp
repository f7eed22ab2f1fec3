#include "vinberg/catalogue.hpp"

#include <map>

#include "vinberg/analysis.hpp"

namespace vinberg {

Budget parse_budget(const std::string& name) {
  if (name == "quick") return Budget::Quick;
  if (name == "standard") return Budget::Standard;
  if (name == "extended") return Budget::Extended;
  throw Error("unknown budget '" + name + "' (quick, standard, extended)");
}

std::string budget_name(Budget b) {
  switch (b) {
    case Budget::Quick:
      return "quick";
    case Budget::Standard:
      return "standard";
    case Budget::Extended:
      return "extended";
  }
  return {};
}

GramForm unit_tail_form(FieldSpec field, const RingElement& head, size_t n) {
  std::vector<RingElement> diag(n + 1, RingElement::integer(field, 1));
  diag[0] = head;
  return GramForm::diagonal(field, diag);
}

FormDocument borcherds_document() {
  const FieldSpec q;
  constexpr size_t N = 22;
  // rows are the basis vectors in v-coordinates
  std::vector<std::vector<long>> b(N, std::vector<long>(N, 0));
  b[0][0] = b[0][1] = 1;
  for (size_t i = 1; i <= 20; ++i) b[i][i] = 1, b[i][i + 1] = -1;
  b[21][20] = b[21][21] = 1;
  RingMatrix g(N, N, RingElement(q));
  for (size_t r = 0; r < N; ++r)
    for (size_t c = 0; c < N; ++c) {
      long s = -b[r][0] * b[c][0];
      for (size_t i = 1; i < N; ++i) s += b[r][i] * b[c][i];
      g(r, c) = RingElement::integer(q, s);
    }
  FormDocument doc;
  doc.name = "borcherds_21";
  doc.form = GramForm(q, g);
  // v0 = b0 - (b1 + ... + b19) - (b20 + b21)/2
  FieldVector u0(N, FieldElement::integer(q, -1));
  u0[0] = FieldElement::integer(q, 1);
  u0[20] = u0[21] = FieldElement(RingElement::integer(q, -1), 2);
  doc.basepoint = u0;
  doc.chamber_weights.assign(N, 1);
  doc.chamber_weights[0] = 21;
  doc.chamber_weights[21] = 3;
  return doc;
}

namespace {

struct Family {
  std::string prefix;
  FieldSpec field;
  std::string head;
  std::string provenance;
  size_t first, last;  // reflective range
  std::map<size_t, size_t> faces;  // regression values
  size_t fixture_cap;              // 0: no inconclusive fixture
};

Budget budget_for(const FieldSpec& field, size_t n) {
  if (!field.is_rational() || n <= 9) return Budget::Quick;
  if (n <= 14) return Budget::Standard;
  return Budget::Extended;
}

FormDocument diagonal_document(const std::string& name, FieldSpec field, const std::string& head, size_t n) {
  FormDocument doc;
  doc.name = name;
  doc.form = unit_tail_form(field, RingElement::parse(head, field), n);
  FieldVector u(n + 1, FieldElement(RingElement(field)));
  u[0] = FieldElement::integer(field, 1);
  doc.basepoint = u;
  return doc;
}

std::vector<CatalogueEntry> build() {
  const FieldSpec q, q2 = FieldSpec::quadratic(2), q5 = FieldSpec::quadratic(5);
  std::vector<CatalogueEntry> out;

  {
    CatalogueEntry e;
    e.name = "vinberg_simplex_353";
    RingMatrix g(4, 4, RingElement(q5));
    for (int i = 0; i < 4; ++i) g(i, i) = RingElement::integer(q5, 2);
    g(0, 1) = g(1, 0) = g(2, 3) = g(3, 2) = RingElement::integer(q5, -1);
    g(1, 2) = g(2, 1) = RingElement(q5, 0, -1);
    e.document.name = e.name;
    e.document.form = GramForm(q5, g);
    e.document.basepoint = parse_basepoint("3/2,3,2*w,w", q5);
    e.expected.faces = 4;
    e.expected.compact = true;
    e.provenance = "Vinberg: the [3,5,3] form over Z[phi] gives a bounded simplex in H^3";
    out.push_back(e);
  }

  const std::vector<Family> families{
      {"vinberg_unimodular", q, "-1",
       "Fricke (n=2); Vinberg 1972 (n<=17); Vinberg-Kaplinskaja 1978 (n=18,19): f reflective for n<=19",
       2, 19,
       {{2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 12}, {11, 13}, {12, 14}, {13, 15},
        {14, 17}, {15, 18}, {16, 20}, {17, 22}, {18, 37}, {19, 50}},
       60},
      {"vinberg_f2", q, "-2", "Vinberg 1972: f_2 reflective for n<=14; Mcleod: non-reflective beyond", 2, 14,
       {{2, 3}, {3, 5}, {4, 6}, {5, 7}, {6, 8}, {7, 9}, {8, 10}, {9, 12}, {10, 13}, {11, 15}, {12, 16}, {13, 19},
        {14, 20}},
       32},
      {"mcleod_f3", q, "-3", "Mcleod 2011: f_3 reflective for n<=13 and non-reflective for bigger n", 2, 13,
       {{2, 3}, {3, 4}, {4, 6}, {5, 7}, {6, 8}, {7, 9}, {8, 10}, {9, 12}, {10, 14}, {11, 15}, {12, 18}, {13, 22}},
       24},
      {"mark_f5", q, "-5", "Mark 2015: f_5 reflective for 2<=n<=8", 2, 8,
       {{2, 4}, {3, 6}, {4, 7}, {5, 8}, {6, 10}, {7, 11}, {8, 12}}, 18},
      {"mark_f7", q, "-7", "Mark 2015: f_7 reflective for n=2,3", 2, 3, {{2, 4}, {3, 5}}, 12},
      {"mark_f17", q, "-17", "Mark 2015: f_17 reflective for n=2,3", 2, 3, {{2, 7}, {3, 13}}, 20},
      {"mark_f11", q, "-11", "Mark 2015: f_11 reflective for n=2,3,4", 2, 4, {{2, 4}, {3, 7}, {4, 9}}, 14},
      {"bugaenko_sqrt5", q5, "-w", "Bugaenko 1984: f_sqrt5 reflective if and only if n<=7", 2, 7,
       {{2, 3}, {3, 4}, {4, 5}, {5, 7}, {6, 9}, {7, 11}}, 36},
      {"bugaenko_sqrt2", q2, "-1-w", "Bugaenko 1990: f_sqrt2 reflective if and only if n<=6", 2, 6,
       {{2, 3}, {3, 5}, {4, 7}, {5, 10}, {6, 34}}, 100},
  };

  for (const Family& fam : families) {
    for (size_t n = fam.first; n <= fam.last + (fam.fixture_cap ? 1 : 0); ++n) {
      CatalogueEntry e;
      e.name = fam.prefix + "_" + std::to_string(n);
      e.document = diagonal_document(e.name, fam.field, fam.head, n);
      e.provenance = fam.provenance;
      e.budget = budget_for(fam.field, n);
      if (n > fam.last) {
        e.expected.outcome = Outcome::Inconclusive;
        e.max_roots = fam.fixture_cap;
      } else {
        if (!fam.field.is_rational()) e.expected.compact = true;
        if (fam.field.is_rational() && n >= 4) e.expected.compact = false;
        if (auto it = fam.faces.find(n); it != fam.faces.end()) e.expected.regression_faces = it->second;
      }
      out.push_back(std::move(e));
    }
  }

  for (auto& e : out) {
    if (e.name == "vinberg_unimodular_19") {
      e.expected.faces = 50;
      e.expected.symmetry_order = 120;
      e.provenance += "; n=19 has 50 faces and symmetry group S_5";
    }
    if (e.name == "mcleod_f3_13") {
      e.expected.faces = 22;
      e.expected.symmetry_order = 4;
      e.provenance += "; n=13 has 22 faces and 4 symmetries";
    }
    if (e.name == "vinberg_unimodular_20") e.provenance = "Vinberg 1975, Vinberg-Kaplinskaja 1978: f not reflective for n>=20";
  }

  CatalogueEntry b;
  b.name = "borcherds_21";
  b.document = borcherds_document();
  b.expected.faces = 210;
  b.expected.compact = false;
  b.expected.norm_counts = {{2, 42}, {4, 168}};
  b.provenance = "Borcherds 1987: the even sublattice of Z^{21,1} gives 210 walls, 42 of norm 2 and 168 of norm 4";
  b.budget = Budget::Extended;
  out.push_back(b);
  return out;
}

}  // namespace

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = build();
  return entries;
}

const CatalogueEntry& catalogue_entry(const std::string& name) {
  for (const auto& e : catalogue())
    if (e.name == name) return e;
  throw Error("unknown catalogue entry '" + name + "'");
}

std::vector<const CatalogueEntry*> select_entries(const std::string& selector, Budget budget) {
  std::vector<const CatalogueEntry*> out;
  if (selector == "all" || (!selector.empty() && selector.back() == '*')) {
    const std::string prefix = selector == "all" ? "" : selector.substr(0, selector.size() - 1);
    for (const auto& e : catalogue())
      if (e.name.compare(0, prefix.size(), prefix) == 0 && e.budget <= budget) out.push_back(&e);
    if (out.empty() && selector != "all") throw Error("no catalogue entry matches '" + selector + "' within the budget");
    return out;
  }
  out.push_back(&catalogue_entry(selector));
  return out;
}

EntryResult run_entry(const CatalogueEntry& e, const RunConfig& base, bool check_arithmeticity) {
  RunConfig cfg = base;
  cfg.max_roots = e.max_roots;
  if (cfg.chamber_weights.empty()) cfg.chamber_weights = e.document.chamber_weights;
  EntryResult res;
  res.verdict = run(e.document.form, cfg, e.document.basepoint);
  const RunVerdict& v = res.verdict;
  const PolyhedronReport& p = v.polyhedron;
  std::string& d = res.detail;
  auto mismatch = [&](const std::string& what, const std::string& want, const std::string& got) {
    d += (d.empty() ? "" : "; ") + what + " " + got + ", expected " + want;
  };
  const Expected& x = e.expected;
  const auto outcome_name = [](Outcome o) { return o == Outcome::Reflective ? "reflective" : "inconclusive"; };
  if (v.outcome != x.outcome) {
    mismatch("outcome", outcome_name(x.outcome),
             std::string(outcome_name(v.outcome)) + (v.cap_hit.empty() ? "" : " (" + v.cap_hit + ")"));
  } else if (v.outcome == Outcome::Reflective) {
    if (x.faces && *x.faces != p.faces) mismatch("faces", std::to_string(*x.faces), std::to_string(p.faces));
    if (x.regression_faces && *x.regression_faces != p.faces)
      mismatch("faces", std::to_string(*x.regression_faces) + " (regression)", std::to_string(p.faces));
    if (x.compact && *x.compact != p.compact)
      mismatch("compact", *x.compact ? "true" : "false", p.compact ? "true" : "false");
    if (x.symmetry_order && p.symmetry_order != *x.symmetry_order)
      mismatch("symmetry order", std::to_string(*x.symmetry_order), p.symmetry_order.get_str());
    for (const auto& [s, count] : x.norm_counts) {
      size_t got = 0;
      for (const auto& r : p.roots) got += r.norm() == RingElement::integer(e.document.form.field(), s);
      if (got != count) mismatch("norm " + std::to_string(s) + " walls", std::to_string(count), std::to_string(got));
    }
    if (!e.document.form.field().is_rational() && !p.compact) mismatch("compact", "true (Godement)", "false");
    if (check_arithmeticity) {
      const auto a = arithmeticity_check(p.roots, e.document.form);
      if (!a.is_arithmetic) mismatch("arithmeticity", "true", "false: " + a.detail);
    }
  }
  res.passed = d.empty();
  return res;
}

}  // namespace vinberg
