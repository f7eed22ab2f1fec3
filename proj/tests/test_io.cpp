#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "vinberg/catalogue.hpp"
#include "vinberg/document.hpp"
#include "vinberg/report.hpp"

using namespace vinberg;
using namespace fixtures;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_form_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("form documents") {
  const auto d = parse_form_document(R"({"field": {"kind": "Q"}, "n": 3, "diag": [-2, 1, "1", 1]})");
  CHECK(d.form.n() == 3);
  CHECK(d.form.gram()(0, 0) == RingElement::integer(FieldSpec(), -2));
  CHECK_FALSE(d.basepoint);

  const auto s = read_form_document(VINBERG_TEST_DATA "/simplex_353.json");
  CHECK(s.form.gram() == form_353().gram());
  REQUIRE(s.basepoint);
  CHECK(*s.basepoint == basepoint_353());
  CHECK(s.name == "[3,5,3] simplex");

  for (const FormDocument& doc : {s, borcherds_document(), d}) {
    const auto again = parse_form_document(write_form_document(doc));
    CHECK(again.form.gram() == doc.form.gram());
    CHECK(again.form.field() == doc.form.field());
    CHECK(again.basepoint == doc.basepoint);
    CHECK(again.chamber_weights == doc.chamber_weights);
    CHECK(write_form_document(again) == write_form_document(doc));
  }

  CHECK(parse_basepoint("3/2, 3, 2*w, w", q5()) == basepoint_353());
  CHECK_THROWS_AS(parse_basepoint("", q5()), Error);
}

TEST_CASE("form document diagnostics") {
  CHECK(error_of("{\n  \"diag\": [-1, 1,\n  1\n") .rfind("line 4:", 0) == 0);
  CHECK(error_of("{\n \"field\": {\"kind\": \"Q\"},\n \"gram\": [[-1, 0], [1, 1]]\n}").rfind("line 3: gram is not symmetric", 0) == 0);
  CHECK(error_of("{\"field\": {\"kind\": \"Qsqrt\", \"d\": 7}, \"diag\": [-1, 1]}").find("not supported") != std::string::npos);
  CHECK(error_of("{\"field\": {\"kind\": \"C\"}, \"diag\": [-1, 1]}").find("unknown field kind") != std::string::npos);
  CHECK(error_of("{\"diag\": [-1, 1], \"gram\": [[1]]}").find("exactly one") != std::string::npos);
  CHECK(error_of("{\n\"diag\": [-1, 1],\n\"n\": 2}").rfind("line 3: n = 2", 0) == 0);
  CHECK(error_of("{\"diag\": [-1, \"1+x\"]}").rfind("line 1:", 0) == 0);
  CHECK(error_of("{\"gram\": [[-1, 0], [0]]}").find("row 2") != std::string::npos);
  CHECK(error_of("{\"diag\": [-1, 1, 1], \"basepoint\": [1, 0]}").find("3 coordinates") != std::string::npos);
  CHECK(error_of("[1, 2]").find("JSON object") != std::string::npos);
  CHECK_THROWS_AS(read_form_document(VINBERG_TEST_DATA "/missing.json"), Error);
}

TEST_CASE("reports round-trip") {
  struct Case {
    GramForm f;
    RunConfig cfg;
    std::optional<FieldVector> u0;
  };
  RunConfig capped;
  capped.max_roots = 12;
  const std::vector<Case> cases{{form_353(), {}, basepoint_353()},
                                {lorentz(5), {}, std::nullopt},
                                {lorentz(4, FieldSpec::quadratic(2), RingElement(FieldSpec::quadratic(2), -1, -1)), {}, std::nullopt},
                                {lorentz(4, FieldSpec(), RingElement::integer(FieldSpec(), -7)), capped, std::nullopt}};
  for (const auto& c : cases) {
    const RunVerdict v = run(c.f, c.cfg, c.u0);
    const std::string json = write_report(v, c.f, ReportFormat::Json);
    const RunVerdict back = read_report(json, c.f);
    CHECK(back.outcome == v.outcome);
    CHECK(back.polyhedron.roots.size() == v.polyhedron.roots.size());
    CHECK(write_report(back, c.f, ReportFormat::Json) == json);
    CHECK(write_report(back, c.f, ReportFormat::Text) == write_report(v, c.f, ReportFormat::Text));
    CHECK(write_report(v, c.f, ReportFormat::Dot).rfind("graph coxeter {", 0) == 0);
  }
  const RunVerdict v = run(form_353(), {}, basepoint_353());
  CHECK(write_report(v, form_353(), ReportFormat::Json).find("\"timing\"") == std::string::npos);
  ReportOptions opt;
  opt.timing = true;
  opt.arithmeticity = false;
  const std::string timed = write_report(v, form_353(), ReportFormat::Json, opt);
  CHECK(timed.find("\"timing\"") != std::string::npos);
  CHECK(timed.find("\"arithmeticity\": null") != std::string::npos);
  CHECK_THROWS_AS(read_report("{}", form_353()), Error);
  CHECK_THROWS_AS(read_report(write_report(v, form_353(), ReportFormat::Json), lorentz(3)), Error);
  CHECK_THROWS_AS(parse_report_format("svg"), Error);
}

TEST_CASE("catalogue") {
  std::set<std::string> names;
  for (const auto& e : catalogue()) {
    CAPTURE(e.name);
    CHECK(names.insert(e.name).second);
    CHECK_FALSE(e.provenance.empty());
    CHECK(e.max_roots >= e.document.form.n() + 1);
    CHECK(check_admissible(e.document.form).admissible());
  }
  for (const char* name : {"vinberg_unimodular_2", "bugaenko_sqrt2_6", "mark_f5_8", "vinberg_simplex_353", "borcherds_21"})
    CHECK(names.count(name) == 1);

  const auto quick = select_entries("all", Budget::Quick);
  const auto extended = select_entries("all", Budget::Extended);
  CHECK(extended.size() == catalogue().size());
  CHECK(quick.size() < extended.size());
  for (const auto* e : quick) CHECK(e->budget == Budget::Quick);
  CHECK(select_entries("mark_f11_*", Budget::Quick).size() == 4);
  CHECK(select_entries("vinberg_unimodular_19", Budget::Quick).size() == 1);
  CHECK_THROWS_AS(select_entries("no_such_entry", Budget::Extended), Error);
  CHECK_THROWS_AS(parse_budget("forever"), Error);
  CHECK(catalogue_entry("vinberg_unimodular_19").budget == Budget::Extended);
  CHECK(catalogue_entry("vinberg_f2_14").budget == Budget::Standard);
  CHECK(catalogue_entry("bugaenko_sqrt5_8").expected.outcome == Outcome::Inconclusive);

  const auto r = run_entry(catalogue_entry("vinberg_unimodular_2"));
  CHECK(r.passed);
  CHECK(r.detail.empty());
  CatalogueEntry wrong = catalogue_entry("vinberg_unimodular_2");
  wrong.expected.faces = 5;
  wrong.expected.symmetry_order = 2;
  const auto w = run_entry(wrong);
  CHECK_FALSE(w.passed);
  CHECK(w.detail.find("faces 3, expected 5") != std::string::npos);
  CHECK(w.detail.find("symmetry order 1, expected 2") != std::string::npos);
  wrong = catalogue_entry("mark_f7_4");
  wrong.expected.outcome = Outcome::Reflective;
  CHECK(run_entry(wrong).detail.find("outcome inconclusive (max_roots)") != std::string::npos);
}
