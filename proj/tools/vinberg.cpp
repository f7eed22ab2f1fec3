// vinberg: run Vinberg's algorithm on a form document or on the built-in
// catalogue. Exit status 0 reflective / all pass, 2 inconclusive / some
// fail, 1 error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "vinberg/catalogue.hpp"
#include "vinberg/document.hpp"
#include "vinberg/report.hpp"

using namespace vinberg;

namespace {

size_t default_max_roots() {
  const char* env = std::getenv("VINBERG_MAX_ROOTS");
  if (!env || !*env) return RunConfig{}.max_roots;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error("VINBERG_MAX_ROOTS must be a positive integer, got '" + std::string(env) + "'");
  return v;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

struct AnalyzeArgs {
  std::string path;
  size_t max_roots = 0;
  std::string basepoint;
  std::string format = "json";
  bool no_arithmeticity = false;
  bool timing = false;
  unsigned threads = 1;
  std::string out;
};

int analyze(const AnalyzeArgs& a) {
  const FormDocument doc = read_form_document(a.path);
  const ReportFormat format = parse_report_format(a.format);
  RunConfig cfg;
  cfg.max_roots = a.max_roots ? a.max_roots : default_max_roots();
  cfg.threads = a.threads;
  cfg.chamber_weights = doc.chamber_weights;
  std::optional<FieldVector> u0 = doc.basepoint;
  if (!a.basepoint.empty()) u0 = parse_basepoint(a.basepoint, doc.form.field());
  const RunVerdict v = run(doc.form, cfg, u0);
  ReportOptions opt;
  opt.arithmeticity = !a.no_arithmeticity;
  opt.timing = a.timing;
  emit(write_report(v, doc.form, format, opt), a.out);
  return v.outcome == Outcome::Reflective ? 0 : 2;
}

int diagram(const std::string& path, const std::string& format, const std::string& out) {
  const FormDocument doc = read_form_document(path);
  RunConfig cfg;
  cfg.max_roots = default_max_roots();
  cfg.chamber_weights = doc.chamber_weights;
  const RunVerdict v = run(doc.form, cfg, doc.basepoint);
  emit(export_diagram(v.polyhedron.diagram, parse_diagram_format(format)) + (format == "dot" ? "" : "\n"), out);
  return v.outcome == Outcome::Reflective ? 0 : 2;
}

int catalogue_list(Budget budget) {
  for (const auto& e : catalogue()) {
    if (e.budget > budget) continue;
    std::cout << std::left << std::setw(24) << e.name << std::setw(10) << budget_name(e.budget) << std::setw(14)
              << (e.expected.outcome == Outcome::Reflective ? "reflective" : "inconclusive") << e.provenance << "\n";
  }
  return 0;
}

int catalogue_run(const std::string& selector, Budget budget, unsigned threads, bool arithmeticity) {
  const auto entries = select_entries(selector, budget);
  RunConfig cfg;
  cfg.threads = threads;
  size_t failed = 0;
  for (const CatalogueEntry* e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    EntryResult r;
    try {
      r = run_entry(*e, cfg, arithmeticity);
    } catch (const Error& err) {
      r.passed = false;
      r.detail = err.what();
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !r.passed;
    const auto& p = r.verdict.polyhedron;
    std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << e->name
              << (r.verdict.outcome == Outcome::Reflective ? "reflective   " : "inconclusive ") << "faces=" << std::setw(5)
              << p.faces;
    if (r.verdict.outcome == Outcome::Reflective)
      std::cout << "compact=" << (p.compact ? "yes " : "no  ") << "symmetry=" << std::setw(7) << p.symmetry_order.get_str();
    std::cout << std::fixed << std::setprecision(2) << sec << "s";
    std::cout.unsetf(std::ios::fixed);
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << std::endl;
  }
  std::cout << entries.size() - failed << "/" << entries.size() << " passed\n";
  return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vinberg's algorithm for Lorentzian quadratic forms over Z and real quadratic rings"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* an = app.add_subcommand("analyze", "Run the algorithm on a form document");
  an->add_option("file", aa.path, "Form document (JSON)")->required();
  an->add_option("--max-roots", aa.max_roots, "Root cap (default 1000 or $VINBERG_MAX_ROOTS)");
  an->add_option("--basepoint", aa.basepoint, "Comma separated basepoint, e.g. 3/2,3,2*w,w");
  an->add_option("--format", aa.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  an->add_flag("--no-arithmeticity", aa.no_arithmeticity, "Skip the arithmeticity check");
  an->add_flag("--timing", aa.timing, "Include wall-clock time in the report");
  an->add_option("--threads", aa.threads, "Enumeration threads")->check(CLI::Range(1u, 256u));
  an->add_option("--out", aa.out, "Write the report to a file");

  std::string dpath, dformat = "dot", dout;
  auto* di = app.add_subcommand("diagram", "Print the Coxeter diagram of the resulting polyhedron");
  di->add_option("file", dpath, "Form document (JSON)")->required();
  di->add_option("--format", dformat, "dot, text or json")->check(CLI::IsMember({"json", "text", "dot"}));
  di->add_option("--out", dout, "Write to a file");

  auto* cat = app.add_subcommand("catalogue", "Built-in form catalogue");
  cat->require_subcommand(1);
  std::string budget = "quick";
  auto* ls = cat->add_subcommand("list", "List entries with provenance");
  ls->add_option("--budget", budget, "quick, standard or extended")->default_val("extended");
  std::string selector;
  unsigned threads = 1;
  bool no_arith = false;
  auto* rn = cat->add_subcommand("run", "Run entries and compare with the expected verdicts");
  rn->add_option("selector", selector, "all, an entry name, or a prefix ending in *")->required();
  rn->add_option("--budget", budget, "quick, standard or extended");
  rn->add_option("--threads", threads, "Enumeration threads")->check(CLI::Range(1u, 256u));
  rn->add_flag("--no-arithmeticity", no_arith, "Skip the arithmeticity check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (an->parsed()) return analyze(aa);
    if (di->parsed()) return diagram(dpath, dformat, dout);
    if (ls->parsed()) return catalogue_list(parse_budget(budget));
    if (rn->parsed()) return catalogue_run(selector, parse_budget(budget), threads, !no_arith);
  } catch (const std::exception& e) {
    std::cerr << "vinberg: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
