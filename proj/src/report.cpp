#include "vinberg/report.hpp"

#include <sstream>

#include "json.hpp"
#include "vinberg/analysis.hpp"

namespace vinberg {

namespace {

using ojson = nlohmann::ordered_json;

ojson integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

struct Analyses {
  std::optional<ArithmeticityReport> arith;
  MinimalityReport minimal;
  std::vector<size_t> doubling;
};

Analyses analyse(const RunVerdict& v, const GramForm& f, const ReportOptions& opt) {
  Analyses a;
  const auto& roots = v.polyhedron.roots;
  if (opt.arithmeticity) a.arith = arithmeticity_check(roots, f, opt.cycle_cap);
  a.minimal = minimality(roots, f);
  a.doubling = doubling_walls(v.polyhedron.diagram);
  return a;
}

ojson to_json(const RunVerdict& v, const GramForm& f, const ReportOptions& opt) {
  const PolyhedronReport& p = v.polyhedron;
  const bool reflective = v.outcome == Outcome::Reflective;
  ojson j;
  j["field"] = f.field().describe();
  j["n"] = f.n();
  j["outcome"] = reflective ? "reflective" : "inconclusive";
  j["cap_hit"] = reflective ? ojson(nullptr) : ojson(v.cap_hit);
  ojson u = ojson::array();
  for (const auto& x : v.basepoint) u.push_back(x.str());
  j["basepoint"] = u;
  j["stabilizer_roots"] = v.stabilizer_roots;
  j["shells_searched"] = v.shells_searched;
  ojson roots = ojson::array(), norms = ojson::array(), edges = ojson::array();
  for (const auto& r : p.roots) {
    auto c = ojson::array();
    for (const auto& x : r.e()) c.push_back(x.str());
    roots.push_back(c);
    norms.push_back(r.norm().str());
  }
  for (size_t a = 0; a < p.diagram.size(); ++a)
    for (size_t b = a + 1; b < p.diagram.size(); ++b)
      if (p.diagram.label(a, b).kind != EdgeKind::Orthogonal)
        edges.push_back({{"i", a + 1}, {"j", b + 1}, {"label", p.diagram.label(a, b).str()}});
  // ordered_json stores keys in a vector, so no references are held across inserts
  j["roots"] = roots;
  j["norms"] = norms;
  j["edges"] = edges;
  j["faces"] = p.faces;
  j["finite_volume"] = p.finite_volume;
  j["compact"] = p.compact;
  j["ordinary_vertices"] = p.ordinary_vertices;
  j["ideal_vertices"] = p.ideal_vertices;
  j["symmetry_order"] = reflective ? integer_json(p.symmetry_order) : ojson(nullptr);

  j["arithmeticity"] = nullptr;
  j["minimality"] = nullptr;
  j["doubling_walls"] = nullptr;
  if (reflective) {
    const Analyses a = analyse(v, f, opt);
    if (a.arith) {
      const ArithmeticityReport& r = *a.arith;
      ojson cyc = ojson::array();
      for (size_t i : r.failing_cycle) cyc.push_back(i + 1);
      j["arithmeticity"] = {{"is_arithmetic", r.is_arithmetic}, {"field", r.field},
                            {"integral", r.integral},          {"conjugate_check", r.conjugate_check},
                            {"cycles_examined", r.cycles_examined}, {"exhaustive", r.exhaustive},
                            {"failing_cycle", cyc},            {"detail", r.detail}};
    }
    j["minimality"] = {{"max_square", a.minimal.max_square.str()},
                       {"max_entry", static_cast<double>(a.minimal.max_entry)}};
    ojson dw = ojson::array();
    for (size_t i : a.doubling) dw.push_back(i + 1);
    j["doubling_walls"] = dw;
  }
  if (opt.timing) j["timing"] = {{"seconds", v.seconds}};
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string to_text(const RunVerdict& v, const GramForm& f, const ReportOptions& opt) {
  const ojson j = to_json(v, f, opt);
  std::ostringstream out;
  const PolyhedronReport& p = v.polyhedron;
  out << "field: " << f.field().describe() << "\n";
  out << "n: " << f.n() << "\n";
  out << "basepoint: " << to_string(v.basepoint) << "\n";
  if (v.outcome == Outcome::Reflective)
    out << "outcome: reflective\n";
  else
    out << "outcome: inconclusive (" << v.cap_hit << ")\n";
  out << "roots: " << p.roots.size() << " (" << v.stabilizer_roots << " through the basepoint)\n";
  for (size_t i = 0; i < p.roots.size(); ++i)
    out << "  " << i + 1 << ": " << to_string(p.roots[i].e()) << " norm " << p.roots[i].norm().str() << "\n";
  if (v.outcome == Outcome::Reflective) {
    out << "compact: " << yes_no(p.compact) << "\n";
    out << "vertices: " << p.ordinary_vertices << " ordinary, " << p.ideal_vertices << " ideal\n";
    out << "symmetry order: " << p.symmetry_order.get_str() << "\n";
    const auto& a = j["arithmeticity"];
    if (!a.is_null()) {
      out << "arithmetic: " << yes_no(a["is_arithmetic"].get<bool>()) << " over " << a["field"].get<std::string>() << ", "
          << a["cycles_examined"].get<size_t>() << " cycles" << (a["exhaustive"].get<bool>() ? "" : " (capped)");
      if (!a["detail"].get<std::string>().empty()) out << "; " << a["detail"].get<std::string>();
      out << "\n";
    }
    out << "minimality: max a_ij^2 = " << j["minimality"]["max_square"].get<std::string>() << "\n";
    out << "doubling walls:";
    if (j["doubling_walls"].empty()) out << " none";
    for (const auto& w : j["doubling_walls"]) out << " " << w.get<size_t>();
    out << "\n";
  }
  if (opt.timing) out << "seconds: " << v.seconds << "\n";
  out << "diagram:\n";
  const std::string edges = export_diagram(p.diagram, DiagramFormat::Text);
  if (!edges.empty()) out << edges << "\n";
  return out.str();
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "text") return ReportFormat::Text;
  if (name == "dot") return ReportFormat::Dot;
  throw Error("unknown report format '" + name + "'");
}

std::string write_report(const RunVerdict& v, const GramForm& f, ReportFormat format, const ReportOptions& opt) {
  switch (format) {
    case ReportFormat::Json:
      return to_json(v, f, opt).dump(2) + "\n";
    case ReportFormat::Text:
      return to_text(v, f, opt);
    case ReportFormat::Dot:
      return export_diagram(v.polyhedron.diagram, DiagramFormat::Dot);
  }
  return {};
}

RunVerdict read_report(const std::string& json_text, const GramForm& f) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report json: ") + e.what());
  }
  try {
    if (j.at("field").get<std::string>() != f.field().describe() || j.at("n").get<size_t>() != f.n())
      throw Error("report json: report belongs to a different form");
    RunVerdict v;
    const std::string outcome = j.at("outcome").get<std::string>();
    if (outcome != "reflective" && outcome != "inconclusive") throw Error("report json: unknown outcome '" + outcome + "'");
    v.outcome = outcome == "reflective" ? Outcome::Reflective : Outcome::Inconclusive;
    if (!j.at("cap_hit").is_null()) v.cap_hit = j.at("cap_hit").get<std::string>();
    for (const auto& x : j.at("basepoint")) v.basepoint.push_back(FieldElement::parse(x.get<std::string>(), f.field()));
    v.stabilizer_roots = j.at("stabilizer_roots").get<size_t>();
    v.shells_searched = j.at("shells_searched").get<size_t>();
    PolyhedronReport& p = v.polyhedron;
    for (const auto& r : j.at("roots")) {
      Vector e;
      for (const auto& x : r) e.push_back(RingElement::parse(x.get<std::string>(), f.field()));
      p.roots.emplace_back(e, f);
    }
    p.diagram = CoxeterDiagram(f, p.roots);
    for (const auto& e : j.at("edges")) {
      const size_t a = e.at("i").get<size_t>() - 1, b = e.at("j").get<size_t>() - 1;
      if (a >= p.roots.size() || b >= p.roots.size() || !(p.diagram.label(a, b) == EdgeLabel::parse(e.at("label"))))
        throw Error("report json: stored edge disagrees with the roots");
    }
    size_t listed = 0;
    for (size_t a = 0; a < p.roots.size(); ++a)
      for (size_t b = a + 1; b < p.roots.size(); ++b) listed += p.diagram.label(a, b).kind != EdgeKind::Orthogonal;
    if (listed != j.at("edges").size()) throw Error("report json: edge list is incomplete");
    p.faces = j.at("faces").get<size_t>();
    p.finite_volume = j.at("finite_volume").get<bool>();
    p.compact = j.at("compact").get<bool>();
    p.ordinary_vertices = j.at("ordinary_vertices").get<size_t>();
    p.ideal_vertices = j.at("ideal_vertices").get<size_t>();
    if (!j.at("symmetry_order").is_null()) p.symmetry_order = integer_from(j.at("symmetry_order"));
    if (j.contains("timing")) v.seconds = j.at("timing").at("seconds").get<double>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report json: ") + e.what());
  }
}

}  // namespace vinberg
