#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vinberg/analysis.hpp"
#include "vinberg/catalogue.hpp"
#include "vinberg/document.hpp"
#include "vinberg/report.hpp"

namespace py = pybind11;
using namespace vinberg;

namespace {

struct PyVerdict {
  RunVerdict v;
  GramForm form;
};

py::object big(const Integer& x) { return py::int_(py::str(x.get_str())); }

std::vector<std::vector<std::string>> root_strings(const std::vector<Root>& roots) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : roots) {
    std::vector<std::string> row;
    for (const auto& x : r.e()) row.push_back(x.str());
    out.push_back(row);
  }
  return out;
}

PyVerdict run_document(const FormDocument& doc, size_t max_roots, unsigned threads,
                       const std::optional<std::string>& basepoint, double max_seconds) {
  RunConfig cfg;
  cfg.max_roots = max_roots;
  cfg.threads = threads;
  cfg.max_seconds = max_seconds;
  cfg.chamber_weights = doc.chamber_weights;
  std::optional<FieldVector> u0 = doc.basepoint;
  if (basepoint) u0 = parse_basepoint(*basepoint, doc.form.field());
  py::gil_scoped_release release;
  return {run(doc.form, cfg, u0), doc.form};
}

py::dict arithmeticity_dict(const ArithmeticityReport& a) {
  py::dict d;
  d["is_arithmetic"] = a.is_arithmetic;
  d["field"] = a.field;
  d["integral"] = a.integral;
  d["conjugate_check"] = a.conjugate_check;
  d["cycles_examined"] = a.cycles_examined;
  d["exhaustive"] = a.exhaustive;
  d["failing_cycle"] = a.failing_cycle;
  d["detail"] = a.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_vinberg, m) {
  m.doc() = "Vinberg's algorithm for Lorentzian forms over Z and real quadratic rings";
  py::register_exception<Error>(m, "VinbergError", PyExc_ValueError);

  py::class_<FormDocument>(m, "FormDocument")
      .def_static("parse", &parse_form_document, py::arg("text"))
      .def_static("read", &read_form_document, py::arg("path"))
      .def("to_json", &write_form_document)
      .def_readonly("name", &FormDocument::name)
      .def_property_readonly("n", [](const FormDocument& d) { return d.form.n(); })
      .def_property_readonly("field", [](const FormDocument& d) { return d.form.field().describe(); })
      .def_property_readonly("admissible", [](const FormDocument& d) { return check_admissible(d.form).admissible(); })
      .def("__repr__", [](const FormDocument& d) {
        return "<FormDocument " + (d.name.empty() ? std::string("(unnamed)") : d.name) + " over " +
               d.form.field().describe() + ", n=" + std::to_string(d.form.n()) + ">";
      });

  py::class_<PyVerdict>(m, "Verdict")
      .def_property_readonly("reflective", [](const PyVerdict& p) { return p.v.outcome == Outcome::Reflective; })
      .def_property_readonly("outcome", [](const PyVerdict& p) {
        return p.v.outcome == Outcome::Reflective ? "reflective" : "inconclusive";
      })
      .def_property_readonly("cap_hit", [](const PyVerdict& p) { return p.v.cap_hit; })
      .def_property_readonly("basepoint",
                             [](const PyVerdict& p) {
                               std::vector<std::string> out;
                               for (const auto& x : p.v.basepoint) out.push_back(x.str());
                               return out;
                             })
      .def_property_readonly("roots", [](const PyVerdict& p) { return root_strings(p.v.polyhedron.roots); })
      .def_property_readonly("norms",
                             [](const PyVerdict& p) {
                               std::vector<std::string> out;
                               for (const auto& r : p.v.polyhedron.roots) out.push_back(r.norm().str());
                               return out;
                             })
      .def_property_readonly("faces", [](const PyVerdict& p) { return p.v.polyhedron.faces; })
      .def_property_readonly("finite_volume", [](const PyVerdict& p) { return p.v.polyhedron.finite_volume; })
      .def_property_readonly("compact", [](const PyVerdict& p) { return p.v.polyhedron.compact; })
      .def_property_readonly("ordinary_vertices", [](const PyVerdict& p) { return p.v.polyhedron.ordinary_vertices; })
      .def_property_readonly("ideal_vertices", [](const PyVerdict& p) { return p.v.polyhedron.ideal_vertices; })
      .def_property_readonly("symmetry_order",
                             [](const PyVerdict& p) -> py::object {
                               if (p.v.polyhedron.symmetry_order == 0) return py::none();
                               return big(p.v.polyhedron.symmetry_order);
                             })
      .def_property_readonly("seconds", [](const PyVerdict& p) { return p.v.seconds; })
      .def("arithmeticity",
           [](const PyVerdict& p, size_t cycle_cap) {
             return arithmeticity_dict(arithmeticity_check(p.v.polyhedron.roots, p.form, cycle_cap));
           },
           py::arg("cycle_cap") = 12)
      .def("diagram",
           [](const PyVerdict& p, const std::string& format) {
             return export_diagram(p.v.polyhedron.diagram, parse_diagram_format(format));
           },
           py::arg("format") = "dot")
      .def("report",
           [](const PyVerdict& p, const std::string& format, bool arithmeticity, bool timing) {
             ReportOptions opt;
             opt.arithmeticity = arithmeticity;
             opt.timing = timing;
             return write_report(p.v, p.form, parse_report_format(format), opt);
           },
           py::arg("format") = "json", py::arg("arithmeticity") = true, py::arg("timing") = false)
      .def("__repr__", [](const PyVerdict& p) {
        return std::string("<Verdict ") + (p.v.outcome == Outcome::Reflective ? "reflective" : "inconclusive") + ", " +
               std::to_string(p.v.polyhedron.roots.size()) + " roots>";
      });

  m.def("run", &run_document, py::arg("document"), py::arg("max_roots") = 1000, py::arg("threads") = 1,
        py::arg("basepoint") = py::none(), py::arg("max_seconds") = 0.0,
        "Run the algorithm on a form document");

  m.def("triangle_arithmeticity",
        [](int p, int q, int r) { return arithmeticity_dict(arithmeticity_check(triangle_diagram(p, q, r))); },
        py::arg("p"), py::arg("q"), py::arg("r"), "Arithmeticity of the (p,q,r) triangle group, 0 meaning infinity");

  m.def("catalogue", [](const std::string& budget) {
    py::list out;
    for (const auto& e : catalogue()) {
      if (e.budget > parse_budget(budget)) continue;
      py::dict d;
      d["name"] = e.name;
      d["budget"] = budget_name(e.budget);
      d["expected"] = e.expected.outcome == Outcome::Reflective ? "reflective" : "inconclusive";
      d["provenance"] = e.provenance;
      out.append(d);
    }
    return out;
  }, py::arg("budget") = "extended");

  m.def("catalogue_document", [](const std::string& name) { return catalogue_entry(name).document; }, py::arg("name"));

  m.def("run_catalogue_entry",
        [](const std::string& name, bool arithmeticity, unsigned threads) {
          const CatalogueEntry& e = catalogue_entry(name);
          RunConfig cfg;
          cfg.threads = threads;
          EntryResult r;
          {
            py::gil_scoped_release release;
            r = run_entry(e, cfg, arithmeticity);
          }
          return py::make_tuple(r.passed, r.detail, PyVerdict{r.verdict, e.document.form});
        },
        py::arg("name"), py::arg("arithmeticity") = true, py::arg("threads") = 1,
        "Run a catalogue entry; returns (passed, detail, verdict)");
}
