#include "vinberg/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vinberg {

namespace {

using nlohmann::json;

// Line of the first occurrence of "key" in the source; 0 when absent.
size_t key_line(const std::string& text, const std::string& key) {
  const size_t pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return 0;
  return 1 + static_cast<size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

[[noreturn]] void fail(const std::string& text, const std::string& key, const std::string& what) {
  const size_t line = key_line(text, key);
  throw Error((line ? "line " + std::to_string(line) + ": " : std::string()) + what);
}

std::string element_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error("expected a ring element, got " + j.dump());
}

FieldSpec parse_field(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Q") return FieldSpec::rational();
    throw Error("unknown field '" + s + "'");
  }
  if (!j.is_object() || !j.contains("kind")) throw Error("field must be an object with a \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "Q") return FieldSpec::rational();
  if (kind != "Qsqrt") throw Error("unknown field kind '" + kind + "'");
  if (!j.contains("d") || !j.at("d").is_number_integer()) throw Error("field Qsqrt needs an integer \"d\"");
  const int d = j.at("d").get<int>();
  if (!FieldSpec::supported(d)) throw Error("Q(sqrt" + std::to_string(d) + ") is not supported");
  return FieldSpec::quadratic(d);
}

}  // namespace

FormDocument parse_form_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const size_t upto = std::min(e.byte, text.size());
    const size_t line = 1 + static_cast<size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    throw Error("line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
  if (!j.is_object()) throw Error("line 1: form document must be a JSON object");

  FormDocument doc;
  FieldSpec field;
  try {
    field = parse_field(j.contains("field") ? j.at("field") : json("Q"));
  } catch (const std::exception& e) {
    fail(text, "field", e.what());
  }
  if (j.contains("name")) doc.name = j.at("name").get<std::string>();

  const bool has_gram = j.contains("gram"), has_diag = j.contains("diag");
  if (has_gram == has_diag) throw Error("form document needs exactly one of \"gram\" and \"diag\"");
  const std::string key = has_gram ? "gram" : "diag";
  try {
    if (has_gram) {
      const json& rows = j.at("gram");
      if (!rows.is_array() || rows.empty()) throw Error("gram must be a non-empty array of rows");
      const size_t m = rows.size();
      RingMatrix g(m, m, RingElement(field));
      for (size_t r = 0; r < m; ++r) {
        if (!rows[r].is_array() || rows[r].size() != m)
          throw Error("gram row " + std::to_string(r + 1) + " does not have " + std::to_string(m) + " entries");
        for (size_t c = 0; c < m; ++c) g(r, c) = RingElement::parse(element_text(rows[r][c]), field);
      }
      for (size_t r = 0; r < m; ++r)
        for (size_t c = r + 1; c < m; ++c)
          if (!(g(r, c) == g(c, r)))
            throw Error("gram is not symmetric at (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
      doc.form = GramForm(field, std::move(g));
    } else {
      const json& d = j.at("diag");
      if (!d.is_array() || d.empty()) throw Error("diag must be a non-empty array");
      std::vector<RingElement> entries;
      for (const auto& x : d) entries.push_back(RingElement::parse(element_text(x), field));
      doc.form = GramForm::diagonal(field, entries);
    }
  } catch (const Error& e) {
    fail(text, key, e.what());
  } catch (const json::exception& e) {
    fail(text, key, e.what());
  }

  if (j.contains("n")) {
    const json& n = j.at("n");
    if (!n.is_number_integer() || n.get<long long>() != static_cast<long long>(doc.form.n()))
      fail(text, "n", "n = " + n.dump() + " but the matrix has size " + std::to_string(doc.form.dim()));
  }
  if (j.contains("basepoint")) {
    try {
      const json& b = j.at("basepoint");
      if (!b.is_array() || b.size() != doc.form.dim())
        throw Error("basepoint must have " + std::to_string(doc.form.dim()) + " coordinates");
      FieldVector u;
      for (const auto& x : b) u.push_back(FieldElement::parse(element_text(x), field));
      doc.basepoint = std::move(u);
    } catch (const std::exception& e) {
      fail(text, "basepoint", e.what());
    }
  }
  if (j.contains("chamber_weights")) {
    try {
      doc.chamber_weights = j.at("chamber_weights").get<std::vector<long>>();
      if (doc.chamber_weights.size() != doc.form.dim())
        throw Error("chamber_weights must have " + std::to_string(doc.form.dim()) + " entries");
    } catch (const std::exception& e) {
      fail(text, "chamber_weights", e.what());
    }
  }
  return doc;
}

FormDocument read_form_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_form_document(ss.str());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string write_form_document(const FormDocument& doc) {
  nlohmann::ordered_json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  const FieldSpec& field = doc.form.field();
  if (field.is_rational())
    j["field"] = {{"kind", "Q"}};
  else
    j["field"] = {{"kind", "Qsqrt"}, {"d", field.d()}};
  j["n"] = doc.form.n();
  auto& rows = j["gram"] = nlohmann::ordered_json::array();
  for (size_t r = 0; r < doc.form.dim(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (size_t c = 0; c < doc.form.dim(); ++c) row.push_back(doc.form.gram()(r, c).str());
    rows.push_back(row);
  }
  if (doc.basepoint) {
    auto& b = j["basepoint"] = nlohmann::ordered_json::array();
    for (const auto& x : *doc.basepoint) b.push_back(x.str());
  }
  if (!doc.chamber_weights.empty()) j["chamber_weights"] = doc.chamber_weights;
  return j.dump(2) + "\n";
}

FieldVector parse_basepoint(const std::string& text, FieldSpec field) {
  FieldVector u;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) u.push_back(FieldElement::parse(item, field));
  if (u.empty()) throw Error("empty basepoint");
  return u;
}

}  // namespace vinberg
