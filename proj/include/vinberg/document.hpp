#pragma once

// Form documents: a JSON object with the field, the Gram matrix (or its
// diagonal) and an optional basepoint. Entries are strings in the ring
// syntax ("3", "1+1*w", "-2*w") or plain integers.
//
//   { "field": {"kind": "Qsqrt", "d": 5}, "n": 3,
//     "gram": [["2","-1","0","0"], ...], "basepoint": ["3/2","3","2*w","w"] }

#include <optional>
#include <string>
#include <vector>

#include "vinberg/lattice.hpp"

namespace vinberg {

struct FormDocument {
  std::string name;
  GramForm form;
  std::optional<FieldVector> basepoint;
  std::vector<long> chamber_weights;
};

/// Throws Error with a "line L:" prefix pointing at the offending key.
FormDocument parse_form_document(const std::string& text);
FormDocument read_form_document(const std::string& path);
std::string write_form_document(const FormDocument& doc);

/// Comma separated coordinates, e.g. "3/2,3,2*w,w".
FieldVector parse_basepoint(const std::string& text, FieldSpec field);

}  // namespace vinberg
