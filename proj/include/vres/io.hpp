#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "vres/field.hpp"
#include "vres/labeled.hpp"
#include "vres/monomial.hpp"

namespace vres {

// A parsed input file: toric context, labeled complex, optional field
// preference. `shorthand` remembers a "P n k" context string so that
// re-rendered documents keep the compact form.
struct InputDocument {
  ToricContext context;
  std::string shorthand;
  LabeledComplex labeled;
  std::optional<FieldSpec> field;
};

// Throws ArgumentError with a diagnostic naming the offending key or token.
InputDocument parse_document(const nlohmann::json& j);
InputDocument parse_document_text(const std::string& text);

// Inverse of parse_document up to formatting: parsing the result yields an
// equivalent document. Non-lcm labelings render their full face-label map.
nlohmann::json document_json(const InputDocument& doc);

// Same context and field, different labeling (e.g. after a subdivision).
InputDocument with_labeling(const InputDocument& doc, LabeledComplex l);

}  // namespace vres
