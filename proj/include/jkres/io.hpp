#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "jkres/rational_element.hpp"

namespace jkres {

using Json = nlohmann::ordered_json;

// Problem file:
//   {
//     "dim": 2,
//     "vectors": ["1,0", "0,1", "1,1"],
//     "expression": {"terms": [
//       {"numerator": [[[0, 0], "1"]], "denominator": [[0, 1], [1, 1]]}
//     ]},
//     "options": {"delta_witness": "2,1", "wall": [0], ...}
//   }
// Denominator pairs are (vector index, exponent). Rationals are strings
// "p/q" or integers; floats are rejected.
struct Problem {
  ArrangementPtr arrangement;
  std::optional<RationalElement> expression;
  Json options = Json::object();
};

Problem parse_problem(const Json& j);
Problem parse_problem_text(const std::string& text);

// Parse helpers; `where` is the JSON pointer used in error messages.
Rational rational_from_json(const Json& j, const std::string& where);
Vec vec_from_json(const Json& j, const std::string& where);
Polynomial polynomial_from_json(const Json& j, int nvars, const std::string& where);
RationalElement element_from_json(const Json& j, const ArrangementPtr& arr, const std::string& where);

// Printing. Elements are written over the primitive forms, so that
// {"dim", "vectors": forms, "expression"} parses back to the same element.
Json arrangement_to_json(const Arrangement& arr);
Json forms_to_json(const Arrangement& arr);
Json polynomial_to_json(const Polynomial& p);
Json element_to_json(const RationalElement& phi);
// Standalone problem document for an element.
Json element_document(const RationalElement& phi);

}  // namespace jkres
