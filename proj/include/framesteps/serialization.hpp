#pragma once

#include <string>
#include <variant>

#include "framesteps/gt_pattern.hpp"
#include "framesteps/spectral.hpp"
#include "framesteps/tableau.hpp"

namespace framesteps {

// Interchange formats. All combinatorial data stays exact: tableau and GT
// JSON carry integers or "p/q" strings, only matrix files use decimals.
//
//   tableau: {"kind":"tableau","inner":[...],"rows":[[...],...]}
//            rows bottom to top; "inner" omitted for straight shapes
//   gt:      {"kind":"gt","shape":"triangular"|"parallelogram","rows":[...]}
//   matrix:  {"kind":"matrix","rows":[[...],...]} or CSV, one row per line

std::string tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const std::string& text);

std::string gt_to_json(const GtPattern& p);
GtPattern gt_from_json(const std::string& text);

std::string matrix_to_json(const Matrix& m);
std::string matrix_to_csv(const Matrix& m);
Matrix matrix_from_csv(const std::string& text);

using Document = std::variant<Tableau, GtPattern, Matrix>;

// Parses JSON by its "kind" field; falls back to CSV when the text is not a
// JSON object. Throws std::invalid_argument with a one-line reason.
Document parse_document(const std::string& text);
Document load_document(const std::string& path);

}  // namespace framesteps
