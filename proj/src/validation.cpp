#include "framesteps/validation.hpp"

namespace framesteps {

std::string ValidationReport::summary() const {
  if (ok) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.rule + " rule at row " + std::to_string(v.row) + ", col " +
           std::to_string(v.col);
  }
  return out;
}

}  // namespace framesteps
