#pragma once

#include <string>
#include <vector>

namespace framesteps {

// One violated rule, localized to a cell. Rows count from the bottom and
// columns from the left, both 1-based, matching the French convention used
// throughout.
struct Violation {
  std::string rule;
  int row = 0;
  int col = 0;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string rule, int row, int col, std::string detail) {
    ok = false;
    violations.push_back({std::move(rule), row, col, std::move(detail)});
  }
  // First violation recorded for a given rule, if any.
  const Violation* find(const std::string& rule) const {
    for (const auto& v : violations)
      if (v.rule == rule) return &v;
    return nullptr;
  }
  std::string summary() const;
};

}  // namespace framesteps
