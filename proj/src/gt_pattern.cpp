#include "framesteps/gt_pattern.hpp"

#include <stdexcept>
#include <string>

namespace framesteps {

namespace {

std::vector<std::vector<Rational>> from_int(
    const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rational>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (long long v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

void require_valid(const GtPattern& p, const char* op) {
  ValidationReport report = validate_gt(p);
  if (!report.ok)
    throw std::invalid_argument(
        std::string(op) + ": invalid GT pattern (" +
        report.violations.front().rule + " rule at row " +
        std::to_string(report.violations.front().row) + ", col " +
        std::to_string(report.violations.front().col) + ")");
}

}  // namespace

GtPattern::GtPattern(GtKind kind, std::vector<std::vector<Rational>> rows)
    : kind_(kind), rows_(std::move(rows)) {}

GtPattern GtPattern::triangular(std::vector<std::vector<Rational>> rows) {
  return GtPattern(GtKind::triangular, std::move(rows));
}

GtPattern GtPattern::parallelogram(std::vector<std::vector<Rational>> rows) {
  return GtPattern(GtKind::parallelogram, std::move(rows));
}

GtPattern GtPattern::triangular_int(
    const std::vector<std::vector<long long>>& rows) {
  return GtPattern(GtKind::triangular, from_int(rows));
}

GtPattern GtPattern::parallelogram_int(
    const std::vector<std::vector<long long>>& rows) {
  return GtPattern(GtKind::parallelogram, from_int(rows));
}

const std::vector<Rational>& GtPattern::top_row() const {
  if (rows_.empty()) throw std::invalid_argument("empty GT pattern has no top row");
  return rows_.back();
}

const std::vector<Rational>& GtPattern::bottom_row() const {
  if (rows_.empty())
    throw std::invalid_argument("empty GT pattern has no bottom row");
  return rows_.front();
}

const Rational& GtPattern::at(int row, int col) const {
  return rows_.at(row - 1).at(col - 1);
}

bool GtPattern::all_integer() const {
  for (const auto& row : rows_)
    for (const auto& v : row)
      if (!v.is_integer()) return false;
  return true;
}

ValidationReport validate_gt(const GtPattern& p) {
  ValidationReport report;
  const auto& rows = p.rows();
  int n = p.row_count();

  for (int i = 0; i < n; ++i) {
    std::size_t expected = p.kind() == GtKind::triangular
                               ? static_cast<std::size_t>(i + 1)
                               : rows[0].size();
    if (rows[i].size() != expected) {
      report.add("structure", i + 1, static_cast<int>(rows[i].size()),
                 "row has wrong length");
      return report;  // further checks would index out of shape
    }
  }

  bool entry_done = false, row_done = false;
  for (int i = 0; i < n && !(entry_done && row_done); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (!entry_done && rows[i][j] < Rational(0)) {
        report.add("entry", i + 1, static_cast<int>(j) + 1,
                   "entries must be nonnegative");
        entry_done = true;
      }
      if (!row_done && j > 0 && rows[i][j] > rows[i][j - 1]) {
        report.add("row", i + 1, static_cast<int>(j) + 1,
                   "row not weakly decreasing");
        row_done = true;
      }
    }
  }

  for (int i = 0; i + 1 < n; ++i) {
    const auto& lower = rows[i];
    const auto& upper = rows[i + 1];
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (upper[j] < lower[j]) {
        report.add("interlacing", i + 2, static_cast<int>(j) + 1,
                   "entry above-left is smaller");
        return report;
      }
      if (j + 1 < upper.size() && lower[j] < upper[j + 1]) {
        report.add("interlacing", i + 2, static_cast<int>(j) + 2,
                   "entry above-right is larger");
        return report;
      }
    }
  }
  return report;
}

std::vector<Rational> gt_weight(const GtPattern& p) {
  require_valid(p, "gt_weight");
  std::vector<Rational> weights;
  Rational previous_sum(0);
  for (const auto& row : p.rows()) {
    Rational sum(0);
    for (const auto& v : row) sum = sum + v;
    weights.push_back(sum - previous_sum);
    previous_sum = sum;
  }
  return weights;
}

GtPattern triangular_to_parallelogram(const GtPattern& p, int width) {
  require_valid(p, "triangular_to_parallelogram");
  if (p.kind() != GtKind::triangular)
    throw std::invalid_argument("triangular_to_parallelogram: pattern not triangular");
  if (width < 1)
    throw std::invalid_argument("triangular_to_parallelogram: width must be positive");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(p.row_count());
  for (int i = 1; i <= p.row_count(); ++i) {
    std::vector<Rational> row = p.rows()[i - 1];
    for (int j = width; j < i; ++j)
      if (!row[j].is_zero())
        throw std::invalid_argument(
            "triangular_to_parallelogram: nonzero entry beyond width " +
            std::to_string(width) + " in row " + std::to_string(i));
    row.resize(width, Rational(0));
    rows.push_back(std::move(row));
  }
  return GtPattern::parallelogram(std::move(rows));
}

GtPattern parallelogram_to_triangular(const GtPattern& p) {
  require_valid(p, "parallelogram_to_triangular");
  if (p.kind() != GtKind::parallelogram)
    throw std::invalid_argument("parallelogram_to_triangular: pattern not parallelogram");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(p.row_count());
  for (int i = 1; i <= p.row_count(); ++i) {
    std::vector<Rational> row = p.rows()[i - 1];
    for (std::size_t j = i; j < row.size(); ++j)
      if (!row[j].is_zero())
        throw std::invalid_argument(
            "parallelogram_to_triangular: nonzero entry beyond position " +
            std::to_string(i) + " in row " + std::to_string(i));
    row.resize(i, Rational(0));
    rows.push_back(std::move(row));
  }
  return GtPattern::triangular(std::move(rows));
}

GtPattern zero_pad_top(const GtPattern& p) {
  require_valid(p, "zero_pad_top");
  if (p.kind() != GtKind::triangular)
    throw std::invalid_argument("zero_pad_top: pattern not triangular");
  std::vector<std::vector<Rational>> rows = p.rows();
  std::vector<Rational> top = rows.empty() ? std::vector<Rational>{} : rows.back();
  top.emplace_back(0);
  rows.push_back(std::move(top));
  return GtPattern::triangular(std::move(rows));
}

GtPattern canonical_form(const GtPattern& p) {
  require_valid(p, "canonical_form");
  std::vector<std::vector<Rational>> rows = p.rows();
  while (rows.size() >= 2) {
    const auto& top = rows.back();
    const auto& below = rows[rows.size() - 2];
    bool padded = true;
    if (p.kind() == GtKind::triangular) {
      padded = top.size() == below.size() + 1 && top.back().is_zero();
      for (std::size_t j = 0; padded && j < below.size(); ++j)
        padded = top[j] == below[j];
    } else {
      padded = top == below;
    }
    if (!padded) break;
    rows.pop_back();
  }
  return GtPattern(p.kind(), std::move(rows));
}

bool gt_equivalent(const GtPattern& a, const GtPattern& b) {
  return canonical_form(a) == canonical_form(b);
}

GtPattern naimark_map(const GtPattern& p, int n, int d) {
  require_valid(p, "naimark_map");
  if (p.kind() != GtKind::triangular)
    throw std::invalid_argument("naimark_map: pattern not triangular");
  if (d < 1 || d >= n)
    throw std::invalid_argument("naimark_map: need 0 < d < n");
  if (p.row_count() != n)
    throw std::invalid_argument("naimark_map: pattern must have n rows");
  const Rational full(n);
  for (int j = 1; j <= n; ++j) {
    const Rational expected = j <= d ? full : Rational(0);
    if (p.at(n, j) != expected)
      throw std::invalid_argument(
          "naimark_map: top row must be n repeated d times then zeros");
  }
  for (const Rational& w : gt_weight(p))
    if (w != Rational(d))
      throw std::invalid_argument("naimark_map: weight must be constant d");

  std::vector<std::vector<Rational>> rows(n);
  for (int i = 1; i <= n; ++i) {
    rows[i - 1].reserve(i);
    for (int j = 1; j <= i; ++j) {
      if (j > n - d) {
        rows[i - 1].emplace_back(0);
      } else if (i > d + j - 1) {
        rows[i - 1].push_back(full);
      } else {
        rows[i - 1].push_back(p.at(n - i, d + j - i));
      }
    }
  }
  return GtPattern::triangular(std::move(rows));
}

GtPattern generalized_complement(const GtPattern& p) {
  require_valid(p, "generalized_complement");
  if (p.kind() != GtKind::triangular)
    throw std::invalid_argument("generalized_complement: pattern not triangular");
  int n = p.row_count();
  if (n == 0)
    throw std::invalid_argument("generalized_complement: empty pattern");
  const Rational bound = p.at(n, 1);
  if (!p.at(n, n).is_zero())
    throw std::invalid_argument(
        "generalized_complement: top row must end in zero");
  if (!(bound > Rational(0)))
    throw std::invalid_argument(
        "generalized_complement: top-left entry must be positive");

  std::vector<std::vector<Rational>> rows(n);
  for (int i = 1; i <= n; ++i) {
    rows[i - 1].reserve(i);
    for (int j = 1; j <= i; ++j)
      rows[i - 1].push_back(bound - p.at(i, i + 1 - j));
  }
  return GtPattern::triangular(std::move(rows));
}

}  // namespace framesteps
