#include "framesteps/bridge.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace framesteps {

namespace {

void require_valid_pattern(const GtPattern& p, const char* op) {
  ValidationReport report = validate_gt(p);
  if (!report.ok)
    throw std::invalid_argument(std::string(op) + ": invalid GT pattern");
}

void require_valid_tableau(const Tableau& t, const char* op) {
  ValidationReport report = validate_tableau(t);
  if (!report.ok)
    throw std::invalid_argument(std::string(op) + ": invalid tableau");
}

long long int_entry(const Rational& v, const char* op) {
  if (!v.is_integer())
    throw std::invalid_argument(std::string(op) +
                                ": pattern entries must be integers");
  return v.num();
}

// Appends, into `rows`, the horizontal strips of lower/upper filled with
// `label`. Both partitions come from consecutive GT rows, lower inside upper.
void fill_strip(std::vector<std::vector<int>>& rows,
                const std::vector<long long>& lower,
                const std::vector<long long>& upper, int label) {
  for (std::size_t r = 0; r < upper.size(); ++r) {
    long long from = r < lower.size() ? lower[r] : 0;
    if (r >= rows.size()) rows.emplace_back();
    for (long long c = from; c < upper[r]; ++c) rows[r].push_back(label);
  }
}

std::vector<long long> int_row(const GtPattern& p, int i, const char* op) {
  std::vector<long long> out;
  out.reserve(p.rows()[i - 1].size());
  for (const auto& v : p.rows()[i - 1]) out.push_back(int_entry(v, op));
  return out;
}

}  // namespace

Tableau gt_to_ssyt(const GtPattern& p) {
  require_valid_pattern(p, "gt_to_ssyt");
  if (p.kind() != GtKind::triangular)
    throw std::invalid_argument("gt_to_ssyt: pattern not triangular");
  std::vector<std::vector<int>> rows;
  std::vector<long long> previous;
  for (int i = 1; i <= p.row_count(); ++i) {
    std::vector<long long> current = int_row(p, i, "gt_to_ssyt");
    fill_strip(rows, previous, current, i);
    previous = std::move(current);
  }
  return Tableau::straight(std::move(rows));
}

GtPattern ssyt_to_gt(const Tableau& t, int label_bound) {
  require_valid_tableau(t, "ssyt_to_gt");
  if (!t.is_straight())
    throw std::invalid_argument("ssyt_to_gt: tableau must be straight");
  int top = t.max_entry();
  if (label_bound == 0) label_bound = top;
  if (label_bound < top)
    throw std::invalid_argument("ssyt_to_gt: label bound below largest entry");
  std::vector<std::vector<Rational>> rows(label_bound);
  for (int i = 1; i <= label_bound; ++i) {
    rows[i - 1].assign(i, Rational(0));
    for (int r = 0; r < std::min(t.row_count(), i); ++r) {
      const auto& row = t.rows()[r];
      auto end = std::upper_bound(row.begin(), row.end(), i);
      rows[i - 1][r] = Rational(end - row.begin());
    }
  }
  return GtPattern::triangular(std::move(rows));
}

Tableau gt_to_skew(const GtPattern& p) {
  require_valid_pattern(p, "gt_to_skew");
  if (p.kind() != GtKind::parallelogram)
    throw std::invalid_argument("gt_to_skew: pattern not parallelogram");
  if (p.row_count() == 0) return Tableau();
  std::vector<long long> previous = int_row(p, 1, "gt_to_skew");
  std::vector<int> inner(previous.begin(), previous.end());
  std::vector<std::vector<int>> rows;
  for (int i = 2; i <= p.row_count(); ++i) {
    std::vector<long long> current = int_row(p, i, "gt_to_skew");
    fill_strip(rows, previous, current, i - 1);
    previous = std::move(current);
  }
  return Tableau::skew(Partition(std::move(inner)), std::move(rows));
}

GtPattern skew_to_gt(const Tableau& t, int row_count) {
  require_valid_tableau(t, "skew_to_gt");
  int top = t.max_entry();
  if (row_count == 0) row_count = top + 1;
  if (row_count < top + 1)
    throw std::invalid_argument("skew_to_gt: row count must exceed largest label");
  Partition outer = t.outer().trimmed();
  Partition inner = t.inner();
  int width = std::max(outer.size(), inner.size());
  std::vector<std::vector<Rational>> rows(row_count);
  for (int i = 0; i < row_count; ++i) {
    rows[i].assign(width, Rational(0));
    for (int r = 0; r < width; ++r) {
      long long length = inner.part(r);
      if (i > 0 && r < t.row_count()) {
        const auto& row = t.rows()[r];
        auto end = std::upper_bound(row.begin(), row.end(), i);
        length += end - row.begin();
      }
      rows[i][r] = Rational(length);
    }
  }
  return GtPattern::parallelogram(std::move(rows));
}

bool verify_naimark_diagram(const Tableau& t, int n, int d) {
  GtPattern via_pattern = naimark_map(ssyt_to_gt(t, n), n, d);
  GtPattern via_tableau = ssyt_to_gt(gamma_complement(t, n, d), n);
  return via_pattern == via_tableau;
}

bool verify_boxcomp_diagram(const Tableau& t, int n) {
  require_valid_tableau(t, "verify_boxcomp_diagram");
  if (t.empty())
    throw std::invalid_argument("verify_boxcomp_diagram: tableau is empty");
  if (t.outer().rows() >= n)
    throw std::invalid_argument(
        "verify_boxcomp_diagram: tableau must have fewer than n rows");
  GtPattern via_pattern = generalized_complement(ssyt_to_gt(t, n));
  GtPattern via_tableau = ssyt_to_gt(boxcomp(t, n, t.columns()), n);
  return via_pattern == via_tableau;
}

}  // namespace framesteps
