#include "framesteps/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace framesteps {

namespace {

void drop_trailing_empty_rows(std::vector<std::vector<int>>& rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
}

}  // namespace

Tableau Tableau::straight(std::vector<std::vector<int>> rows) {
  Tableau t;
  drop_trailing_empty_rows(rows);
  t.rows_ = std::move(rows);
  return t;
}

Tableau Tableau::skew(Partition inner, std::vector<std::vector<int>> rows) {
  Tableau t;
  drop_trailing_empty_rows(rows);
  t.inner_ = inner.trimmed();
  t.rows_ = std::move(rows);
  return t;
}

Partition Tableau::outer() const {
  int n = std::max<int>(static_cast<int>(rows_.size()), inner_.size());
  std::vector<int> parts(n, 0);
  for (int r = 0; r < n; ++r) {
    int filled = r < static_cast<int>(rows_.size())
                     ? static_cast<int>(rows_[r].size())
                     : 0;
    parts[r] = inner_.part(r) + filled;
  }
  return Partition(std::move(parts));
}

bool Tableau::empty() const { return cells() == 0; }

int Tableau::cells() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int e : row) m = std::max(m, e);
  return m;
}

int Tableau::entry(int r, int c) const {
  if (r < 0 || r >= static_cast<int>(rows_.size())) return 0;
  int offset = inner_.part(r);
  if (c < offset || c >= offset + static_cast<int>(rows_[r].size())) return 0;
  return rows_[r][c - offset];
}

bool Tableau::operator==(const Tableau& rhs) const {
  if (inner_ != rhs.inner_) return false;
  std::size_t n = std::max(rows_.size(), rhs.rows_.size());
  for (std::size_t r = 0; r < n; ++r) {
    static const std::vector<int> kEmpty;
    const auto& a = r < rows_.size() ? rows_[r] : kEmpty;
    const auto& b = r < rhs.rows_.size() ? rhs.rows_[r] : kEmpty;
    if (a != b) return false;
  }
  return true;
}

ValidationReport validate_tableau(const Tableau& t) {
  ValidationReport report;
  const Partition& inner = t.inner();
  Partition outer = t.outer();

  if (!inner.is_valid()) {
    int r = 0;
    while (r + 1 < inner.size() && inner.part(r) >= inner.part(r + 1) &&
           inner.part(r) >= 0)
      ++r;
    report.add("shape", r + 1, 0, "inner shape is not a partition");
  } else if (!outer.is_valid()) {
    int r = 0;
    while (r + 1 < outer.size() && outer.part(r) >= outer.part(r + 1)) ++r;
    report.add("shape", r + 2, 0, "outer shape is not a partition");
  }

  bool entry_done = false, row_done = false, col_done = false;
  for (int r = 0; r < t.row_count() && !(entry_done && row_done); ++r) {
    const auto& row = t.rows()[r];
    int offset = inner.part(r);
    for (int k = 0; k < static_cast<int>(row.size()); ++k) {
      if (!entry_done && row[k] < 1) {
        report.add("entry", r + 1, offset + k + 1, "entries must be positive");
        entry_done = true;
      }
      if (!row_done && k > 0 && row[k] < row[k - 1]) {
        report.add("row", r + 1, offset + k + 1,
                   "row not weakly increasing");
        row_done = true;
      }
    }
  }
  for (int r = 0; r + 1 < t.row_count() && !col_done; ++r) {
    for (int c = inner.part(r + 1); c < outer.part(r + 1) && !col_done; ++c) {
      int below = t.entry(r, c);
      int above = t.entry(r + 1, c);
      if (below != 0 && above != 0 && above <= below) {
        report.add("column", r + 2, c + 1,
                   "column not strictly increasing");
        col_done = true;
      }
    }
  }
  return report;
}

namespace {

void require_valid(const Tableau& t, const char* op) {
  ValidationReport report = validate_tableau(t);
  if (!report.ok)
    throw std::invalid_argument(std::string(op) + ": invalid tableau (" +
                                report.violations.front().rule + " rule at row " +
                                std::to_string(report.violations.front().row) +
                                ", col " +
                                std::to_string(report.violations.front().col) +
                                ")");
}

// Column c of a straight tableau, bottom to top.
std::vector<int> column_entries(const Tableau& t, int c) {
  std::vector<int> out;
  for (int r = 0; r < t.row_count(); ++r) {
    int e = t.entry(r, c);
    if (e == 0) break;
    out.push_back(e);
  }
  return out;
}

Tableau from_columns(const std::vector<std::vector<int>>& cols) {
  std::size_t height = 0;
  for (const auto& col : cols) height = std::max(height, col.size());
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < height; ++r) {
    std::vector<int> row;
    for (const auto& col : cols) {
      if (r < col.size()) row.push_back(col[r]);
    }
    rows.push_back(std::move(row));
  }
  return Tableau::straight(std::move(rows));
}

}  // namespace

WeightVector weight_of(const Tableau& t, int label_bound) {
  require_valid(t, "weight_of");
  int top = t.max_entry();
  if (label_bound == 0) label_bound = top;
  if (label_bound < top)
    throw std::invalid_argument("weight_of: label bound below largest entry");
  WeightVector counts(label_bound, 0);
  for (const auto& row : t.rows())
    for (int e : row) ++counts[e - 1];
  return counts;
}

Tableau boxcomp(const Tableau& t, int n, int c) {
  require_valid(t, "boxcomp");
  if (!t.is_straight())
    throw std::invalid_argument("boxcomp: tableau must be straight");
  if (n < 1) throw std::invalid_argument("boxcomp: label bound must be positive");
  if (t.max_entry() > n)
    throw std::invalid_argument("boxcomp: entry exceeds label bound");
  int columns = t.columns();
  if (c == 0) c = columns;
  if (c < columns)
    throw std::invalid_argument("boxcomp: column bound below column count");

  std::vector<std::vector<int>> cols(c);
  for (int j = 0; j < c; ++j) {
    std::vector<int> source = column_entries(t, c - 1 - j);
    std::vector<bool> present(n + 1, false);
    for (int e : source) present[e] = true;
    for (int e = 1; e <= n; ++e)
      if (!present[e]) cols[j].push_back(e);
  }
  return from_columns(cols);
}

Tableau gamma_complement(const Tableau& t, int n, int d) {
  require_valid(t, "gamma_complement");
  if (!t.is_straight())
    throw std::invalid_argument("gamma_complement: tableau must be straight");
  if (d < 1 || d >= n)
    throw std::invalid_argument("gamma_complement: need 0 < d < n");
  Partition shape = t.outer().trimmed();
  if (shape.rows() != d || shape.part(0) != shape.part(d - 1) ||
      shape.part(0) != n)
    throw std::invalid_argument("gamma_complement: shape is not a d x n rectangle");
  WeightVector w = weight_of(t, n);
  for (int count : w)
    if (count != d)
      throw std::invalid_argument("gamma_complement: weight is not constant d");

  std::vector<std::vector<int>> cols(n);
  for (int j = 0; j < n; ++j) {
    std::vector<bool> present(n + 1, false);
    for (int e : column_entries(t, j)) present[n + 1 - e] = true;
    for (int e = 1; e <= n; ++e)
      if (!present[e]) cols[j].push_back(e);
  }
  return from_columns(cols);
}

Tableau strip_to_skew(const Tableau& t) {
  require_valid(t, "strip_to_skew");
  if (!t.is_straight())
    throw std::invalid_argument("strip_to_skew: tableau must be straight");
  std::vector<std::vector<int>> rows;
  int ones = 0;
  for (int r = 0; r < t.row_count(); ++r) {
    std::vector<int> row;
    for (int e : t.rows()[r]) {
      if (e == 1) {
        ++ones;  // all 1's sit at the start of the bottom row
      } else {
        row.push_back(e - 1);
      }
    }
    rows.push_back(std::move(row));
  }
  return Tableau::skew(Partition({ones}), std::move(rows));
}

Tableau skew_to_straight(const Tableau& t) {
  require_valid(t, "skew_to_straight");
  if (t.inner().rows() > 1)
    throw std::invalid_argument(
        "skew_to_straight: inner shape must be a single-row strip");
  int strip = t.inner().part(0);
  std::vector<std::vector<int>> rows;
  rows.emplace_back(strip, 1);
  for (int r = 0; r < t.row_count(); ++r) {
    if (r >= static_cast<int>(rows.size())) rows.emplace_back();
    for (int e : t.rows()[r]) rows[r].push_back(e + 1);
  }
  return Tableau::straight(std::move(rows));
}

TableauEnumerator::TableauEnumerator(Partition shape, WeightVector weight)
    : shape_(shape.trimmed()), weight_(std::move(weight)) {
  if (!shape_.is_valid()) {
    diagnostic_ = "shape is not a partition";
    exhausted_ = true;
    return;
  }
  for (int w : weight_)
    if (w < 0) {
      diagnostic_ = "weight entries must be nonnegative";
      exhausted_ = true;
      return;
    }
  long long weight_sum = std::accumulate(weight_.begin(), weight_.end(), 0LL);
  if (weight_sum != shape_.cells()) {
    diagnostic_ = "cell count " + std::to_string(shape_.cells()) +
                  " does not match weight sum " + std::to_string(weight_sum);
    exhausted_ = true;
    return;
  }
  for (int r = 0; r < shape_.rows(); ++r)
    for (int c = 0; c < shape_.part(r); ++c) cells_.emplace_back(r, c);
  value_.assign(cells_.size(), 0);
  remaining_.assign(weight_.size() + 1, 0);
  for (std::size_t i = 0; i < weight_.size(); ++i) remaining_[i + 1] = weight_[i];
  cells_at_or_above_.assign(shape_.rows() + 1, 0);
  for (int r = shape_.rows() - 1; r >= 0; --r)
    cells_at_or_above_[r] = cells_at_or_above_[r + 1] + shape_.part(r);
}

bool TableauEnumerator::feasible_suffix(int pos) const {
  if (pos == static_cast<int>(cells_.size())) return true;
  int row = cells_[pos].first;
  int labels = static_cast<int>(weight_.size());
  // For every row threshold t at or above the frontier, the cells still open
  // in rows >= t can only take labels > t (column strictness), so the quota
  // of those labels must cover them. Accumulate quotas top-down.
  long long open_total = static_cast<long long>(cells_.size()) - pos;
  long long available = 0;  // quota of labels > t, maintained while t descends
  for (int e = shape_.rows(); e <= labels; ++e) available += remaining_[e];
  for (int t = shape_.rows() - 1; t >= row; --t) {
    long long open = t == row ? open_total : cells_at_or_above_[t];
    if (available < open) return false;
    if (t >= 1 && t <= labels) available += remaining_[t];
  }
  return true;
}

Tableau TableauEnumerator::snapshot() const {
  std::vector<std::vector<int>> rows(shape_.rows());
  for (int r = 0; r < shape_.rows(); ++r) rows[r].reserve(shape_.part(r));
  for (std::size_t i = 0; i < cells_.size(); ++i)
    rows[cells_[i].first].push_back(value_[i]);
  return Tableau::straight(std::move(rows));
}

std::optional<Tableau> TableauEnumerator::next() {
  if (exhausted_) return std::nullopt;
  const int ncells = static_cast<int>(cells_.size());
  const int labels = static_cast<int>(weight_.size());
  if (!started_) {
    started_ = true;
    if (ncells == 0) {
      exhausted_ = true;
      produced_ = 1;
      return Tableau();
    }
    pos_ = 0;
  }
  while (true) {
    if (pos_ == ncells) {
      Tableau out = snapshot();
      ++produced_;
      --pos_;  // step back so the next call resumes the search
      ++remaining_[value_[pos_]];
      return out;
    }
    auto [row, col] = cells_[pos_];
    int lo = row + 1;  // strict column increase forces entry > row index
    if (col > 0) lo = std::max(lo, value_[pos_ - 1]);
    if (row > 0) {
      int below_index = pos_ - shape_.part(row - 1);
      lo = std::max(lo, value_[below_index] + 1);
    }
    int start = value_[pos_] == 0 ? lo : value_[pos_] + 1;
    bool advanced = false;
    for (int e = std::max(start, lo); e <= labels; ++e) {
      if (remaining_[e] == 0) continue;
      value_[pos_] = e;
      --remaining_[e];
      if (feasible_suffix(pos_ + 1)) {
        advanced = true;
        break;
      }
      ++remaining_[e];
    }
    if (advanced) {
      ++pos_;
    } else {
      value_[pos_] = 0;
      --pos_;
      if (pos_ < 0) {
        exhausted_ = true;
        return std::nullopt;
      }
      ++remaining_[value_[pos_]];
    }
  }
}

std::vector<Tableau> enumerate_tableaux(const Partition& shape,
                                        const WeightVector& weight,
                                        std::optional<std::uint64_t> limit) {
  TableauEnumerator stream(shape, weight);
  std::vector<Tableau> out;
  while (!limit || out.size() < *limit) {
    auto t = stream.next();
    if (!t) break;
    out.push_back(std::move(*t));
  }
  return out;
}

std::uint64_t count_tableaux(const Partition& shape, const WeightVector& weight) {
  TableauEnumerator stream(shape, weight);
  while (stream.next()) {
  }
  return stream.produced();
}

}  // namespace framesteps
