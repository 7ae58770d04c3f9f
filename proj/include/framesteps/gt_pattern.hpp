#pragma once

#include <vector>

#include "framesteps/rational.hpp"
#include "framesteps/validation.hpp"

namespace framesteps {

enum class GtKind { triangular, parallelogram };

// Gelfand-Tsetlin pattern with exact rational entries, rows stored bottom to
// top: in a triangular pattern row i (1-based) has i entries, in a
// parallelogram pattern every row has the same length. Immutable.
class GtPattern {
 public:
  GtPattern() : kind_(GtKind::triangular) {}
  GtPattern(GtKind kind, std::vector<std::vector<Rational>> rows);
  static GtPattern triangular(std::vector<std::vector<Rational>> rows);
  static GtPattern parallelogram(std::vector<std::vector<Rational>> rows);
  static GtPattern triangular_int(const std::vector<std::vector<long long>>& rows);
  static GtPattern parallelogram_int(const std::vector<std::vector<long long>>& rows);

  GtKind kind() const { return kind_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<Rational>& top_row() const;
  const std::vector<Rational>& bottom_row() const;
  // Entry at 1-based (row, col); rows count from the bottom.
  const Rational& at(int row, int col) const;
  bool all_integer() const;

  bool operator==(const GtPattern& rhs) const {
    return kind_ == rhs.kind_ && rows_ == rhs.rows_;
  }
  bool operator!=(const GtPattern& rhs) const { return !(*this == rhs); }

 private:
  GtKind kind_;
  std::vector<std::vector<Rational>> rows_;
};

// Checks row lengths for the declared kind, nonnegativity, weakly decreasing
// rows, and the interlacing inequalities between consecutive rows.
ValidationReport validate_gt(const GtPattern& p);

// Row-sum differences, one value per row (row 0 sums to zero).
std::vector<Rational> gt_weight(const GtPattern& p);

// Pads triangular row i with width-i trailing zeros / strips those zeros
// back off. Mutually inverse; both preserve gt_weight.
GtPattern triangular_to_parallelogram(const GtPattern& p, int width);
GtPattern parallelogram_to_triangular(const GtPattern& p);

// Appends a duplicate of the top row with one extra zero, the pattern-side
// image of appending a zero vector to a frame.
GtPattern zero_pad_top(const GtPattern& p);

// Strips every top row that merely duplicates the row below it (plus the
// extra zero in the triangular case). Two patterns are equivalent under
// zero-padding iff their canonical forms are equal.
GtPattern canonical_form(const GtPattern& p);
bool gt_equivalent(const GtPattern& a, const GtPattern& b);

// The eigenstep polytope involution Lambda_{n,d} -> Lambda_{n,n-d}: requires
// a triangular pattern with n rows, top row (n,...,n,0,...,0) with d copies
// of n, and weight (d,...,d). Sends a tight frame's eigensteps to those of
// its Naimark complement.
GtPattern naimark_map(const GtPattern& p, int n, int d);

// The non-tight generalization: entry (i,j) maps to B - entry(i, i+1-j)
// where B is the top-left entry. Requires the top row to end in 0 and B > 0.
// Involutive; restricts to naimark_map on Lambda_{n,d}.
GtPattern generalized_complement(const GtPattern& p);

}  // namespace framesteps
