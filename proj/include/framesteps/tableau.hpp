#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framesteps/partition.hpp"
#include "framesteps/validation.hpp"

namespace framesteps {

// Multiplicity of each label: counts[i] is the number of cells holding the
// 1-based label i+1.
using WeightVector = std::vector<int>;

// Semistandard Young tableau, straight or skew, in French convention.
// rows are stored bottom to top; row r holds the entries of columns
// inner[r]+1 .. inner[r]+rows[r].size(). A straight tableau has an all-zero
// inner shape. Values are immutable once constructed.
class Tableau {
 public:
  Tableau() = default;
  static Tableau straight(std::vector<std::vector<int>> rows);
  static Tableau skew(Partition inner, std::vector<std::vector<int>> rows);

  const Partition& inner() const { return inner_; }
  Partition outer() const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  bool is_straight() const { return inner_.empty(); }
  bool empty() const;
  int cells() const;
  int max_entry() const;
  // Number of columns of the outer shape.
  int columns() const { return outer().part(0); }
  // Entry at 0-based row r and 0-based absolute column c, or 0 when the
  // cell is not part of the skew shape.
  int entry(int r, int c) const;

  bool operator==(const Tableau& rhs) const;
  bool operator!=(const Tableau& rhs) const { return !(*this == rhs); }

 private:
  Partition inner_;
  std::vector<std::vector<int>> rows_;
};

// Checks the semistandard conditions: well-formed (skew) shape, positive
// entries, rows weakly increasing, columns strictly increasing. Reports the
// first offending cell per rule instead of throwing.
ValidationReport validate_tableau(const Tableau& t);

// Label multiplicities. label_bound extends the result with trailing zeros
// (0 means "up to the largest entry"); it must not cut off existing labels.
WeightVector weight_of(const Tableau& t, int label_bound = 0);

// Columnwise set complement in [n]: column j of the result is
// [n] \ column(c+1-j) of t. c defaults to the number of columns of t and
// may be larger, in which case the missing columns complement to full
// columns of height n. Involutive for fixed (n, c).
Tableau boxcomp(const Tableau& t, int n, int c = 0);

// Complement of a rectangular d x n tableau with constant weight d: replace
// every entry j by n+1-j, then complement each column in [n]. Maps onto the
// (n-d) x n rectangle with constant weight n-d, and is an involution.
Tableau gamma_complement(const Tableau& t, int n, int d);

// Drops the bottom-row strip of 1's and relabels every remaining entry down
// by one, producing a skew tableau of shape outer/(w_1).
Tableau strip_to_skew(const Tableau& t);

// Inverse of strip_to_skew: shifts all entries up by one and fills the
// single-row inner strip with 1's. The inner shape must have at most one
// nonzero part.
Tableau skew_to_straight(const Tableau& t);

// Streams every straight SSYT of the given shape and weight exactly once,
// ordered lexicographically by reading word (bottom row to top row, each
// left to right). A shape/weight cell-count mismatch yields an empty stream
// with a diagnostic instead of an error.
class TableauEnumerator {
 public:
  TableauEnumerator(Partition shape, WeightVector weight);

  std::optional<Tableau> next();
  std::uint64_t produced() const { return produced_; }
  bool exhausted() const { return exhausted_; }
  const std::string& diagnostic() const { return diagnostic_; }

 private:
  bool feasible_suffix(int pos) const;
  Tableau snapshot() const;

  Partition shape_;
  WeightVector weight_;
  std::vector<std::pair<int, int>> cells_;  // (row, col) in reading order
  std::vector<int> value_;                  // current entry per cell, 0 = unset
  std::vector<int> remaining_;              // remaining quota per label
  std::vector<int> cells_at_or_above_;      // suffix cell counts per row
  int pos_ = 0;
  bool started_ = false;
  bool exhausted_ = false;
  std::uint64_t produced_ = 0;
  std::string diagnostic_;
};

// Convenience wrappers over TableauEnumerator.
std::vector<Tableau> enumerate_tableaux(const Partition& shape,
                                        const WeightVector& weight,
                                        std::optional<std::uint64_t> limit = {});
std::uint64_t count_tableaux(const Partition& shape, const WeightVector& weight);

}  // namespace framesteps
