#pragma once

#include "framesteps/gt_pattern.hpp"
#include "framesteps/tableau.hpp"

namespace framesteps {

// The row-by-row bijection between integer triangular GT patterns and
// straight SSYT: pattern row i, read as a partition, is the shape occupied
// by entries <= i. Shape of the result is the top row; the tableau weight
// equals the pattern weight.
Tableau gt_to_ssyt(const GtPattern& p);

// Inverse of gt_to_ssyt. label_bound fixes the number of pattern rows when
// the largest labels are absent (0 means "largest entry").
GtPattern ssyt_to_gt(const Tableau& t, int label_bound = 0);

// Parallelogram analogue: an r-row parallelogram pattern with top row lambda
// and bottom row mu corresponds to a skew SSYT of shape lambda/mu filled
// with labels 1..r-1 (adjacent equal rows make a label absent).
Tableau gt_to_skew(const GtPattern& p);

// Inverse of gt_to_skew; row_count must exceed the largest label (0 means
// "largest entry + 1").
GtPattern skew_to_gt(const Tableau& t, int row_count = 0);

// Checks the commutative square N(iota(T)) = iota(gamma(T)) for a
// rectangular d x n tableau with constant weight d.
bool verify_naimark_diagram(const Tableau& t, int n, int d);

// Checks the commutative square iota(boxcomp(T)) = Ntilde(iota(T)) for a
// straight tableau with entries in [n] and fewer than n rows.
bool verify_boxcomp_diagram(const Tableau& t, int n);

}  // namespace framesteps
