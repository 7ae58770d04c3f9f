#pragma once

#include <vector>

#include "framesteps/gt_pattern.hpp"
#include "framesteps/rational.hpp"

namespace framesteps {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr long long kDefaultMaxDenominator = 10000;

// Dense row-major matrix of doubles. A d x n synthesis matrix holds one
// frame vector per column.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix transpose() const;
  // Gram matrix of the first `count` columns (count x count).
  Matrix gram(int count) const;
  // Partial frame operator: sum of outer products of the first `count`
  // columns (rows x rows).
  Matrix partial_frame_operator(int count) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct EigenDecomposition {
  std::vector<double> values;         // descending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi sweeps on a symmetric matrix until the off-diagonal
// Frobenius mass drops below tol. Eigenvalues come back sorted descending
// with values in [-tol, 0) clamped to zero. Throws on asymmetric input or
// when the sweep cap is exhausted.
EigenDecomposition jacobi_eigen(const Matrix& m, double tol,
                                int max_sweeps = 100);
std::vector<double> symmetric_spectrum(const Matrix& m, double tol,
                                       int max_sweeps = 100);

enum class EigenstepKind { inner, outer };

// Nested partial spectra of a synthesis matrix: inner rows grow one entry
// per vector (Gram side), outer rows all have d entries (frame-operator
// side). Rows are stored bottom to top like GT patterns.
struct EigenstepTable {
  EigenstepKind kind = EigenstepKind::inner;
  std::vector<std::vector<double>> rows;
  double tolerance = kDefaultTolerance;
};

EigenstepTable inner_eigensteps(const Matrix& synthesis, double tol = kDefaultTolerance);
EigenstepTable outer_eigensteps(const Matrix& synthesis, double tol = kDefaultTolerance);

// Result of rational clearing. On success `constant` is the smallest
// positive rational making every scaled entry a nonnegative integer and
// `pattern` is the scaled integer GT pattern (triangular for inner tables,
// parallelogram for outer). On failure the worst-approximated entry is
// reported: its position, value, and distance to the nearest admissible
// rational.
struct ClearResult {
  bool ok = false;
  Rational constant;
  GtPattern pattern;
  int worst_row = 0;  // 1-based, bottom row first
  int worst_col = 0;
  double worst_value = 0.0;
  double worst_error = 0.0;
};

ClearResult clear_eigensteps(const EigenstepTable& table,
                             long long max_den = kDefaultMaxDenominator,
                             double tol = kDefaultTolerance);

struct FrameReport {
  int dimension = 0;
  int vector_count = 0;
  int rank = 0;
  double lower_bound = 0.0;  // smallest nonzero eigenvalue of the frame operator
  double upper_bound = 0.0;  // largest eigenvalue
  bool tight = false;
  bool equal_norm = false;
  std::vector<double> norm_squares;
};

FrameReport frame_report(const Matrix& synthesis, double tol = kDefaultTolerance);

enum class NaimarkMode { tight, generalized };

// Factorizes c*I - Gram as Psi^T Psi with c the frame bound (tight mode,
// requires a tight frame) or the largest frame-operator eigenvalue
// (generalized mode). Psi has one row per eigenvalue of c*I - Gram above
// tol*c; an eigenvalue below -tol*c reports a numerical inconsistency.
Matrix naimark_frame(const Matrix& synthesis, NaimarkMode mode,
                     double tol = kDefaultTolerance);

}  // namespace framesteps
