#include "framesteps/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace framesteps {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("matrix dimensions must be nonnegative");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::gram(int count) const {
  Matrix g(count, count);
  for (int a = 0; a < count; ++a)
    for (int b = a; b < count; ++b) {
      double dot = 0.0;
      for (int k = 0; k < rows_; ++k) dot += (*this)(k, a) * (*this)(k, b);
      g(a, b) = dot;
      g(b, a) = dot;
    }
  return g;
}

Matrix Matrix::partial_frame_operator(int count) const {
  Matrix f(rows_, rows_);
  for (int a = 0; a < rows_; ++a)
    for (int b = a; b < rows_; ++b) {
      double dot = 0.0;
      for (int k = 0; k < count; ++k) dot += (*this)(a, k) * (*this)(b, k);
      f(a, b) = dot;
      f(b, a) = dot;
    }
  return f;
}

namespace {

double off_diagonal_mass(const Matrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

void check_finite(const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j)))
        throw std::invalid_argument("matrix entries must be finite");
}

}  // namespace

EigenDecomposition jacobi_eigen(const Matrix& m, double tol, int max_sweeps) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("jacobi_eigen: matrix must be square");
  check_finite(m);
  const int n = m.rows();
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(m(i, j)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(m(i, j) - m(j, i)) > tol * std::max(1.0, scale))
        throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");

  Matrix a = m;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = v;
      a(j, i) = v;
    }
  Matrix v = Matrix::identity(n);

  int sweep = 0;
  while (off_diagonal_mass(a) >= tol) {
    if (sweep++ >= max_sweeps)
      throw std::runtime_error("jacobi_eigen: no convergence after sweep cap");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);
        double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            double arp = a(r, p), arq = a(r, q);
            a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
            a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
          }
          double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return diag[x] > diag[y]; });

  EigenDecomposition out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (int k : order) {
    double value = diag[k];
    if (value < 0.0 && value >= -tol) value = 0.0;
    out.values.push_back(value);
    std::vector<double> column(n);
    for (int r = 0; r < n; ++r) column[r] = v(r, k);
    out.vectors.push_back(std::move(column));
  }
  return out;
}

std::vector<double> symmetric_spectrum(const Matrix& m, double tol,
                                       int max_sweeps) {
  return jacobi_eigen(m, tol, max_sweeps).values;
}

EigenstepTable inner_eigensteps(const Matrix& synthesis, double tol) {
  check_finite(synthesis);
  EigenstepTable table;
  table.kind = EigenstepKind::inner;
  table.tolerance = tol;
  for (int i = 1; i <= synthesis.cols(); ++i)
    table.rows.push_back(symmetric_spectrum(synthesis.gram(i), tol));
  return table;
}

EigenstepTable outer_eigensteps(const Matrix& synthesis, double tol) {
  check_finite(synthesis);
  EigenstepTable table;
  table.kind = EigenstepKind::outer;
  table.tolerance = tol;
  for (int i = 1; i <= synthesis.cols(); ++i)
    table.rows.push_back(
        symmetric_spectrum(synthesis.partial_frame_operator(i), tol));
  return table;
}

ClearResult clear_eigensteps(const EigenstepTable& table, long long max_den,
                             double tol) {
  if (max_den < 1)
    throw std::invalid_argument("clear_eigensteps: max_den must be positive");
  ClearResult result;
  std::vector<std::vector<Rational>> exact(table.rows.size());
  bool all_ok = true;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    exact[i].reserve(table.rows[i].size());
    for (std::size_t j = 0; j < table.rows[i].size(); ++j) {
      double x = table.rows[i][j];
      std::optional<Rational> r = reconstruct_rational(x, tol, max_den);
      if (r) {
        exact[i].push_back(*r);
        continue;
      }
      all_ok = false;
      Rational best = best_approximation_bounded(x, max_den);
      double err = std::fabs(x - best.to_double());
      if (err >= result.worst_error) {
        result.worst_error = err;
        result.worst_value = x;
        result.worst_row = static_cast<int>(i) + 1;
        result.worst_col = static_cast<int>(j) + 1;
      }
      exact[i].emplace_back(0);
    }
  }
  if (!all_ok) return result;

  // Smallest positive scale: lcm of denominators over gcd of nonzero
  // numerators.
  long long den_lcm = 1;
  long long num_gcd = 0;
  for (const auto& row : exact)
    for (const Rational& v : row) {
      __int128 wide = static_cast<__int128>(den_lcm / std::gcd(den_lcm, v.den())) * v.den();
      if (wide > INT64_MAX)
        throw std::overflow_error("clear_eigensteps: clearing constant overflows");
      den_lcm = static_cast<long long>(wide);
      if (!v.is_zero()) num_gcd = std::gcd(num_gcd, std::llabs(v.num()));
    }
  if (num_gcd == 0) num_gcd = 1;  // all-zero table: any scale works
  result.constant = Rational(den_lcm, num_gcd);

  std::vector<std::vector<Rational>> scaled(exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    scaled[i].reserve(exact[i].size());
    for (const Rational& v : exact[i]) scaled[i].push_back(v * result.constant);
  }
  result.ok = true;
  result.pattern =
      GtPattern(table.kind == EigenstepKind::inner ? GtKind::triangular
                                                   : GtKind::parallelogram,
                std::move(scaled));
  return result;
}

FrameReport frame_report(const Matrix& synthesis, double tol) {
  check_finite(synthesis);
  FrameReport report;
  report.dimension = synthesis.rows();
  report.vector_count = synthesis.cols();
  for (int i = 0; i < synthesis.cols(); ++i) {
    double w = 0.0;
    for (int k = 0; k < synthesis.rows(); ++k)
      w += synthesis(k, i) * synthesis(k, i);
    report.norm_squares.push_back(w);
  }
  if (synthesis.rows() == 0 || synthesis.cols() == 0) return report;

  std::vector<double> spectrum = symmetric_spectrum(
      synthesis.partial_frame_operator(synthesis.cols()), tol);
  double top = spectrum.empty() ? 0.0 : spectrum.front();
  if (top <= 0.0) return report;  // zero frame: rank 0, no bounds

  report.upper_bound = top;
  for (double value : spectrum) {
    if (value > tol * top) {
      report.rank += 1;
      report.lower_bound = value;  // ends at the smallest nonzero eigenvalue
    }
  }
  report.tight = std::fabs(report.upper_bound - report.lower_bound) <=
                 tol * report.upper_bound;
  double w_max = *std::max_element(report.norm_squares.begin(),
                                   report.norm_squares.end());
  double w_min = *std::min_element(report.norm_squares.begin(),
                                   report.norm_squares.end());
  report.equal_norm = (w_max - w_min) <= tol * std::max(1.0, w_max);
  return report;
}

Matrix naimark_frame(const Matrix& synthesis, NaimarkMode mode, double tol) {
  FrameReport report = frame_report(synthesis, tol);
  double bound = 0.0;
  if (mode == NaimarkMode::tight) {
    if (!report.tight)
      throw std::invalid_argument("naimark_frame: frame is not tight");
    bound = report.lower_bound;
  } else {
    if (!(report.upper_bound > 0.0))
      throw std::invalid_argument(
          "naimark_frame: largest eigenvalue must be positive");
    bound = report.upper_bound;
  }

  const int n = synthesis.cols();
  Matrix m = synthesis.gram(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (i == j ? bound : 0.0) - m(i, j);

  EigenDecomposition eigen = jacobi_eigen(m, tol);
  int kept = 0;
  for (double value : eigen.values) {
    if (value < -tol * bound)
      throw std::runtime_error(
          "naimark_frame: complement operator has a negative eigenvalue");
    if (value > tol * bound) ++kept;
  }
  Matrix psi(kept, n);
  for (int k = 0; k < kept; ++k) {
    double root = std::sqrt(eigen.values[k]);
    for (int c = 0; c < n; ++c) psi(k, c) = root * eigen.vectors[k][c];
  }
  return psi;
}

}  // namespace framesteps
