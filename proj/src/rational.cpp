#include "framesteps/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace framesteps {

namespace {

long long checked_neg(long long v) {
  if (v == INT64_MIN) throw std::overflow_error("rational overflow");
  return -v;
}

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("rational overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("rational overflow");
  return r;
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  if (denominator < 0) {
    numerator = checked_neg(numerator);
    denominator = checked_neg(denominator);
  }
  long long g = std::gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  num_ = numerator;
  den_ = denominator;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    long long num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash))
      return std::nullopt;
    long long den = 1;
    if (slash != std::string::npos) {
      den = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1) return std::nullopt;
      if (den == 0) return std::nullopt;
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Rational Rational::operator-() const { return Rational(checked_neg(num_), den_); }

Rational Rational::operator+(const Rational& rhs) const {
  long long g = std::gcd(den_, rhs.den_);
  long long lhs_scale = rhs.den_ / g;
  long long rhs_scale = den_ / g;
  long long num = checked_add(checked_mul(num_, lhs_scale),
                              checked_mul(rhs.num_, rhs_scale));
  long long den = checked_mul(den_, lhs_scale);
  return Rational(num, den);
}

Rational Rational::operator-(const Rational& rhs) const { return *this + (-rhs); }

Rational Rational::operator*(const Rational& rhs) const {
  long long g1 = std::gcd(num_, rhs.den_);
  long long g2 = std::gcd(rhs.num_, den_);
  return Rational(checked_mul(num_ / g1, rhs.num_ / g2),
                  checked_mul(den_ / g2, rhs.den_ / g1));
}

Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.num_ == 0) throw std::invalid_argument("rational division by zero");
  return *this * Rational(rhs.den_, rhs.num_);
}

bool Rational::operator<(const Rational& rhs) const {
  // 64x64 cross products need 128-bit headroom
  return static_cast<__int128>(num_) * rhs.den_ <
         static_cast<__int128>(rhs.num_) * den_;
}

namespace {

// Stern-Brocot style search expressed through continued fractions of the
// interval endpoints. Requires 0 < lo <= hi.
Rational simplest_positive(long double lo, long double hi, int depth) {
  long double lo_ceil = std::ceil(lo);
  if (lo_ceil <= hi) return Rational(static_cast<long long>(lo_ceil));
  if (depth <= 0) throw std::runtime_error("interval too narrow for rational search");
  long long whole = static_cast<long long>(std::floor(lo));
  Rational tail = simplest_positive(1.0L / (hi - static_cast<long double>(whole)),
                                    1.0L / (lo - static_cast<long double>(whole)),
                                    depth - 1);
  return Rational(whole) + Rational(tail.den(), tail.num());
}

}  // namespace

Rational simplest_in_interval(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("empty interval");
  if (lo <= 0.0 && hi >= 0.0) return Rational(0);
  if (hi < 0.0) return -simplest_in_interval(-hi, -lo);
  return simplest_positive(lo, hi, 128);
}

Rational best_approximation_bounded(double x, long long max_den) {
  if (max_den < 1) throw std::invalid_argument("max_den must be positive");
  if (x < 0) return -best_approximation_bounded(-x, max_den);
  long double y = x;
  long long p_prev = 1, q_prev = 0;  // h_{-1}/k_{-1}
  long long p = static_cast<long long>(std::floor(y));
  long long q = 1;
  while (true) {
    long double frac = y - std::floor(y);
    if (frac <= 0.0L) break;
    y = 1.0L / frac;
    if (y >= 4.0e18L) break;  // effectively exact already
    long long term = static_cast<long long>(std::floor(y));
    long long p_next = 0, q_next = 0;
    if (__builtin_mul_overflow(term, p, &p_next) ||
        __builtin_add_overflow(p_next, p_prev, &p_next) ||
        __builtin_mul_overflow(term, q, &q_next) ||
        __builtin_add_overflow(q_next, q_prev, &q_next))
      break;
    if (q_next > max_den) {
      // Fold in the largest admissible semiconvergent before giving up.
      long long t = (max_den - q_prev) / q;
      if (t > 0) {
        long long sp = p_prev + t * p;
        long long sq = q_prev + t * q;
        long double err_conv = std::fabs(static_cast<long double>(x) -
                                         static_cast<long double>(p) / q);
        long double err_semi = std::fabs(static_cast<long double>(x) -
                                         static_cast<long double>(sp) / sq);
        if (err_semi < err_conv) return Rational(sp, sq);
      }
      break;
    }
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return Rational(p, q);
}

std::optional<Rational> reconstruct_rational(double x, double tol,
                                             long long max_den) {
  if (tol < 0) throw std::invalid_argument("negative tolerance");
  Rational candidate = simplest_in_interval(x - tol, x + tol);
  if (candidate.den() > max_den) return std::nullopt;
  long double err = std::fabs(static_cast<long double>(x) -
                              static_cast<long double>(candidate.num()) /
                                  static_cast<long double>(candidate.den()));
  if (err > static_cast<long double>(tol) * (1.0L + 1e-12L)) return std::nullopt;
  return candidate;
}

}  // namespace framesteps
