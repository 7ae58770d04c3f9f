#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace framesteps {

// Exact rational arithmetic on 64-bit numerator/denominator, always kept
// reduced with a positive denominator. Arithmetic that would leave the
// 64-bit range throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(long long numerator, long long denominator);
  // NOLINTNEXTLINE(google-explicit-constructor): integers promote freely
  constexpr Rational(long long value) : num_(value), den_(1) {}

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const;
  // "p" for integers, "p/q" otherwise.
  std::string str() const;
  // Accepts "p" and "p/q" with optional sign.
  static std::optional<Rational> parse(const std::string& text);

  Rational operator-() const;
  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  Rational operator/(const Rational& rhs) const;

  bool operator==(const Rational& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  bool operator!=(const Rational& rhs) const { return !(*this == rhs); }
  bool operator<(const Rational& rhs) const;
  bool operator<=(const Rational& rhs) const { return !(rhs < *this); }
  bool operator>(const Rational& rhs) const { return rhs < *this; }
  bool operator>=(const Rational& rhs) const { return !(*this < rhs); }

 private:
  long long num_;
  long long den_;
};

// Smallest-denominator rational inside [lo, hi] (ties broken toward the
// smaller numerator in absolute value). Requires lo <= hi.
Rational simplest_in_interval(double lo, double hi);

// Closest rational to x among all p/q with 1 <= q <= max_den, found by
// walking the continued-fraction convergents and the final semiconvergent.
Rational best_approximation_bounded(double x, long long max_den);

// Rational reconstruction used by eigenstep clearing: the simplest rational
// within tol of x, provided its denominator stays within max_den.
std::optional<Rational> reconstruct_rational(double x, double tol,
                                             long long max_den);

}  // namespace framesteps
