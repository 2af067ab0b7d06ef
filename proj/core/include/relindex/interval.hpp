#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include "relindex/errors.hpp"

namespace relindex {

/// Smallest double strictly greater than x (x itself for +inf and NaN).
inline double next_up(double x) noexcept {
  if (std::isnan(x) || x == std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return std::numeric_limits<double>::denorm_min();
  auto bits = std::bit_cast<std::uint64_t>(x);
  bits = x > 0.0 ? bits + 1 : bits - 1;
  return std::bit_cast<double>(bits);
}

/// Largest double strictly smaller than x.
inline double next_down(double x) noexcept { return -next_up(-x); }

// Directed-rounding primitives. Each result is a double that bounds the exact
// real result from the named side; when the rounded-to-nearest result is
// exact it is returned unchanged.
double add_down(double a, double b) noexcept;
double add_up(double a, double b) noexcept;
double sub_down(double a, double b) noexcept;
double sub_up(double a, double b) noexcept;
double mul_down(double a, double b) noexcept;
double mul_up(double a, double b) noexcept;
double div_down(double a, double b) noexcept;
double div_up(double a, double b) noexcept;

/// Closed real interval [lo, hi] with double endpoints.
///
/// Arithmetic is outward rounded: the result of every operation contains the
/// exact result of the same operation applied to any members of the operands.
/// Values are immutable once constructed.
class Interval {
 public:
  constexpr Interval() noexcept = default;
  Interval(double x);  // NOLINT(google-explicit-constructor): points embed implicitly
  Interval(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  /// Rounded-to-nearest midpoint; always lies inside the interval.
  double mid() const noexcept;
  /// Upper bound on the radius around mid().
  double rad() const noexcept;
  double width_up() const noexcept { return sub_up(hi_, lo_); }

  bool is_point() const noexcept { return lo_ == hi_; }
  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& y) const noexcept { return lo_ <= y.lo_ && y.hi_ <= hi_; }
  bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool positive() const noexcept { return lo_ > 0.0; }
  bool negative() const noexcept { return hi_ < 0.0; }

  Interval operator-() const noexcept;

  friend Interval operator+(const Interval& x, const Interval& y) noexcept;
  friend Interval operator-(const Interval& x, const Interval& y) noexcept;
  friend Interval operator*(const Interval& x, const Interval& y) noexcept;
  friend Interval operator/(const Interval& x, const Interval& y);

  Interval& operator+=(const Interval& y) noexcept { return *this = *this + y; }
  Interval& operator-=(const Interval& y) noexcept { return *this = *this - y; }
  Interval& operator*=(const Interval& y) noexcept { return *this = *this * y; }
  Interval& operator/=(const Interval& y) { return *this = *this / y; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  struct Unchecked {};
  constexpr Interval(double lo, double hi, Unchecked) noexcept : lo_(lo), hi_(hi) {}

  double lo_ = 0.0;
  double hi_ = 0.0;

  friend Interval hull(const Interval&, const Interval&) noexcept;
  friend Interval abs(const Interval&) noexcept;
  friend Interval max(const Interval&, const Interval&) noexcept;
  friend Interval sqr(const Interval&) noexcept;
};

using IntervalVector = std::vector<Interval>;

/// sup{|t| : t in x}; exact, since it is one of the endpoints.
inline double mag(const Interval& x) noexcept { return std::max(std::fabs(x.lo()), std::fabs(x.hi())); }
/// inf{|t| : t in x}.
inline double mig(const Interval& x) noexcept {
  if (x.contains_zero()) return 0.0;
  return std::min(std::fabs(x.lo()), std::fabs(x.hi()));
}

Interval hull(const Interval& x, const Interval& y) noexcept;
/// {|t| : t in x} = [mig(x), mag(x)].
Interval abs(const Interval& x) noexcept;
/// Pointwise maximum {max(s, t) : s in x, t in y}.
Interval max(const Interval& x, const Interval& y) noexcept;
/// {t^2 : t in x}; tighter than x * x when x straddles zero.
Interval sqr(const Interval& x) noexcept;
/// x^n by repeated squaring, n >= 0.
Interval pow(const Interval& x, unsigned n) noexcept;

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace relindex
