#include "relindex/interval.hpp"

#include <algorithm>
#include <ostream>

namespace relindex {
namespace {

constexpr double kMax = std::numeric_limits<double>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude fma-based error terms may underflow and stop being
// exact; results there are widened by one ulp unconditionally.
const double kTiny = std::ldexp(1.0, -900);

// Sign of (exact - s) for s = fl(a + b), via Knuth's TwoSum.
double two_sum_error(double a, double b, double s) noexcept {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

double overflow_down(double s) noexcept { return s > 0 ? kMax : s; }
double overflow_up(double s) noexcept { return s < 0 ? -kMax : s; }

}  // namespace

double add_down(double a, double b) noexcept {
  const double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isfinite(a) && std::isfinite(b)) return overflow_down(s);
    return s;
  }
  return two_sum_error(a, b, s) < 0.0 ? next_down(s) : s;
}

double add_up(double a, double b) noexcept {
  const double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isfinite(a) && std::isfinite(b)) return overflow_up(s);
    return s;
  }
  return two_sum_error(a, b, s) > 0.0 ? next_up(s) : s;
}

double sub_down(double a, double b) noexcept { return add_down(a, -b); }
double sub_up(double a, double b) noexcept { return add_up(a, -b); }

double mul_down(double a, double b) noexcept {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) {
    if (std::isfinite(a) && std::isfinite(b)) return overflow_down(p);
    return p;
  }
  if (std::fabs(p) < kTiny) return next_down(p);
  return std::fma(a, b, -p) < 0.0 ? next_down(p) : p;
}

double mul_up(double a, double b) noexcept {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) {
    if (std::isfinite(a) && std::isfinite(b)) return overflow_up(p);
    return p;
  }
  if (std::fabs(p) < kTiny) return next_up(p);
  return std::fma(a, b, -p) > 0.0 ? next_up(p) : p;
}

namespace {

// Sign of (a / b - q) for q = fl(a / b); 0 when exact. Requires that the
// remainder a - q b is exactly representable, checked by the callers.
double div_error_sign(double a, double b, double q) noexcept {
  const double r = std::fma(-q, b, a);
  if (r == 0.0) return 0.0;
  return (r > 0.0) == (b > 0.0) ? 1.0 : -1.0;
}

bool div_is_safe(double a, double q) noexcept {
  return std::fabs(a) >= kTiny && std::fabs(q) >= kTiny && std::isfinite(q);
}

}  // namespace

double div_down(double a, double b) noexcept {
  if (a == 0.0) return 0.0;
  const double q = a / b;
  if (!std::isfinite(q)) {
    if (std::isfinite(a) && b != 0.0) return overflow_down(q);
    return q;
  }
  if (!div_is_safe(a, q)) return next_down(q);
  return div_error_sign(a, b, q) < 0.0 ? next_down(q) : q;
}

double div_up(double a, double b) noexcept {
  if (a == 0.0) return 0.0;
  const double q = a / b;
  if (!std::isfinite(q)) {
    if (std::isfinite(a) && b != 0.0) return overflow_up(q);
    return q;
  }
  if (!div_is_safe(a, q)) return next_up(q);
  return div_error_sign(a, b, q) > 0.0 ? next_up(q) : q;
}

Interval::Interval(double x) : lo_(x), hi_(x) {
  if (std::isnan(x)) throw DomainError("Interval: NaN endpoint");
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi)) throw DomainError("Interval: NaN endpoint");
  if (lo > hi) throw DomainError("Interval: lower endpoint exceeds upper endpoint");
}

double Interval::mid() const noexcept {
  if (lo_ == hi_) return lo_;
  if (lo_ == -kInf || hi_ == kInf) {
    if (lo_ == -kInf && hi_ == kInf) return 0.0;
    return lo_ == -kInf ? -kMax : kMax;
  }
  const double m = 0.5 * lo_ + 0.5 * hi_;
  return std::clamp(m, lo_, hi_);
}

double Interval::rad() const noexcept {
  const double m = mid();
  return std::max(sub_up(m, lo_), sub_up(hi_, m));
}

Interval Interval::operator-() const noexcept { return {-hi_, -lo_, Unchecked{}}; }

Interval operator+(const Interval& x, const Interval& y) noexcept {
  return {add_down(x.lo_, y.lo_), add_up(x.hi_, y.hi_), Interval::Unchecked{}};
}

Interval operator-(const Interval& x, const Interval& y) noexcept {
  return {sub_down(x.lo_, y.hi_), sub_up(x.hi_, y.lo_), Interval::Unchecked{}};
}

Interval operator*(const Interval& x, const Interval& y) noexcept {
  const double a = x.lo_, b = x.hi_, c = y.lo_, d = y.hi_;
  if (a >= 0.0) {
    if (c >= 0.0) return {mul_down(a, c), mul_up(b, d), Interval::Unchecked{}};
    if (d <= 0.0) return {mul_down(b, c), mul_up(a, d), Interval::Unchecked{}};
    return {mul_down(b, c), mul_up(b, d), Interval::Unchecked{}};
  }
  if (b <= 0.0) {
    if (c >= 0.0) return {mul_down(a, d), mul_up(b, c), Interval::Unchecked{}};
    if (d <= 0.0) return {mul_down(b, d), mul_up(a, c), Interval::Unchecked{}};
    return {mul_down(a, d), mul_up(a, c), Interval::Unchecked{}};
  }
  if (c >= 0.0) return {mul_down(a, d), mul_up(b, d), Interval::Unchecked{}};
  if (d <= 0.0) return {mul_down(b, c), mul_up(a, c), Interval::Unchecked{}};
  return {std::min(mul_down(a, d), mul_down(b, c)), std::max(mul_up(a, c), mul_up(b, d)),
          Interval::Unchecked{}};
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains_zero()) throw DomainError("Interval division by an interval containing zero");
  const double a = x.lo_, b = x.hi_, c = y.lo_, d = y.hi_;
  if (c > 0.0) {
    if (a >= 0.0) return {div_down(a, d), div_up(b, c), Interval::Unchecked{}};
    if (b <= 0.0) return {div_down(a, c), div_up(b, d), Interval::Unchecked{}};
    return {div_down(a, c), div_up(b, c), Interval::Unchecked{}};
  }
  if (a >= 0.0) return {div_down(b, d), div_up(a, c), Interval::Unchecked{}};
  if (b <= 0.0) return {div_down(b, c), div_up(a, d), Interval::Unchecked{}};
  return {div_down(b, d), div_up(a, d), Interval::Unchecked{}};
}

Interval hull(const Interval& x, const Interval& y) noexcept {
  return {std::min(x.lo_, y.lo_), std::max(x.hi_, y.hi_), Interval::Unchecked{}};
}

Interval abs(const Interval& x) noexcept { return {mig(x), mag(x), Interval::Unchecked{}}; }

Interval max(const Interval& x, const Interval& y) noexcept {
  return {std::max(x.lo_, y.lo_), std::max(x.hi_, y.hi_), Interval::Unchecked{}};
}

Interval sqr(const Interval& x) noexcept {
  const double lo = mig(x), hi = mag(x);
  return {mul_down(lo, lo), mul_up(hi, hi), Interval::Unchecked{}};
}

Interval pow(const Interval& x, unsigned n) noexcept {
  Interval result{1.0};
  Interval base = x;
  bool first = true;
  while (n > 0) {
    if (n & 1u) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1u;
    if (n > 0) base = sqr(base);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  const auto prec = os.precision(17);
  os << '[' << x.lo() << ", " << x.hi() << ']';
  os.precision(prec);
  return os;
}

}  // namespace relindex
