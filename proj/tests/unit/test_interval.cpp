#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "relindex/interval.hpp"

using relindex::DomainError;
using relindex::Interval;

namespace {

using Wide = __float128;

// Doubles with exponents in [-20, 20]: sums and products are exact in 113 bits.
double random_double(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> ex(-20, 20);
  return std::ldexp(mant(rng), ex(rng));
}

Interval random_interval(std::mt19937_64& rng) {
  const double a = random_double(rng);
  std::uniform_int_distribution<int> kind(0, 3);
  if (kind(rng) == 0) return Interval(a);
  const double b = random_double(rng);
  return Interval(std::min(a, b), std::max(a, b));
}

double random_member(std::mt19937_64& rng, const Interval& x) {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0: return x.lo();
    case 1: return x.hi();
    default: {
      std::uniform_real_distribution<double> t(0.0, 1.0);
      const double v = x.lo() + t(rng) * (x.hi() - x.lo());
      return std::clamp(v, x.lo(), x.hi());
    }
  }
}

bool encloses(const Interval& r, Wide exact) { return Wide(r.lo()) <= exact && exact <= Wide(r.hi()); }

}  // namespace

TEST(Interval, IntegerSumIsExact) {
  const Interval s = Interval(1.0) + Interval(2.0);
  EXPECT_TRUE(s.contains(3.0));
  EXPECT_LE(s.hi() - s.lo(), 2 * std::numeric_limits<double>::epsilon() * 3.0);
}

TEST(Interval, TenthIsEnclosed) {
  const Interval t = Interval(1.0) / Interval(10.0);
  EXPECT_TRUE(encloses(t, Wide(1) / Wide(10)));
  EXPECT_FALSE(t.is_point());
}

TEST(Interval, DivisionByZeroIntervalThrows) {
  EXPECT_THROW(Interval(1.0) / Interval(-1.0, 1.0), DomainError);
  EXPECT_THROW(Interval(1.0) / Interval(0.0), DomainError);
}

TEST(Interval, RejectsInvertedAndNaN) {
  EXPECT_THROW(Interval(2.0, 1.0), DomainError);
  EXPECT_THROW(Interval(std::nan("")), DomainError);
}

TEST(Interval, NextUpIsAdjacent) {
  for (double x : {0.0, 1.0, -1.0, 1e-300, -3.5, 1e300}) {
    const double u = relindex::next_up(x);
    EXPECT_GT(u, x);
    EXPECT_EQ(std::nextafter(x, std::numeric_limits<double>::infinity()), u);
  }
}

TEST(Interval, SqrOfStraddlingIntervalIsNonnegative) {
  const Interval s = sqr(Interval(-2.0, 1.0));
  EXPECT_EQ(s.lo(), 0.0);
  EXPECT_GE(s.hi(), 4.0);
  const Interval p = Interval(-2.0, 1.0) * Interval(-2.0, 1.0);
  EXPECT_LT(p.lo(), 0.0);
}

TEST(Interval, AbsMagMig) {
  const Interval x(-3.0, 2.0);
  EXPECT_EQ(mag(x), 3.0);
  EXPECT_EQ(mig(x), 0.0);
  EXPECT_EQ(abs(x).lo(), 0.0);
  EXPECT_EQ(abs(x).hi(), 3.0);
  EXPECT_EQ(mig(Interval(-5.0, -2.0)), 2.0);
}

TEST(Interval, PowMatchesRepeatedProduct) {
  const Interval x(1.01);
  const Interval p = pow(x, 7);
  Wide e = 1;
  for (int i = 0; i < 7; ++i) e *= Wide(1.01);
  EXPECT_TRUE(encloses(p, e));
  EXPECT_EQ(pow(x, 0), Interval(1.0));
}

TEST(Interval, MidAndRadEncloseTheInterval) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const Interval x = random_interval(rng);
    EXPECT_TRUE(x.contains(x.mid()));
    EXPECT_LE(Wide(x.mid()) - Wide(x.rad()), Wide(x.lo()));
    EXPECT_GE(Wide(x.mid()) + Wide(x.rad()), Wide(x.hi()));
  }
}

// One million random operations checked against 113-bit arithmetic.
TEST(Interval, ContainmentFuzzAgainstQuadPrecision) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> op(0, 3);
  long failures = 0;
  for (int i = 0; i < 1000000; ++i) {
    const Interval x = random_interval(rng);
    const Interval y = random_interval(rng);
    const double a = random_member(rng, x);
    const double b = random_member(rng, y);
    switch (op(rng)) {
      case 0: failures += !encloses(x + y, Wide(a) + Wide(b)); break;
      case 1: failures += !encloses(x - y, Wide(a) - Wide(b)); break;
      case 2: failures += !encloses(x * y, Wide(a) * Wide(b)); break;
      default: {
        if (y.contains_zero()) break;
        const Interval q = x / y;
        // q.lo <= a / b <= q.hi, checked through exact products with b.
        const bool pos = b > 0.0;
        const Wide lo_b = Wide(q.lo()) * Wide(b), hi_b = Wide(q.hi()) * Wide(b);
        const bool ok = pos ? (lo_b <= Wide(a) && Wide(a) <= hi_b) : (hi_b <= Wide(a) && Wide(a) <= lo_b);
        failures += !ok;
      }
    }
  }
  EXPECT_EQ(failures, 0);
}

TEST(Interval, InclusionMonotonicity) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100000; ++i) {
    const Interval big_x = random_interval(rng);
    const Interval big_y = random_interval(rng);
    const double a = random_member(rng, big_x), b = random_member(rng, big_x);
    const double c = random_member(rng, big_y), d = random_member(rng, big_y);
    const Interval x(std::min(a, b), std::max(a, b));
    const Interval y(std::min(c, d), std::max(c, d));
    ASSERT_TRUE((big_x + big_y).contains(x + y));
    ASSERT_TRUE((big_x - big_y).contains(x - y));
    ASSERT_TRUE((big_x * big_y).contains(x * y));
    ASSERT_TRUE(sqr(big_x).contains(sqr(x)));
    ASSERT_TRUE(abs(big_x).contains(abs(x)));
    if (!big_y.contains_zero()) {
      ASSERT_TRUE((big_x / big_y).contains(x / y));
    }
  }
}

TEST(Interval, DirectedRoundingBracketsNearest) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100000; ++i) {
    const double a = random_double(rng), b = random_double(rng);
    const Wide s = Wide(a) + Wide(b), p = Wide(a) * Wide(b);
    ASSERT_LE(Wide(relindex::add_down(a, b)), s);
    ASSERT_GE(Wide(relindex::add_up(a, b)), s);
    ASSERT_LE(Wide(relindex::mul_down(a, b)), p);
    ASSERT_GE(Wide(relindex::mul_up(a, b)), p);
    ASSERT_LE(relindex::add_up(a, b) - relindex::add_down(a, b), 2 * std::abs(std::nextafter(a + b, 1e308) - (a + b)) + 1e-300);
  }
}
