#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "relindex/seqspace.hpp"

using namespace relindex;

namespace {

std::vector<double> random_coeffs(std::mt19937_64& rng, std::size_t n, bool odd = false) {
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = g(rng) / (1.0 + static_cast<double>(k));
  if (odd && n > 0) v[0] = 0.0;
  return v;
}

std::vector<double> small_integers(std::mt19937_64& rng, std::size_t n, bool odd = false) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  if (odd && n > 0) v[0] = 0.0;
  return v;
}

// Two-sided extension: even (a_{-k} = a_k) or odd (a_{-k} = -a_k).
double ext(const std::vector<double>& a, long k, bool odd) {
  const long n = static_cast<long>(a.size());
  const long j = std::labs(k);
  if (j >= n) return 0.0;
  return (odd && k < 0) ? -a[static_cast<std::size_t>(j)] : a[static_cast<std::size_t>(j)];
}

double brute_conv(const std::vector<double>& a, bool odd_a, const std::vector<double>& b, bool odd_b, long k) {
  const long n = static_cast<long>(a.size() + b.size());
  double s = 0.0;
  for (long j = -n; j <= n; ++j) s += ext(a, j, odd_a) * ext(b, k - j, odd_b);
  return s;
}

double weighted_sum(const std::vector<double>& a, double nu) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (k == 0 ? 1.0 : 2.0 * std::pow(nu, static_cast<double>(k))) * std::abs(a[k]);
  return s;
}

}  // namespace

TEST(Seqspace, WeightsAndMultiplicities) {
  EXPECT_EQ(weight1d(0, 1.5), Interval(1.0));
  EXPECT_TRUE(weight1d(2, 1.5).contains(4.5));
  EXPECT_EQ(multiplicity(0, 0), 1);
  EXPECT_EQ(multiplicity(0, 3), 2);
  EXPECT_EQ(multiplicity(2, 0), 2);
  EXPECT_EQ(multiplicity(1, 1), 4);
  EXPECT_TRUE(weight2d(2, 3, 2.0).contains(32.0));
}

TEST(Seqspace, NormMatchesWeightedSum) {
  std::mt19937_64 rng(1);
  const auto v = random_coeffs(rng, 12);
  const Interval n = norm_l1nu(CosSeq::from_doubles(v, 1.1));
  EXPECT_NEAR(n.mid(), weighted_sum(v, 1.1), 1e-12);
  EXPECT_TRUE(n.contains(weighted_sum(v, 1.1)) || n.width_up() < 1e-12);
}

TEST(Seqspace, SinSeqRejectsModeZero) {
  EXPECT_THROW(SinSeq::from_doubles({1.0, 2.0}, 1.0), DomainError);
  EXPECT_THROW(CosSeq::from_doubles({1.0}, 0.5), DomainError);
}

TEST(Seqspace, ConvolutionMatchesBruteForce1D) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> len(1, 6);
    const auto a = small_integers(rng, len(rng));
    const auto b = small_integers(rng, len(rng));
    const auto s = small_integers(rng, len(rng), true);
    const auto t = small_integers(rng, len(rng), true);
    const CosSeq ca = CosSeq::from_doubles(a, 1.0), cb = CosSeq::from_doubles(b, 1.0);
    const SinSeq ss = SinSeq::from_doubles(s, 1.0), st = SinSeq::from_doubles(t, 1.0);
    const CosSeq ee = convolve(ca, cb);
    const SinSeq eo = convolve(ca, ss);
    const CosSeq oo = convolve(ss, st);
    for (long k = 0; k < 14; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      ASSERT_TRUE(ee[uk].contains(brute_conv(a, false, b, false, k))) << k;
      ASSERT_TRUE(eo[uk].contains(brute_conv(a, false, s, true, k))) << k;
      ASSERT_TRUE(oo[uk].contains(brute_conv(s, true, t, true, k))) << k;
    }
    const CosSeq c3 = cube(ca);
    for (long k = 0; k < 20; ++k) {
      double want = 0.0;
      for (long j = -20; j <= 20; ++j) want += ext(a, j, false) * brute_conv(a, false, a, false, k - j);
      ASSERT_TRUE(c3[static_cast<std::size_t>(k)].contains(want));
    }
  }
}

TEST(Seqspace, ConvolutionMatchesBruteForce2D) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> len(1, 4);
    const std::size_t n = len(rng), p = len(rng);
    const auto a = small_integers(rng, n * n);
    const auto b = small_integers(rng, p * p);
    const Cos2Seq c = convolve(Cos2Seq::from_doubles(n, a, 1.0), Cos2Seq::from_doubles(p, b, 1.0));
    auto at = [](const std::vector<double>& v, std::size_t sz, long i, long j) {
      const long ai = std::labs(i), aj = std::labs(j);
      if (ai >= static_cast<long>(sz) || aj >= static_cast<long>(sz)) return 0.0;
      return v[static_cast<std::size_t>(ai) * sz + static_cast<std::size_t>(aj)];
    };
    for (long k1 = 0; k1 < 8; ++k1) {
      for (long k2 = 0; k2 < 8; ++k2) {
        double want = 0.0;
        for (long j1 = -6; j1 <= 6; ++j1)
          for (long j2 = -6; j2 <= 6; ++j2) want += at(a, n, j1, j2) * at(b, p, k1 - j1, k2 - j2);
        ASSERT_TRUE(c(static_cast<std::size_t>(k1), static_cast<std::size_t>(k2)).contains(want));
      }
    }
  }
}

TEST(Seqspace, BanachAlgebraInequality) {
  std::mt19937_64 rng(4);
  for (double nu : {1.0, 1.01, 1.1}) {
    for (int trial = 0; trial < 500; ++trial) {
      std::uniform_int_distribution<std::size_t> len(1, 15);
      const CosSeq a = CosSeq::from_doubles(random_coeffs(rng, len(rng)), nu);
      const CosSeq b = CosSeq::from_doubles(random_coeffs(rng, len(rng)), nu);
      const SinSeq s = SinSeq::from_doubles(random_coeffs(rng, len(rng), true), nu);
      ASSERT_LE(norm_l1nu(convolve(a, b)).lo(), (norm_l1nu(a) * norm_l1nu(b)).hi());
      ASSERT_LE(norm_l1nu(convolve(a, s)).lo(), (norm_l1nu(a) * norm_l1nu(s)).hi());
      ASSERT_LE(norm_l1nu(convolve(s, s)).lo(), (norm_l1nu(s) * norm_l1nu(s)).hi());
      const std::size_t n = len(rng) % 5 + 1;
      const Cos2Seq c = Cos2Seq::from_doubles(n, random_coeffs(rng, n * n), nu);
      const Cos2Seq d = Cos2Seq::from_doubles(n, random_coeffs(rng, n * n), nu);
      ASSERT_LE(norm_l1nu(convolve(c, d)).lo(), (norm_l1nu(c) * norm_l1nu(d)).hi());
    }
  }
}

TEST(Seqspace, DualPairingBound) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = random_coeffs(rng, 10);
    const auto b = random_coeffs(rng, 10);
    double pairing = 0.0;
    for (std::size_t k = 0; k < 10; ++k) pairing += c[k] * b[k];
    const IntervalVector ci(c.begin(), c.end());
    const Interval bound = dual_pairing_bound(ci, 1.05, norm_l1nu(CosSeq::from_doubles(b, 1.05)));
    ASSERT_LE(std::abs(pairing), bound.hi() * (1 + 1e-12));
  }
}

// sup over unit vectors of a linear functional on l1_nu is attained on normalized basis vectors.
TEST(Seqspace, QHatMatchesBasisSupOracle1D) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const double nu = 1.0 + 0.05 * trial / 50.0;
    const auto bv = random_coeffs(rng, 7);
    const CosSeq b = CosSeq::from_doubles(bv, nu);
    const std::size_t m = 3;
    for (std::size_t k = 0; k < m; ++k) {
      double oracle = 0.0;
      for (long l = static_cast<long>(m); l < 40; ++l) {
        std::vector<double> e(static_cast<std::size_t>(l) + 1, 0.0);
        e[static_cast<std::size_t>(l)] = 1.0 / (2.0 * std::pow(nu, static_cast<double>(l)));
        oracle = std::max(oracle, std::abs(brute_conv(bv, false, e, false, static_cast<long>(k))));
      }
      const Interval q = q_hat_bound(b, k, m);
      ASSERT_GE(q.hi(), oracle * (1 - 1e-12));
      ASSERT_LE(q.lo(), oracle * (1 + 1e-12) + 1e-300);
    }
  }
}

TEST(Seqspace, QBoundIncludesModeZero) {
  const CosSeq b = CosSeq::from_doubles({0.5, 0.25}, 1.0);
  EXPECT_TRUE(q_bound(b, 0).contains(0.5));
}

TEST(Seqspace, QHatMatchesBasisSupOracle2D) {
  std::mt19937_64 rng(7);
  const std::size_t n = 3, m = 2;
  const double nu = 1.02;
  const auto bv = random_coeffs(rng, n * n);
  const Cos2Seq b = Cos2Seq::from_doubles(n, bv, nu);
  auto bat = [&](long i, long j) {
    i = std::labs(i);
    j = std::labs(j);
    return (i < static_cast<long>(n) && j < static_cast<long>(n)) ? bv[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] : 0.0;
  };
  for (long k1 = 0; k1 < static_cast<long>(m); ++k1) {
    for (long k2 = 0; k2 < static_cast<long>(m); ++k2) {
      double oracle = 0.0;
      for (long l1 = 0; l1 < 12; ++l1) {
        for (long l2 = 0; l2 < 12; ++l2) {
          if (std::max(l1, l2) < static_cast<long>(m)) continue;
          // v = e_l / ||e_l||, spread over the sign images of l.
          const double w = multiplicity(static_cast<std::size_t>(l1), static_cast<std::size_t>(l2)) *
                           std::pow(nu, static_cast<double>(std::max(l1, l2)));
          double s = 0.0;
          for (long s1 : {1L, -1L}) {
            for (long s2 : {1L, -1L}) {
              if ((s1 < 0 && l1 == 0) || (s2 < 0 && l2 == 0)) continue;
              s += bat(k1 - s1 * l1, k2 - s2 * l2);
            }
          }
          oracle = std::max(oracle, std::abs(s) / w);
        }
      }
      const Interval q = q_hat_bound(b, static_cast<std::size_t>(k1), static_cast<std::size_t>(k2), m);
      EXPECT_GE(q.hi(), oracle * (1 - 1e-12));
      EXPECT_LE(q.lo(), oracle * (1 + 1e-12));
    }
  }
}

TEST(Seqspace, OperatorNormMatchesColumnSupOracle) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const double nu = 1.0 + 0.1 * (trial % 3);
    Eigen::MatrixXd b(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) b(i, j) = g(rng);
    const double scale = std::abs(g(rng)) * 3.0;
    const IntervalVector w = weights1d(0, 4, nu);
    TailRule tail{[scale](std::size_t n) { return Interval(scale) / Interval(static_cast<double>(n)); }, 4};
    const Interval got = operator_norm(BlockTailOperator(IntervalMatrix(b), w, tail));
    double oracle = scale / 4.0;
    for (int j = 0; j < 4; ++j) {
      double col = 0.0;
      for (int i = 0; i < 4; ++i) col += w[static_cast<std::size_t>(i)].mid() * std::abs(b(i, j));
      oracle = std::max(oracle, col / w[static_cast<std::size_t>(j)].mid());
    }
    ASSERT_GE(got.hi(), oracle * (1 - 1e-12));
    ASSERT_LE(got.lo(), oracle * (1 + 1e-12));
  }
}

TEST(Seqspace, OperatorNormRejectsGrowingTail) {
  const IntervalVector w = weights1d(0, 2, 1.0);
  TailRule tail{[](std::size_t n) { return Interval(static_cast<double>(n)); }, 2};
  EXPECT_THROW(operator_norm(BlockTailOperator(IntervalMatrix::identity(2), w, tail)), InvariantError);
}

TEST(Seqspace, BlockNormIdentityIsOne) {
  const IntervalVector w = weights2d(3, 1.1);
  EXPECT_TRUE(block_norm(IntervalMatrix::identity(9), w).contains(1.0));
}
