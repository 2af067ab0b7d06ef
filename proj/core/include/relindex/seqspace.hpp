#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "relindex/interval.hpp"
#include "relindex/interval_matrix.hpp"

namespace relindex {

// Weight of mode k in the 1D norm: 1 for k = 0, 2 nu^k otherwise.
Interval weight1d(std::size_t k, double nu);
// Weight of mode (k1, k2) in the 2D norm: m_k nu^max(k1, k2).
Interval weight2d(std::size_t k1, std::size_t k2, double nu);
// Multiplicity m_k of a 2D cosine mode (1, 2 or 4).
int multiplicity(std::size_t k1, std::size_t k2);

/// Even sequence a_{-k} = a_k, stored for k = 0..size()-1; zero beyond.
class CosSeq {
 public:
  CosSeq() = default;
  CosSeq(IntervalVector coeffs, double nu);
  static CosSeq from_doubles(const std::vector<double>& v, double nu);

  std::size_t size() const noexcept { return c_.size(); }
  double nu() const noexcept { return nu_; }
  Interval operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Interval(0.0); }
  const IntervalVector& coeffs() const noexcept { return c_; }

 private:
  IntervalVector c_;
  double nu_ = 1.0;
};

/// Odd sequence a_{-k} = -a_k. Entry 0 is stored and always zero.
class SinSeq {
 public:
  SinSeq() = default;
  SinSeq(IntervalVector coeffs, double nu);
  static SinSeq from_doubles(const std::vector<double>& v, double nu);

  std::size_t size() const noexcept { return c_.size(); }
  double nu() const noexcept { return nu_; }
  Interval operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Interval(0.0); }
  const IntervalVector& coeffs() const noexcept { return c_; }

 private:
  IntervalVector c_;
  double nu_ = 1.0;
};

struct PairSeq {
  CosSeq a1;
  SinSeq a2;
};

/// 2D cosine-cosine sequence on an n x n block, flattened lexicographically:
/// (k1, k2) lives at k1 * n + k2.
class Cos2Seq {
 public:
  Cos2Seq() = default;
  Cos2Seq(std::size_t n, IntervalVector coeffs, double nu);
  static Cos2Seq from_doubles(std::size_t n, const std::vector<double>& v, double nu);

  std::size_t n() const noexcept { return n_; }
  double nu() const noexcept { return nu_; }
  Interval operator()(std::size_t k1, std::size_t k2) const {
    return (k1 < n_ && k2 < n_) ? c_[k1 * n_ + k2] : Interval(0.0);
  }
  const IntervalVector& coeffs() const noexcept { return c_; }

 private:
  std::size_t n_ = 0;
  IntervalVector c_;
  double nu_ = 1.0;
};

Interval norm_l1nu(const CosSeq& a);
Interval norm_l1nu(const SinSeq& a);
Interval norm_l1nu(const Cos2Seq& a);
/// max(||a1||, ||a2||)
Interval norm_x(const PairSeq& a);

// Convolutions of symmetric extensions; the result support is the sum of supports.
CosSeq convolve(const CosSeq& b, const CosSeq& c);
SinSeq convolve(const CosSeq& b, const SinSeq& c);
CosSeq convolve(const SinSeq& b, const SinSeq& c);
Cos2Seq convolve(const Cos2Seq& b, const Cos2Seq& c);
CosSeq cube(const CosSeq& b);
Cos2Seq cube(const Cos2Seq& b);

/// max(|c_0|, 1/2 sup_{k>=1} |c_k| nu^-k)
Interval dual_norm(const IntervalVector& c, double nu);
/// Upper bound on |sum_k c_k b_k| given ||b||_{1,nu} <= b_norm.
Interval dual_pairing_bound(const IntervalVector& c, double nu, const Interval& b_norm);

/// sup over ||v||_{1,nu} <= 1 of |(b * v)_k|.
Interval q_bound(const CosSeq& b, std::size_t k);
/// Same, with v restricted to modes >= m.
Interval q_hat_bound(const CosSeq& b, std::size_t k, std::size_t m);
/// 2D analogue: v restricted to modes with max(l1, l2) >= m.
Interval q_hat_bound(const Cos2Seq& b, std::size_t k1, std::size_t k2, std::size_t m);

/// Diagonal tail of a block-tail operator: value(n) for n >= start.
struct TailRule {
  std::function<Interval(std::size_t)> value;
  std::size_t start = 0;
};

/// Finite matrix block acting on the first modes plus a diagonal tail.
/// weights[i] is the norm weight of the i-th finite coordinate.
class BlockTailOperator {
 public:
  BlockTailOperator(IntervalMatrix block, IntervalVector weights, TailRule tail = {});

  const IntervalMatrix& block() const noexcept { return block_; }
  const IntervalVector& weights() const noexcept { return weights_; }
  const TailRule& tail() const noexcept { return tail_; }

 private:
  IntervalMatrix block_;
  IntervalVector weights_;
  TailRule tail_;
};

/// Weighted max-column-sum norm of the block, max'd with |mu_m|. The tail is
/// checked for |mu_n| <= |mu_m| on n in [m, m + probe].
Interval operator_norm(const BlockTailOperator& g, std::size_t probe = 2000);

/// Weighted column-sum norm of a finite matrix, no tail.
Interval block_norm(const IntervalMatrix& block, const IntervalVector& weights);
/// Rectangular variant: rows carry the target-space weights, columns the source-space weights.
Interval block_norm(const IntervalMatrix& block, const IntervalVector& row_weights,
                    const IntervalVector& col_weights);

/// Weights of modes first..last-1 in the 1D norm.
IntervalVector weights1d(std::size_t first, std::size_t last, double nu);
/// Weights of the n x n block in the 2D norm, lexicographic.
IntervalVector weights2d(std::size_t n, double nu);
/// sum_i w_i |v_i|
Interval weighted_l1(const IntervalVector& v, const IntervalVector& w);

namespace detail {

template <class T>
std::vector<T> conv_even(const std::vector<T>& b, const std::vector<T>& c) {
  if (b.empty() || c.empty()) return {};
  const long nb = static_cast<long>(b.size()), nc = static_cast<long>(c.size());
  const long n = nb + nc - 1;
  std::vector<T> out(static_cast<std::size_t>(n), T(0.0));
  for (long k = 0; k < n; ++k) {
    T acc(0.0);
    for (long l = -(nc - 1); l <= nc - 1; ++l) {
      const long j = k - l < 0 ? l - k : k - l;
      if (j >= nb) continue;
      acc += b[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(l < 0 ? -l : l)];
    }
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

template <class T>
std::vector<T> conv_even_2d(std::size_t nb, const std::vector<T>& b, std::size_t nc,
                            const std::vector<T>& c) {
  if (nb == 0 || nc == 0) return {};
  const long lb = static_cast<long>(nb), lc = static_cast<long>(nc);
  const long n = lb + lc - 1;
  std::vector<T> out(static_cast<std::size_t>(n * n), T(0.0));
  for (long k1 = 0; k1 < n; ++k1) {
    for (long k2 = 0; k2 < n; ++k2) {
      T acc(0.0);
      for (long l1 = -(lc - 1); l1 <= lc - 1; ++l1) {
        const long j1 = k1 - l1 < 0 ? l1 - k1 : k1 - l1;
        if (j1 >= lb) continue;
        const long a1 = l1 < 0 ? -l1 : l1;
        for (long l2 = -(lc - 1); l2 <= lc - 1; ++l2) {
          const long j2 = k2 - l2 < 0 ? l2 - k2 : k2 - l2;
          if (j2 >= lb) continue;
          const long a2 = l2 < 0 ? -l2 : l2;
          acc += b[static_cast<std::size_t>(j1 * lb + j2)] * c[static_cast<std::size_t>(a1 * lc + a2)];
        }
      }
      out[static_cast<std::size_t>(k1 * n + k2)] = acc;
    }
  }
  return out;
}

}  // namespace detail
}  // namespace relindex
