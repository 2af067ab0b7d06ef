#include "relindex/seqspace.hpp"

#include <algorithm>
#include <cmath>

#include "relindex/errors.hpp"

namespace relindex {
namespace {

void check_nu(double nu) {
  if (!(nu >= 1.0) || !std::isfinite(nu)) throw DomainError("weight nu must be a finite number >= 1");
}

IntervalVector to_intervals(const std::vector<double>& v) { return IntervalVector(v.begin(), v.end()); }

Interval signed_at(const IntervalVector& c, long k) {
  const long a = k < 0 ? -k : k;
  if (a >= static_cast<long>(c.size())) return Interval(0.0);
  return k < 0 ? -c[static_cast<std::size_t>(a)] : c[static_cast<std::size_t>(a)];
}

Interval even_at(const IntervalVector& c, long k) {
  const long a = k < 0 ? -k : k;
  if (a >= static_cast<long>(c.size())) return Interval(0.0);
  return c[static_cast<std::size_t>(a)];
}

}  // namespace

Interval weight1d(std::size_t k, double nu) {
  if (k == 0) return Interval(1.0);
  return Interval(2.0) * pow(Interval(nu), static_cast<unsigned>(k));
}

int multiplicity(std::size_t k1, std::size_t k2) { return (k1 > 0 ? 2 : 1) * (k2 > 0 ? 2 : 1); }

Interval weight2d(std::size_t k1, std::size_t k2, double nu) {
  return Interval(static_cast<double>(multiplicity(k1, k2))) *
         pow(Interval(nu), static_cast<unsigned>(std::max(k1, k2)));
}

CosSeq::CosSeq(IntervalVector coeffs, double nu) : c_(std::move(coeffs)), nu_(nu) { check_nu(nu); }

CosSeq CosSeq::from_doubles(const std::vector<double>& v, double nu) { return {to_intervals(v), nu}; }

SinSeq::SinSeq(IntervalVector coeffs, double nu) : c_(std::move(coeffs)), nu_(nu) {
  check_nu(nu);
  if (!c_.empty() && c_[0] != Interval(0.0)) throw DomainError("SinSeq: mode 0 must vanish");
}

SinSeq SinSeq::from_doubles(const std::vector<double>& v, double nu) { return {to_intervals(v), nu}; }

Cos2Seq::Cos2Seq(std::size_t n, IntervalVector coeffs, double nu) : n_(n), c_(std::move(coeffs)), nu_(nu) {
  check_nu(nu);
  if (c_.size() != n * n) throw DomainError("Cos2Seq: coefficient count is not n*n");
}

Cos2Seq Cos2Seq::from_doubles(std::size_t n, const std::vector<double>& v, double nu) {
  return {n, to_intervals(v), nu};
}

Interval norm_l1nu(const CosSeq& a) {
  Interval s(0.0);
  for (std::size_t k = 0; k < a.size(); ++k) s += abs(a[k]) * weight1d(k, a.nu());
  return s;
}

Interval norm_l1nu(const SinSeq& a) {
  Interval s(0.0);
  for (std::size_t k = 1; k < a.size(); ++k) s += abs(a[k]) * weight1d(k, a.nu());
  return s;
}

Interval norm_l1nu(const Cos2Seq& a) {
  Interval s(0.0);
  for (std::size_t k1 = 0; k1 < a.n(); ++k1)
    for (std::size_t k2 = 0; k2 < a.n(); ++k2) s += abs(a(k1, k2)) * weight2d(k1, k2, a.nu());
  return s;
}

Interval norm_x(const PairSeq& a) { return max(norm_l1nu(a.a1), norm_l1nu(a.a2)); }

CosSeq convolve(const CosSeq& b, const CosSeq& c) {
  return {detail::conv_even(b.coeffs(), c.coeffs()), b.nu()};
}

SinSeq convolve(const CosSeq& b, const SinSeq& c) {
  if (b.size() == 0 || c.size() == 0) return {{}, b.nu()};
  const long nb = static_cast<long>(b.size()), nc = static_cast<long>(c.size());
  const long n = nb + nc - 1;
  IntervalVector out(static_cast<std::size_t>(n), Interval(0.0));
  for (long k = 1; k < n; ++k) {
    Interval acc(0.0);
    for (long l = -(nc - 1); l <= nc - 1; ++l) acc += even_at(b.coeffs(), k - l) * signed_at(c.coeffs(), l);
    out[static_cast<std::size_t>(k)] = acc;
  }
  return {std::move(out), b.nu()};
}

CosSeq convolve(const SinSeq& b, const SinSeq& c) {
  if (b.size() == 0 || c.size() == 0) return {{}, b.nu()};
  const long nb = static_cast<long>(b.size()), nc = static_cast<long>(c.size());
  const long n = nb + nc - 1;
  IntervalVector out(static_cast<std::size_t>(n), Interval(0.0));
  for (long k = 0; k < n; ++k) {
    Interval acc(0.0);
    for (long l = -(nc - 1); l <= nc - 1; ++l) acc += signed_at(b.coeffs(), k - l) * signed_at(c.coeffs(), l);
    out[static_cast<std::size_t>(k)] = acc;
  }
  return {std::move(out), b.nu()};
}

Cos2Seq convolve(const Cos2Seq& b, const Cos2Seq& c) {
  auto out = detail::conv_even_2d(b.n(), b.coeffs(), c.n(), c.coeffs());
  const std::size_t n = (b.n() == 0 || c.n() == 0) ? 0 : b.n() + c.n() - 1;
  return {n, std::move(out), b.nu()};
}

CosSeq cube(const CosSeq& b) { return convolve(convolve(b, b), b); }

Cos2Seq cube(const Cos2Seq& b) { return convolve(convolve(b, b), b); }

Interval dual_norm(const IntervalVector& c, double nu) {
  check_nu(nu);
  if (c.empty()) return Interval(0.0);
  Interval best = abs(c[0]);
  for (std::size_t k = 1; k < c.size(); ++k) best = max(best, abs(c[k]) / weight1d(k, nu));
  return best;
}

Interval dual_pairing_bound(const IntervalVector& c, double nu, const Interval& b_norm) {
  return dual_norm(c, nu) * b_norm;
}

namespace {

Interval q_sup(const CosSeq& b, std::size_t k, std::size_t kmin) {
  Interval best(0.0);
  const std::size_t kmax = b.size() + k;
  for (std::size_t kp = std::max<std::size_t>(kmin, 1); kp <= kmax; ++kp) {
    const std::size_t d = k > kp ? k - kp : kp - k;
    best = max(best, abs(b[d] + b[k + kp]) / weight1d(kp, b.nu()));
  }
  return best;
}

}  // namespace

Interval q_bound(const CosSeq& b, std::size_t k) { return max(abs(b[k]), q_sup(b, k, 1)); }

Interval q_hat_bound(const CosSeq& b, std::size_t k, std::size_t m) { return q_sup(b, k, m); }

Interval q_hat_bound(const Cos2Seq& b, std::size_t k1, std::size_t k2, std::size_t m) {
  // For v = e_l / ||e_l|| the convolution picks up every sign image of l.
  Interval best(0.0);
  const long n = static_cast<long>(b.n());
  const long lmax1 = static_cast<long>(k1) + n, lmax2 = static_cast<long>(k2) + n;
  const long ik1 = static_cast<long>(k1), ik2 = static_cast<long>(k2);
  auto at = [&](long j1, long j2) {
    j1 = j1 < 0 ? -j1 : j1;
    j2 = j2 < 0 ? -j2 : j2;
    return b(static_cast<std::size_t>(j1), static_cast<std::size_t>(j2));
  };
  IntervalVector nu_pow(static_cast<std::size_t>(std::max(lmax1, lmax2) + 1));
  nu_pow[0] = Interval(1.0);
  for (std::size_t j = 1; j < nu_pow.size(); ++j) nu_pow[j] = nu_pow[j - 1] * Interval(b.nu());
  for (long l1 = 0; l1 <= lmax1; ++l1) {
    for (long l2 = 0; l2 <= lmax2; ++l2) {
      if (static_cast<std::size_t>(std::max(l1, l2)) < m) continue;
      Interval s = at(ik1 - l1, ik2 - l2);
      if (l1 > 0) s += at(ik1 + l1, ik2 - l2);
      if (l2 > 0) s += at(ik1 - l1, ik2 + l2);
      if (l1 > 0 && l2 > 0) s += at(ik1 + l1, ik2 + l2);
      const Interval& w = nu_pow[static_cast<std::size_t>(std::max(l1, l2))];
      best = max(best, abs(s) / (Interval(static_cast<double>(multiplicity(l1, l2))) * w));
    }
  }
  return best;
}

BlockTailOperator::BlockTailOperator(IntervalMatrix block, IntervalVector weights, TailRule tail)
    : block_(std::move(block)), weights_(std::move(weights)), tail_(std::move(tail)) {
  if (block_.rows() != block_.cols() || static_cast<std::size_t>(block_.rows()) != weights_.size())
    throw DomainError("BlockTailOperator: block must be square and match the weights");
}

Interval block_norm(const IntervalMatrix& block, const IntervalVector& weights) {
  return block_norm(block, weights, weights);
}

Interval block_norm(const IntervalMatrix& block, const IntervalVector& row_weights,
                    const IntervalVector& col_weights) {
  if (static_cast<std::size_t>(block.rows()) != row_weights.size() ||
      static_cast<std::size_t>(block.cols()) != col_weights.size())
    throw DomainError("block_norm: weights do not match the block");
  Interval best(0.0);
  for (Eigen::Index j = 0; j < block.cols(); ++j) {
    Interval col(0.0);
    for (Eigen::Index i = 0; i < block.rows(); ++i)
      col += abs(block(i, j)) * row_weights[static_cast<std::size_t>(i)];
    best = max(best, col / col_weights[static_cast<std::size_t>(j)]);
  }
  return best;
}

IntervalVector weights1d(std::size_t first, std::size_t last, double nu) {
  IntervalVector w;
  for (std::size_t k = first; k < last; ++k) w.push_back(weight1d(k, nu));
  return w;
}

IntervalVector weights2d(std::size_t n, double nu) {
  IntervalVector w;
  w.reserve(n * n);
  for (std::size_t k1 = 0; k1 < n; ++k1)
    for (std::size_t k2 = 0; k2 < n; ++k2) w.push_back(weight2d(k1, k2, nu));
  return w;
}

Interval weighted_l1(const IntervalVector& v, const IntervalVector& w) {
  if (v.size() != w.size()) throw DomainError("weighted_l1: size mismatch");
  Interval s(0.0);
  for (std::size_t i = 0; i < v.size(); ++i) s += abs(v[i]) * w[i];
  return s;
}

Interval operator_norm(const BlockTailOperator& g, std::size_t probe) {
  const Interval k = block_norm(g.block(), g.weights());
  if (!g.tail().value) return k;
  const std::size_t m = g.tail().start;
  const Interval lead = abs(g.tail().value(m));
  for (std::size_t n = m + 1; n <= m + probe; ++n) {
    if (abs(g.tail().value(n)).lo() > lead.hi())
      throw InvariantError("operator_norm: tail entry " + std::to_string(n) + " exceeds the leading tail entry");
  }
  return max(k, lead);
}

}  // namespace relindex
