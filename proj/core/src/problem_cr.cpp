#include "relindex/problem_cr.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "relindex/problem_common.hpp"

namespace relindex {
namespace {

template <class T>
std::vector<T> slice(const std::vector<T>& v, std::size_t n) {
  std::vector<T> out(n, T(0.0));
  for (std::size_t i = 0; i < std::min(n, v.size()); ++i) out[i] = v[i];
  return out;
}

// F with full support: F1 on 0..3n-3, F2 on 0..n-1 (entry 0 zero).
template <class T>
void cr_residual(const std::vector<T>& a1, const std::vector<T>& a2, T l1, T l2, std::vector<T>& f1,
                 std::vector<T>& f2) {
  const std::size_t n = std::max(a1.size(), a2.size());
  const auto b1 = slice(a1, n), b2 = slice(a2, n);
  const auto c = detail::conv_even(detail::conv_even(b1, b1), b1);
  f1.assign(c.size(), T(0.0));
  f2.assign(n, T(0.0));
  for (std::size_t k = 0; k < c.size(); ++k) {
    const T lin = k < n ? l1 * b1[k] : T(0.0);
    if (k == 0) {
      f1[0] = lin - l2 * c[0];
      continue;
    }
    const T kk(static_cast<double>(k));
    const T flux = k < n ? kk * b2[k] : T(0.0);
    f1[k] = T(2.0) * (lin - flux - l2 * c[k]);
    if (k < n) f2[k] = T(2.0) * (b2[k] - kk * b1[k]);
  }
}

template <class T, class Set>
void cr_jacobian(const std::vector<T>& a1, T l1, T l2, std::size_t m, Set&& set) {
  const auto b = detail::conv_even(a1, a1);
  auto bb = [&](std::size_t i) { return i < b.size() ? b[i] : T(0.0); };
  const T three_l2 = T(3.0) * l2;
  for (std::size_t k = 0; k < m; ++k) {
    const T s(k == 0 ? 1.0 : 2.0);
    for (std::size_t j = 0; j < m; ++j) {
      const T t = j == 0 ? bb(k) : bb(k > j ? k - j : j - k) + bb(k + j);
      T v = -(three_l2 * t);
      if (j == k) v += l1;
      set(k, j, s * v);
    }
    if (k > 0) {
      const T twok(2.0 * static_cast<double>(k));
      set(k, m - 1 + k, -twok);
      set(m - 1 + k, k, -twok);
      set(m - 1 + k, m - 1 + k, T(2.0));
    }
  }
}

std::vector<double> head(const Eigen::VectorXd& a, std::size_t from, std::size_t n) {
  return std::vector<double>(a.data() + from, a.data() + from + n);
}

void check_size(const Eigen::VectorXd& a, std::size_t m) {
  if (m < 2 || static_cast<std::size_t>(a.size()) != 2 * m - 1)
    throw DomainError("CR coefficient vector must have length 2m-1 with m >= 2");
}

}  // namespace

PairSeq f_eval(const PairSeq& a, const CRParams& p) {
  IntervalVector f1, f2;
  cr_residual(a.a1.coeffs(), a.a2.coeffs(), Interval(p.lambda1), Interval(p.lambda2), f1, f2);
  if (!f2.empty()) f2[0] = Interval(0.0);
  return {CosSeq(std::move(f1), a.a1.nu()), SinSeq(std::move(f2), a.a1.nu())};
}

IntervalMatrix df_finite(const PairSeq& a, const CRParams& p, std::size_t m) {
  IntervalMatrix out(static_cast<Eigen::Index>(2 * m - 1), static_cast<Eigen::Index>(2 * m - 1));
  cr_jacobian(slice(a.a1.coeffs(), m), Interval(p.lambda1), Interval(p.lambda2), m,
              [&](std::size_t i, std::size_t j, const Interval& v) {
                out.set(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j), v);
              });
  return out;
}

CROperators build_operators(const PairSeq& abar, const CRParams& p, std::size_t m) {
  CROperators ops;
  ops.m = m;
  ops.adag = df_finite(abar, p, m);
  ops.a = approximate_inverse(ops.adag.mid());
  return ops;
}

Interval bound_y0(const PairSeq& abar, const CRParams& p, const CROperators& ops) {
  const std::size_t m = ops.m;
  const double nu = abar.a1.nu();
  const PairSeq f = f_eval(abar, p);
  IntervalVector fm(2 * m - 1, Interval(0.0));
  for (std::size_t k = 0; k < m; ++k) fm[k] = f.a1[k];
  for (std::size_t k = 1; k < m; ++k) fm[m - 1 + k] = f.a2[k];
  const IntervalVector af = multiply(IntervalMatrix(ops.a), fm);
  const IntervalVector w = weights1d(0, m, nu);
  Interval y1(0.0), y2(0.0);
  for (std::size_t k = 0; k < m; ++k) y1 += abs(af[k]) * w[k];
  for (std::size_t k = 1; k < m; ++k) y2 += abs(af[m - 1 + k]) * w[k];
  // Tail of A_{2,1} is -1/(2k); F2 vanishes beyond m - 1.
  for (std::size_t k = m; k < f.a1.size(); ++k)
    y2 += abs(f.a1[k]) / Interval(2.0 * static_cast<double>(k)) * weight1d(k, nu);
  return max(y1, y2);
}

Interval bound_z0(const CROperators& ops, double nu) {
  const std::size_t m = ops.m;
  const auto n = static_cast<Eigen::Index>(2 * m - 1), mm = static_cast<Eigen::Index>(m);
  const IntervalMatrix b = IntervalMatrix::identity(n) - multiply(ops.a, ops.adag);
  const IntervalVector w1 = weights1d(0, m, nu), w2 = weights1d(1, m, nu);
  const Interval r1 = block_norm(b.block(0, 0, mm, mm), w1, w1) + block_norm(b.block(0, mm, mm, mm - 1), w1, w2);
  const Interval r2 =
      block_norm(b.block(mm, 0, mm - 1, mm), w2, w1) + block_norm(b.block(mm, mm, mm - 1, mm - 1), w2, w2);
  return max(r1, r2);
}

Interval bound_z1(const PairSeq& abar, const CRParams& p, const CROperators& ops) {
  const std::size_t m = ops.m;
  const double nu = abar.a1.nu();
  const auto mm = static_cast<Eigen::Index>(m);
  const CosSeq b = convolve(abar.a1, abar.a1);
  const Interval three_l2 = Interval(3.0) * abs(Interval(p.lambda2));
  // |((DF - A-dagger) h)_1,j| <= s_j 3|lambda2| Qhat_j(abar1^2) for j < m
  IntervalVector v(m);
  for (std::size_t j = 0; j < m; ++j)
    v[j] = Interval(j == 0 ? 1.0 : 2.0) * three_l2 * q_hat_bound(b, j, m);
  const Interval inv_m = Interval(1.0) / Interval(static_cast<double>(m));
  const IntervalVector w1 = weights1d(0, m, nu), w2 = weights1d(1, m, nu);
  const Interval z1 = weighted_abs_apply(ops.a, 0, 0, mm, mm, v, w1) + inv_m;
  const Interval tail = (abs(Interval(p.lambda1)) + three_l2 * norm_l1nu(b)) * inv_m;
  const Interval z2 = weighted_abs_apply(ops.a, mm, 0, mm - 1, mm, v, w2) + tail;
  return max(z1, z2);
}

Interval bound_z2(const PairSeq& abar, const CRParams& p, const CROperators& ops) {
  const std::size_t m = ops.m;
  const double nu = abar.a1.nu();
  const auto mm = static_cast<Eigen::Index>(m);
  // Columns of A_{.,1} scaled by the row factors (1, 2, 2, ...) of D_{a1} F1.
  Eigen::MatrixXd as = ops.a.leftCols(mm);
  as.rightCols(mm - 1) *= 2.0;
  const IntervalVector w1 = weights1d(0, m, nu), w2 = weights1d(1, m, nu);
  const IntervalMatrix asi(as);
  const Interval n11 = block_norm(asi.block(0, 0, mm, mm), w1, w1);
  const Interval n21 = max(block_norm(asi.block(mm, 0, mm - 1, mm), w2, w1),
                           Interval(1.0) / Interval(static_cast<double>(m)));
  return Interval(3.0) * abs(Interval(p.lambda2)) * max(n11, n21) *
         (Interval(1.0) + Interval(2.0) * norm_l1nu(abar.a1));
}

std::map<std::string, double> CRProblem::parameters() const {
  return {{"lambda1", p_.lambda1}, {"lambda2", p_.lambda2}};
}

PairSeq CRProblem::to_pair(const Eigen::VectorXd& a, std::size_t m, double nu) const {
  check_size(a, m);
  std::vector<double> a2(m, 0.0);
  for (std::size_t k = 1; k < m; ++k) a2[k] = a[static_cast<Eigen::Index>(m - 1 + k)];
  return {CosSeq::from_doubles(head(a, 0, m), nu), SinSeq::from_doubles(a2, nu)};
}

Eigen::VectorXd CRProblem::residual(const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  std::vector<double> a2(m, 0.0);
  for (std::size_t k = 1; k < m; ++k) a2[k] = a[static_cast<Eigen::Index>(m - 1 + k)];
  std::vector<double> f1, f2;
  cr_residual(head(a, 0, m), a2, p_.lambda1, p_.lambda2, f1, f2);
  Eigen::VectorXd f(static_cast<Eigen::Index>(2 * m - 1));
  for (std::size_t k = 0; k < m; ++k) f[static_cast<Eigen::Index>(k)] = f1[k];
  for (std::size_t k = 1; k < m; ++k) f[static_cast<Eigen::Index>(m - 1 + k)] = f2[k];
  return f;
}

Eigen::MatrixXd CRProblem::jacobian(const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(2 * m - 1), static_cast<Eigen::Index>(2 * m - 1));
  cr_jacobian(head(a, 0, m), p_.lambda1, p_.lambda2, m, [&](std::size_t r, std::size_t c, double v) {
    j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
  });
  return j;
}

RadiiBounds CRProblem::bounds(const Eigen::VectorXd& abar, double nu, std::size_t m) const {
  const PairSeq a = to_pair(abar, m, nu);
  const CROperators ops = build_operators(a, p_, m);
  return {bound_y0(a, p_, ops), bound_z0(ops, nu), bound_z1(a, p_, ops), bound_z2(a, p_, ops)};
}

IntervalMatrix CRProblem::index_block(const Eigen::VectorXd& abar, std::size_t m, std::size_t m_pad) const {
  if (m_pad < m) throw DomainError("index_block: padding below the truncation");
  const IntervalMatrix fin = df_finite(to_pair(abar, m, 1.0), p_, m);
  const auto n = static_cast<Eigen::Index>(2 * m_pad - 1), nf = fin.rows();
  IntervalMatrix out(n, n);
  out.set_block(0, 0, fin);
  for (std::size_t k = m; k < m_pad; ++k) {
    const auto i = nf + 2 * static_cast<Eigen::Index>(k - m);
    const Interval t(-2.0 * static_cast<double>(k));
    out.set(i, i + 1, t);
    out.set(i + 1, i, t);
  }
  return out;
}

std::vector<Eigen::VectorXd> CRProblem::symmetry_orbit(const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  Eigen::VectorXd refl = a;
  for (std::size_t k = 1; k < m; k += 2) {
    refl[static_cast<Eigen::Index>(k)] = -refl[static_cast<Eigen::Index>(k)];
    refl[static_cast<Eigen::Index>(m - 1 + k)] = -refl[static_cast<Eigen::Index>(m - 1 + k)];
  }
  return {a, -a, refl, -refl};
}

double CRProblem::distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double nu, std::size_t m) const {
  check_size(a, m);
  check_size(b, m);
  const PairSeq pa = to_pair(a, m, nu), pb = to_pair(b, m, nu);
  IntervalVector d1(m), d2(m);
  for (std::size_t k = 0; k < m; ++k) {
    d1[k] = pa.a1[k] - pb.a1[k];
    d2[k] = pa.a2[k] - pb.a2[k];
  }
  d2[0] = Interval(0.0);
  return norm_x({CosSeq(d1, nu), SinSeq(d2, nu)}).hi();
}

Eigen::VectorXd CRProblem::from_coefficients(const CoeffData& data, std::size_t m) const {
  if (data.dims != 1) throw ConfigError("CR expects 1D coefficient data");
  Eigen::VectorXd a = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * m - 1));
  for (std::size_t k = 0; k < std::min(m, data.a1.size()); ++k) a[static_cast<Eigen::Index>(k)] = data.a1[k];
  for (std::size_t k = 1; k < std::min(m, data.a2.size()); ++k)
    a[static_cast<Eigen::Index>(m - 1 + k)] = data.a2[k];
  return a;
}

void CRProblem::write_coefficients(std::ostream& out, const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  std::vector<double> a2(m, 0.0);
  for (std::size_t k = 1; k < m; ++k) a2[k] = a[static_cast<Eigen::Index>(m - 1 + k)];
  write_coefficients_1d(out, head(a, 0, m), &a2);
}

std::vector<double> CRProblem::sample(const Eigen::VectorXd& a, std::size_t m, std::size_t n) const {
  check_size(a, m);
  std::vector<double> u(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = n > 1 ? std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
    double s = a[0];
    for (std::size_t k = 1; k < m; ++k) s += 2.0 * a[static_cast<Eigen::Index>(k)] * std::cos(static_cast<double>(k) * x);
    u[i] = s;
  }
  return u;
}

}  // namespace relindex
