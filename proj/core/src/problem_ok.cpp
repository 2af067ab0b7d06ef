#include "relindex/problem_ok.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "relindex/problem_common.hpp"

namespace relindex {
namespace {

void check_size(const Eigen::VectorXd& a, std::size_t m) {
  if (m < 2 || static_cast<std::size_t>(a.size()) != m - 1)
    throw DomainError("OK coefficient vector must have length m-1 with m >= 2");
}

template <class T>
std::vector<T> with_zero_mode(const Eigen::VectorXd& a) {
  std::vector<T> v(static_cast<std::size_t>(a.size()) + 1, T(0.0));
  for (Eigen::Index i = 0; i < a.size(); ++i) v[static_cast<std::size_t>(i) + 1] = T(a[i]);
  return v;
}

template <class T>
T symbol(std::size_t k, T l1, T l3) {
  const T k2(static_cast<double>(k) * static_cast<double>(k));
  return -(k2 * k2) + l1 * k2 - l3;
}

// F_k for k = 1..c.size()-1 given a with a_0 = 0.
template <class T>
std::vector<T> ok_residual(const std::vector<T>& a, T l1, T l2, T l3) {
  const auto c = detail::conv_even(detail::conv_even(a, a), a);
  std::vector<T> f(c.size(), T(0.0));
  for (std::size_t k = 1; k < c.size(); ++k) {
    const T k2(static_cast<double>(k) * static_cast<double>(k));
    const T lin = k < a.size() ? symbol(k, l1, l3) * a[k] : T(0.0);
    f[k] = lin - l2 * k2 * c[k];
  }
  return f;
}

// Entry (k, j) of DF, or of K^{-1} DF K when symmetric is set, for modes 1..m-1.
template <class T, class Set>
void ok_jacobian(const std::vector<T>& a, T l1, T l2, T l3, std::size_t m, bool symmetric, Set&& set) {
  const auto b = detail::conv_even(a, a);
  auto bb = [&](std::size_t i) { return i < b.size() ? b[i] : T(0.0); };
  const T three_l2 = T(3.0) * l2;
  for (std::size_t k = 1; k < m; ++k) {
    for (std::size_t j = 1; j < m; ++j) {
      const T t = bb(k > j ? k - j : j - k) + bb(k + j);
      const double scale = symmetric ? static_cast<double>(k) * static_cast<double>(j)
                                     : static_cast<double>(k) * static_cast<double>(k);
      T v = -(three_l2 * T(scale) * t);
      if (j == k) v += symbol(k, l1, l3);
      set(k - 1, j - 1, v);
    }
  }
}

}  // namespace

Interval ok_symbol(std::size_t k, const OKParams& p) {
  return symbol(k, Interval(p.lambda1), Interval(p.lambda3));
}

CosSeq f_eval_ok(const CosSeq& a, const OKParams& p) {
  if (a.size() > 0 && a[0] != Interval(0.0)) throw DomainError("OK: mode 0 must vanish (zero mass)");
  return {ok_residual(a.coeffs(), Interval(p.lambda1), Interval(p.lambda2), Interval(p.lambda3)), a.nu()};
}

OKProblem::OKProblem(OKParams p) : p_(p) {
  if (!(p.lambda3 >= 0.0)) throw DomainError("OK: lambda3 must be nonnegative");
}

std::map<std::string, double> OKProblem::parameters() const {
  return {{"lambda1", p_.lambda1}, {"lambda2", p_.lambda2}, {"lambda3", p_.lambda3}};
}

CosSeq OKProblem::to_seq(const Eigen::VectorXd& a, std::size_t m, double nu) const {
  check_size(a, m);
  return {with_zero_mode<Interval>(a), nu};
}

IntervalMatrix OKProblem::df_finite(const CosSeq& a, std::size_t m) const {
  IntervalMatrix out(static_cast<Eigen::Index>(m - 1), static_cast<Eigen::Index>(m - 1));
  ok_jacobian(a.coeffs(), Interval(p_.lambda1), Interval(p_.lambda2), Interval(p_.lambda3), m, false,
              [&](std::size_t i, std::size_t j, const Interval& v) {
                out.set(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j), v);
              });
  return out;
}

Eigen::VectorXd OKProblem::residual(const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  const auto f = ok_residual(with_zero_mode<double>(a), p_.lambda1, p_.lambda2, p_.lambda3);
  Eigen::VectorXd out(static_cast<Eigen::Index>(m - 1));
  for (std::size_t k = 1; k < m; ++k) out[static_cast<Eigen::Index>(k - 1)] = f[k];
  return out;
}

Eigen::MatrixXd OKProblem::jacobian(const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  Eigen::MatrixXd j(static_cast<Eigen::Index>(m - 1), static_cast<Eigen::Index>(m - 1));
  ok_jacobian(with_zero_mode<double>(a), p_.lambda1, p_.lambda2, p_.lambda3, m, false,
              [&](std::size_t r, std::size_t c, double v) {
                j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
              });
  return j;
}

RadiiBounds OKProblem::bounds(const Eigen::VectorXd& abar, double nu, std::size_t m) const {
  const CosSeq a = to_seq(abar, m, nu);
  const auto n = static_cast<Eigen::Index>(m - 1);
  // Tail modes k >= m need mu_k < 0; k^2 / |mu_k| <= 1 / (m^2 - lambda1) there.
  const Interval gap = sqr(Interval(static_cast<double>(m))) - Interval(p_.lambda1);
  if (!gap.positive()) throw OperatorBuildError("OK: truncation m must satisfy m^2 > lambda1");
  const Interval tail_k2 = Interval(1.0) / gap;

  const IntervalMatrix adag = df_finite(a, m);
  const Eigen::MatrixXd am = approximate_inverse(adag.mid());
  const IntervalVector w = weights1d(1, m, nu);
  const Interval l2 = abs(Interval(p_.lambda2));

  RadiiBounds b;
  const CosSeq f = f_eval_ok(a, p_);
  IntervalVector fm(static_cast<std::size_t>(n));
  for (std::size_t k = 1; k < m; ++k) fm[k - 1] = f[k];
  b.Y0 = weighted_l1(multiply(IntervalMatrix(am), fm), w);
  for (std::size_t k = m; k < f.size(); ++k) b.Y0 += abs(f[k] / ok_symbol(k, p_)) * weight1d(k, nu);

  b.Z0 = block_norm(IntervalMatrix::identity(n) - multiply(am, adag), w);

  const CosSeq sq = convolve(a, a);
  IntervalVector v(static_cast<std::size_t>(n));
  for (std::size_t j = 1; j < m; ++j)
    v[j - 1] = Interval(3.0) * l2 * Interval(static_cast<double>(j * j)) * q_hat_bound(sq, j, m);
  b.Z1 = weighted_abs_apply(am, 0, 0, n, n, v, w) + Interval(3.0) * l2 * norm_l1nu(sq) * tail_k2;

  Eigen::MatrixXd ak2 = am;
  for (Eigen::Index j = 0; j < n; ++j) ak2.col(j) *= static_cast<double>((j + 1) * (j + 1));
  TailRule tail{[this](std::size_t k) {
                  return Interval(static_cast<double>(k * k)) / abs(ok_symbol(k, p_));
                },
                m};
  const Interval norm_ak2 = max(operator_norm(BlockTailOperator(IntervalMatrix(ak2), w, tail)), tail_k2);
  b.Z2 = Interval(3.0) * l2 * norm_ak2 * (Interval(1.0) + Interval(2.0) * norm_l1nu(a));
  return b;
}

IntervalMatrix OKProblem::index_block(const Eigen::VectorXd& abar, std::size_t m, std::size_t m_pad) const {
  if (m_pad < m) throw DomainError("index_block: padding below the truncation");
  const CosSeq a = to_seq(abar, m, 1.0);
  const auto n = static_cast<Eigen::Index>(m_pad - 1);
  IntervalMatrix out(n, n);
  ok_jacobian(a.coeffs(), Interval(p_.lambda1), Interval(p_.lambda2), Interval(p_.lambda3), m, true,
              [&](std::size_t i, std::size_t j, const Interval& v) {
                out.set(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j), v);
              });
  for (std::size_t k = m; k < m_pad; ++k) {
    const auto i = static_cast<Eigen::Index>(k - 1);
    out.set(i, i, ok_symbol(k, p_));
  }
  return out;
}

std::vector<Eigen::VectorXd> OKProblem::symmetry_orbit(const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  Eigen::VectorXd refl = a;
  for (Eigen::Index i = 0; i < refl.size(); i += 2) refl[i] = -refl[i];  // odd modes
  return {a, -a, refl, -refl};
}

double OKProblem::distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double nu, std::size_t m) const {
  check_size(a, m);
  check_size(b, m);
  return norm_l1nu(to_seq(a - b, m, nu)).hi();
}

Eigen::VectorXd OKProblem::from_coefficients(const CoeffData& data, std::size_t m) const {
  if (data.dims != 1) throw ConfigError("OK expects 1D coefficient data");
  if (!data.a1.empty() && data.a1[0] != 0.0) throw DomainError("OK: mode 0 must vanish (zero mass)");
  Eigen::VectorXd a = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m - 1));
  for (std::size_t k = 1; k < std::min(m, data.a1.size()); ++k) a[static_cast<Eigen::Index>(k - 1)] = data.a1[k];
  return a;
}

void OKProblem::write_coefficients(std::ostream& out, const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  write_coefficients_1d(out, with_zero_mode<double>(a));
}

std::vector<double> OKProblem::sample(const Eigen::VectorXd& a, std::size_t m, std::size_t n) const {
  check_size(a, m);
  std::vector<double> u(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = n > 1 ? std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
    double s = 0.0;
    for (std::size_t k = 1; k < m; ++k)
      s += 2.0 * a[static_cast<Eigen::Index>(k - 1)] * std::cos(static_cast<double>(k) * x);
    u[i] = s;
  }
  return u;
}

}  // namespace relindex
