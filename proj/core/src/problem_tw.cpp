#include "relindex/problem_tw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>

#include "relindex/problem_common.hpp"

namespace relindex {
namespace {

void check_size(const Eigen::VectorXd& a, std::size_t m) {
  if (m < 1 || static_cast<std::size_t>(a.size()) != m * m)
    throw DomainError("TW coefficient vector must have length m*m");
}

template <class T>
std::vector<T> as_vector(const Eigen::VectorXd& a) {
  return std::vector<T>(a.data(), a.data() + a.size());
}

template <class T>
std::vector<T> tw_residual(std::size_t n, const std::vector<T>& a, T lambda) {
  const auto sq = detail::conv_even_2d(n, a, n, a);
  const auto c = detail::conv_even_2d(2 * n - 1, sq, n, a);
  const std::size_t nc = 3 * n - 2;
  std::vector<T> f(nc * nc, T(0.0));
  for (std::size_t k1 = 0; k1 < nc; ++k1) {
    for (std::size_t k2 = 0; k2 < nc; ++k2) {
      const T lin = (k1 < n && k2 < n) ? (lambda - T(static_cast<double>(k1 * k1 + k2 * k2))) * a[k1 * n + k2] : T(0.0);
      f[k1 * nc + k2] = T(static_cast<double>(multiplicity(k1, k2))) * (lin - lambda * c[k1 * nc + k2]);
    }
  }
  return f;
}

template <class T, class Set>
void tw_jacobian(std::size_t m, const std::vector<T>& a, T lambda, Set&& set) {
  const auto b = detail::conv_even_2d(m, a, m, a);
  const long nb = static_cast<long>(2 * m - 1);
  auto bb = [&](long i1, long i2) {
    i1 = i1 < 0 ? -i1 : i1;
    i2 = i2 < 0 ? -i2 : i2;
    return (i1 < nb && i2 < nb) ? b[static_cast<std::size_t>(i1 * nb + i2)] : T(0.0);
  };
  const T three_l = T(3.0) * lambda;
  for (std::size_t k1 = 0; k1 < m; ++k1) {
    for (std::size_t k2 = 0; k2 < m; ++k2) {
      const T mk(static_cast<double>(multiplicity(k1, k2)));
      const long x1 = static_cast<long>(k1), x2 = static_cast<long>(k2);
      for (std::size_t j1 = 0; j1 < m; ++j1) {
        for (std::size_t j2 = 0; j2 < m; ++j2) {
          const long y1 = static_cast<long>(j1), y2 = static_cast<long>(j2);
          T t = bb(x1 - y1, x2 - y2);
          if (j1 > 0) t += bb(x1 + y1, x2 - y2);
          if (j2 > 0) t += bb(x1 - y1, x2 + y2);
          if (j1 > 0 && j2 > 0) t += bb(x1 + y1, x2 + y2);
          T v = -(three_l * t);
          if (j1 == k1 && j2 == k2) v += lambda - T(static_cast<double>(k1 * k1 + k2 * k2));
          set(k1 * m + k2, j1 * m + j2, mk * v);
        }
      }
    }
  }
}

}  // namespace

Cos2Seq f_eval_2d(const Cos2Seq& a, const TWParams& p) {
  if (a.n() == 0) return a;
  return {3 * a.n() - 2, tw_residual(a.n(), a.coeffs(), Interval(p.lambda)), a.nu()};
}

TWProblem::TWProblem(TWParams p) : p_(p) {
  if (!(p.c > 0.0)) throw DomainError("TW: wave speed c must be positive");
}

std::map<std::string, double> TWProblem::parameters() const { return {{"lambda", p_.lambda}, {"c", p_.c}}; }

Cos2Seq TWProblem::to_seq(const Eigen::VectorXd& a, std::size_t m, double nu) const {
  check_size(a, m);
  return {m, as_vector<Interval>(a), nu};
}

IntervalMatrix TWProblem::df_finite(const Cos2Seq& a, std::size_t m) const {
  const auto n = static_cast<Eigen::Index>(m * m);
  // Assemble midpoints and radii directly to avoid per-entry reallocation.
  Eigen::MatrixXd mid(n, n), rad(n, n);
  tw_jacobian(m, a.coeffs(), Interval(p_.lambda), [&](std::size_t i, std::size_t j, const Interval& v) {
    mid(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v.mid();
    rad(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v.rad();
  });
  return IntervalMatrix(std::move(mid), std::move(rad));
}

Eigen::VectorXd TWProblem::residual(const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  const auto f = tw_residual(m, as_vector<double>(a), p_.lambda);
  const std::size_t nc = 3 * m - 2;
  Eigen::VectorXd out(static_cast<Eigen::Index>(m * m));
  for (std::size_t k1 = 0; k1 < m; ++k1)
    for (std::size_t k2 = 0; k2 < m; ++k2) out[static_cast<Eigen::Index>(k1 * m + k2)] = f[k1 * nc + k2];
  return out;
}

Eigen::MatrixXd TWProblem::jacobian(const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  const auto n = static_cast<Eigen::Index>(m * m);
  Eigen::MatrixXd j(n, n);
  tw_jacobian(m, as_vector<double>(a), p_.lambda, [&](std::size_t r, std::size_t c, double v) {
    j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
  });
  return j;
}

namespace {

struct Coupling {
  IntervalMatrix matrix;
  IntervalVector col_weights;
};

// Rows j < m of h -> m_j (b * h)_j, over the columns l that b can reach; tail_only keeps max(l1, l2) >= m.
Coupling coupling(const Cos2Seq& b, std::size_t m, double nu, bool tail_only) {
  const std::size_t reach = m + b.n() - 1;
  std::vector<std::pair<std::size_t, std::size_t>> cols;
  for (std::size_t l1 = 0; l1 < reach; ++l1)
    for (std::size_t l2 = 0; l2 < reach; ++l2)
      if (!tail_only || std::max(l1, l2) >= m) cols.emplace_back(l1, l2);
  Coupling out{IntervalMatrix(static_cast<Eigen::Index>(m * m), static_cast<Eigen::Index>(cols.size())),
               IntervalVector(cols.size())};
  auto at = [&](long i1, long i2) {
    const auto u1 = static_cast<std::size_t>(std::labs(i1)), u2 = static_cast<std::size_t>(std::labs(i2));
    return (u1 < b.n() && u2 < b.n()) ? b(u1, u2) : Interval(0.0);
  };
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto [l1, l2] = cols[c];
    out.col_weights[c] = weight2d(l1, l2, nu);
    for (std::size_t j1 = 0; j1 < m; ++j1) {
      for (std::size_t j2 = 0; j2 < m; ++j2) {
        Interval s(0.0);
        for (int s1 : {1, -1}) {
          if (s1 < 0 && l1 == 0) continue;
          for (int s2 : {1, -1}) {
            if (s2 < 0 && l2 == 0) continue;
            s += at(static_cast<long>(j1) - s1 * static_cast<long>(l1), static_cast<long>(j2) - s2 * static_cast<long>(l2));
          }
        }
        out.matrix.set(static_cast<Eigen::Index>(j1 * m + j2), static_cast<Eigen::Index>(c),
                       Interval(static_cast<double>(multiplicity(j1, j2))) * s);
      }
    }
  }
  return out;
}

}  // namespace

RadiiBounds TWProblem::bounds(const Eigen::VectorXd& abar, double nu, std::size_t m) const {
  const Cos2Seq a = to_seq(abar, m, nu);
  const auto n = static_cast<Eigen::Index>(m * m);
  const Interval lam(p_.lambda), l_abs = abs(lam);
  // Tail modes have max(k1, k2) >= m, so |k|^2 - lambda >= m^2 - lambda.
  const Interval gap = sqr(Interval(static_cast<double>(m))) - lam;
  if (!gap.positive()) throw OperatorBuildError("TW: truncation m must satisfy m^2 > lambda");
  const Interval tail_inv = Interval(1.0) / gap;

  const IntervalMatrix adag = df_finite(a, m);
  const Eigen::MatrixXd am = approximate_inverse(adag.mid());
  const IntervalVector w = weights2d(m, nu);

  RadiiBounds b;
  const Cos2Seq f = f_eval_2d(a, p_);
  IntervalVector fm(static_cast<std::size_t>(n));
  for (std::size_t k1 = 0; k1 < m; ++k1)
    for (std::size_t k2 = 0; k2 < m; ++k2) fm[k1 * m + k2] = f(k1, k2);
  b.Y0 = weighted_l1(multiply(IntervalMatrix(am), fm), w);
  for (std::size_t k1 = 0; k1 < f.n(); ++k1) {
    for (std::size_t k2 = 0; k2 < f.n(); ++k2) {
      if (std::max(k1, k2) < m) continue;
      const Interval mu = Interval(static_cast<double>(multiplicity(k1, k2))) *
                          (lam - Interval(static_cast<double>(k1 * k1 + k2 * k2)));
      b.Y0 += abs(f(k1, k2) / mu) * weight2d(k1, k2, nu);
    }
  }

  b.Z0 = block_norm(IntervalMatrix::identity(n) - multiply(am, adag), w);

  // Finite rows see tail columns l only through sq, so only max(l1, l2) <= 3m - 3 couple.
  const Cos2Seq sq = convolve(a, a);
  const auto c1 = coupling(sq, m, nu, true);
  b.Z1 = Interval(3.0) * l_abs * block_norm(multiply(IntervalMatrix(am), c1.matrix), w, c1.col_weights) +
         Interval(3.0) * l_abs * norm_l1nu(sq) * tail_inv;

  // DF(a + b) - DF(a) = -3 lambda m (2 a * b + b * b) *, so Z2 splits into a multiplication by a and a quadratic rest.
  const auto c2 = coupling(a, m, nu, false);
  const Interval mult_a = max(block_norm(multiply(IntervalMatrix(am), c2.matrix), w, c2.col_weights),
                              norm_l1nu(a) * tail_inv);
  Eigen::MatrixXd amk = am;
  for (std::size_t j1 = 0; j1 < m; ++j1)
    for (std::size_t j2 = 0; j2 < m; ++j2) amk.col(static_cast<Eigen::Index>(j1 * m + j2)) *= multiplicity(j1, j2);
  const Interval norm_am = max(block_norm(IntervalMatrix(amk), w), tail_inv);
  b.Z2 = Interval(3.0) * l_abs * (Interval(2.0) * mult_a + norm_am);
  return b;
}

IntervalMatrix TWProblem::index_block(const Eigen::VectorXd& abar, std::size_t m, std::size_t m_pad) const {
  if (m_pad < m) throw DomainError("index_block: padding below the truncation");
  const IntervalMatrix fin = df_finite(to_seq(abar, m, 1.0), m);
  const auto n = static_cast<Eigen::Index>(m_pad * m_pad);
  IntervalMatrix out(n, n);
  out.set_block(0, 0, fin);
  Eigen::Index i = fin.rows();
  for (std::size_t k1 = 0; k1 < m_pad; ++k1) {
    for (std::size_t k2 = 0; k2 < m_pad; ++k2) {
      if (std::max(k1, k2) < m) continue;
      out.set(i, i, Interval(static_cast<double>(multiplicity(k1, k2))) *
                        (Interval(p_.lambda) - Interval(static_cast<double>(k1 * k1 + k2 * k2))));
      ++i;
    }
  }
  return out;
}

std::vector<Eigen::VectorXd> TWProblem::symmetry_orbit(const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  std::vector<Eigen::VectorXd> out;
  for (int g = 0; g < 16; ++g) {
    Eigen::VectorXd b(a.size());
    for (std::size_t k1 = 0; k1 < m; ++k1) {
      for (std::size_t k2 = 0; k2 < m; ++k2) {
        double s = 1.0;
        if ((g & 1) && (k1 & 1)) s = -s;
        if ((g & 2) && (k2 & 1)) s = -s;
        if (g & 8) s = -s;
        const std::size_t src = (g & 4) ? k2 * m + k1 : k1 * m + k2;
        b[static_cast<Eigen::Index>(k1 * m + k2)] = s * a[static_cast<Eigen::Index>(src)];
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

double TWProblem::distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double nu, std::size_t m) const {
  check_size(a, m);
  check_size(b, m);
  IntervalVector d(static_cast<std::size_t>(a.size()));
  for (Eigen::Index i = 0; i < a.size(); ++i) d[static_cast<std::size_t>(i)] = Interval(a[i]) - Interval(b[i]);
  return norm_l1nu(Cos2Seq(m, std::move(d), nu)).hi();
}

Eigen::VectorXd TWProblem::from_coefficients(const CoeffData& data, std::size_t m) const {
  if (data.dims != 2) throw ConfigError("TW expects 2D coefficient data");
  Eigen::VectorXd a = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m * m));
  for (std::size_t k1 = 0; k1 < std::min(m, data.n2d); ++k1)
    for (std::size_t k2 = 0; k2 < std::min(m, data.n2d); ++k2)
      a[static_cast<Eigen::Index>(k1 * m + k2)] = data.a2d[k1 * data.n2d + k2];
  return a;
}

void TWProblem::write_coefficients(std::ostream& out, const Eigen::VectorXd& a, std::size_t m) const {
  check_size(a, m);
  write_coefficients_2d(out, m, std::vector<double>(a.data(), a.data() + a.size()));
}

std::vector<double> TWProblem::sample(const Eigen::VectorXd& a, std::size_t m, std::size_t n) const {
  check_size(a, m);
  // Separable evaluation: C(i, k) = cos(k x_i).
  Eigen::MatrixXd c(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < n; ++i) {
    const double x = n > 1 ? std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
    for (std::size_t k = 0; k < m; ++k)
      c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = std::cos(static_cast<double>(k) * x);
  }
  Eigen::MatrixXd coef(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t k1 = 0; k1 < m; ++k1)
    for (std::size_t k2 = 0; k2 < m; ++k2)
      coef(static_cast<Eigen::Index>(k1), static_cast<Eigen::Index>(k2)) =
          multiplicity(k1, k2) * a[static_cast<Eigen::Index>(k1 * m + k2)];
  const Eigen::MatrixXd u = c * coef * c.transpose();
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

}  // namespace relindex
