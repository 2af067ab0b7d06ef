#pragma once

#include "relindex/problem.hpp"
#include "relindex/seqspace.hpp"

namespace relindex {

/// Laplace u + lambda (u - u^3) = 0 on the square with Neumann conditions; c is
/// the travelling-wave speed, which does not enter the equilibrium problem.
struct TWParams {
  double lambda = 12.0;
  double c = 1.0;
};

/// F_k = m_k [(lambda - |k|^2) a_k - lambda (a*a*a)_k] with full support.
Cos2Seq f_eval_2d(const Cos2Seq& a, const TWParams& p);

/// 2D parabolic problem standing in for the travelling-wave system. Coefficient
/// vector layout at truncation m: a_(k1,k2) at k1 * m + k2, 0 <= k1, k2 < m.
class TWProblem final : public Problem {
 public:
  explicit TWProblem(TWParams p);
  const TWParams& params() const noexcept { return p_; }

  std::string id() const override { return "tw"; }
  std::map<std::string, double> parameters() const override;
  std::size_t dimension(std::size_t m) const override { return m * m; }
  Eigen::VectorXd residual(const Eigen::VectorXd& a, std::size_t m) const override;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& a, std::size_t m) const override;
  RadiiBounds bounds(const Eigen::VectorXd& abar, double nu, std::size_t m) const override;
  IntervalMatrix index_block(const Eigen::VectorXd& abar, std::size_t m, std::size_t m_pad) const override;
  /// The order-16 group generated by x1 -> pi - x1, x2 -> pi - x2, swapping
  /// x1 and x2, and u -> -u.
  std::vector<Eigen::VectorXd> symmetry_orbit(const Eigen::VectorXd& a, std::size_t m) const override;
  double distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double nu, std::size_t m) const override;
  Eigen::VectorXd from_coefficients(const CoeffData& data, std::size_t m) const override;
  void write_coefficients(std::ostream& out, const Eigen::VectorXd& a, std::size_t m) const override;
  std::vector<double> sample(const Eigen::VectorXd& a, std::size_t m, std::size_t n) const override;
  int space_dims() const override { return 2; }

  Cos2Seq to_seq(const Eigen::VectorXd& a, std::size_t m, double nu) const;
  IntervalMatrix df_finite(const Cos2Seq& a, std::size_t m) const;

 private:
  TWParams p_;
};

}  // namespace relindex
