#pragma once

#include "relindex/problem.hpp"
#include "relindex/seqspace.hpp"

namespace relindex {

/// psi(u) = lambda1 u - lambda2 u^3
struct CRParams {
  double lambda1 = 6.0;
  double lambda2 = 6.0;
};

/// Finite parts of the approximate derivative A-dagger and approximate
/// inverse A at truncation m. Their tails are fixed 2x2 blocks per mode k >= m:
/// A-dagger has [[0, -2k], [-2k, 0]] and A has [[0, -1/(2k)], [-1/(2k), 0]].
struct CROperators {
  std::size_t m = 0;
  IntervalMatrix adag;  // DF^(m)(abar), dimension 2m-1
  Eigen::MatrixXd a;    // floating inverse of mid(adag)
};

/// F(a) for a finitely supported pair; F1 has support 3 size(a1) - 2.
PairSeq f_eval(const PairSeq& a, const CRParams& p);
/// Jacobian of F^(m), ordered (a1_0..a1_{m-1}, a2_1..a2_{m-1}).
IntervalMatrix df_finite(const PairSeq& a, const CRParams& p, std::size_t m);
CROperators build_operators(const PairSeq& abar, const CRParams& p, std::size_t m);
Interval bound_y0(const PairSeq& abar, const CRParams& p, const CROperators& ops);
Interval bound_z0(const CROperators& ops, double nu);
Interval bound_z1(const PairSeq& abar, const CRParams& p, const CROperators& ops);
Interval bound_z2(const PairSeq& abar, const CRParams& p, const CROperators& ops);

/// Cauchy-Riemann problem. Coefficient vector layout at truncation m:
/// (a1_0, ..., a1_{m-1}, a2_1, ..., a2_{m-1}).
class CRProblem : public Problem {
 public:
  explicit CRProblem(CRParams p) : p_(p) {}
  const CRParams& params() const noexcept { return p_; }

  std::string id() const override { return "cr"; }
  std::map<std::string, double> parameters() const override;
  std::size_t dimension(std::size_t m) const override { return 2 * m - 1; }
  Eigen::VectorXd residual(const Eigen::VectorXd& a, std::size_t m) const override;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& a, std::size_t m) const override;
  RadiiBounds bounds(const Eigen::VectorXd& abar, double nu, std::size_t m) const override;
  IntervalMatrix index_block(const Eigen::VectorXd& abar, std::size_t m, std::size_t m_pad) const override;
  std::vector<Eigen::VectorXd> symmetry_orbit(const Eigen::VectorXd& a, std::size_t m) const override;
  double distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double nu, std::size_t m) const override;
  Eigen::VectorXd from_coefficients(const CoeffData& data, std::size_t m) const override;
  void write_coefficients(std::ostream& out, const Eigen::VectorXd& a, std::size_t m) const override;
  std::vector<double> sample(const Eigen::VectorXd& a, std::size_t m, std::size_t n) const override;

  PairSeq to_pair(const Eigen::VectorXd& a, std::size_t m, double nu) const;

 private:
  CRParams p_;
};

}  // namespace relindex
