#pragma once

#include "relindex/problem.hpp"
#include "relindex/seqspace.hpp"

namespace relindex {

/// Steady states of -u'''' - (lambda1 u - lambda2 u^3)'' - lambda3 u with zero mass.
struct OKParams {
  double lambda1 = 9.0;
  double lambda2 = 9.0;
  double lambda3 = 4.5;
};

/// mu_k = -k^4 + lambda1 k^2 - lambda3
Interval ok_symbol(std::size_t k, const OKParams& p);

/// F_k for k >= 1 (entry 0 of the result is zero). Throws DomainError if a_0 != 0.
CosSeq f_eval_ok(const CosSeq& a, const OKParams& p);

/// Ohta-Kawasaki problem. Coefficient vector layout at truncation m: (a_1, ..., a_{m-1}).
class OKProblem final : public Problem {
 public:
  explicit OKProblem(OKParams p);
  const OKParams& params() const noexcept { return p_; }

  std::string id() const override { return "ok"; }
  std::map<std::string, double> parameters() const override;
  std::size_t dimension(std::size_t m) const override { return m - 1; }
  Eigen::VectorXd residual(const Eigen::VectorXd& a, std::size_t m) const override;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& a, std::size_t m) const override;
  RadiiBounds bounds(const Eigen::VectorXd& abar, double nu, std::size_t m) const override;
  /// K^{-1} DF K with K = diag(k): symmetric, same spectrum as DF.
  IntervalMatrix index_block(const Eigen::VectorXd& abar, std::size_t m, std::size_t m_pad) const override;
  std::vector<Eigen::VectorXd> symmetry_orbit(const Eigen::VectorXd& a, std::size_t m) const override;
  double distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double nu, std::size_t m) const override;
  Eigen::VectorXd from_coefficients(const CoeffData& data, std::size_t m) const override;
  void write_coefficients(std::ostream& out, const Eigen::VectorXd& a, std::size_t m) const override;
  std::vector<double> sample(const Eigen::VectorXd& a, std::size_t m, std::size_t n) const override;

  CosSeq to_seq(const Eigen::VectorXd& a, std::size_t m, double nu) const;
  IntervalMatrix df_finite(const CosSeq& a, std::size_t m) const;

 private:
  OKParams p_;
};

}  // namespace relindex
