#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "relindex/coeff_io.hpp"
#include "relindex/interval_matrix.hpp"
#include "relindex/prover.hpp"

namespace relindex {

/// A zero-finding problem F(a) = 0 on a Fourier sequence space, together with
/// everything the prover and the index counter need.
///
/// A coefficient vector is the Galerkin projection at truncation m, laid out
/// as documented by each problem.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual std::string id() const = 0;
  virtual std::map<std::string, double> parameters() const = 0;

  /// Length of the coefficient vector at truncation m.
  virtual std::size_t dimension(std::size_t m) const = 0;

  /// Floating-point F^(m)(a) and its Jacobian, used by Newton.
  virtual Eigen::VectorXd residual(const Eigen::VectorXd& a, std::size_t m) const = 0;
  virtual Eigen::MatrixXd jacobian(const Eigen::VectorXd& a, std::size_t m) const = 0;

  virtual RadiiBounds bounds(const Eigen::VectorXd& abar, double nu, std::size_t m) const = 0;

  /// Symmetric interval matrix with the same eigenvalues as the finite part of
  /// the approximate derivative at abar (truncation m), padded with the
  /// analytic tail up to truncation m_pad >= m.
  virtual IntervalMatrix index_block(const Eigen::VectorXd& abar, std::size_t m,
                                     std::size_t m_pad) const = 0;

  /// Images of a under the problem's symmetry group (a itself included).
  virtual std::vector<Eigen::VectorXd> symmetry_orbit(const Eigen::VectorXd& a, std::size_t m) const = 0;

  /// Upper bound on the X-norm of a - b.
  virtual double distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double nu,
                          std::size_t m) const = 0;

  /// Coefficient vector at truncation m from file data (zero padded or truncated).
  virtual Eigen::VectorXd from_coefficients(const CoeffData& data, std::size_t m) const = 0;
  virtual void write_coefficients(std::ostream& out, const Eigen::VectorXd& a, std::size_t m) const = 0;

  /// The same sequence at another truncation (zero padded or truncated).
  Eigen::VectorXd resize(const Eigen::VectorXd& a, std::size_t m, std::size_t m_new) const;

  /// Profile u on a uniform grid of [0, pi] (or [0, pi]^2, row-major), n points per axis.
  virtual std::vector<double> sample(const Eigen::VectorXd& a, std::size_t m, std::size_t n) const = 0;
  virtual int space_dims() const { return 1; }
};

}  // namespace relindex
