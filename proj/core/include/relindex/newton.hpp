#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "relindex/problem.hpp"

namespace relindex {

struct NewtonOptions {
  double tolerance = 1e-14;
  int max_iterations = 50;
  /// A stagnated iteration is accepted when the residual is below this.
  double stagnation_tolerance = 1e-10;
};

struct NewtonResult {
  Eigen::VectorXd a;
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;
  std::string message;
};

/// Damped Newton iteration on F^(m) in floating point.
NewtonResult newton_solve(const Problem& problem, const Eigen::VectorXd& guess, std::size_t m,
                          const NewtonOptions& opt = {});

struct BranchPoint {
  double parameter = 0.0;
  Eigen::VectorXd a;
  std::optional<EquilibriumCertificate> certificate;
  std::optional<int> index;
};

struct BranchResult {
  std::vector<BranchPoint> points;
  bool truncated = false;
  std::string message;
};

using ProblemFactory = std::function<std::unique_ptr<Problem>(double)>;

/// Natural-parameter continuation from `start` (a solution at `from`) to `to`.
/// When certify_nu is set, each point is certified and its index counted.
BranchResult continue_branch(const ProblemFactory& factory, const Eigen::VectorXd& start, std::size_t m,
                             double from, double to, double step, std::optional<double> certify_nu = {});

}  // namespace relindex
