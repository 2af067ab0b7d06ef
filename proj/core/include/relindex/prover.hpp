#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "relindex/errors.hpp"
#include "relindex/interval.hpp"

namespace relindex {

class Problem;

/// Y0, Z0, Z1 and Z2 (Z2 constant under the a-priori restriction r <= 1).
struct RadiiBounds {
  Interval Y0{0.0};
  Interval Z0{0.0};
  Interval Z1{0.0};
  Interval Z2{0.0};
};

/// No radius with p(r) < 0 was found.
class CertificationFailure : public Error {
 public:
  CertificationFailure(const std::string& what, RadiiBounds bounds)
      : Error(what), bounds_(bounds) {}
  const RadiiBounds& bounds() const noexcept { return bounds_; }

 private:
  RadiiBounds bounds_;
};

enum class CertStatus { certified, failed };

struct HomotopyMargins {
  double z0 = 0.0;           // lower bound on 1 - Z0
  double contraction = 0.0;  // lower bound on 1 - (Z0 + Z1 + Z2 r0)
  double radii = 0.0;        // lower bound on 1 - (Z0 + Z1 + Z2 r0 + Y0 / r0)
  bool passed = false;
};

struct EquilibriumCertificate {
  std::string problem_id;
  std::map<std::string, double> parameters;
  double nu = 1.0;
  std::size_t m = 0;
  Eigen::VectorXd abar;
  RadiiBounds bounds;
  double r0 = 0.0;
  CertStatus status = CertStatus::failed;
  std::string message;
  HomotopyMargins homotopy;
};

/// p(r) = Z2 r^2 - (1 - Z1 - Z0) r + Y0
Interval radii_poly(const RadiiBounds& b, const Interval& r);

/// Smallest point of a 60-point geometric grid on (mag(Y0), 1] where p < 0
/// holds rigorously.
double find_r0(const RadiiBounds& b);

/// Runs the problem's bound evaluators at abar and searches for r0. Never
/// throws on a failed proof; the status and message say what went wrong.
EquilibriumCertificate certify(const Problem& problem, const Eigen::VectorXd& abar, double nu,
                               std::size_t m);

/// Sup-norm distance between the approximate and the true profile.
double c0_error(const EquilibriumCertificate& cert);

}  // namespace relindex
