#include "relindex/prover.hpp"

#include <cfloat>
#include <cmath>

#include "relindex/index.hpp"
#include "relindex/problem.hpp"

namespace relindex {

Interval radii_poly(const RadiiBounds& b, const Interval& r) {
  if (r.lo() < 0.0) throw DomainError("radii_poly: r must be nonnegative");
  return b.Z2 * sqr(r) - (Interval(1.0) - b.Z1 - b.Z0) * r + b.Y0;
}

double find_r0(const RadiiBounds& b) {
  constexpr int kPoints = 60;
  for (const Interval* x : {&b.Y0, &b.Z0, &b.Z1, &b.Z2})
    if (x->lo() < 0.0) throw CertificationFailure("negative bound", b);
  const double lo = std::max(mul_up(mag(b.Y0), 1.0 + 0x1p-20), DBL_MIN);
  if (!(lo < 1.0)) throw CertificationFailure("Y0 >= 1", b);
  const double ratio = std::pow(1.0 / lo, 1.0 / (kPoints - 1));
  double r = lo;
  for (int i = 0; i < kPoints; ++i) {
    const double rr = (i == kPoints - 1) ? 1.0 : std::min(r, 1.0);
    if (radii_poly(b, Interval(rr)).negative()) return rr;
    r *= ratio;
  }
  throw CertificationFailure("no radius with p(r) < 0 in (Y0, 1]", b);
}

EquilibriumCertificate certify(const Problem& problem, const Eigen::VectorXd& abar, double nu, std::size_t m) {
  EquilibriumCertificate cert;
  cert.problem_id = problem.id();
  cert.parameters = problem.parameters();
  cert.nu = nu;
  cert.m = m;
  cert.abar = abar;
  try {
    cert.bounds = problem.bounds(abar, nu, m);
    cert.r0 = find_r0(cert.bounds);
    cert.status = CertStatus::certified;
    cert.homotopy = homotopy_check(cert);
    if (!cert.homotopy.passed) {
      cert.status = CertStatus::failed;
      cert.message = "homotopy inequalities fail";
    }
  } catch (const CertificationFailure& e) {
    cert.bounds = e.bounds();
    cert.status = CertStatus::failed;
    cert.message = e.what();
  } catch (const OperatorBuildError& e) {
    cert.status = CertStatus::failed;
    cert.message = e.what();
  }
  return cert;
}

double c0_error(const EquilibriumCertificate& cert) {
  if (cert.status != CertStatus::certified) throw DomainError("c0_error: certificate is not certified");
  return cert.r0;
}

}  // namespace relindex
