#include "relindex/index.hpp"

#include <algorithm>
#include <cmath>

namespace relindex {
namespace {


EigenEnclosure count_with_basis(const IntervalMatrix& q, const Eigen::MatrixXd& v) {
  EigenEnclosure out;
  const Eigen::Index n = q.rows();
  const Eigen::MatrixXd w = v.transpose();
  const IntervalMatrix r = IntervalMatrix::identity(n) - multiply(w, v);
  const double delta = norm_inf_up(r);
  out.inverse_residual = delta;
  if (!(delta < 1.0)) return out;
  // V^{-1} - W = R V^{-1}, so column j of the error is bounded by ||(R W)_j||_inf / (1 - delta).
  const Eigen::MatrixXd rw = multiply(r, w).mag();
  const double denom = sub_down(1.0, delta);
  Eigen::MatrixXd rad(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double eps = div_up(rw.col(j).maxCoeff(), denom);
    rad.col(j).setConstant(eps);
  }
  const IntervalMatrix vinv(w, rad);
  const IntervalMatrix q0 = multiply(vinv, multiply(q, v));
  const Eigen::MatrixXd mg = q0.mag();
  out.conclusive = true;
  for (Eigen::Index i = 0; i < n; ++i) {
    double r_i = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != i) r_i = add_up(r_i, mg(i, j));
    GershgorinDisk d{q0(i, i), r_i, 0};
    if (sub_down(d.center.lo(), r_i) > 0.0) {
      d.sign = 1;
      ++out.positive_count;
    } else if (add_up(d.center.hi(), r_i) < 0.0) {
      d.sign = -1;
      ++out.negative_count;
    } else {
      out.conclusive = false;
    }
    out.disks.push_back(d);
  }
  return out;
}

}  // namespace

EigenEnclosure count_positive(const IntervalMatrix& q, const CountOptions& opt) {
  if (q.rows() != q.cols()) throw DomainError("count_positive: matrix must be square");
  if (q.rows() == 0) {
    EigenEnclosure e;
    e.conclusive = true;
    return e;
  }
  const Eigen::MatrixXd sym = 0.5 * (q.mid() + q.mid().transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.info() != Eigen::Success) throw IndexError("count_positive: eigen decomposition failed");
  Eigen::MatrixXd v = es.eigenvectors();
  if (!opt.column_order.empty()) {
    if (static_cast<Eigen::Index>(opt.column_order.size()) != v.cols())
      throw DomainError("count_positive: column order has the wrong length");
    Eigen::MatrixXd p(v.rows(), v.cols());
    for (Eigen::Index j = 0; j < v.cols(); ++j) p.col(j) = v.col(opt.column_order[static_cast<std::size_t>(j)]);
    v = p;
  }
  EigenEnclosure e = count_with_basis(q, v);
  if (!e.conclusive && opt.allow_retry) {
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
    Eigen::MatrixXd qm = qr.householderQ() * Eigen::MatrixXd::Identity(v.rows(), v.cols());
    // Restore the column signs so that Q stays close to V.
    for (Eigen::Index j = 0; j < qm.cols(); ++j)
      if (qm.col(j).dot(v.col(j)) < 0.0) qm.col(j) = -qm.col(j);
    e = count_with_basis(q, qm);
    e.retried = true;
  }
  return e;
}

int positive_count(const Problem& p, const EquilibriumCertificate& c, std::size_t m_pad) {
  const EigenEnclosure e = count_positive(p.index_block(c.abar, c.m, m_pad));
  if (!e.conclusive) throw IndexError("eigenvalue count inconclusive for a " + c.problem_id + " certificate");
  return e.positive_count;
}

IndexCertificate relative_index(const Problem& pa, const EquilibriumCertificate& a, const Problem& pb,
                                const EquilibriumCertificate& b, std::size_t extra_padding) {
  if (a.status != CertStatus::certified || b.status != CertStatus::certified)
    throw IndexError("relative_index: both certificates must be certified");
  if (pa.id() != a.problem_id || pb.id() != b.problem_id || a.problem_id != b.problem_id)
    throw IndexError("relative_index: certificates belong to different problem families");
  if (a.nu != b.nu) throw IndexError("relative_index: certificates use different weights");
  if (!a.homotopy.passed || !b.homotopy.passed)
    throw IndexError("relative_index: homotopy inequalities not verified");
  IndexCertificate out;
  out.m_common = std::max(a.m, b.m) + extra_padding;
  out.enclosure_a = count_positive(pa.index_block(a.abar, a.m, out.m_common));
  out.enclosure_b = count_positive(pb.index_block(b.abar, b.m, out.m_common));
  if (!out.enclosure_a.conclusive || !out.enclosure_b.conclusive)
    throw IndexError("relative_index: eigenvalue count inconclusive");
  out.n_a = out.enclosure_a.positive_count;
  out.n_b = out.enclosure_b.positive_count;
  out.relative_index = out.n_a - out.n_b;
  return out;
}

HomotopyMargins homotopy_check(const EquilibriumCertificate& cert) {
  HomotopyMargins h;
  const RadiiBounds& b = cert.bounds;
  h.z0 = sub_down(1.0, b.Z0.hi());
  if (cert.r0 > 0.0) {
    const Interval r(cert.r0);
    const Interval s = b.Z0 + b.Z1 + b.Z2 * r;
    h.contraction = sub_down(1.0, s.hi());
    h.radii = sub_down(1.0, (s + b.Y0 / r).hi());
  }
  h.passed = cert.status == CertStatus::certified && h.z0 > 0.0 && h.contraction > 0.0 && h.radii > 0.0;
  return h;
}

int tw_relative_index(const Problem& p, const EquilibriumCertificate& cert, const Problem& base,
                      const EquilibriumCertificate& base_cert) {
  if (p.id() != "tw") throw IndexError("tw_relative_index: not a TW certificate");
  return relative_index(p, cert, base, base_cert).relative_index;
}

int ok_morse_index(const Problem& p, const EquilibriumCertificate& cert) {
  if (p.id() != "ok") throw IndexError("ok_morse_index: not an OK certificate");
  if (cert.status != CertStatus::certified || !cert.homotopy.passed)
    throw IndexError("ok_morse_index: certificate is not certified");
  return positive_count(p, cert, cert.m);
}

}  // namespace relindex
