#include "relindex/problem_common.hpp"

#include <cmath>
#include <sstream>

#include "relindex/errors.hpp"
#include "relindex/problem.hpp"

namespace relindex {

Eigen::VectorXd Problem::resize(const Eigen::VectorXd& a, std::size_t m, std::size_t m_new) const {
  std::stringstream buf;
  write_coefficients(buf, a, m);
  return from_coefficients(parse_coefficients(buf, "resize"), m_new);
}

Eigen::MatrixXd approximate_inverse(const Eigen::MatrixXd& m) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  const Eigen::MatrixXd inv = lu.inverse();
  if (!inv.allFinite()) throw OperatorBuildError("approximate inverse: midpoint matrix is singular");
  const double cond = inv.lpNorm<Eigen::Infinity>() * m.lpNorm<Eigen::Infinity>();
  if (!(cond < 1e14)) throw OperatorBuildError("approximate inverse: midpoint matrix is numerically singular");
  return inv;
}

Interval weighted_abs_apply(const Eigen::MatrixXd& a, Eigen::Index r0, Eigen::Index c0, Eigen::Index rows,
                            Eigen::Index cols, const IntervalVector& v, const IntervalVector& row_w) {
  Interval total(0.0);
  for (Eigen::Index i = 0; i < rows; ++i) {
    Interval s(0.0);
    for (Eigen::Index j = 0; j < cols; ++j) s += Interval(std::fabs(a(r0 + i, c0 + j))) * v[static_cast<std::size_t>(j)];
    total += s * row_w[static_cast<std::size_t>(i)];
  }
  return total;
}


}  // namespace relindex
