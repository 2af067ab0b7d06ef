#pragma once

#include <Eigen/Dense>

#include "relindex/interval.hpp"

namespace relindex {

/// Floating-point inverse; throws OperatorBuildError when the matrix is
/// singular to working precision.
Eigen::MatrixXd approximate_inverse(const Eigen::MatrixXd& m);

/// sum_i row_w[i] sum_j |a(r0+i, c0+j)| v[j] for nonnegative v.
Interval weighted_abs_apply(const Eigen::MatrixXd& a, Eigen::Index r0, Eigen::Index c0, Eigen::Index rows,
                            Eigen::Index cols, const IntervalVector& v, const IntervalVector& row_w);

}  // namespace relindex
