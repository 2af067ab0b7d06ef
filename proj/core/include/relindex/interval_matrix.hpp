#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "relindex/interval.hpp"

namespace relindex {

/// Dense interval matrix in midpoint-radius form.
///
/// Every entry represents the interval [mid - rad, mid + rad] (the endpoints
/// rounded outward on extraction). Products run on plain floating-point GEMM
/// and add an a-priori rounding-error bound to the radius, so a 400 x 400
/// product costs about as much as three double GEMMs.
class IntervalMatrix {
 public:
  IntervalMatrix() = default;
  IntervalMatrix(Eigen::Index rows, Eigen::Index cols);
  /// Point matrix (zero radius).
  explicit IntervalMatrix(Eigen::MatrixXd mid);
  IntervalMatrix(Eigen::MatrixXd mid, Eigen::MatrixXd rad);

  static IntervalMatrix identity(Eigen::Index n);

  Eigen::Index rows() const noexcept { return mid_.rows(); }
  Eigen::Index cols() const noexcept { return mid_.cols(); }

  Interval operator()(Eigen::Index i, Eigen::Index j) const;
  void set(Eigen::Index i, Eigen::Index j, const Interval& x);

  const Eigen::MatrixXd& mid() const noexcept { return mid_; }
  const Eigen::MatrixXd& rad() const noexcept { return rad_; }
  /// Entrywise upper bound on |entry|.
  Eigen::MatrixXd mag() const;

  IntervalMatrix transpose() const;
  IntervalMatrix block(Eigen::Index i, Eigen::Index j, Eigen::Index rows, Eigen::Index cols) const;
  void set_block(Eigen::Index i, Eigen::Index j, const IntervalMatrix& b);

  bool contains(const Eigen::MatrixXd& m) const;

  friend IntervalMatrix operator+(const IntervalMatrix& a, const IntervalMatrix& b);
  friend IntervalMatrix operator-(const IntervalMatrix& a, const IntervalMatrix& b);
  friend IntervalMatrix operator*(const IntervalMatrix& a, const IntervalMatrix& b);

 private:
  Eigen::MatrixXd mid_;
  Eigen::MatrixXd rad_;
};

/// Enclosure of the exact product of two point matrices.
IntervalMatrix multiply(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
IntervalMatrix multiply(const Eigen::MatrixXd& a, const IntervalMatrix& b);
IntervalMatrix multiply(const IntervalMatrix& a, const Eigen::MatrixXd& b);
IntervalMatrix multiply(const IntervalMatrix& a, const IntervalMatrix& b);

/// Enclosure of a * x for a point or interval matrix and an interval vector.
IntervalVector multiply(const IntervalMatrix& a, const IntervalVector& x);

/// Upper bound on the max-row-sum norm ||M||_inf.
double norm_inf_up(const IntervalMatrix& m);

}  // namespace relindex
