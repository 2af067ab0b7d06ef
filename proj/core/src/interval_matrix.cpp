#include "relindex/interval_matrix.hpp"

#include <algorithm>

namespace relindex {
namespace {

constexpr double kUnitRoundoff = 0x1p-53;
constexpr double kEta = std::numeric_limits<double>::denorm_min();

// Rounding-error constants for an inner dimension n: |fl(A B) - A B| is at
// most gamma * fl(|A| |B|) + eta_term, valid for any summation order.
struct GemmErrorBound {
  double gamma;
  double eta_term;
};

GemmErrorBound gemm_error_bound(Eigen::Index n) {
  const double np2 = static_cast<double>(n + 2);
  if (np2 * kUnitRoundoff > 0.01) throw DomainError("interval GEMM: inner dimension too large");
  return {2.0 * np2 * kUnitRoundoff, 4.0 * np2 * kEta};
}

// rad = up(gamma * s + (1 + gamma) * t + eta_term), entrywise.
Eigen::MatrixXd assemble_radius(const Eigen::MatrixXd& s, const Eigen::MatrixXd* t,
                                const GemmErrorBound& e) {
  Eigen::MatrixXd rad(s.rows(), s.cols());
  const double one_plus = add_up(1.0, e.gamma);
  for (Eigen::Index j = 0; j < s.cols(); ++j) {
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
      double r = mul_up(e.gamma, s(i, j));
      if (t != nullptr) r = add_up(r, mul_up(one_plus, (*t)(i, j)));
      rad(i, j) = add_up(r, e.eta_term);
    }
  }
  return rad;
}

Eigen::MatrixXd abs_plus_rad_up(const Eigen::MatrixXd& mid, const Eigen::MatrixXd& rad) {
  Eigen::MatrixXd out(mid.rows(), mid.cols());
  for (Eigen::Index j = 0; j < mid.cols(); ++j)
    for (Eigen::Index i = 0; i < mid.rows(); ++i) out(i, j) = add_up(std::fabs(mid(i, j)), rad(i, j));
  return out;
}

}  // namespace

IntervalMatrix::IntervalMatrix(Eigen::Index rows, Eigen::Index cols)
    : mid_(Eigen::MatrixXd::Zero(rows, cols)), rad_(Eigen::MatrixXd::Zero(rows, cols)) {}

IntervalMatrix::IntervalMatrix(Eigen::MatrixXd mid)
    : mid_(std::move(mid)), rad_(Eigen::MatrixXd::Zero(mid_.rows(), mid_.cols())) {}

IntervalMatrix::IntervalMatrix(Eigen::MatrixXd mid, Eigen::MatrixXd rad)
    : mid_(std::move(mid)), rad_(std::move(rad)) {
  if (mid_.rows() != rad_.rows() || mid_.cols() != rad_.cols())
    throw DomainError("IntervalMatrix: midpoint and radius shapes differ");
  if (mid_.hasNaN() || rad_.hasNaN() || (rad_.array() < 0.0).any())
    throw DomainError("IntervalMatrix: NaN entry or negative radius");
}

IntervalMatrix IntervalMatrix::identity(Eigen::Index n) {
  return IntervalMatrix(Eigen::MatrixXd::Identity(n, n));
}

Interval IntervalMatrix::operator()(Eigen::Index i, Eigen::Index j) const {
  const double m = mid_(i, j), r = rad_(i, j);
  if (r == 0.0) return Interval(m);
  return {sub_down(m, r), add_up(m, r)};
}

void IntervalMatrix::set(Eigen::Index i, Eigen::Index j, const Interval& x) {
  mid_(i, j) = x.mid();
  rad_(i, j) = x.rad();
}

Eigen::MatrixXd IntervalMatrix::mag() const { return abs_plus_rad_up(mid_, rad_); }

IntervalMatrix IntervalMatrix::transpose() const {
  return IntervalMatrix(mid_.transpose(), rad_.transpose());
}

IntervalMatrix IntervalMatrix::block(Eigen::Index i, Eigen::Index j, Eigen::Index rows,
                                     Eigen::Index cols) const {
  return IntervalMatrix(mid_.block(i, j, rows, cols), rad_.block(i, j, rows, cols));
}

void IntervalMatrix::set_block(Eigen::Index i, Eigen::Index j, const IntervalMatrix& b) {
  mid_.block(i, j, b.rows(), b.cols()) = b.mid_;
  rad_.block(i, j, b.rows(), b.cols()) = b.rad_;
}

bool IntervalMatrix::contains(const Eigen::MatrixXd& m) const {
  if (m.rows() != rows() || m.cols() != cols()) return false;
  for (Eigen::Index j = 0; j < cols(); ++j)
    for (Eigen::Index i = 0; i < rows(); ++i)
      if (!(*this)(i, j).contains(m(i, j))) return false;
  return true;
}

namespace {

IntervalMatrix add_sub(const IntervalMatrix& a, const IntervalMatrix& b, double sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("IntervalMatrix: shape mismatch in addition");
  Eigen::MatrixXd mid(a.rows(), a.cols()), rad(a.rows(), a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const double x = a.mid()(i, j), y = sign * b.mid()(i, j);
      const double s = x + y;
      // |s - (x + y)| <= u |s|; the error term is zero when the sum is exact.
      const double err = std::fabs(sub_up(add_up(x, y), s)) + std::fabs(sub_down(add_down(x, y), s));
      mid(i, j) = s;
      rad(i, j) = add_up(add_up(a.rad()(i, j), b.rad()(i, j)), err);
    }
  }
  return IntervalMatrix(std::move(mid), std::move(rad));
}

}  // namespace

IntervalMatrix operator+(const IntervalMatrix& a, const IntervalMatrix& b) { return add_sub(a, b, 1.0); }
IntervalMatrix operator-(const IntervalMatrix& a, const IntervalMatrix& b) { return add_sub(a, b, -1.0); }
IntervalMatrix operator*(const IntervalMatrix& a, const IntervalMatrix& b) { return multiply(a, b); }

IntervalMatrix multiply(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.cols() != b.rows()) throw DomainError("multiply: inner dimensions differ");
  const auto e = gemm_error_bound(a.cols());
  Eigen::MatrixXd mid = a * b;
  const Eigen::MatrixXd s = a.cwiseAbs() * b.cwiseAbs();
  return IntervalMatrix(std::move(mid), assemble_radius(s, nullptr, e));
}

IntervalMatrix multiply(const Eigen::MatrixXd& a, const IntervalMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("multiply: inner dimensions differ");
  const auto e = gemm_error_bound(a.cols());
  const Eigen::MatrixXd abs_a = a.cwiseAbs();
  Eigen::MatrixXd mid = a * b.mid();
  const Eigen::MatrixXd s = abs_a * b.mid().cwiseAbs();
  const Eigen::MatrixXd t = abs_a * b.rad();
  return IntervalMatrix(std::move(mid), assemble_radius(s, &t, e));
}

IntervalMatrix multiply(const IntervalMatrix& a, const Eigen::MatrixXd& b) {
  if (a.cols() != b.rows()) throw DomainError("multiply: inner dimensions differ");
  const auto e = gemm_error_bound(a.cols());
  const Eigen::MatrixXd abs_b = b.cwiseAbs();
  Eigen::MatrixXd mid = a.mid() * b;
  const Eigen::MatrixXd s = a.mid().cwiseAbs() * abs_b;
  const Eigen::MatrixXd t = a.rad() * abs_b;
  return IntervalMatrix(std::move(mid), assemble_radius(s, &t, e));
}

IntervalMatrix multiply(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("multiply: inner dimensions differ");
  const auto e = gemm_error_bound(a.cols());
  Eigen::MatrixXd mid = a.mid() * b.mid();
  const Eigen::MatrixXd s = a.mid().cwiseAbs() * b.mid().cwiseAbs();
  // |A B - mA mB| <= |mA| rB + rA (|mB| + rB)
  const Eigen::MatrixXd t =
      a.mid().cwiseAbs() * b.rad() + a.rad() * abs_plus_rad_up(b.mid(), b.rad());
  return IntervalMatrix(std::move(mid), assemble_radius(s, &t, e));
}

IntervalVector multiply(const IntervalMatrix& a, const IntervalVector& x) {
  if (a.cols() != static_cast<Eigen::Index>(x.size())) throw DomainError("multiply: size mismatch");
  IntervalVector y(static_cast<std::size_t>(a.rows()), Interval(0.0));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Interval acc(0.0);
    for (Eigen::Index j = 0; j < a.cols(); ++j) acc += a(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

double norm_inf_up(const IntervalMatrix& m) {
  const Eigen::MatrixXd mg = m.mag();
  double best = 0.0;
  for (Eigen::Index i = 0; i < mg.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < mg.cols(); ++j) row = add_up(row, mg(i, j));
    best = std::max(best, row);
  }
  return best;
}

}  // namespace relindex
