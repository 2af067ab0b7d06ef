#pragma once

#include <cstddef>
#include <vector>

#include "relindex/interval_matrix.hpp"
#include "relindex/problem.hpp"
#include "relindex/prover.hpp"

namespace relindex {

struct GershgorinDisk {
  Interval center;
  double radius = 0.0;
  int sign = 0;  // +1 right of the imaginary axis, -1 left, 0 straddling
};

struct EigenEnclosure {
  std::vector<GershgorinDisk> disks;
  int positive_count = 0;
  int negative_count = 0;
  bool conclusive = false;
  bool retried = false;
  double inverse_residual = 0.0;  // ||I - W V||_inf
};

struct CountOptions {
  bool allow_retry = true;
  /// Permutes the columns of the eigenvector basis before use (testing hook).
  std::vector<Eigen::Index> column_order;
};

/// Number of positive eigenvalues of a symmetric interval matrix, read from the
/// Gershgorin disks of V^{-1} Q V with V approximate eigenvectors of mid(Q).
EigenEnclosure count_positive(const IntervalMatrix& q, const CountOptions& opt = {});

struct IndexCertificate {
  std::size_t m_common = 0;
  int n_a = 0;
  int n_b = 0;
  int relative_index = 0;
  EigenEnclosure enclosure_a;
  EigenEnclosure enclosure_b;
};

/// n(A-dagger_a) - n(A-dagger_b) with both blocks padded to the larger truncation.
/// Throws IndexError when a count is inconclusive or the certificates are incompatible.
IndexCertificate relative_index(const Problem& pa, const EquilibriumCertificate& a, const Problem& pb,
                                const EquilibriumCertificate& b, std::size_t extra_padding = 0);

/// Positive count of a single padded block; throws IndexError when inconclusive.
int positive_count(const Problem& p, const EquilibriumCertificate& c, std::size_t m_pad);

/// Re-checks Z0 < 1 and Z0 + Z1 + Z2 r0 (+ Y0 / r0) < 1 with outward rounding.
HomotopyMargins homotopy_check(const EquilibriumCertificate& cert);

/// Relative index of a TW equilibrium against a base certificate.
int tw_relative_index(const Problem& p, const EquilibriumCertificate& cert, const Problem& base,
                      const EquilibriumCertificate& base_cert);

/// Morse index of an OK equilibrium (its tail symbols are all negative).
int ok_morse_index(const Problem& p, const EquilibriumCertificate& cert);

}  // namespace relindex
