#pragma once

#include <map>
#include <string>

namespace relindex {

struct ForcingInput {
  std::map<int, long> zeta;  // index -> number of certified hyperbolic equilibria
  std::map<int, long> beta;  // index -> Betti number
  std::string beta_provenance;
};

struct ForcingReport {
  long lower_bound = 0;
  bool half_integral = false;  // the raw bound was k + 1/2 and was floored
  std::map<int, long> unattached_caps;
  ForcingInput input;
};

/// floor(1/2 sum_k (zeta_k - beta_k)_+), the forced number of connecting orbits.
ForcingReport forcing_lower_bound(const ForcingInput& in);

/// Plain-text report: bound, caps, echoed inputs.
std::string format_report(const ForcingReport& r);

}  // namespace relindex
