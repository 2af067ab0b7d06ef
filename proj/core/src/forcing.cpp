#include "relindex/forcing.hpp"

#include <set>
#include <sstream>

#include "relindex/errors.hpp"

namespace relindex {

ForcingReport forcing_lower_bound(const ForcingInput& in) {
  ForcingReport r;
  r.input = in;
  std::set<int> keys;
  for (const auto& [k, z] : in.zeta) {
    if (z < 0) throw DomainError("forcing: negative count zeta_" + std::to_string(k));
    keys.insert(k);
  }
  for (const auto& [k, b] : in.beta) {
    if (b < 0) throw DomainError("forcing: negative Betti number beta_" + std::to_string(k));
    keys.insert(k);
  }
  long twice = 0;
  for (int k : keys) {
    const auto z = in.zeta.count(k) ? in.zeta.at(k) : 0L;
    const auto b = in.beta.count(k) ? in.beta.at(k) : 0L;
    if (z > b) twice += z - b;
    if (b > 0) r.unattached_caps[k] = b;
  }
  r.lower_bound = twice / 2;
  r.half_integral = (twice % 2) != 0;
  return r;
}

std::string format_report(const ForcingReport& r) {
  std::ostringstream os;
  os << "connecting orbits (lower bound): " << r.lower_bound << '\n';
  if (r.half_integral) os << "warning: half-integral bound floored\n";
  os << "index  zeta  beta\n";
  std::set<int> keys;
  for (const auto& kv : r.input.zeta) keys.insert(kv.first);
  for (const auto& kv : r.input.beta) keys.insert(kv.first);
  for (int k : keys) {
    os << k << "  " << (r.input.zeta.count(k) ? r.input.zeta.at(k) : 0) << "  "
       << (r.input.beta.count(k) ? r.input.beta.at(k) : 0) << '\n';
  }
  for (const auto& [k, b] : r.unattached_caps)
    os << "at most " << b << " equilibria of index " << k << " may be unattached\n";
  if (!r.input.beta_provenance.empty()) os << "betti: " << r.input.beta_provenance << '\n';
  return os.str();
}

}  // namespace relindex
