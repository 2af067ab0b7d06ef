#pragma once

#include <optional>
#include <string>

#include "relindex/prover.hpp"

namespace relindex {

inline constexpr const char* kCertificateFormat = "relindex-certificate/1";

/// Index data attached to a stored equilibrium certificate.
struct IndexRecord {
  int relative_index = 0;
  int positive_count = 0;
  int base_count = 0;
  std::size_t m_common = 0;
  std::string base;
  bool conclusive = false;
};

struct StoredCertificate {
  EquilibriumCertificate cert;
  std::optional<IndexRecord> index;
};

/// JSON text; intervals are [lo, hi] pairs and doubles round-trip exactly.
std::string to_json(const StoredCertificate& c);
StoredCertificate from_json(const std::string& text);

void write_certificate(const std::string& path, const StoredCertificate& c);
StoredCertificate read_certificate(const std::string& path);

}  // namespace relindex
