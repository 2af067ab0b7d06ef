#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace relindex {

/// Midpoint coefficients read from a text file.
///
/// One coefficient per line, `k value` in 1D or `k1 k2 value` in 2D. Lines
/// starting with `#` are comments, except `# component a2`, which switches
/// the remaining 1D entries to the second (sine) component.
struct CoeffData {
  int dims = 1;
  std::vector<double> a1;
  std::vector<double> a2;
  std::size_t n2d = 0;
  std::vector<double> a2d;  // n2d * n2d, lexicographic
};

CoeffData parse_coefficients(std::istream& in, const std::string& origin = "<stream>");
CoeffData read_coefficients(const std::string& path);

void write_coefficients_1d(std::ostream& out, const std::vector<double>& a1,
                           const std::vector<double>* a2 = nullptr);
void write_coefficients_2d(std::ostream& out, std::size_t n, const std::vector<double>& a);

}  // namespace relindex
