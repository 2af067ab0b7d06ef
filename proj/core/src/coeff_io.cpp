#include "relindex/coeff_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "relindex/errors.hpp"

namespace relindex {
namespace {

void put(std::vector<double>& v, std::size_t k, double x) {
  if (v.size() <= k) v.resize(k + 1, 0.0);
  v[k] = x;
}

}  // namespace

CoeffData parse_coefficients(std::istream& in, const std::string& origin) {
  CoeffData d;
  struct Entry2 {
    std::size_t k1, k2;
    double v;
  };
  std::vector<Entry2> entries2;
  bool second = false;
  int dims = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string word, name;
      if (hs >> word >> name && word == "component") {
        if (name == "a2") second = true;
        else if (name == "a1") second = false;
        else throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown component '" + name + "'");
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    auto fail = [&](const std::string& why) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + why);
    };
    if (tok.size() != 2 && tok.size() != 3) fail("expected 'k value' or 'k1 k2 value'");
    const int here = static_cast<int>(tok.size()) - 1;
    if (dims != 0 && dims != here) fail("mixed 1D and 2D entries");
    dims = here;
    std::vector<long> idx;
    double value = 0.0;
    try {
      for (int i = 0; i < here; ++i) {
        std::size_t used = 0;
        idx.push_back(std::stol(tok[static_cast<std::size_t>(i)], &used));
        if (used != tok[static_cast<std::size_t>(i)].size()) fail("bad index");
      }
      std::size_t used = 0;
      value = std::stod(tok.back(), &used);
      if (used != tok.back().size()) fail("bad value");
    } catch (const std::logic_error&) {
      fail("unparsable number");
    }
    if (!std::isfinite(value)) fail("non-finite value");
    for (long i : idx)
      if (i < 0) fail("negative mode index");
    if (dims == 1) {
      const auto k = static_cast<std::size_t>(idx[0]);
      if (second && k == 0) fail("sine component has no mode 0");
      put(second ? d.a2 : d.a1, k, value);
    } else {
      entries2.push_back({static_cast<std::size_t>(idx[0]), static_cast<std::size_t>(idx[1]), value});
    }
  }
  if (dims == 0) throw ConfigError(origin + ": no coefficients");
  d.dims = dims;
  if (dims == 2) {
    for (const auto& e : entries2) d.n2d = std::max({d.n2d, e.k1 + 1, e.k2 + 1});
    d.a2d.assign(d.n2d * d.n2d, 0.0);
    for (const auto& e : entries2) d.a2d[e.k1 * d.n2d + e.k2] = e.v;
  }
  return d;
}

CoeffData read_coefficients(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open coefficient file " + path);
  return parse_coefficients(f, path);
}

void write_coefficients_1d(std::ostream& out, const std::vector<double>& a1, const std::vector<double>* a2) {
  out << std::setprecision(17);
  for (std::size_t k = 0; k < a1.size(); ++k) out << k << ' ' << a1[k] << '\n';
  if (a2 != nullptr) {
    out << "# component a2\n";
    for (std::size_t k = 1; k < a2->size(); ++k) out << k << ' ' << (*a2)[k] << '\n';
  }
}

void write_coefficients_2d(std::ostream& out, std::size_t n, const std::vector<double>& a) {
  out << std::setprecision(17);
  for (std::size_t k1 = 0; k1 < n; ++k1)
    for (std::size_t k2 = 0; k2 < n; ++k2) out << k1 << ' ' << k2 << ' ' << a[k1 * n + k2] << '\n';
}

}  // namespace relindex
