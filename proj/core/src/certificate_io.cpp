#include "relindex/certificate_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace relindex {
namespace {

using nlohmann::json;

json interval_json(const Interval& x) { return json::array({x.lo(), x.hi()}); }

Interval interval_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ConfigError("certificate: interval must be [lo, hi]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string to_json(const StoredCertificate& s) {
  const EquilibriumCertificate& c = s.cert;
  json j;
  j["format"] = kCertificateFormat;
  j["problem"] = c.problem_id;
  j["parameters"] = c.parameters;
  j["nu"] = c.nu;
  j["m"] = c.m;
  j["abar"] = std::vector<double>(c.abar.data(), c.abar.data() + c.abar.size());
  j["bounds"] = {{"Y0", interval_json(c.bounds.Y0)},
                 {"Z0", interval_json(c.bounds.Z0)},
                 {"Z1", interval_json(c.bounds.Z1)},
                 {"Z2", interval_json(c.bounds.Z2)}};
  j["r0"] = c.r0;
  j["status"] = c.status == CertStatus::certified ? "certified" : "failed";
  j["message"] = c.message;
  j["homotopy"] = {{"z0", c.homotopy.z0},
                   {"contraction", c.homotopy.contraction},
                   {"radii", c.homotopy.radii},
                   {"passed", c.homotopy.passed}};
  if (s.index) {
    j["index"] = {{"relative_index", s.index->relative_index},
                  {"positive_count", s.index->positive_count},
                  {"base_count", s.index->base_count},
                  {"m_common", s.index->m_common},
                  {"base", s.index->base},
                  {"conclusive", s.index->conclusive}};
  }
  return j.dump(1);
}

StoredCertificate from_json(const std::string& text) {
  StoredCertificate s;
  try {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != kCertificateFormat)
      throw ConfigError("certificate: unsupported format " + j.at("format").get<std::string>());
    EquilibriumCertificate& c = s.cert;
    c.problem_id = j.at("problem").get<std::string>();
    c.parameters = j.at("parameters").get<std::map<std::string, double>>();
    c.nu = j.at("nu").get<double>();
    c.m = j.at("m").get<std::size_t>();
    const auto v = j.at("abar").get<std::vector<double>>();
    c.abar = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
    const json& b = j.at("bounds");
    c.bounds = {interval_from(b.at("Y0")), interval_from(b.at("Z0")), interval_from(b.at("Z1")),
                interval_from(b.at("Z2"))};
    c.r0 = j.at("r0").get<double>();
    const auto status = j.at("status").get<std::string>();
    if (status != "certified" && status != "failed") throw ConfigError("certificate: bad status " + status);
    c.status = status == "certified" ? CertStatus::certified : CertStatus::failed;
    c.message = j.value("message", "");
    if (j.contains("homotopy")) {
      const json& h = j["homotopy"];
      c.homotopy = {h.at("z0").get<double>(), h.at("contraction").get<double>(), h.at("radii").get<double>(),
                    h.at("passed").get<bool>()};
    }
    if (j.contains("index")) {
      const json& x = j["index"];
      s.index = IndexRecord{x.at("relative_index").get<int>(), x.at("positive_count").get<int>(),
                            x.at("base_count").get<int>(),      x.at("m_common").get<std::size_t>(),
                            x.at("base").get<std::string>(),    x.at("conclusive").get<bool>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("certificate: ") + e.what());
  }
  return s;
}

void write_certificate(const std::string& path, const StoredCertificate& c) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << to_json(c) << '\n';
}

StoredCertificate read_certificate(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open certificate " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return from_json(ss.str());
}

}  // namespace relindex
