#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relindex/coeff_io.hpp"
#include "relindex/errors.hpp"
#include "relindex/forcing.hpp"
#include "relindex/index.hpp"
#include "relindex/newton.hpp"
#include "relindex/pipeline.hpp"

using namespace relindex;

namespace {

std::map<std::string, double> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("parameter '" + item + "' is not name=value");
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw ConfigError("parameter '" + item + "' has a non-numeric value");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

std::pair<double, double> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ConfigError("range '" + s + "' is not from:to");
  try {
    return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ConfigError("range '" + s + "' is not numeric");
  }
}

int run_certify(const RunConfig& cfg) {
  const PipelineResult r = run_pipeline(cfg, std::cout);
  for (const auto& e : r.errors) std::cerr << "error: " << e << '\n';
  return r.exit_code;
}

int run_index(const std::string& path_a, const std::string& path_b, std::size_t extra) {
  const StoredCertificate a = read_certificate(path_a);
  const StoredCertificate b = read_certificate(path_b);
  const auto pa = make_problem(a.cert.problem_id, a.cert.parameters);
  const auto pb = make_problem(b.cert.problem_id, b.cert.parameters);
  try {
    const IndexCertificate ic = relative_index(*pa, a.cert, *pb, b.cert, extra);
    std::cout << "relative index " << ic.relative_index << " (positive counts " << ic.n_a << " and " << ic.n_b
              << ", m_common " << ic.m_common << ")\n";
    return kExitOk;
  } catch (const IndexError& e) {
    std::cerr << "index inconclusive: " << e.what() << '\n';
    return kExitIndex;
  }
}

int run_force(const std::string& manifest, const std::string& betti) {
  std::ifstream f(manifest);
  if (!f) throw ConfigError("cannot open manifest " + manifest);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(manifest + ": " + e.what());
  }
  if (!j.contains("zeta") || !j["zeta"].is_object()) throw ConfigError(manifest + ": no zeta table");
  ForcingInput in;
  for (const auto& [k, v] : j["zeta"].items()) in.zeta[std::stoi(k)] = v.get<long>();
  const BettiData b = read_betti(betti);
  in.beta = b.beta;
  in.beta_provenance = b.provenance;
  std::cout << format_report(forcing_lower_bound(in));
  return kExitOk;
}

int run_continue(const std::string& id, const std::map<std::string, double>& params, const std::string& name,
                 const std::string& range, double step, std::size_t m, double nu, const std::string& start_file,
                 bool certify_points) {
  const auto [from, to] = parse_range(range);
  auto at = [&](double value) {
    auto p = params;
    p[name] = value;
    return make_problem(id, p);
  };
  const auto first = at(from);
  Eigen::VectorXd start = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(first->dimension(m)));
  if (!start_file.empty()) start = first->from_coefficients(read_coefficients(start_file), m);
  const BranchResult br =
      continue_branch(at, start, m, from, to, step, certify_points ? std::optional<double>(nu) : std::nullopt);
  std::cout << "# " << name << " |a|_inf status r0 index\n";
  for (const auto& p : br.points) {
    std::cout << p.parameter << ' ' << p.a.lpNorm<Eigen::Infinity>();
    if (p.certificate) {
      const bool ok = p.certificate->status == CertStatus::certified;
      std::cout << ' ' << (ok ? "certified" : "failed") << ' ' << (ok ? p.certificate->r0 : 0.0);
      if (p.index) std::cout << ' ' << *p.index;
      else std::cout << " -";
    }
    std::cout << '\n';
  }
  if (br.truncated) {
    std::cerr << "branch truncated: " << br.message << '\n';
    return kExitCertification;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validated equilibria, relative indices and forcing bounds"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> cert_params;
  bool no_newton = false, no_plots = false;
  auto* certify_cmd = app.add_subcommand("certify", "Certify equilibria from seed files");
  certify_cmd->add_option("--problem", cfg.problem_id, "cr, tw or ok")->required();
  certify_cmd->add_option("--params", cert_params, "name=value pairs");
  certify_cmd->add_option("--nu", cfg.nu, "Weight nu >= 1");
  certify_cmd->add_option("--m", cfg.m, "Truncation dimension")->required();
  certify_cmd->add_option("--m-max", cfg.m_max, "Retry failed certifications at larger truncations up to this");
  certify_cmd->add_option("--m-step", cfg.m_step, "Truncation increment for retries");
  certify_cmd->add_option("--seeds", cfg.seed_files, "Coefficient files")->required();
  certify_cmd->add_option("--out", cfg.out_dir, "Output directory");
  certify_cmd->add_option("--betti", cfg.betti_file, "Betti numbers for the forcing report");
  certify_cmd->add_option("--threads", cfg.threads, "Worker threads (default RELINDEX_THREADS)");
  certify_cmd->add_flag("--no-newton", no_newton, "Certify seeds as given");
  certify_cmd->add_flag("--no-plots", no_plots, "Skip plot tables");

  std::vector<std::string> certs;
  std::size_t extra = 5;
  auto* index_cmd = app.add_subcommand("index", "Relative index of two certificates");
  index_cmd->add_option("--certs", certs, "Certificate A and base certificate B")->required()->expected(2);
  index_cmd->add_option("--extra", extra, "Additional padding modes");

  std::string manifest, betti;
  auto* force_cmd = app.add_subcommand("force", "Forcing lower bound from a manifest");
  force_cmd->add_option("--manifest", manifest)->required();
  force_cmd->add_option("--betti", betti)->required();

  std::string cont_problem, cont_name, cont_range, cont_start;
  std::vector<std::string> cont_params;
  double cont_step = 0.05, cont_nu = 1.01;
  std::size_t cont_m = 30;
  bool cont_certify = false;
  auto* cont_cmd = app.add_subcommand("continue", "Natural-parameter continuation of a branch");
  cont_cmd->add_option("--problem", cont_problem)->required();
  cont_cmd->add_option("--params", cont_params, "Fixed name=value pairs");
  cont_cmd->add_option("--param", cont_name, "Continued parameter (default lambda1, or lambda for tw)");
  cont_cmd->add_option("--param-range", cont_range, "from:to")->required();
  cont_cmd->add_option("--step", cont_step);
  cont_cmd->add_option("--m", cont_m);
  cont_cmd->add_option("--nu", cont_nu);
  cont_cmd->add_option("--start", cont_start, "Coefficient file of a solution at the range start");
  cont_cmd->add_flag("--certify", cont_certify, "Certify every point and count its index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*certify_cmd) {
      cfg.parameters = parse_params(cert_params);
      cfg.newton = !no_newton;
      cfg.plots = !no_plots;
      return run_certify(cfg);
    }
    if (*index_cmd) return run_index(certs[0], certs[1], extra);
    if (*force_cmd) return run_force(manifest, betti);
    if (*cont_cmd) {
      if (cont_name.empty()) cont_name = cont_problem == "tw" ? "lambda" : "lambda1";
      if (!(cont_step > 0.0)) throw ConfigError("--step must be positive");
      return run_continue(cont_problem, parse_params(cont_params), cont_name, cont_range, cont_step, cont_m, cont_nu,
                          cont_start, cont_certify);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}
