#include "relindex/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "relindex/index.hpp"
#include "relindex/newton.hpp"
#include "relindex/problem_cr.hpp"
#include "relindex/problem_ok.hpp"
#include "relindex/problem_tw.hpp"

namespace relindex {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

double take(std::map<std::string, double>& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  if (it == p.end()) return fallback;
  const double v = it->second;
  p.erase(it);
  return v;
}

void reject_leftovers(const std::map<std::string, double>& p, const std::string& id) {
  if (!p.empty()) throw ConfigError("unknown parameter '" + p.begin()->first + "' for problem " + id);
}

template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, n); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

void write_plot(const Problem& problem, const EquilibriumCertificate& c, const fs::path& file) {
  std::ofstream f(file);
  if (!f) throw ConfigError("cannot write " + file.string());
  f << std::setprecision(17);
  if (problem.space_dims() == 1) {
    const std::size_t n = 512;
    const auto u = problem.sample(c.abar, c.m, n);
    f << "# x u\n";
    for (std::size_t i = 0; i < n; ++i)
      f << (3.14159265358979323846 * static_cast<double>(i) / static_cast<double>(n - 1)) << ' ' << u[i] << '\n';
  } else {
    const std::size_t n = 128;
    const auto u = problem.sample(c.abar, c.m, n);
    f << "# u(x1_i, x2_j) on a uniform " << n << "x" << n << " grid of [0,pi]^2, row i\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) f << (j ? " " : "") << u[i * n + j];
      f << '\n';
    }
  }
}

json manifest_json(const RunConfig& cfg, const PipelineResult& r) {
  json j;
  j["format"] = "relindex-manifest/1";
  j["problem"] = cfg.problem_id;
  j["parameters"] = cfg.parameters;
  j["nu"] = cfg.nu;
  j["m"] = cfg.m;
  if (cfg.m_max > cfg.m) j["m_max"] = cfg.m_max;
  j["base_certificate"] = "certs/base.json";
  json states = json::array();
  for (const auto& s : r.states) {
    const auto& c = s.stored.cert;
    json e{{"name", s.name},
           {"certificate", "certs/" + s.name + ".json"},
           {"status", c.status == CertStatus::certified ? "certified" : "failed"},
           {"r0", c.r0},
           {"m", c.m},
           {"message", c.message},
           {"newton_residual", s.newton_residual},
           {"orbit_size", s.orbit_size}};
    if (s.stored.index) {
      e["index"] = s.stored.index->relative_index;
      e["positive_count"] = s.stored.index->positive_count;
      e["conclusive"] = s.stored.index->conclusive;
    }
    states.push_back(e);
  }
  j["states"] = states;
  json zeta = json::object();
  for (const auto& [k, n] : r.zeta) zeta[std::to_string(k)] = n;
  j["zeta"] = zeta;
  j["distinct_states"] = r.distinct_states;
  j["ambiguous_images"] = r.ambiguous_images;
  if (r.forcing) {
    json beta = json::object();
    for (const auto& [k, b] : r.forcing->input.beta) beta[std::to_string(k)] = b;
    j["forcing"] = {{"lower_bound", r.forcing->lower_bound},
                    {"half_integral", r.forcing->half_integral},
                    {"beta", beta},
                    {"provenance", r.forcing->input.beta_provenance}};
  }
  j["errors"] = r.errors;
  j["exit_code"] = r.exit_code;
  return j;
}

}  // namespace

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RELINDEX_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::unique_ptr<Problem> make_problem(const std::string& id, const std::map<std::string, double>& params) {
  auto p = params;
  if (id == "cr") {
    CRParams c{take(p, "lambda1", 6.0), take(p, "lambda2", 6.0)};
    reject_leftovers(p, id);
    return std::make_unique<CRProblem>(c);
  }
  if (id == "tw") {
    TWParams t{take(p, "lambda", 12.0), take(p, "c", 1.0)};
    reject_leftovers(p, id);
    if (!(t.c > 0.0)) throw ConfigError("tw: wave speed c must be positive");
    return std::make_unique<TWProblem>(t);
  }
  if (id == "ok") {
    OKParams o{take(p, "lambda1", 9.0), take(p, "lambda2", 9.0), take(p, "lambda3", 4.5)};
    reject_leftovers(p, id);
    if (!(o.lambda3 >= 0.0)) throw ConfigError("ok: lambda3 must be nonnegative");
    return std::make_unique<OKProblem>(o);
  }
  throw ConfigError("unknown problem '" + id + "' (expected cr, tw or ok)");
}

std::unique_ptr<Problem> make_base_problem(const std::string& id, const std::map<std::string, double>& params) {
  const auto full = make_problem(id, params)->parameters();
  if (id == "cr") return make_problem(id, {{"lambda1", -1.0}, {"lambda2", 0.0}});
  if (id == "tw") return make_problem(id, {{"lambda", -1.0}, {"c", full.at("c")}});
  return make_problem(id, {{"lambda1", -1.0}, {"lambda2", 0.0}, {"lambda3", full.at("lambda3")}});
}

BettiData read_betti(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open Betti file " + path);
  BettiData d;
  std::string line;
  while (std::getline(f, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto pos = line.find("provenance:");
      if (pos != std::string::npos) {
        std::string text = line.substr(pos + 11);
        text.erase(0, text.find_first_not_of(' '));
        d.provenance += (d.provenance.empty() ? "" : " ") + text;
      }
      continue;
    }
    std::istringstream ls(line);
    int k = 0;
    long b = 0;
    std::string extra;
    if (!(ls >> k >> b) || (ls >> extra) || b < 0) throw ConfigError(path + ": bad line '" + line + "'");
    d.beta[k] = b;
  }
  return d;
}

void transfer_symmetry(const Problem& problem, PipelineResult& result) {
  struct Known {
    Eigen::VectorXd a;
    const EquilibriumCertificate* cert;
  };
  std::vector<Known> known;
  result.zeta.clear();
  result.ambiguous_images = 0;
  for (auto& s : result.states) {
    s.orbit_size = 0;
    const auto& c = s.stored.cert;
    if (c.status != CertStatus::certified || !s.stored.index || !s.stored.index->conclusive) continue;
    for (const Eigen::VectorXd& g : problem.symmetry_orbit(c.abar, c.m)) {
      bool fresh = true;
      for (const Known& k : known) {
        const std::size_t mc = std::max(c.m, k.cert->m);
        const double d = c.m == k.cert->m ? problem.distance(g, k.a, c.nu, mc)
                                          : problem.distance(problem.resize(g, c.m, mc),
                                                             problem.resize(k.a, k.cert->m, mc), c.nu, mc);
        if (d > add_up(c.r0, k.cert->r0)) continue;
        fresh = false;
        const double reach = std::max(add_up(c.r0, d), k.cert->r0);
        const bool same = reach <= 1.0 && radii_poly(k.cert->bounds, Interval(reach)).negative();
        if (!same) ++result.ambiguous_images;
        break;
      }
      if (!fresh) continue;
      known.push_back({g, &c});
      ++s.orbit_size;
      ++result.zeta[s.stored.index->relative_index];
    }
  }
  result.distinct_states = known.size();
}

PipelineResult run_pipeline(const RunConfig& cfg, std::ostream& log) {
  PipelineResult r;
  std::unique_ptr<Problem> problem, base_problem;
  std::vector<Eigen::VectorXd> seeds;
  try {
    if (!(cfg.nu >= 1.0)) throw ConfigError("nu must be >= 1");
    if (cfg.m < 2) throw ConfigError("m must be >= 2");
    if (cfg.seed_files.empty()) throw ConfigError("no seed files given");
    problem = make_problem(cfg.problem_id, cfg.parameters);
    base_problem = make_base_problem(cfg.problem_id, cfg.parameters);
    for (const auto& f : cfg.seed_files) seeds.push_back(problem->from_coefficients(read_coefficients(f), cfg.m));
  } catch (const Error& e) {
    r.exit_code = kExitConfig;
    r.errors.push_back(e.what());
    log << "config error: " << e.what() << '\n';
    return r;
  }
  const int threads = thread_count(cfg.threads);

  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(base_problem->dimension(cfg.m)));
  r.base.cert = certify(*base_problem, zero, cfg.nu, cfg.m);
  if (r.base.cert.status != CertStatus::certified) {
    r.exit_code = kExitCertification;
    r.errors.push_back("base point: " + r.base.cert.message);
    log << "base point failed to certify: " << r.base.cert.message << '\n';
    return r;
  }

  r.states.resize(seeds.size());
  std::mutex log_mutex;
  parallel_for(seeds.size(), threads, [&](std::size_t i) {
    StateRecord& s = r.states[i];
    s.name = stem_of(cfg.seed_files[i]);
    Eigen::VectorXd abar = seeds[i];
    std::size_t m = cfg.m;
    while (true) {
      std::string note;
      if (cfg.newton) {
        const NewtonResult nr = newton_solve(*problem, abar, m);
        s.newton_residual = nr.residual;
        if (nr.converged) abar = nr.a;
        else note = "newton: " + nr.message + "; ";
      } else {
        s.newton_residual = problem->residual(abar, m).lpNorm<Eigen::Infinity>();
      }
      s.stored.cert = certify(*problem, abar, cfg.nu, m);
      if (!note.empty()) s.stored.cert.message = note + s.stored.cert.message;
      if (s.stored.cert.status == CertStatus::certified || m + cfg.m_step > cfg.m_max || cfg.m_step == 0) break;
      abar = problem->resize(abar, m, m + cfg.m_step);
      m += cfg.m_step;
    }
    if (s.stored.cert.status == CertStatus::certified) {
      IndexRecord rec;
      rec.base = "base";
      try {
        const IndexCertificate ic = relative_index(*problem, s.stored.cert, *base_problem, r.base.cert);
        rec.relative_index = ic.relative_index;
        rec.positive_count = ic.n_a;
        rec.base_count = ic.n_b;
        rec.m_common = ic.m_common;
        rec.conclusive = true;
      } catch (const IndexError&) {
        rec.conclusive = false;
      }
      s.stored.index = rec;
    }
    const std::lock_guard<std::mutex> lock(log_mutex);
    log << s.name << ": " << (s.stored.cert.status == CertStatus::certified ? "certified" : "FAILED");
    if (s.stored.cert.status == CertStatus::certified) {
      log << " r0=" << s.stored.cert.r0;
      if (s.stored.index->conclusive) log << " index=" << s.stored.index->relative_index;
      else log << " index=inconclusive";
    } else {
      log << " (" << s.stored.cert.message << ")";
    }
    log << '\n';
  });

  bool cert_failed = false, index_failed = false;
  for (const auto& s : r.states) {
    if (s.stored.cert.status != CertStatus::certified) {
      cert_failed = true;
      r.errors.push_back(s.name + ": " + s.stored.cert.message);
    } else if (!s.stored.index->conclusive) {
      index_failed = true;
      r.errors.push_back(s.name + ": eigenvalue count inconclusive");
    }
  }
  transfer_symmetry(*problem, r);

  if (!cfg.betti_file.empty()) {
    try {
      const BettiData b = read_betti(cfg.betti_file);
      r.forcing = forcing_lower_bound({r.zeta, b.beta, b.provenance});
    } catch (const Error& e) {
      r.exit_code = kExitConfig;
      r.errors.push_back(e.what());
    }
  }
  if (r.exit_code == kExitOk) r.exit_code = cert_failed ? kExitCertification : index_failed ? kExitIndex : kExitOk;

  if (!cfg.out_dir.empty()) {
    const fs::path out(cfg.out_dir);
    fs::create_directories(out / "certs");
    if (cfg.plots) fs::create_directories(out / "plots");
    write_certificate((out / "certs" / "base.json").string(), r.base);
    for (const auto& s : r.states) {
      write_certificate((out / "certs" / (s.name + ".json")).string(), s.stored);
      if (cfg.plots && s.stored.cert.status == CertStatus::certified)
        write_plot(*problem, s.stored.cert, out / "plots" / (s.name + ".txt"));
    }
    std::ofstream mf(out / "manifest.json");
    mf << manifest_json(cfg, r).dump(1) << '\n';
    if (r.forcing) {
      std::ofstream ff(out / "forcing.txt");
      ff << format_report(*r.forcing);
    }
  }
  log << "distinct equilibria: " << r.distinct_states << ", ambiguous images: " << r.ambiguous_images << '\n';
  if (r.forcing) log << format_report(*r.forcing);
  return r;
}

}  // namespace relindex
