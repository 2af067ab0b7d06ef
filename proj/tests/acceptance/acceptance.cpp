#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "relindex/index.hpp"
#include "relindex/pipeline.hpp"
#include "relindex/problem_cr.hpp"
#include "relindex/prover.hpp"

using namespace relindex;
namespace fs = std::filesystem;

namespace {

const std::string kData = RELINDEX_DATA_DIR;

class Report {
 public:
  explicit Report(std::set<int> known) : known_(std::move(known)) {}

  // Supplementary lines are never exempted by a known deviation.
  void add(int id, const std::string& label, bool pass, const std::string& detail, bool supplementary = false) {
    const bool exempt = known_.count(id) && !supplementary;
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << id << (supplementary ? "+" : "") << "] " << label << ": "
              << detail << std::endl;
    if (!pass && !exempt) ++unexpected_;
    if (!pass && exempt) std::cout << "      (known deviation, see README)" << std::endl;
  }
  int unexpected() const { return unexpected_; }

 private:
  std::set<int> known_;
  int unexpected_ = 0;
};

std::vector<std::string> seed_files(const std::string& problem, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(kData + "/seeds/" + problem + "/" + n + ".txt");
  return out;
}

std::vector<std::string> all_seeds(const std::string& problem) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(kData + "/seeds/" + problem)) out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sci(double x) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << x;
  return s.str();
}

std::string multiset(const std::vector<int>& v) {
  std::ostringstream s;
  s << "{";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << "}";
  return s.str();
}

std::string zeta_string(const std::map<int, long>& z) {
  std::ostringstream s;
  for (const auto& [k, n] : z) s << k << ":" << n << " ";
  return s.str();
}

bool all_certified(const PipelineResult& r) {
  for (const auto& s : r.states)
    if (s.stored.cert.status != CertStatus::certified || !s.stored.index || !s.stored.index->conclusive) return false;
  return !r.states.empty();
}

bool homotopy_ok(const PipelineResult& r) {
  for (const auto& s : r.states)
    if (s.stored.cert.status == CertStatus::certified && !s.stored.cert.homotopy.passed) return false;
  return true;
}

std::vector<int> indices(const PipelineResult& r) {
  std::vector<int> v;
  for (const auto& s : r.states)
    if (s.stored.index) v.push_back(s.stored.index->relative_index);
  std::sort(v.begin(), v.end());
  return v;
}

const StateRecord* find(const PipelineResult& r, const std::string& name) {
  for (const auto& s : r.states)
    if (s.name == name) return &s;
  return nullptr;
}

bool homotopy_everywhere = true;

void criteria_cr(Report& rep) {
  RunConfig cfg;
  cfg.problem_id = "cr";
  cfg.parameters = {{"lambda1", 6.0}, {"lambda2", 6.0}};
  cfg.nu = 1.01;
  cfg.m = 100;
  cfg.seed_files = all_seeds("cr");
  cfg.betti_file = kData + "/betti/cr.txt";
  std::ostringstream log;
  const auto t0 = std::chrono::steady_clock::now();
  const PipelineResult r = run_pipeline(cfg, log);
  const double t = seconds_since(t0);
  homotopy_everywhere = homotopy_everywhere && homotopy_ok(r);

  const std::vector<int> idx = indices(r);
  double r1 = 0.0, r2 = 0.0;
  for (const char* n : {"u1_plus", "u1_minus"})
    if (const StateRecord* s = find(r, n)) r1 = std::max(r1, s->stored.cert.r0);
  for (const char* n : {"u2_plus", "u2_minus"})
    if (const StateRecord* s = find(r, n)) r2 = std::max(r2, s->stored.cert.r0);
  const bool ok = r.exit_code == kExitOk && r.states.size() == 7 && all_certified(r) &&
                  idx == std::vector<int>{0, 0, 1, 1, 2, 2, 3} && r1 > 0 && r1 <= 5e-11 && r2 > 0 && r2 <= 5e-13 &&
                  t <= 60.0;
  std::ostringstream d;
  d << r.states.size() << " certified, indices " << multiset(idx) << ", r0(u1)=" << sci(r1) << ", r0(u2)=" << sci(r2)
    << ", " << std::fixed << std::setprecision(1) << t << " s";
  rep.add(1, "CR reproduction m=100", ok, d.str());

  const bool fok = r.forcing && r.forcing->lower_bound == 3 && r.zeta == std::map<int, long>{{0, 2}, {1, 2}, {2, 2}, {3, 1}};
  rep.add(2, "CR forcing", fok,
          "zeta " + zeta_string(r.zeta) + "-> lower bound " + (r.forcing ? std::to_string(r.forcing->lower_bound) : "none"));
}

void criterion_ok(Report& rep) {
  RunConfig cfg;
  cfg.problem_id = "ok";
  cfg.parameters = {{"lambda1", 9.0}, {"lambda2", 9.0}, {"lambda3", 4.5}};
  cfg.nu = 1.01;
  cfg.m = 40;
  cfg.seed_files = all_seeds("ok");
  cfg.betti_file = kData + "/betti/ok.txt";
  std::ostringstream log;
  const auto t0 = std::chrono::steady_clock::now();
  const PipelineResult r = run_pipeline(cfg, log);
  const double t = seconds_since(t0);
  homotopy_everywhere = homotopy_everywhere && homotopy_ok(r);

  const std::vector<int> idx = indices(r);
  double rmax = 0.0;
  for (const auto& s : r.states) rmax = std::max(rmax, s.stored.cert.r0);
  const bool ok = r.exit_code == kExitOk && r.states.size() == 9 && all_certified(r) &&
                  idx == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1, 2} && rmax <= 1e-12 && r.forcing &&
                  r.forcing->lower_bound == 4 && t <= 60.0;
  std::ostringstream d;
  d << r.states.size() << " certified, indices " << multiset(idx) << ", max r0=" << sci(rmax) << ", forcing "
    << (r.forcing ? r.forcing->lower_bound : -1) << ", " << std::fixed << std::setprecision(1) << t << " s";
  rep.add(3, "OK reproduction m=40", ok, d.str());
}

// Indices printed above the graphs of the seventeen representatives.
const std::vector<std::pair<std::string, int>> kTwRepresentatives{
    {"const_plus", 0}, {"index02_a", 2}, {"index02_b", 2}, {"index03", 3},   {"index04", 4},   {"index05_a", 5},
    {"index05_b", 5},  {"index05_c", 5}, {"index06_a", 6}, {"index06_b", 6}, {"index07", 7},   {"index08_a", 8},
    {"index08_b", 8},  {"index10", 10},  {"index11", 11},  {"index12", 12},  {"zero", 13}};

const std::map<int, long> kTwZeta{{0, 2}, {2, 8}, {3, 8}, {4, 8}, {5, 8}, {6, 12},
                                  {7, 8}, {8, 6}, {10, 4}, {11, 4}, {12, 2}, {13, 1}};

struct TwSummary {
  bool pass = false;
  std::string detail;
};

TwSummary run_tw(std::size_t m_max) {
  RunConfig cfg;
  cfg.problem_id = "tw";
  cfg.parameters = {{"lambda", 12.0}, {"c", 1.0}};
  cfg.nu = 1.0 + 1e-8;
  cfg.m = 20;
  cfg.m_max = m_max;
  std::vector<std::string> names;
  for (const auto& [n, k] : kTwRepresentatives) names.push_back(n);
  cfg.seed_files = seed_files("tw", names);
  cfg.betti_file = kData + "/betti/tw.txt";
  std::ostringstream log;
  const auto t0 = std::chrono::steady_clock::now();
  const PipelineResult r = run_pipeline(cfg, log);
  const double t = seconds_since(t0);
  homotopy_everywhere = homotopy_everywhere && homotopy_ok(r);

  int certified = 0, matching = 0;
  double c0max = 0.0;
  std::vector<std::string> failed;
  for (const auto& [n, k] : kTwRepresentatives) {
    const StateRecord* s = find(r, n);
    if (!s || s->stored.cert.status != CertStatus::certified) {
      failed.push_back(n);
      continue;
    }
    ++certified;
    c0max = std::max(c0max, c0_error(s->stored.cert));
    if (s->stored.index && s->stored.index->conclusive && s->stored.index->relative_index == k) ++matching;
  }
  const std::size_t homogeneous = 3;
  const std::size_t nonhomogeneous = r.distinct_states >= homogeneous ? r.distinct_states - homogeneous : 0;
  TwSummary out;
  out.pass = certified == 17 && matching == 17 && c0max <= 3e-5 && nonhomogeneous == 68 && r.zeta == kTwZeta &&
             r.forcing && r.forcing->lower_bound == 35 && r.ambiguous_images == 0 && t <= 1800.0;
  std::ostringstream d;
  d << certified << "/17 certified, " << matching << " indices match, max C0 error " << sci(c0max) << ", "
    << nonhomogeneous << " nonhomogeneous states, forcing " << (r.forcing ? r.forcing->lower_bound : -1) << ", "
    << std::fixed << std::setprecision(1) << t << " s";
  if (!failed.empty()) {
    d << "; not certified:";
    for (const auto& f : failed) d << " " << f;
  }
  d << "; zeta " << zeta_string(r.zeta);
  out.detail = d.str();
  return out;
}

void criterion_tw(Report& rep) {
  const TwSummary strict = run_tw(0);
  rep.add(4, "TW reproduction m=20", strict.pass, strict.detail);
  const TwSummary escalated = run_tw(24);
  rep.add(4, "TW reproduction m=20, escalating to m<=24 on failure", escalated.pass, escalated.detail, true);
}

void criterion_oracle(Report& rep) {
  const CRProblem p(CRParams{6.0, 6.0});
  const CRProblem base(CRParams{-1.0, 0.0});
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p.dimension(5)));
  const EigenEnclosure ea = count_positive(p.index_block(zero, 5, 5));
  const EigenEnclosure eb = count_positive(base.index_block(zero, 5, 5));
  // The certified relative index comes from m=100 certificates of the same states.
  const Eigen::VectorXd z = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p.dimension(100)));
  const EquilibriumCertificate ca = certify(p, z, 1.01, 100);
  const EquilibriumCertificate cb = certify(base, z, 1.01, 100);
  int rel = -1;
  if (ca.status == CertStatus::certified && cb.status == CertStatus::certified)
    rel = relative_index(p, ca, base, cb).relative_index;
  const int diff = ea.positive_count - eb.positive_count;
  const bool ok = ea.conclusive && eb.conclusive && ea.positive_count == 7 && eb.positive_count == 4 && diff == 3 &&
                  rel == 3;
  rep.add(5, "CR zero state eigenvalue count m=5", ok,
          "positive " + std::to_string(ea.positive_count) + ", base " + std::to_string(eb.positive_count) +
              ", difference " + std::to_string(diff) + ", certified relative index " + std::to_string(rel));
}

void criterion_properties(Report& rep, const std::string& unit_tests) {
  if (unit_tests.empty()) {
    rep.add(6, "property suites", false, "unit test binary not given (--unit-tests)");
    return;
  }
  const std::string filter =
      "Seqspace.BanachAlgebraInequality:Seqspace.ConvolutionMatchesBruteForce*:Seqspace.OperatorNorm*:"
      "Index.GershgorinCountMatchesCharacteristicPolynomial:*.JacobianMatchesFiniteDifferences:Index.PaddingInvariance*:"
      "Prover.HomotopyMarginsPositiveWhenCertified";
  const std::string cmd = "\"" + unit_tests + "\" --gtest_brief=1 --gtest_filter='" + filter + "' > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  const bool ok = rc == 0 && homotopy_everywhere;
  rep.add(6, "property suites", ok,
          std::string("unit property tests ") + (rc == 0 ? "passed" : "failed") + ", homotopy margins " +
              (homotopy_everywhere ? "positive on every certified run" : "violated"));
}

class FixedZ0 : public CRProblem {
 public:
  FixedZ0() : CRProblem(CRParams{6.0, 6.0}) {}
  RadiiBounds bounds(const Eigen::VectorXd& a, double nu, std::size_t m) const override {
    RadiiBounds b = CRProblem::bounds(a, nu, m);
    b.Z0 = Interval(1.0, 1.0);
    return b;
  }
};

void criterion_negative(Report& rep) {
  const FixedZ0 p;
  Eigen::VectorXd a = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p.dimension(10)));
  a[0] = 1.0;
  const EquilibriumCertificate c = certify(p, a, 1.01, 10);
  const bool refused = c.status == CertStatus::failed;

  RunConfig cfg;
  cfg.problem_id = "cr";
  cfg.parameters = {{"lambda1", 1.0000000000001}, {"lambda2", 6.0}};
  cfg.m = 10;
  cfg.seed_files = seed_files("cr", {"zero"});
  std::ostringstream log;
  const PipelineResult r = run_pipeline(cfg, log);
  const bool inconclusive = r.states.size() == 1 && r.states[0].stored.cert.status == CertStatus::certified &&
                            r.exit_code == kExitIndex;
  rep.add(7, "negative controls", refused && inconclusive,
          std::string("Z0=1 ") + (refused ? "refused" : "accepted") + ", straddling disk exit code " +
              std::to_string(r.exit_code));
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  std::string unit_tests;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--known-deviation" && i + 1 < argc) {
      known.insert(std::atoi(argv[++i]));
    } else if (arg == "--unit-tests" && i + 1 < argc) {
      unit_tests = argv[++i];
    } else {
      std::cerr << "usage: relindex_acceptance [--known-deviation N]... [--unit-tests PATH]\n";
      return 4;
    }
  }
  Report rep(known);
  criteria_cr(rep);
  criterion_ok(rep);
  criterion_tw(rep);
  criterion_oracle(rep);
  criterion_properties(rep, unit_tests);
  criterion_negative(rep);
  std::cout << (rep.unexpected() == 0 ? "acceptance: no unexpected failures" : "acceptance: unexpected failures")
            << std::endl;
  return rep.unexpected() == 0 ? 0 : 1;
}
