#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relindex/certificate_io.hpp"
#include "relindex/forcing.hpp"
#include "relindex/problem.hpp"

namespace relindex {

enum ExitCode : int { kExitOk = 0, kExitCertification = 2, kExitIndex = 3, kExitConfig = 4 };

struct RunConfig {
  std::string problem_id;
  std::map<std::string, double> parameters;
  double nu = 1.01;
  std::size_t m = 0;
  std::size_t m_max = 0;  // > m: failed certifications are retried at m + step up to m_max
  std::size_t m_step = 4;
  std::vector<std::string> seed_files;
  std::string out_dir;  // empty: nothing is written
  bool newton = true;
  bool plots = true;
  std::string betti_file;
  int threads = 0;  // 0: RELINDEX_THREADS or hardware concurrency
};

/// Throws ConfigError for unknown problems or parameter names.
std::unique_ptr<Problem> make_problem(const std::string& id, const std::map<std::string, double>& params);
/// The linear base point psi(u) = -u of the same family.
std::unique_ptr<Problem> make_base_problem(const std::string& id, const std::map<std::string, double>& params);

struct StateRecord {
  std::string name;
  StoredCertificate stored;
  double newton_residual = 0.0;
  std::size_t orbit_size = 0;
};

struct PipelineResult {
  int exit_code = kExitOk;
  std::vector<StateRecord> states;
  StoredCertificate base;
  std::map<int, long> zeta;
  std::size_t distinct_states = 0;
  std::size_t ambiguous_images = 0;
  std::optional<ForcingReport> forcing;
  std::vector<std::string> errors;
};

struct BettiData {
  std::map<int, long> beta;
  std::string provenance;
};

/// `k beta_k` per line; `# provenance: ...` lines are collected.
BettiData read_betti(const std::string& path);

/// Orbit-aware deduplication: counts distinct certified equilibria per index.
/// Images closer than the certificates can separate are counted as ambiguous and skipped.
void transfer_symmetry(const Problem& problem, PipelineResult& result);

/// seeds -> Newton -> certify -> homotopy check -> relative index -> symmetry
/// transfer -> manifest, plots and (with Betti data) the forcing report.
PipelineResult run_pipeline(const RunConfig& config, std::ostream& log);

int thread_count(int requested);

}  // namespace relindex
