#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <Eigen/Dense>

#include "relindex/newton.hpp"
#include "relindex/pipeline.hpp"
#include "relindex/problem_ok.hpp"

using namespace relindex;
namespace fs = std::filesystem;

namespace {

const std::string kData = RELINDEX_DATA_DIR;

std::vector<std::string> seeds(const std::string& problem) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(kData + "/seeds/" + problem)) out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("relindex_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Pipeline, MakeProblemValidatesNames) {
  EXPECT_THROW(make_problem("xx", {}), ConfigError);
  EXPECT_THROW(make_problem("cr", {{"lambda", 1.0}}), ConfigError);
  EXPECT_THROW(make_problem("tw", {{"c", -1.0}}), ConfigError);
  EXPECT_EQ(make_problem("ok", {})->parameters().at("lambda3"), 4.5);
  EXPECT_EQ(make_base_problem("tw", {{"c", 2.0}})->parameters().at("lambda"), -1.0);
}

TEST(Pipeline, MalformedConfigExitsFour) {
  std::ostringstream log;
  RunConfig cfg;
  cfg.problem_id = "cr";
  cfg.m = 10;
  EXPECT_EQ(run_pipeline(cfg, log).exit_code, kExitConfig);
  cfg.seed_files = {"/nonexistent/seed.txt"};
  EXPECT_EQ(run_pipeline(cfg, log).exit_code, kExitConfig);
  cfg.seed_files = seeds("cr");
  cfg.nu = 0.5;
  EXPECT_EQ(run_pipeline(cfg, log).exit_code, kExitConfig);
  cfg.nu = 1.01;
  cfg.problem_id = "nope";
  EXPECT_EQ(run_pipeline(cfg, log).exit_code, kExitConfig);
}

TEST(Pipeline, CRRunWritesManifestAndForcing) {
  const fs::path out = scratch("cr");
  RunConfig cfg;
  cfg.problem_id = "cr";
  cfg.parameters = {{"lambda1", 6.0}, {"lambda2", 6.0}};
  cfg.m = 60;
  cfg.seed_files = seeds("cr");
  cfg.out_dir = out.string();
  cfg.betti_file = kData + "/betti/cr.txt";
  std::ostringstream log;
  const PipelineResult r = run_pipeline(cfg, log);
  EXPECT_EQ(r.exit_code, kExitOk) << log.str();
  EXPECT_EQ(r.distinct_states, 7u);
  EXPECT_EQ(r.ambiguous_images, 0u);
  ASSERT_TRUE(r.forcing.has_value());
  EXPECT_EQ(r.forcing->lower_bound, 3);
  EXPECT_TRUE(fs::exists(out / "manifest.json"));
  EXPECT_TRUE(fs::exists(out / "forcing.txt"));
  EXPECT_TRUE(fs::exists(out / "plots" / "u1_plus.txt"));
  const StoredCertificate c = read_certificate((out / "certs" / "zero.json").string());
  ASSERT_TRUE(c.index.has_value());
  EXPECT_EQ(c.index->relative_index, 3);
  for (const auto& s : r.states) EXPECT_TRUE(s.stored.cert.homotopy.passed) << s.name;
}

TEST(Pipeline, IndexInconclusiveExitsThree) {
  RunConfig cfg;
  cfg.problem_id = "cr";
  cfg.parameters = {{"lambda1", 1.0000000000001}, {"lambda2", 6.0}};
  cfg.m = 10;
  cfg.seed_files = {kData + "/seeds/cr/zero.txt"};
  std::ostringstream log;
  const PipelineResult r = run_pipeline(cfg, log);
  ASSERT_EQ(r.states.size(), 1u);
  EXPECT_EQ(r.states[0].stored.cert.status, CertStatus::certified);
  EXPECT_EQ(r.exit_code, kExitIndex) << log.str();
}

TEST(Pipeline, CertificationFailureExitsTwo) {
  const fs::path dir = scratch("bad_seed");
  fs::create_directories(dir);
  // Far from any equilibrium and Newton disabled.
  std::ofstream(dir / "junk.txt") << "0 0.3\n1 0.7\n2 -0.4\n";
  RunConfig cfg;
  cfg.problem_id = "ok";
  cfg.m = 20;
  cfg.newton = false;
  cfg.seed_files = {(dir / "junk.txt").string()};
  std::ostringstream log;
  // Mode 0 is nonzero, so this is a configuration error first.
  EXPECT_EQ(run_pipeline(cfg, log).exit_code, kExitConfig);
  std::ofstream(dir / "junk.txt") << "1 0.7\n2 -0.4\n";
  EXPECT_EQ(run_pipeline(cfg, log).exit_code, kExitCertification);
}

TEST(Pipeline, BettiParsing) {
  const BettiData b = read_betti(kData + "/betti/tw.txt");
  EXPECT_EQ(b.beta.at(0), 1);
  EXPECT_FALSE(b.provenance.empty());
  const fs::path dir = scratch("betti");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.txt") << "0 1 2\n";
  EXPECT_THROW(read_betti((dir / "bad.txt").string()), ConfigError);
}

TEST(Pipeline, ThreadCountFromEnvironment) {
  EXPECT_EQ(thread_count(3), 3);
  setenv("RELINDEX_THREADS", "2", 1);
  EXPECT_EQ(thread_count(0), 2);
  unsetenv("RELINDEX_THREADS");
  EXPECT_GE(thread_count(0), 1);
}

TEST(Newton, ConvergesFromPerturbedSolution) {
  const OKProblem p(OKParams{});
  Eigen::VectorXd g = Eigen::VectorXd::Zero(19);
  g[1] = 0.38;
  const NewtonResult r = newton_solve(p, g, 20);
  ASSERT_TRUE(r.converged) << r.message;
  EXPECT_LT(r.residual, 1e-10);
  EXPECT_NEAR(std::abs(r.a[1]), 0.385732, 1e-5);
}

TEST(Newton, ContinuationKeepsIndexAlongBranch) {
  auto factory = [](double l) { return std::make_unique<OKProblem>(OKParams{9.0, l, 4.5}); };
  Eigen::VectorXd g = Eigen::VectorXd::Zero(29);
  g[1] = 0.3857;
  const NewtonResult start = newton_solve(*factory(9.0), g, 30);
  ASSERT_TRUE(start.converged);
  const BranchResult br = continue_branch(factory, start.a, 30, 9.0, 8.0, 0.25, 1.01);
  ASSERT_FALSE(br.truncated) << br.message;
  ASSERT_EQ(br.points.size(), 5u);
  for (const auto& pt : br.points) {
    ASSERT_TRUE(pt.index.has_value());
    EXPECT_EQ(*pt.index, 0);
  }
}
