#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "relindex/index.hpp"
#include "relindex/interval_matrix.hpp"
#include "relindex/seqspace.hpp"

using namespace relindex;

namespace {

std::vector<double> decaying(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = g(rng) / (1.0 + static_cast<double>(k * k));
  return v;
}

Eigen::MatrixXd random_matrix(Eigen::Index n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = g(rng);
  return a;
}

}  // namespace

static void BM_Cube1D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CosSeq a = CosSeq::from_doubles(decaying(n, 1), 1.01);
  for (auto _ : state) {
    auto r = cube(a);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}

static void BM_Cube2D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Cos2Seq a = Cos2Seq::from_doubles(n, decaying(n * n, 2), 1.0);
  for (auto _ : state) {
    auto r = cube(a);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}

static void BM_IntervalGemm(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const Eigen::MatrixXd a = random_matrix(n, 3);
  const Eigen::MatrixXd b = random_matrix(n, 4);
  for (auto _ : state) {
    auto r = multiply(a, b);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * n * n * n);
}

static void BM_CountPositive(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  Eigen::MatrixXd a = random_matrix(n, 5);
  a = (a + a.transpose()).eval();
  const IntervalMatrix m(a);
  for (auto _ : state) {
    auto r = count_positive(m);
    benchmark::DoNotOptimize(r);
  }
}

BENCHMARK(BM_Cube1D)->Arg(50)->Arg(100)->Arg(200)->Complexity();
BENCHMARK(BM_Cube2D)->Arg(10)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntervalGemm)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountPositive)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
