#include <benchmark/benchmark.h>

#include <random>

#include "acx/checks.hpp"
#include "acx/report.hpp"

using namespace acx;

namespace {

Matrix random_matrix(int rows, int cols, uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Scalar(num(rng), den(rng), num(rng), den(rng));
  return m;
}

const Model& model_for(const std::string& name) {
  static std::map<std::string, Model> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, build_model(example_catalog(name))).first;
  return it->second;
}

}  // namespace

static void BM_rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix m = random_matrix(n, n + 4, 42);
  for (auto _ : state) benchmark::DoNotOptimize(m.reduced_echelon().rank);
  state.SetComplexityN(n);
}
BENCHMARK(BM_rref)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void BM_laplacian_assembly(benchmark::State& state) {
  const Model& kt = model_for("kt");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // rebuild contexts so the per-degree caches do not amortize away
    const Metric metric = Metric::frame_identity(*kt.acs);
    const OperatorContext ctx(*kt.acs, &metric, kt.symplectic.get());
    benchmark::DoNotOptimize(laplacian_matrix(ctx, HarmonicOp::DplusDc, k));
  }
}
BENCHMARK(BM_laplacian_assembly)->DenseRange(0, 4);

static void BM_harmonic_table_kt(benchmark::State& state) {
  const Model& kt = model_for("kt");
  for (auto _ : state) {
    const OperatorContext ctx = kt.context();
    benchmark::DoNotOptimize(
        h_table(ctx, {HarmonicOp::DplusDc, HarmonicOp::DDc}, 0, 4));
  }
}
BENCHMARK(BM_harmonic_table_kt);

static void BM_harmonic_degree3_nakamura(benchmark::State& state) {
  const Model& nk = model_for("nakamura_j1");
  for (auto _ : state) {
    const OperatorContext ctx = nk.context();
    benchmark::DoNotOptimize(harmonic_space(ctx, HarmonicOp::DplusDc, 3));
  }
}
BENCHMARK(BM_harmonic_degree3_nakamura);

static void BM_identity_suite_kt(benchmark::State& state) {
  const Model& kt = model_for("kt");
  for (auto _ : state)
    benchmark::DoNotOptimize(operator_identity_checks(kt.context()).all_ok());
}
BENCHMARK(BM_identity_suite_kt);

static void BM_bott_chern_table(benchmark::State& state) {
  const Model& kt = model_for("kt");
  for (auto _ : state) {
    Cohomology coh(*kt.acs);
    int total = 0;
    for (int k = 0; k <= 4; ++k) total += coh.bott_chern(k).dim;
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_bott_chern_table);

static void BM_growth_witness(benchmark::State& state) {
  const Model& kt = model_for("kt");
  const int freq = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(bc_growth_witness(*kt.acs, freq));
}
BENCHMARK(BM_growth_witness)->DenseRange(0, 5);

BENCHMARK_MAIN();
