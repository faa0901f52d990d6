// Serial reference against OpenMP for each kernel, on inputs taken from the
// pipeline (Q_3 of the cinquefoil, its cover group, G_5 of the trefoil) and
// on a larger Alexander quandle.

#include <benchmark/benchmark.h>

#include "qf/core/finite_group.hpp"
#include "qf/harness/pipeline.hpp"
#include "qf/homology/quandle_homology.hpp"
#include "qf/kernels.hpp"

namespace {

using namespace qf;


const harness::PipelineResult& cinquefoil() {
  static const auto r = [] {
    harness::PipelineOptions o;
    o.n = 3;
    return harness::run_pipeline(harness::parse_knot_spec("catalog:5_1", harness::builtin_catalog()), o);
  }();
  return r;
}

// Z/p with x*y = 2x - y; large enough for the thread pool to matter.
const std::vector<Element>& alexander_table() {
  static const auto t = [] {
    constexpr std::size_t p = 61;
    std::vector<Element> q(p * p);
    for (std::size_t x = 0; x < p; ++x) {
      for (std::size_t y = 0; y < p; ++y) q[x * p + y] = static_cast<Element>((2 * x + p - y) % p);
    }
    return q;
  }();
  return t;
}
constexpr std::size_t kAlexanderSize = 61;

const CosetTable& trefoil_g5() {
  static const auto t = [] {
    harness::PipelineOptions o;
    o.n = 5;
    const auto r = harness::run_pipeline(harness::parse_knot_spec("catalog:3_1", harness::builtin_catalog()), o);
    return todd_coxeter(g_n_presentation(*r.artifacts->peripheral, 5), {});
  }();
  return t;
}

template <bool Parallel>
void BM_AxiomCheck(benchmark::State& state) {
  const auto& t = alexander_table();
  for (auto _ : state) {
    auto w = Parallel ? kernels::omp::first_axiom_violation(t, kAlexanderSize)
                      : kernels::serial::first_axiom_violation(t, kAlexanderSize);
    benchmark::DoNotOptimize(w);
  }
}

template <bool Parallel>
void BM_QuandleD3(benchmark::State& state) {
  const auto& t = alexander_table();
  for (auto _ : state) {
    auto d = Parallel ? kernels::omp::quandle_d3(t, kAlexanderSize) : kernels::serial::quandle_d3(t, kAlexanderSize);
    benchmark::DoNotOptimize(d.data());
  }
}

template <bool Parallel>
void BM_ProductIsZero(benchmark::State& state) {
  static const auto c = boundaries(*cinquefoil().artifacts->quandle);
  for (auto _ : state) {
    bool z = Parallel ? kernels::omp::product_is_zero(c.d2, c.d3) : kernels::serial::product_is_zero(c.d2, c.d3);
    benchmark::DoNotOptimize(z);
  }
}

template <bool Parallel>
void BM_Galex(benchmark::State& state) {
  const auto& cover = *cinquefoil().artifacts->cover;
  const auto& g = *cover.pi1;
  for (auto _ : state) {
    auto t = Parallel ? kernels::omp::galex_table(g.mult_table(), g.inverse(), cover.phi.map(), g.order())
                      : kernels::serial::galex_table(g.mult_table(), g.inverse(), cover.phi.map(), g.order());
    benchmark::DoNotOptimize(t.data());
  }
}

template <bool Parallel>
void BM_WordAction(benchmark::State& state) {
  const auto& t = trefoil_g5();
  std::vector<std::vector<int>> words;
  for (std::size_t c = 0; c < t.cosets; ++c) words.push_back(t.columns(t.representatives[c]));
  for (auto _ : state) {
    auto img = Parallel ? kernels::omp::word_action_table(t.action, words, t.cosets)
                        : kernels::serial::word_action_table(t.action, words, t.cosets);
    benchmark::DoNotOptimize(img.data());
  }
}

}  // namespace

BENCHMARK(BM_AxiomCheck<false>)->Name("axiom_check/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AxiomCheck<true>)->Name("axiom_check/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QuandleD3<false>)->Name("quandle_d3/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuandleD3<true>)->Name("quandle_d3/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ProductIsZero<false>)->Name("product_is_zero/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductIsZero<true>)->Name("product_is_zero/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Galex<false>)->Name("galex_table/serial")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Galex<true>)->Name("galex_table/omp")->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_WordAction<false>)->Name("word_action_table/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WordAction<true>)->Name("word_action_table/omp")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
