#include <benchmark/benchmark.h>

#include "phaserqa/embedding.hpp"
#include "phaserqa/preprocess.hpp"
#include "phaserqa/rqa.hpp"
#include "phaserqa/signals.hpp"

using namespace phaserqa;

static void BM_RecurrenceMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto emb = embedding::utde_embed(signals::gen_lorenz_x({}, n + 40), {6, 8});
  for (auto _ : state) benchmark::DoNotOptimize(rqa::recurrence_matrix(emb, 5.0));
}
BENCHMARK(BM_RecurrenceMatrix)->Arg(500)->Arg(2000);

static void BM_RqaAll(benchmark::State& state) {
  const auto x = signals::gen_lorenz_x({}, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rqa::rqa_all(x, {6, 8}, 5.0));
}
BENCHMARK(BM_RqaAll)->Arg(500)->Arg(2000);

static void BM_Cao(benchmark::State& state) {
  const auto x = signals::gen_lorenz_x({}, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(embedding::cao_curves(x, 10, 12));
}
BENCHMARK(BM_Cao)->Arg(5000);

static void BM_DefaultSweep(benchmark::State& state) {
  const auto x = signals::gen_lorenz_x({}, 500);
  const auto ms = rqa::integer_range(1, 10), taus = rqa::integer_range(1, 10);
  const auto eps = rqa::linear_range(0.2, 3.0, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(rqa::sweep(x, ms, taus, eps));
}
BENCHMARK(BM_DefaultSweep)->Unit(benchmark::kMillisecond);

static void BM_SgSmooth(benchmark::State& state) {
  const auto x = signals::gen_brownian(1, 10000);
  const preprocess::SmoothingSpec spec{5, static_cast<std::size_t>(state.range(0)), 0};
  for (auto _ : state) benchmark::DoNotOptimize(preprocess::sg_smooth(x, spec));
}
BENCHMARK(BM_SgSmooth)->Arg(29)->Arg(159);
BENCHMARK_MAIN();
