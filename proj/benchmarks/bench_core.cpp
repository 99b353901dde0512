#include <benchmark/benchmark.h>

#include "dquiver/curves.hpp"
#include "dquiver/exceptional.hpp"
#include "dquiver/noncross.hpp"
#include "dquiver/rep.hpp"
#include "dquiver/signed_perm.hpp"

static void BM_BuildClassTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dq::buildClassTable(n));
}
BENCHMARK(BM_BuildClassTable)->Arg(4)->Arg(5)->Arg(6);

static void BM_HomDimAllPairs(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<dq::Rep> reps;
  for (const dq::CurveClass& c : dq::allClasses(n)) reps.push_back(dq::repOf(c, n));
  for (auto _ : state) {
    long long total = 0;
    for (const dq::Rep& u : reps)
      for (const dq::Rep& v : reps) total += dq::homDim(u, v);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_HomDimAllPairs)->Arg(5)->Arg(6);

static void BM_TauSweep(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<dq::Rep> reps;
  for (const dq::CurveClass& c : dq::allClasses(n)) reps.push_back(dq::repOf(c, n));
  for (auto _ : state)
    for (const dq::Rep& u : reps) benchmark::DoNotOptimize(dq::tauRep(u));
}
BENCHMARK(BM_TauSweep)->Arg(5);

static void BM_EnumerateComplete(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(dq::enumerateSequences(n, n, /*oracle=*/false));
}
BENCHMARK(BM_EnumerateComplete)->Arg(4)->Arg(5);

static void BM_BuildNCInterval(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dq::buildNCInterval(n));
}
BENCHMARK(BM_BuildNCInterval)->Arg(4);

static void BM_AbsoluteLengthBFS(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dq::absoluteLengthBFS(n));
}
BENCHMARK(BM_AbsoluteLengthBFS)->Arg(4);

BENCHMARK_MAIN();
