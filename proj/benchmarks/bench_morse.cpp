#include <anick/resolution.hpp>
#include <anick/weyl.hpp>

#include <benchmark/benchmark.h>

using namespace anick;

namespace {

void BM_enumerate_chains(benchmark::State& state) {
  Presentation pres = weyl::w1_presentation();
  pres.require_gsb();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chains(pres, state.range(0)));
}

// path tracking without memoization shows the raw collapse cost
void BM_value_cold(benchmark::State& state) {
  Presentation pres = weyl::w1_presentation();
  BarVertex v(parse_chain("[q|e|q|p]", pres));
  for (auto _ : state) {
    MorseEngine engine(pres);
    engine.set_memo_enabled(false);
    benchmark::DoNotOptimize(engine.value(v));
  }
}

void BM_anick_differential(benchmark::State& state) {
  Presentation pres = weyl::w1_presentation();
  const std::vector<AnickChain>& chains = enumerate_chains_cached(pres, state.range(0));
  for (auto _ : state) {
    MorseEngine engine(pres);
    for (const AnickChain& c : chains) benchmark::DoNotOptimize(engine.anick_differential(c));
  }
}

void BM_build_resolution(benchmark::State& state) {
  Presentation pres = weyl::w1_presentation();
  pres.require_gsb();
  for (auto _ : state) benchmark::DoNotOptimize(build_resolution(pres, state.range(0)));
}

}  // namespace

BENCHMARK(BM_enumerate_chains)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_value_cold);
BENCHMARK(BM_anick_differential)->Arg(2)->Arg(3);
BENCHMARK(BM_build_resolution)->Arg(3)->Arg(4);
