#include <anick/weyl.hpp>

#include <benchmark/benchmark.h>

using namespace anick;

namespace {

// q^k p^k is the worst normal-form case at its length: every reduction step
// creates lower-order terms that must themselves be reduced
void BM_normal_form(benchmark::State& state) {
  Presentation pres = weyl::w1_presentation();
  const long k = state.range(0);
  std::vector<Letter> letters;
  for (long i = 0; i < k; ++i) letters.push_back(pres.letter("q"));
  for (long i = 0; i < k; ++i) letters.push_back(pres.letter("p"));
  Word w(std::move(letters));
  for (auto _ : state) benchmark::DoNotOptimize(pres.normal_form(w));
}

void BM_verify_gsb(benchmark::State& state) {
  for (auto _ : state) {
    Presentation pres = weyl::w1_presentation();
    benchmark::DoNotOptimize(pres.verify_gsb().pass());
  }
}

void BM_normal_words(benchmark::State& state) {
  Presentation pres = weyl::w1_presentation();
  for (auto _ : state) benchmark::DoNotOptimize(pres.normal_words_up_to(state.range(0)));
}

}  // namespace

BENCHMARK(BM_normal_form)->Arg(2)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_verify_gsb);
BENCHMARK(BM_normal_words)->Arg(4)->Arg(6);
