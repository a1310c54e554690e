#include <benchmark/benchmark.h>

#include "pwz/interlace.hpp"
#include "pwz/isolate.hpp"
#include "pwz/landmarks.hpp"
#include "pwz/scan.hpp"
#include "pwz/sequence.hpp"
#include "pwz/sturm.hpp"

using namespace pwz;

namespace {

const Params kCaseI{-3, -5, Rational(4, 5), -1};
const Params kCaseII{Rational(-3, 10), -1, 65, -60};

void BM_Generate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate(kCaseI, n));
}
BENCHMARK(BM_Generate)->Arg(10)->Arg(30)->Arg(60);

void BM_SturmChain(benchmark::State& state) {
  const Poly w = generate(kCaseI, static_cast<int>(state.range(0))).W(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SturmChain(w));
}
BENCHMARK(BM_SturmChain)->Arg(8)->Arg(16)->Arg(30);

void BM_Isolate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Poly w = generate(kCaseII, n).W(n);
  for (auto _ : state) benchmark::DoNotOptimize(isolate_roots(w, n));
}
BENCHMARK(BM_Isolate)->Arg(5)->Arg(12)->Arg(25);

void BM_Refine(benchmark::State& state) {
  const RootReport r = isolate_roots(generate(kCaseII, 12).W(12), 12);
  const Rational eps = pow10(-static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& iv : r.real_roots) benchmark::DoNotOptimize(refine(iv, *r.chain, eps));
  }
}
BENCHMARK(BM_Refine)->Arg(6)->Arg(12)->Arg(30);

void BM_SignLemma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_sign_lemma(kCaseI, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SignLemma)->Arg(10)->Arg(20);

void BM_VerifyTheorem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(kCaseI, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyTheorem)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EvaluateSample(benchmark::State& state) {
  SweepConfig config;
  long index = 0;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_sample(draw_params(config, index++), 12));
}
BENCHMARK(BM_EvaluateSample)->Unit(benchmark::kMillisecond);

void BM_CStar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compute_c_star(-3, -5, -1, 16));
}
BENCHMARK(BM_CStar)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
