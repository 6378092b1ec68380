#include <benchmark/benchmark.h>
#include <binradix/numeric.hpp>
#include <binradix/tiling.hpp>

using namespace binradix;

namespace {

struct Named {
  const char* alpha;
  const char* beta;
};

constexpr Named kPairs[] = {{"(01)", "1(0)"}, {"(011)", "(10)"}, {"(01000)", "1(0)"}};

AdmissiblePair pair_at(std::int64_t i) {
  return make_pair(parse_epstring(kPairs[i].alpha), parse_epstring(kPairs[i].beta));
}

void BM_SolveBase(benchmark::State& state) {
  const AdmissiblePair p = pair_at(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_base(p.alpha, p.beta));
}
BENCHMARK(BM_SolveBase)->DenseRange(0, 2);

void BM_ForbiddenSet(benchmark::State& state) {
  const AdmissiblePair p = pair_at(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derive_forbidden_set(p));
}
BENCHMARK(BM_ForbiddenSet)->DenseRange(0, 2);

void BM_Encode(benchmark::State& state) {
  const RadixSystem s = build(pair_at(state.range(0)), Variant::Minus);
  long k = 0;
  for (auto _ : state) {
    const Rational x(1 + k % 997, 1 + k % 31);
    benchmark::DoNotOptimize(encode(s, x));
    ++k;
  }
}
BENCHMARK(BM_Encode)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_Tiling(benchmark::State& state) {
  const RadixSystem s = build(pair_at(1), Variant::Minus);
  for (auto _ : state) benchmark::DoNotOptimize(generate_tiling(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Tiling)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_CountPrefixes(benchmark::State& state) {
  const auto aut = PrefixAutomaton::build(pair_at(1));
  for (auto _ : state) benchmark::DoNotOptimize(aut.count_prefixes(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CountPrefixes)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
