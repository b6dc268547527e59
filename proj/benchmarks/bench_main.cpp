#include <benchmark/benchmark.h>

#include <random>

#include "tlalg/algebroid.hpp"
#include "tlalg/char_classes.hpp"

namespace {

using namespace tlalg;

ComplexPtr grid(int n) { return std::make_shared<const Complex>(torus_model(n, n)); }

void BM_RrefRandomRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(num(rng), den(rng));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_RrefRandomRational)->Arg(8)->Arg(16)->Arg(32);

void BM_TwistedCohomologyTorus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = share(from_representation(grid(n), {{"a", Rational(2)}, {"b", Rational(3)}}));
  for (auto _ : state) {
    for (int d = 0; d <= 2; ++d) benchmark::DoNotOptimize(cohomology(s, d).dimension());
  }
  state.counters["edges"] = static_cast<double>(s->base().count(1));
}
BENCHMARK(BM_TwistedCohomologyTorus)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_UntwistedCohomologyGF2(benchmark::State& state) {
  auto c = torus_model(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(untwisted_cohomology<Bit>(c, 1).dimension());
}
BENCHMARK(BM_UntwistedCohomologyGF2)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SurjectivityCheck(benchmark::State& state) {
  auto l = from_representation(grid(3), {{"a", Rational(2)}, {"b", Rational(3)}});
  for (auto _ : state) benchmark::DoNotOptimize(surjectivity_check(l).surjective);
}
BENCHMARK(BM_SurjectivityCheck)->Unit(benchmark::kMillisecond);

void BM_ChernWeilRank2(benchmark::State& state) {
  auto s = share(LocalSystem::trivial(grid(3), 2));
  TwistedCochain w(s, 2);
  w.set_value(0, {1, 0});
  auto a = make_algebroid(s, w);
  for (auto _ : state) benchmark::DoNotOptimize(chern_weil_image_dimension(a, 1));
}
BENCHMARK(BM_ChernWeilRank2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
