// Serial reference against the OpenMP path for each parallel kernel.
#include <benchmark/benchmark.h>

#include <random>

#include "iyb/braces/enumerate.hpp"
#include "iyb/liealg/burde.hpp"
#include "iyb/polysolve/groebner.hpp"
#include "iyb/polysolve/solve_small.hpp"

namespace {

using namespace iyb;

void BM_EnumerateRegular(benchmark::State& state) {
  braces::AbelianGroup group({2, 2, 4});
  braces::EnumerationOptions opt;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(braces::enumerate_regular_subgroups(group, opt));
}
BENCHMARK(BM_EnumerateRegular)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_SolveSmall(benchmark::State& state) {
  std::mt19937_64 rng(7);
  auto sys = polysolve::random_system(rng, exactalg::PrimeField(7), 7, 3, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(polysolve::solve_small(sys, state.range(0) != 0));
}
BENCHMARK(BM_SolveSmall)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Buchberger(benchmark::State& state) {
  // Faithful representations of the 4-dimensional filiform algebra by 5x5 matrices over F_5.
  auto sys = polysolve::generate_system(liealg::filiform4(exactalg::PrimeField(5)), 5, true);
  polysolve::GroebnerOptions opt;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(polysolve::buchberger(sys, opt));
}
BENCHMARK(BM_Buchberger)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
