#include <benchmark/benchmark.h>

#include "infocost/costs.hpp"
#include "infocost/cumulants.hpp"
#include "infocost/diagnostics.hpp"
#include "infocost/dominance.hpp"
#include "infocost/partition.hpp"
#include "infocost/random.hpp"

namespace {

using namespace infocost;

void BM_GridPartitionCoefficient(benchmark::State& state) {
  const InverseSquareGrid grid{1, state.range(0), 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_coefficient(grid, GridHypothesis::above(state.range(0) / 2)));
    benchmark::DoNotOptimize(partition_coefficient(grid, GridHypothesis::even()));
  }
}
BENCHMARK(BM_GridPartitionCoefficient)->Arg(200)->Arg(60001)->Unit(benchmark::kMillisecond);

void BM_LlrCost(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const StateSpace states = StateSpace::indexed(n);
  const Experiment mu = random_experiment(rng, states, 8);
  const BetaMatrix beta = random_beta(rng, states, 0.1, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(llr_cost(mu, beta));
}
BENCHMARK(BM_LlrCost)->Arg(2)->Arg(5)->Arg(20);

void BM_SolvePerception(benchmark::State& state) {
  const auto kind = state.range(0) == 0 ? CostKind::Llr : CostKind::MutualInformation;
  for (auto _ : state) benchmark::DoNotOptimize(psychometric_curve(10, 1.0, kind, 1.0));
}
BENCHMARK(BM_SolvePerception)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RandomSolve(benchmark::State& state) {
  Rng rng(2);
  const DecisionProblem p = random_problem(rng, 5, 4);
  const BetaMatrix beta = random_beta(rng, p.states, 0.05, 5.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_llr(p, beta));
}
BENCHMARK(BM_RandomSolve)->Unit(benchmark::kMicrosecond);

void BM_MomentsToCumulants(benchmark::State& state) {
  Rng rng(3);
  const FiniteDistribution d = random_distribution(rng, static_cast<int>(state.range(0)), 6);
  const MomentVector m = moments(d, 4);
  const auto method = state.range(1) == 0 ? Conversion::Recursive : Conversion::Compositions;
  for (auto _ : state) benchmark::DoNotOptimize(moments_to_cumulants(m, method));
}
BENCHMARK(BM_MomentsToCumulants)->ArgsProduct({{1, 2, 3}, {0, 1}});

void BM_Dominance(benchmark::State& state) {
  Rng rng(4);
  const StateSpace states = StateSpace::indexed(4);
  const Experiment mu = random_experiment(rng, states, static_cast<std::size_t>(state.range(0)));
  const Experiment nu = garble(mu, random_garbling(rng, mu.num_signals(), 3));
  for (auto _ : state) benchmark::DoNotOptimize(blackwell_dominates(mu, nu));
}
BENCHMARK(BM_Dominance)->Arg(3)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
