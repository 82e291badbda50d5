#include <benchmark/benchmark.h>

#include "manyopt/engine.hpp"
#include "manyopt/metrics.hpp"
#include "manyopt/problems.hpp"
#include "manyopt/scalarize.hpp"
#include "manyopt/weights.hpp"

using namespace manyopt;

namespace {

void BM_GenerateLattice(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_simplex_lattice(m, d));
  }
}
BENCHMARK(BM_GenerateLattice)->Args({3, 12})->Args({5, 6})->Args({10, 3});

void BM_BuildNeighborhoods(benchmark::State& state) {
  const WeightSet base = generate_simplex_lattice(3, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_neighborhoods(base, 30));
  }
}
BENCHMARK(BM_BuildNeighborhoods);

void BM_Pbi(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  ScalarizerState frame;
  frame.ideal.assign(m, 0.0);
  frame.nadir.assign(m, 1.0);
  std::vector<double> objectives(m, 0.3);
  WeightVector w;
  w.components.assign(m, 1.0 / m);
  std::vector<double> scratch;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pbi(objectives, w, frame, scratch));
  }
}
BENCHMARK(BM_Pbi)->Arg(3)->Arg(10)->Arg(15);

void BM_Evaluate(benchmark::State& state) {
  const auto family = static_cast<ProblemFamily>(state.range(0));
  const ProblemInstance p = make_instance(family, 3);
  std::vector<double> x(p.variables);
  for (int j = 0; j < p.variables; ++j) {
    x[j] = 0.25 * (p.bounds.upper[j] - p.bounds.lower[j]);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(p, x));
  }
}
BENCHMARK(BM_Evaluate)
    ->Arg(static_cast<int>(ProblemFamily::dtlz1))
    ->Arg(static_cast<int>(ProblemFamily::dtlz2))
    ->Arg(static_cast<int>(ProblemFamily::wfg4))
    ->Arg(static_cast<int>(ProblemFamily::wfg9));

void BM_LiuPass(benchmark::State& state) {
  const WeightSet ws = build_neighborhoods(generate_simplex_lattice(3, 12), 30);
  Population population(ws.size());
  Rng rng(1);
  std::vector<std::vector<double>> all;
  for (auto& individual : population) {
    individual.objectives = {rng.uniform01(), rng.uniform01(), rng.uniform01()};
    all.push_back(individual.objectives);
  }
  const ScalarizerState frame = ScalarizerState::from_population(all, 5.0);
  Individual offspring;
  offspring.objectives = {0.4, 0.4, 0.4};
  for (auto _ : state) {
    Population copy = population;
    RunCounters counters;
    benchmark::DoNotOptimize(
        liu_update(offspring, ws.neighborhoods[0], ws, copy, frame, counters));
  }
}
BENCHMARK(BM_LiuPass);

void BM_Generation(benchmark::State& state) {
  const ProblemInstance problem = make_instance(ProblemFamily::dtlz2, 3);
  const WeightSet ws = build_neighborhoods(generate_simplex_lattice(3, 12), 30);
  EngineConfig config;
  config.generations = 1;
  config.variation.mutation_prob = 0.5 / problem.variables;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(problem, ws, config, seed++));
  }
}
BENCHMARK(BM_Generation);

void BM_HvExact(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  Rng rng(3);
  Front front(points, std::vector<double>(3));
  for (auto& p : front) {
    for (auto& v : p) v = 0.2 + 0.8 * rng.uniform01();
  }
  const std::vector<double> reference{3.0, 5.0, 7.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hv_exact(front, reference));
  }
}
BENCHMARK(BM_HvExact)->Arg(16)->Arg(91);

}  // namespace

BENCHMARK_MAIN();
