#include "manyopt/engine.hpp"

#include <limits>
#include <string>
#include <utility>

#include "manyopt/errors.hpp"

namespace manyopt {

namespace {

void validate_variation(const VariationConfig& v) {
  auto check_prob = [](double p, const char* field) {
    if (p < 0.0 || p > 1.0) {
      throw ConfigError(field, std::string(field) + " must lie in [0, 1]");
    }
  };
  check_prob(v.crossover_prob, "p_c");
  check_prob(v.mutation_prob, "p_m");
  check_prob(v.neighbor_prob, "p_s");
  if (v.crossover_index <= 0.0) {
    throw ConfigError("eta_c", "SBX distribution index must be positive");
  }
  if (v.mutation_index <= 0.0) {
    throw ConfigError("eta_m", "mutation distribution index must be positive");
  }
}

}  // namespace

UpdateStrategy parse_update_strategy(const std::string& name) {
  if (name == "liu") return UpdateStrategy::liu;
  if (name == "replace_all") return UpdateStrategy::replace_all;
  if (name == "replace_2") return UpdateStrategy::replace_at_most_2;
  throw ConfigError("update", "unknown update strategy '" + name +
                                  "' (expected liu, replace_all or replace_2)");
}

std::string to_string(UpdateStrategy strategy) {
  switch (strategy) {
    case UpdateStrategy::liu: return "liu";
    case UpdateStrategy::replace_all: return "replace_all";
    case UpdateStrategy::replace_at_most_2: return "replace_2";
  }
  throw std::logic_error("unknown update strategy");
}

LiuResult liu_update(Individual offspring, const std::vector<int>& neighborhood,
                     const WeightSet& weights, Population& population,
                     const ScalarizerState& frame, RunCounters& counters) {
  LiuResult result;
  std::vector<double> scratch;
  for (int slot : neighborhood) {
    const WeightVector& w = weights.vectors[slot];
    ++counters.pbi_comparisons;
    const double carried = pbi(offspring.objectives, w, frame, scratch).value;
    const double incumbent = pbi(population[slot].objectives, w, frame, scratch).value;
    if (carried < incumbent) {
      std::swap(offspring, population[slot]);
      ++counters.swaps;
      ++result.swaps;
    }
  }
  // whatever is still carried lost every remaining comparison: drop it
  result.discarded = std::move(offspring);
  return result;
}

int classic_update(const Individual& offspring, const std::vector<int>& neighborhood,
                   const WeightSet& weights, Population& population,
                   const ScalarizerState& frame, int max_replacements,
                   RunCounters& counters) {
  int replaced = 0;
  std::vector<double> scratch;
  for (int slot : neighborhood) {
    if (replaced >= max_replacements) {
      break;
    }
    const WeightVector& w = weights.vectors[slot];
    ++counters.pbi_comparisons;
    const double challenger = pbi(offspring.objectives, w, frame, scratch).value;
    const double incumbent = pbi(population[slot].objectives, w, frame, scratch).value;
    if (challenger < incumbent) {
      population[slot] = offspring;
      ++counters.swaps;
      ++replaced;
    }
  }
  return replaced;
}

RunRecord run(const ProblemInstance& problem, const WeightSet& weights,
              const EngineConfig& config, std::uint64_t seed,
              const GenerationObserver& observer) {
  const int population_size = weights.size();
  if (weights.objectives != problem.objectives) {
    throw ConfigError("m", "weight set was generated for " +
                               std::to_string(weights.objectives) +
                               " objectives but the problem has " +
                               std::to_string(problem.objectives));
  }
  if (static_cast<int>(weights.neighborhoods.size()) != population_size ||
      weights.neighborhood_size < 1) {
    throw ConfigError("t", "weight set has no neighborhoods; call build_neighborhoods");
  }
  if (population_size < 2) {
    throw ConfigError("d", "population needs at least 2 subproblems");
  }
  if (config.generations < 0) {
    throw ConfigError("generations", "generation count cannot be negative");
  }
  if (config.pbi_penalty <= 0.0) {
    throw ConfigError("pbi_theta", "PBI penalty must be positive");
  }
  validate_variation(config.variation);

  Rng rng(seed);
  RunCounters counters;
  const int n = problem.variables;

  Population population(population_size);
  for (auto& individual : population) {
    individual.decision.resize(n);
    for (int j = 0; j < n; ++j) {
      individual.decision[j] =
          rng.uniform(problem.bounds.lower[j], problem.bounds.upper[j]);
    }
    individual.objectives = evaluate(problem, individual.decision);
    ++counters.evaluations;
  }

  std::vector<std::vector<double>> initial_objectives;
  initial_objectives.reserve(population_size);
  for (const auto& individual : population) {
    initial_objectives.push_back(individual.objectives);
  }
  ScalarizerState frame =
      ScalarizerState::from_population(initial_objectives, config.pbi_penalty);

  auto refresh_nadir = [&] {
    frame.nadir = population.front().objectives;
    for (const auto& individual : population) {
      frame.update_nadir(individual.objectives);
    }
  };

  for (int generation = 1; generation <= config.generations; ++generation) {
    // The ideal point keeps the best value ever seen, but the nadir is
    // re-taken from the current population each generation. Letting offspring
    // push the nadir up monotonically freezes the normalization frame at the
    // initial population's anisotropic envelope, which permanently warps the
    // subproblem directions (measured IGD floor ~5e-2 on DTLZ2 against
    // ~4e-4 with the per-generation frame).
    refresh_nadir();
    for (int i = 0; i < population_size; ++i) {
      const auto [first, second] = select_mates(
          i, weights.neighborhoods, population_size,
          config.variation.neighbor_prob, rng);
      Individual child;
      child.decision = sbx(population[first].decision, population[second].decision,
                           problem.bounds, config.variation.crossover_index,
                           config.variation.crossover_prob, rng);
      polynomial_mutation(child.decision, problem.bounds,
                          config.variation.mutation_index,
                          config.variation.mutation_prob, rng);
      child.objectives = evaluate(problem, child.decision);
      ++counters.evaluations;

      frame.update_ideal(child.objectives);
      // the frame is not touched again until the next visit, so the update
      // pass below sees a frozen snapshot
      switch (config.update) {
        case UpdateStrategy::liu:
          liu_update(std::move(child), weights.neighborhoods[i], weights,
                     population, frame, counters);
          break;
        case UpdateStrategy::replace_all:
          classic_update(child, weights.neighborhoods[i], weights, population,
                         frame, std::numeric_limits<int>::max(), counters);
          break;
        case UpdateStrategy::replace_at_most_2:
          classic_update(child, weights.neighborhoods[i], weights, population,
                         frame, 2, counters);
          break;
      }
    }
    if (observer) {
      observer(generation, population);
    }
  }

  RunRecord record;
  record.seed = seed;
  record.problem_id = problem.id();
  record.config = config;
  record.population_size = population_size;
  record.objectives = problem.objectives;
  record.final_objectives.reserve(population_size);
  record.final_decisions.reserve(population_size);
  for (auto& individual : population) {
    record.final_objectives.push_back(std::move(individual.objectives));
    record.final_decisions.push_back(std::move(individual.decision));
  }
  record.counters = counters;
  return record;
}

}  // namespace manyopt
