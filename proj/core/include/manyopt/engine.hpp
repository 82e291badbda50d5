#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "manyopt/problems.hpp"
#include "manyopt/scalarize.hpp"
#include "manyopt/variation.hpp"
#include "manyopt/weights.hpp"

namespace manyopt {

/// Exactly one individual per weight vector, slot i attached to vector i.
using Population = std::vector<Individual>;

enum class UpdateStrategy {
  liu,               // local iterative update: swap along the neighborhood
  replace_all,       // classic: overwrite every losing neighbor with a copy
  replace_at_most_2, // classic capped at two replacements per offspring
};

UpdateStrategy parse_update_strategy(const std::string& name);
std::string to_string(UpdateStrategy strategy);

struct RunCounters {
  std::uint64_t evaluations = 0;      // problem evaluations, including the initial population
  std::uint64_t pbi_comparisons = 0;  // pairwise PBI comparisons in update passes
  std::uint64_t swaps = 0;            // slot exchanges (LIU) or overwrites (classic)
};

struct EngineConfig {
  UpdateStrategy update = UpdateStrategy::liu;
  VariationConfig variation;
  double pbi_penalty = 5.0;
  int generations = 0;
};

struct LiuResult {
  int swaps = 0;
  Individual discarded;  // the individual that left the population
};

/// One LIU pass: walk the neighborhood in its stored (angle-sorted) order and
/// swap the carried individual into any slot it beats under that slot's own
/// weight vector, carrying the displaced occupant onward. Whatever is carried
/// after the last slot leaves the population. Performs exactly one PBI
/// comparison per neighbor and never duplicates an individual.
LiuResult liu_update(Individual offspring, const std::vector<int>& neighborhood,
                     const WeightSet& weights, Population& population,
                     const ScalarizerState& frame, RunCounters& counters);

/// Classic MOEA/D neighborhood update: every visited slot the offspring beats
/// (up to max_replacements, in visit order) is overwritten with a copy of it.
/// Returns the number of replacements.
int classic_update(const Individual& offspring, const std::vector<int>& neighborhood,
                   const WeightSet& weights, Population& population,
                   const ScalarizerState& frame, int max_replacements,
                   RunCounters& counters);

struct RunRecord {
  std::uint64_t seed = 0;
  std::string problem_id;
  EngineConfig config;
  int population_size = 0;
  int objectives = 0;
  std::vector<std::vector<double>> final_objectives;
  std::vector<std::vector<double>> final_decisions;
  /// Filled by the caller's generation observer (e.g. the harness metric
  /// trace); the engine itself leaves it empty.
  std::vector<std::pair<int, std::map<std::string, double>>> metric_trace;
  RunCounters counters;
};

using GenerationObserver = std::function<void(int generation, const Population&)>;

/// The generational loop. Initialization draws every decision variable
/// uniformly within bounds (individual-major, variable-minor order from one
/// seeded stream shared with variation -- this consumption order is part of
/// the reproducibility contract), evaluates, and takes the initial ideal and
/// nadir points from the population. Each generation starts by re-taking the
/// nadir point from the current population, then visits subproblems in
/// ascending index order; a visit selects mates, applies SBX and polynomial
/// mutation, evaluates the offspring, lowers the ideal point with it, and
/// runs the configured population update with the frame frozen for the
/// duration of the pass.
RunRecord run(const ProblemInstance& problem, const WeightSet& weights,
              const EngineConfig& config, std::uint64_t seed,
              const GenerationObserver& observer = {});

}  // namespace manyopt
