#pragma once

#include <utility>
#include <vector>

#include "manyopt/bounds.hpp"
#include "manyopt/rng.hpp"

namespace manyopt {

struct Individual {
  std::vector<double> decision;
  std::vector<double> objectives;
};

/// Reproduction parameters. Probabilities are in [0,1], distribution indices
/// positive.
struct VariationConfig {
  double crossover_prob = 1.0;      // whole-crossover event probability
  double crossover_index = 20.0;    // SBX distribution index
  double mutation_prob = 0.0;       // per-variable mutation probability
  double mutation_index = 20.0;     // polynomial mutation distribution index
  double neighbor_prob = 0.9;       // probability of mating within the neighborhood
};

/// Pick the mating pair for a subproblem. The first parent is the
/// subproblem's own individual; the second comes from its neighborhood with
/// probability neighbor_prob, otherwise from the whole population. Self-mating
/// is rejected by redrawing from the chosen pool a bounded number of times,
/// then falling back to a uniform draw over the population minus self (this
/// is how a size-1 neighborhood ends up mating globally).
std::pair<int, int> select_mates(int subproblem,
                                 const std::vector<std::vector<int>>& neighborhoods,
                                 int population_size, double neighbor_prob,
                                 Rng& rng);

/// SBX spread factor for a uniform draw u.
double sbx_spread_factor(double u, double distribution_index);

/// Polynomial-mutation offset for a uniform draw u, in [-1, 1]. Scaled by the
/// variable's range before being applied.
double pm_delta(double u, double distribution_index);

/// Both intermediate SBX children, unclamped. With probability
/// 1 - crossover_prob the crossover event does not fire and the children are
/// the parents themselves. The children average to the parents' mean
/// componentwise.
std::pair<std::vector<double>, std::vector<double>> sbx_pair(
    const std::vector<double>& parent1, const std::vector<double>& parent2,
    double distribution_index, double crossover_prob, Rng& rng);

/// SBX producing the single kept child: one of the two intermediates is
/// abandoned at random, the survivor clamped into bounds.
std::vector<double> sbx(const std::vector<double>& parent1,
                        const std::vector<double>& parent2,
                        const Bounds& bounds, double distribution_index,
                        double crossover_prob, Rng& rng);

/// Mutate each variable independently with probability mutation_prob, adding
/// (upper - lower) * pm_delta(u), then clamp into bounds.
void polynomial_mutation(std::vector<double>& child, const Bounds& bounds,
                         double distribution_index, double mutation_prob,
                         Rng& rng);

}  // namespace manyopt
