#include "manyopt/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace manyopt {

namespace {
constexpr int kSelfMatingRetries = 16;

double clamp_to(double value, double lo, double hi) {
  return std::min(std::max(value, lo), hi);
}
}  // namespace

std::pair<int, int> select_mates(int subproblem,
                                 const std::vector<std::vector<int>>& neighborhoods,
                                 int population_size, double neighbor_prob,
                                 Rng& rng) {
  if (population_size < 2) {
    throw std::invalid_argument("mating selection requires at least 2 individuals");
  }
  const auto& pool = neighborhoods[subproblem];
  const bool from_neighborhood = rng.uniform01() < neighbor_prob;
  int mate = subproblem;
  for (int attempt = 0; attempt < kSelfMatingRetries && mate == subproblem; ++attempt) {
    mate = from_neighborhood
               ? pool[rng.uniform_int(pool.size())]
               : static_cast<int>(rng.uniform_int(population_size));
  }
  if (mate == subproblem) {
    // pool was (effectively) just the subproblem itself; draw globally minus self
    const int r = static_cast<int>(rng.uniform_int(population_size - 1));
    mate = r >= subproblem ? r + 1 : r;
  }
  return {subproblem, mate};
}

double sbx_spread_factor(double u, double distribution_index) {
  const double exponent = 1.0 / (distribution_index + 1.0);
  if (u <= 0.5) {
    return std::pow(2.0 * u, exponent);
  }
  return std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
}

double pm_delta(double u, double distribution_index) {
  const double exponent = 1.0 / (distribution_index + 1.0);
  if (u <= 0.5) {
    return std::pow(2.0 * u, exponent) - 1.0;
  }
  return 1.0 - std::pow(2.0 * (1.0 - u), exponent);
}

std::pair<std::vector<double>, std::vector<double>> sbx_pair(
    const std::vector<double>& parent1, const std::vector<double>& parent2,
    double distribution_index, double crossover_prob, Rng& rng) {
  std::vector<double> child1 = parent1;
  std::vector<double> child2 = parent2;
  if (rng.uniform01() < crossover_prob) {
    // standard SBX structure: each variable is exchanged with probability
    // 0.5; exchanged variables are blended with a fresh spread factor and the
    // two blends swapped between the children with probability 0.5. The swap
    // is what recombines per-variable building blocks; without it children
    // stay whole-vector blends of one parent and convergence collapses by
    // two orders of magnitude.
    for (std::size_t i = 0; i < parent1.size(); ++i) {
      if (rng.uniform01() >= 0.5) {
        continue;
      }
      const double beta = sbx_spread_factor(rng.uniform01(), distribution_index);
      // algebraically 0.5*((1±beta)p1 + (1∓beta)p2); this form keeps
      // identical parents an exact fixed point
      const double offset = 0.5 * (1.0 - beta) * (parent2[i] - parent1[i]);
      child1[i] = parent1[i] + offset;
      child2[i] = parent2[i] - offset;
      if (rng.uniform01() < 0.5) {
        std::swap(child1[i], child2[i]);
      }
    }
  }
  return {std::move(child1), std::move(child2)};
}

std::vector<double> sbx(const std::vector<double>& parent1,
                        const std::vector<double>& parent2,
                        const Bounds& bounds, double distribution_index,
                        double crossover_prob, Rng& rng) {
  auto [child1, child2] = sbx_pair(parent1, parent2, distribution_index,
                                   crossover_prob, rng);
  std::vector<double> kept =
      rng.uniform01() < 0.5 ? std::move(child1) : std::move(child2);
  for (std::size_t j = 0; j < kept.size(); ++j) {
    kept[j] = clamp_to(kept[j], bounds.lower[j], bounds.upper[j]);
  }
  return kept;
}

void polynomial_mutation(std::vector<double>& child, const Bounds& bounds,
                         double distribution_index, double mutation_prob,
                         Rng& rng) {
  for (std::size_t j = 0; j < child.size(); ++j) {
    if (rng.uniform01() < mutation_prob) {
      const double delta = pm_delta(rng.uniform01(), distribution_index);
      child[j] += (bounds.upper[j] - bounds.lower[j]) * delta;
      child[j] = clamp_to(child[j], bounds.lower[j], bounds.upper[j]);
    }
  }
}

}  // namespace manyopt
