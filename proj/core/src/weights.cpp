#include "manyopt/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace manyopt {

namespace {

void check_lattice_params(int objectives, int divisions) {
  if (objectives < 2) {
    throw std::invalid_argument("weight generation requires at least 2 objectives, got " +
                                std::to_string(objectives));
  }
  if (divisions < 1) {
    throw std::invalid_argument("weight generation requires at least 1 division, got " +
                                std::to_string(divisions));
  }
}

// Emits all tuples (k_1,...,k_M) of non-negative integers summing to
// `divisions`, ascending lexicographic order.
void enumerate_lattice(int objectives, int divisions, int position, int remaining,
                       std::vector<int>& counts, std::vector<WeightVector>& out) {
  if (position == objectives - 1) {
    counts[position] = remaining;
    WeightVector w;
    w.components.resize(objectives);
    for (int j = 0; j < objectives; ++j) {
      w.components[j] = static_cast<double>(counts[j]) / divisions;
    }
    out.push_back(std::move(w));
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    counts[position] = k;
    enumerate_lattice(objectives, divisions, position + 1, remaining - k, counts, out);
  }
}

}  // namespace

WeightSet generate_simplex_lattice(int objectives, int divisions) {
  check_lattice_params(objectives, divisions);
  WeightSet set;
  set.objectives = objectives;
  std::vector<int> counts(objectives, 0);
  enumerate_lattice(objectives, divisions, 0, divisions, counts, set.vectors);
  return set;
}

WeightSet generate_two_layer(int objectives, int boundary_divisions,
                             int inside_divisions, double shrinkage) {
  check_lattice_params(objectives, boundary_divisions);
  check_lattice_params(objectives, inside_divisions);
  if (shrinkage < 0.0 || shrinkage > 1.0) {
    throw std::invalid_argument("shrinkage factor must lie in [0, 1]");
  }
  WeightSet set = generate_simplex_lattice(objectives, boundary_divisions);
  WeightSet inside = generate_simplex_lattice(objectives, inside_divisions);
  const double offset = (1.0 - shrinkage) / objectives;
  for (auto& w : inside.vectors) {
    for (auto& c : w.components) {
      c = offset + shrinkage * c;
    }
  }
  set.vectors.insert(set.vectors.end(),
                     std::make_move_iterator(inside.vectors.begin()),
                     std::make_move_iterator(inside.vectors.end()));
  return set;
}

double included_angle(const WeightVector& owner, const WeightVector& candidate) {
  const auto& w = owner.components;
  const auto& v = candidate.components;
  if (w.size() != v.size()) {
    throw std::invalid_argument("included_angle: dimension mismatch");
  }
  double dot = 0.0, w_sq = 0.0, v_sq = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    dot += w[i] * v[i];
    w_sq += w[i] * w[i];
    v_sq += v[i] * v[i];
  }
  if (w_sq == 0.0 || v_sq == 0.0) {
    throw std::invalid_argument("included_angle: zero-norm weight vector");
  }
  const double v_norm = std::sqrt(v_sq);
  const double along = std::abs(dot) / v_norm;  // projection of owner onto candidate
  double residual_sq = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double r = w[i] - along * v[i] / v_norm;
    residual_sq += r * r;
  }
  return std::atan2(std::sqrt(residual_sq), along);
}

WeightSet build_neighborhoods(WeightSet set, int neighborhood_size) {
  const int n = set.size();
  if (neighborhood_size < 1 || neighborhood_size > n) {
    throw std::invalid_argument("neighborhood size must lie in [1, " +
                                std::to_string(n) + "], got " +
                                std::to_string(neighborhood_size));
  }
  set.neighborhood_size = neighborhood_size;
  set.neighborhoods.assign(n, {});
  std::vector<std::pair<double, int>> order(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      order[j] = {included_angle(set.vectors[i], set.vectors[j]), j};
    }
    // pair ordering: angle first, index breaks ties
    std::sort(order.begin(), order.end());
    auto& neighborhood = set.neighborhoods[i];
    neighborhood.reserve(neighborhood_size);
    for (int t = 0; t < neighborhood_size; ++t) {
      neighborhood.push_back(order[t].second);
    }
  }
  return set;
}

}  // namespace manyopt
