#include "manyopt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace manyopt {

namespace {

void check_reference(const std::vector<double>& reference) {
  if (reference.empty()) {
    throw std::invalid_argument("hypervolume reference point is empty");
  }
  for (double z : reference) {
    if (z <= 0.0) {
      throw std::invalid_argument(
          "hypervolume reference components must be positive");
    }
  }
}

// p weakly dominates q (minimization).
bool weakly_dominates(const std::vector<double>& p, const std::vector<double>& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > q[i]) {
      return false;
    }
  }
  return true;
}

double inclusive_volume(const std::vector<double>& p,
                        const std::vector<double>& reference) {
  double volume = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    volume *= reference[i] - p[i];
  }
  return volume;
}

// Keep only weakly non-dominated points; among exact duplicates the first
// survives.
std::vector<std::vector<double>> weakly_nondominated(
    const std::vector<std::vector<double>>& points) {
  std::vector<std::vector<double>> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (j == i || !weakly_dominates(points[j], points[i])) {
        continue;
      }
      dominated = points[j] != points[i] || j < i;
    }
    if (!dominated) {
      kept.push_back(points[i]);
    }
  }
  return kept;
}

double hv_2d(std::vector<std::vector<double>> points,
             const std::vector<double>& reference) {
  std::sort(points.begin(), points.end());
  double area = 0.0;
  double height = reference[1];
  for (const auto& p : points) {
    if (p[1] < height) {
      area += (reference[0] - p[0]) * (height - p[1]);
      height = p[1];
    }
  }
  return area;
}

// WFG recursion: hv(S) = sum over k of the volume exclusively dominated by
// S[k] against the points after it, computed as the inclusive volume minus
// the hypervolume of the non-dominated limit set.
double hv_recurse(std::vector<std::vector<double>> points,
                  const std::vector<double>& reference) {
  if (points.empty()) {
    return 0.0;
  }
  if (points.size() == 1) {
    return inclusive_volume(points[0], reference);
  }
  if (reference.size() == 2) {
    return hv_2d(std::move(points), reference);
  }
  // descending last objective, full lexicographic comparison for determinism
  std::sort(points.begin(), points.end(),
            [](const std::vector<double>& a, const std::vector<double>& b) {
              if (a.back() != b.back()) {
                return a.back() > b.back();
              }
              return a < b;
            });
  double total = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::vector<std::vector<double>> limit;
    limit.reserve(points.size() - k - 1);
    for (std::size_t j = k + 1; j < points.size(); ++j) {
      std::vector<double> q(points[k].size());
      for (std::size_t d = 0; d < q.size(); ++d) {
        q[d] = std::max(points[k][d], points[j][d]);
      }
      limit.push_back(std::move(q));
    }
    total += inclusive_volume(points[k], reference) -
             hv_recurse(weakly_nondominated(limit), reference);
  }
  return total;
}

}  // namespace

double igd(const Front& solution, const Front& reference) {
  if (solution.empty() || reference.empty()) {
    throw std::invalid_argument("IGD requires nonempty solution and reference fronts");
  }
  double total = 0.0;
  for (const auto& r : reference) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : solution) {
      double dist_sq = 0.0;
      for (std::size_t d = 0; d < r.size(); ++d) {
        const double diff = r[d] - s[d];
        dist_sq += diff * diff;
      }
      best = std::min(best, dist_sq);
    }
    total += std::sqrt(best);
  }
  return total / static_cast<double>(reference.size());
}

Front reference_set(ProblemFamily family, const WeightSet& weights) {
  if (!is_dtlz(family)) {
    throw std::invalid_argument(
        "analytic reference sets exist only for DTLZ families; WFG is scored "
        "by hypervolume");
  }
  Front reference;
  reference.reserve(weights.vectors.size());
  for (const auto& w : weights.vectors) {
    reference.push_back(pareto_point_from_weight(family, w));
  }
  return reference;
}

double hv_exact(const Front& front, const std::vector<double>& reference) {
  check_reference(reference);
  if (reference.size() > 10) {
    throw std::invalid_argument(
        "exact hypervolume is supported up to 10 objectives; use hv_monte_carlo");
  }
  // points with any coordinate at or past the reference dominate nothing
  std::vector<std::vector<double>> contributing;
  for (const auto& p : front) {
    if (p.size() != reference.size()) {
      throw std::invalid_argument("front point dimension does not match reference");
    }
    bool inside = true;
    for (std::size_t d = 0; d < p.size(); ++d) {
      if (p[d] >= reference[d]) {
        inside = false;
        break;
      }
    }
    if (inside) {
      contributing.push_back(p);
    }
  }
  double divisor = 1.0;
  for (double z : reference) {
    divisor *= z;
  }
  return hv_recurse(weakly_nondominated(contributing), reference) / divisor;
}

HvEstimate hv_monte_carlo(const Front& front, const std::vector<double>& reference,
                          std::uint64_t samples, Rng& rng) {
  check_reference(reference);
  if (samples < 1) {
    throw std::invalid_argument("Monte-Carlo hypervolume needs at least one sample");
  }
  for (const auto& p : front) {
    if (p.size() != reference.size()) {
      throw std::invalid_argument("front point dimension does not match reference");
    }
  }
  const std::size_t dims = reference.size();
  std::vector<double> sample(dims);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::size_t d = 0; d < dims; ++d) {
      sample[d] = reference[d] * rng.uniform01();
    }
    for (const auto& p : front) {
      if (weakly_dominates(p, sample)) {
        ++hits;
        break;
      }
    }
  }
  HvEstimate estimate;
  estimate.value = static_cast<double>(hits) / static_cast<double>(samples);
  estimate.standard_error = std::sqrt(
      estimate.value * (1.0 - estimate.value) / static_cast<double>(samples));
  return estimate;
}

std::vector<double> default_hv_reference(ProblemFamily family, int objectives) {
  std::vector<double> reference(objectives);
  if (family == ProblemFamily::dtlz1) {
    std::fill(reference.begin(), reference.end(), 1.0);
  } else if (is_dtlz(family)) {
    std::fill(reference.begin(), reference.end(), 2.0);
  } else {
    for (int i = 0; i < objectives; ++i) {
      reference[i] = 2.0 * (i + 1) + 1.0;
    }
  }
  return reference;
}

Front nondominated(const Front& front) {
  Front kept;
  for (std::size_t i = 0; i < front.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < front.size() && !dominated; ++j) {
      if (j == i) {
        continue;
      }
      dominated = weakly_dominates(front[j], front[i]) && front[j] != front[i];
    }
    if (!dominated) {
      kept.push_back(front[i]);
    }
  }
  return kept;
}

}  // namespace manyopt
