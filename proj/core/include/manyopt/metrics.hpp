#pragma once

#include <cstdint>
#include <vector>

#include "manyopt/problems.hpp"
#include "manyopt/rng.hpp"
#include "manyopt/weights.hpp"

namespace manyopt {

/// A set of objective vectors. No non-domination constraint is imposed;
/// dominated members do not change hypervolume and can only help IGD.
using Front = std::vector<std::vector<double>>;

/// Mean over the reference points of the Euclidean distance to the nearest
/// solution point. Lower is better.
double igd(const Front& solution, const Front& reference);

/// Analytic reference front for a DTLZ family: one Pareto-surface
/// intersection point per weight vector.
Front reference_set(ProblemFamily family, const WeightSet& weights);

/// Exact hypervolume dominated by the front and bounded by the reference
/// point, normalized to [0,1] by the reference box volume. Uses the WFG
/// slice-and-bound recursion (inclusive volume minus the hypervolume of the
/// limit set); points with any coordinate at or beyond the reference
/// contribute nothing. Supported up to 10 objectives.
double hv_exact(const Front& front, const std::vector<double>& reference);

struct HvEstimate {
  double value = 0.0;
  double standard_error = 0.0;
};

/// Monte-Carlo hypervolume: the fraction of uniform samples in the reference
/// box dominated by some front point (already normalized), with a binomial
/// standard-error estimate.
HvEstimate hv_monte_carlo(const Front& front, const std::vector<double>& reference,
                          std::uint64_t samples, Rng& rng);

/// Default reference point for hypervolume on a family: ones for DTLZ1, twos
/// for DTLZ2-4, (3, 5, ..., 2M+1) for WFG.
std::vector<double> default_hv_reference(ProblemFamily family, int objectives);

/// Pareto-dominated points removed (minimization). Duplicates survive; they
/// do not dominate each other.
Front nondominated(const Front& front);

}  // namespace manyopt
