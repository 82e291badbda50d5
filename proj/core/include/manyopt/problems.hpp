#pragma once

#include <string>
#include <vector>

#include "manyopt/bounds.hpp"
#include "manyopt/weights.hpp"

namespace manyopt {

enum class ProblemFamily {
  dtlz1,
  dtlz2,
  dtlz3,
  dtlz4,
  wfg1,
  wfg2,
  wfg3,
  wfg4,
  wfg5,
  wfg6,
  wfg7,
  wfg8,
  wfg9,
};

const std::vector<ProblemFamily>& all_problem_families();
std::string family_name(ProblemFamily family);
ProblemFamily parse_problem_family(const std::string& name);
bool is_dtlz(ProblemFamily family);
bool is_wfg(ProblemFamily family);

/// A concrete scalable benchmark instance.
///
/// DTLZ: variables = objectives + distance_params - 1 over [0,1]^n, with
/// 5 distance variables for DTLZ1 and 10 for DTLZ2-4.
/// WFG: variables = position_params + distance_params with
/// position_params = 2*(objectives-1), distance_params = 20, and the j-th
/// variable ranging over [0, 2j].
struct ProblemInstance {
  ProblemFamily family = ProblemFamily::dtlz2;
  int objectives = 0;
  int variables = 0;
  Bounds bounds;
  int position_params = 0;  // WFG k
  int distance_params = 0;  // WFG l, or the DTLZ distance-variable count

  std::string id() const;  // e.g. "dtlz3-m10"
};

/// Instance with the standard experimental parameterization for the family.
ProblemInstance make_instance(ProblemFamily family, int objectives);
ProblemInstance make_instance(const std::string& family, int objectives);

/// Objective vector for an in-bounds decision vector. Pure and deterministic;
/// throws std::invalid_argument when the decision is out of bounds or has the
/// wrong length.
std::vector<double> evaluate(const ProblemInstance& instance,
                             const std::vector<double>& decision);

/// Intersection of the ray along a weight vector with the known Pareto
/// surface. DTLZ1 meets the plane sum(f) = 0.5; DTLZ2-4 meet the unit sphere.
/// Only defined for DTLZ families.
std::vector<double> pareto_point_from_weight(ProblemFamily family,
                                             const WeightVector& w);

}  // namespace manyopt
