#pragma once

#include <vector>

#include "manyopt/weights.hpp"

namespace manyopt {

/// Moving normalization frame for PBI scalarization: the ideal point tracks
/// the componentwise minimum of every objective vector seen so far, the nadir
/// point the componentwise maximum.
struct ScalarizerState {
  std::vector<double> ideal;
  std::vector<double> nadir;
  double penalty = 5.0;  // PBI penalty weighting the diversity distance

  /// Exact componentwise min/max over a nonempty set of objective vectors.
  static ScalarizerState from_population(
      const std::vector<std::vector<double>>& objectives, double penalty);

  void update_ideal(const std::vector<double>& objectives);
  void update_nadir(const std::vector<double>& objectives);

  int objectives() const { return static_cast<int>(ideal.size()); }
};

/// PBI scalarization split into its convergence distance d1 (projection onto
/// the weight direction) and diversity distance d2 (distance to that
/// direction). value = d1 + penalty * d2.
struct PbiBreakdown {
  double d1 = 0.0;
  double d2 = 0.0;
  double value = 0.0;
};

/// (f_i - ideal_i) / (nadir_i - ideal_i) per component. A degenerate range
/// below 1e-10 is replaced by 1e-10 so momentarily constant objectives do not
/// blow up the quotient.
std::vector<double> normalize(const std::vector<double>& objectives,
                              const ScalarizerState& state);
void normalize_into(const std::vector<double>& objectives,
                    const ScalarizerState& state, std::vector<double>& out);

/// PBI of an already-normalized objective vector.
PbiBreakdown pbi_normalized(const std::vector<double>& normalized,
                            const WeightVector& w, double penalty);

/// PBI of raw objectives: normalize against the frame, then score. The
/// two-step route and this one produce bit-identical values.
PbiBreakdown pbi(const std::vector<double>& objectives, const WeightVector& w,
                 const ScalarizerState& state);
/// Same, reusing caller-owned scratch storage for the normalized vector.
PbiBreakdown pbi(const std::vector<double>& objectives, const WeightVector& w,
                 const ScalarizerState& state, std::vector<double>& scratch);

}  // namespace manyopt
