#include "manyopt/scalarize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace manyopt {

namespace {
// Floor for the normalization denominator when an objective is momentarily
// constant across the population.
constexpr double kMinRange = 1e-10;
}  // namespace

ScalarizerState ScalarizerState::from_population(
    const std::vector<std::vector<double>>& objectives, double penalty) {
  if (objectives.empty()) {
    throw std::invalid_argument("scalarizer state requires a nonempty population");
  }
  if (penalty <= 0.0) {
    throw std::invalid_argument("PBI penalty must be positive");
  }
  ScalarizerState state;
  state.penalty = penalty;
  state.ideal = objectives.front();
  state.nadir = objectives.front();
  for (const auto& f : objectives) {
    state.update_ideal(f);
    state.update_nadir(f);
  }
  return state;
}

void ScalarizerState::update_ideal(const std::vector<double>& objectives) {
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    ideal[i] = std::min(ideal[i], objectives[i]);
  }
}

void ScalarizerState::update_nadir(const std::vector<double>& objectives) {
  for (std::size_t i = 0; i < nadir.size(); ++i) {
    nadir[i] = std::max(nadir[i], objectives[i]);
  }
}

void normalize_into(const std::vector<double>& objectives,
                    const ScalarizerState& state, std::vector<double>& out) {
  out.resize(objectives.size());
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    double range = state.nadir[i] - state.ideal[i];
    if (range < kMinRange) {
      range = kMinRange;
    }
    out[i] = (objectives[i] - state.ideal[i]) / range;
  }
}

std::vector<double> normalize(const std::vector<double>& objectives,
                              const ScalarizerState& state) {
  std::vector<double> out;
  normalize_into(objectives, state, out);
  return out;
}

PbiBreakdown pbi_normalized(const std::vector<double>& normalized,
                            const WeightVector& w, double penalty) {
  const auto& wc = w.components;
  double dot = 0.0, w_sq = 0.0;
  for (std::size_t i = 0; i < wc.size(); ++i) {
    dot += normalized[i] * wc[i];
    w_sq += wc[i] * wc[i];
  }
  if (w_sq == 0.0) {
    throw std::invalid_argument("pbi: zero-norm weight vector");
  }
  const double w_norm = std::sqrt(w_sq);
  PbiBreakdown result;
  result.d1 = std::abs(dot) / w_norm;
  double residual_sq = 0.0;
  for (std::size_t i = 0; i < wc.size(); ++i) {
    const double r = normalized[i] - result.d1 * wc[i] / w_norm;
    residual_sq += r * r;
  }
  result.d2 = std::sqrt(residual_sq);
  result.value = result.d1 + penalty * result.d2;
  return result;
}

PbiBreakdown pbi(const std::vector<double>& objectives, const WeightVector& w,
                 const ScalarizerState& state, std::vector<double>& scratch) {
  normalize_into(objectives, state, scratch);
  return pbi_normalized(scratch, w, state.penalty);
}

PbiBreakdown pbi(const std::vector<double>& objectives, const WeightVector& w,
                 const ScalarizerState& state) {
  std::vector<double> scratch;
  return pbi(objectives, w, state, scratch);
}

}  // namespace manyopt
