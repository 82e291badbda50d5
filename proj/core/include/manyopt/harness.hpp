#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "manyopt/engine.hpp"
#include "manyopt/errors.hpp"
#include "manyopt/metrics.hpp"

namespace manyopt {

/// Flat experiment description as read from a config file. Optional fields
/// default to the standard experimental settings for the chosen instance:
/// divisions and population size from the division table, generations from
/// the per-problem generation table (3000 for WFG), mutation probability
/// 0.5/n, IGD for DTLZ and hypervolume for WFG with the family's reference
/// point.
struct ExperimentConfig {
  std::string problem = "dtlz2";
  int objectives = 3;                    // key: m
  std::string update = "liu";            // liu | replace_all | replace_2
  std::optional<int> divisions;          // key: d (single-layer lattice)
  std::optional<int> boundary_divisions; // key: d1
  std::optional<int> inside_divisions;   // key: d2
  double shrinkage = 0.5;                // key: tau
  int neighborhood_size = 30;            // key: t
  double neighbor_prob = 0.9;            // key: p_s
  double crossover_prob = 1.0;           // key: p_c
  double crossover_index = 20.0;         // key: eta_c
  std::optional<double> mutation_prob;   // key: p_m
  double mutation_index = 20.0;          // key: eta_m
  double pbi_theta = 5.0;                // key: pbi_theta
  std::optional<int> generations;        // key: generations
  int runs = 20;                         // key: runs
  std::uint64_t base_seed = 1;           // key: seed
  std::optional<std::vector<std::string>> metrics;  // key: metrics (comma list)
  std::optional<std::vector<double>> hv_reference;  // key: hv_ref (comma list)
  std::uint64_t hv_mc_samples = 10000000;           // key: hv_mc_samples
  std::string plot = "none";             // key: plot (none | scatter | parallel)
  std::string output_dir;                // key: output_dir ("" = no artifacts)
  int threads = 0;                       // key: threads (0 = hardware)
  int trace_every = 0;                   // key: trace_every (0 = no trace)
};

/// Parse the flat key = value format ('#' comments, blank lines ignored).
/// Unknown keys and malformed values raise ConfigError naming the key.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Apply MANYOPT_<KEY> environment overrides (e.g. MANYOPT_GENERATIONS=10).
void apply_env_overrides(ExperimentConfig& config);

/// A config with every optional resolved, plus the derived objects the runs
/// need. resolve() validates everything and throws ConfigError on problems.
struct Experiment {
  ExperimentConfig config;  // optionals filled in
  ProblemInstance problem;
  WeightSet weights;        // neighborhoods built
  EngineConfig engine;
  std::vector<std::string> metric_names;
  std::vector<double> hv_reference;
};

Experiment resolve(ExperimentConfig config);

/// The resolved config in canonical form: fixed key order, 17-significant
/// digit numbers. Re-parsing it reproduces the experiment exactly.
std::string canonical_config(const ExperimentConfig& resolved);

/// Best / median / worst of a metric over a run batch. Orientation depends on
/// the metric: IGD is minimized, HV maximized. The median of an even batch is
/// the midpoint of the two central values.
struct StatsRow {
  double best = 0.0;
  double median = 0.0;
  double worst = 0.0;
  std::vector<double> per_run;
};

StatsRow make_stats_row(std::vector<double> per_run, bool lower_is_better);

struct ExperimentResult {
  Experiment experiment;
  std::vector<RunRecord> records;                // index r ran with seed base+r
  std::map<std::string, StatsRow> stats;         // keyed by metric name
  std::string stats_json;                        // what run_experiment wrote/would write
  std::string counters_json;
};

/// Run the full batch (seeds base, base+1, ..., base+runs-1, fanned out over
/// worker threads), score the final populations, and, when output_dir is set,
/// write the artifact directory: `config`, `front_seed<seed>.csv`
/// (non-dominated filter applied, recorded in the file header), optional
/// `plot_seed<seed>.csv`, `stats.json`, `counters.json`.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct SweepCell {
  int neighborhood_size = 0;
  double neighbor_prob = 0.0;
  std::map<std::string, StatsRow> stats;
};

struct SweepResult {
  std::vector<int> t_values;
  std::vector<double> ps_values;
  std::vector<SweepCell> cells;  // t-major order
  std::string grid_json;
};

/// Full Cartesian grid over neighborhood sizes and neighborhood-mating
/// probabilities; each cell is a complete run_experiment. With an output
/// directory set, cells land in <dir>/t<T>_ps<P>/ and the grid summary in
/// <dir>/grid.json.
SweepResult sensitivity_sweep(const ExperimentConfig& base,
                              const std::vector<int>& t_values,
                              const std::vector<double>& ps_values);

enum class PlotKind { scatter, parallel_coordinates };

/// One CSV row of objectives per individual (no filtering). The kind is
/// recorded in the header so plotting scripts know whether to render points
/// or one axis per objective.
void export_plot_data(const RunRecord& record, PlotKind kind,
                      const std::string& path);

}  // namespace manyopt
