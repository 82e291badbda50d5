// manyopt command-line tool: run seeded experiment batches, parameter sweeps,
// weight-set generation, and front metrics from the shell.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "manyopt/csv.hpp"
#include "manyopt/engine.hpp"
#include "manyopt/errors.hpp"
#include "manyopt/harness.hpp"
#include "manyopt/metrics.hpp"
#include "manyopt/problems.hpp"
#include "manyopt/weights.hpp"

using nlohmann::json;

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& field) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) {
      try {
        values.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw manyopt::ConfigError(field, "bad integer '" + item + "'");
      }
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  if (values.empty()) {
    throw manyopt::ConfigError(field, "expected a comma-separated list");
  }
  return values;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& field) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) {
      try {
        values.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw manyopt::ConfigError(field, "bad number '" + item + "'");
      }
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  if (values.empty()) {
    throw manyopt::ConfigError(field, "expected a comma-separated list");
  }
  return values;
}

json stats_to_json(const std::map<std::string, manyopt::StatsRow>& stats) {
  json out;
  for (const auto& [name, row] : stats) {
    out[name] = {{"best", row.best}, {"median", row.median}, {"worst", row.worst}};
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decomposition-based many-objective optimization benchmark harness"};
  app.require_subcommand(1);

  // run -----------------------------------------------------------------
  auto* run_cmd = app.add_subcommand("run", "Run an experiment described by a config file");
  std::string run_config_path;
  std::string run_output_dir;
  run_cmd->add_option("config", run_config_path, "flat key = value config file")->required();
  run_cmd->add_option("--output-dir", run_output_dir, "override the config's output_dir");

  // sweep ---------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "Neighborhood-size x selection-probability sensitivity grid");
  std::string sweep_config_path, sweep_t_values, sweep_ps_values, sweep_output_dir;
  sweep_cmd->add_option("config", sweep_config_path)->required();
  sweep_cmd->add_option("--t-values", sweep_t_values, "comma list of neighborhood sizes")->required();
  sweep_cmd->add_option("--ps-values", sweep_ps_values, "comma list of selection probabilities")->required();
  sweep_cmd->add_option("--output-dir", sweep_output_dir, "override the config's output_dir");

  // metrics ---------------------------------------------------------------
  auto* metrics_cmd = app.add_subcommand("metrics", "Score a front CSV file (one point per row)");
  std::string metrics_front_path, metrics_ref_front, metrics_problem, metrics_hv_ref;
  int metrics_m = 0, metrics_d = 0;
  bool metrics_igd = false, metrics_hv = false, metrics_mc = false;
  std::uint64_t metrics_mc_samples = 10000000;
  std::uint64_t metrics_seed = 1;
  metrics_cmd->add_option("front", metrics_front_path, "front CSV file")->required();
  metrics_cmd->add_flag("--igd", metrics_igd, "compute IGD");
  metrics_cmd->add_flag("--hv", metrics_hv, "compute normalized hypervolume");
  metrics_cmd->add_option("--ref-front", metrics_ref_front, "reference front CSV for IGD");
  metrics_cmd->add_option("--problem", metrics_problem, "DTLZ family for an analytic IGD reference");
  metrics_cmd->add_option("--m", metrics_m, "objectives for --problem");
  metrics_cmd->add_option("--d", metrics_d, "lattice divisions for --problem (default: standard table)");
  metrics_cmd->add_option("--hv-ref", metrics_hv_ref, "comma list, e.g. 3,5,7");
  metrics_cmd->add_flag("--mc", metrics_mc, "Monte-Carlo hypervolume instead of exact");
  metrics_cmd->add_option("--mc-samples", metrics_mc_samples, "Monte-Carlo sample count");
  metrics_cmd->add_option("--seed", metrics_seed, "Monte-Carlo seed");

  // weights ---------------------------------------------------------------
  auto* weights_cmd = app.add_subcommand("weights", "Emit a weight set as CSV for cross-implementation diffing");
  int weights_m = 0, weights_d = 0, weights_d1 = 0, weights_d2 = 0;
  double weights_tau = 0.5;
  std::string weights_out;
  weights_cmd->add_option("--m", weights_m, "objectives")->required();
  weights_cmd->add_option("--d", weights_d, "single-layer divisions");
  weights_cmd->add_option("--d1", weights_d1, "boundary-layer divisions");
  weights_cmd->add_option("--d2", weights_d2, "inside-layer divisions");
  weights_cmd->add_option("--tau", weights_tau, "inside-layer shrinkage");
  weights_cmd->add_option("--out", weights_out, "output file (default stdout)");

  // problems ---------------------------------------------------------------
  auto* problems_cmd = app.add_subcommand("problems", "Benchmark problem catalogue");
  auto* problems_list = problems_cmd->add_subcommand("list", "Print every instance's id, M, n and bounds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      manyopt::ExperimentConfig config = manyopt::load_config(run_config_path);
      manyopt::apply_env_overrides(config);
      if (!run_output_dir.empty()) {
        config.output_dir = run_output_dir;
      }
      manyopt::ExperimentResult result = manyopt::run_experiment(config);
      std::cout << stats_to_json(result.stats).dump(2) << "\n";
    } else if (*sweep_cmd) {
      manyopt::ExperimentConfig config = manyopt::load_config(sweep_config_path);
      manyopt::apply_env_overrides(config);
      if (!sweep_output_dir.empty()) {
        config.output_dir = sweep_output_dir;
      }
      manyopt::SweepResult result = manyopt::sensitivity_sweep(
          config, parse_int_list(sweep_t_values, "t_values"),
          parse_double_list(sweep_ps_values, "ps_values"));
      std::cout << result.grid_json;
    } else if (*metrics_cmd) {
      if (!metrics_igd && !metrics_hv) {
        throw manyopt::ConfigError("metrics", "pass --igd and/or --hv");
      }
      const manyopt::Front front = manyopt::read_csv(metrics_front_path);
      if (front.empty()) {
        throw manyopt::ConfigError("front", "front file holds no points");
      }
      json out;
      if (metrics_igd) {
        manyopt::Front reference;
        if (!metrics_ref_front.empty()) {
          reference = manyopt::read_csv(metrics_ref_front);
        } else if (!metrics_problem.empty()) {
          if (metrics_m < 2) {
            throw manyopt::ConfigError("m", "--problem needs --m");
          }
          manyopt::ExperimentConfig defaults;
          defaults.problem = metrics_problem;
          defaults.objectives = metrics_m;
          if (metrics_d > 0) {
            defaults.divisions = metrics_d;
          }
          defaults.neighborhood_size = 1;  // irrelevant for the reference set
          manyopt::Experiment experiment = manyopt::resolve(defaults);
          reference = manyopt::reference_set(experiment.problem.family,
                                             experiment.weights);
        } else {
          throw manyopt::ConfigError("ref_front",
                                     "IGD needs --ref-front or --problem/--m");
        }
        out["igd"] = manyopt::igd(front, reference);
      }
      if (metrics_hv) {
        if (metrics_hv_ref.empty()) {
          throw manyopt::ConfigError("hv_ref", "hypervolume needs --hv-ref");
        }
        const std::vector<double> reference =
            parse_double_list(metrics_hv_ref, "hv_ref");
        if (metrics_mc) {
          manyopt::Rng rng(metrics_seed);
          const manyopt::HvEstimate estimate =
              manyopt::hv_monte_carlo(front, reference, metrics_mc_samples, rng);
          out["hv"] = estimate.value;
          out["hv_standard_error"] = estimate.standard_error;
        } else {
          out["hv"] = manyopt::hv_exact(front, reference);
        }
      }
      std::cout << out.dump(2) << "\n";
    } else if (*weights_cmd) {
      if ((weights_d > 0) == (weights_d1 > 0 || weights_d2 > 0)) {
        throw manyopt::ConfigError("d", "pass either --d or both --d1 and --d2");
      }
      manyopt::WeightSet set =
          weights_d > 0
              ? manyopt::generate_simplex_lattice(weights_m, weights_d)
              : manyopt::generate_two_layer(weights_m, weights_d1, weights_d2,
                                            weights_tau);
      std::vector<std::vector<double>> rows;
      rows.reserve(set.vectors.size());
      for (const auto& w : set.vectors) {
        rows.push_back(w.components);
      }
      const std::string csv = manyopt::csv_to_string(rows);
      if (weights_out.empty()) {
        std::cout << csv;
      } else {
        manyopt::write_csv(weights_out, rows);
      }
    } else if (*problems_cmd) {
      if (!*problems_list) {
        throw manyopt::ConfigError("problems", "expected 'problems list'");
      }
      std::printf("%-12s %4s %4s  %s\n", "id", "M", "n", "bounds");
      for (manyopt::ProblemFamily family : manyopt::all_problem_families()) {
        for (int m : {3, 5, 8, 10, 15}) {
          const manyopt::ProblemInstance p = manyopt::make_instance(family, m);
          std::printf("%-12s %4d %4d  %s\n", p.id().c_str(), p.objectives,
                      p.variables,
                      manyopt::is_dtlz(family) ? "x_j in [0, 1]"
                                               : "z_j in [0, 2j]");
        }
      }
    }
  } catch (const manyopt::ConfigError& e) {
    json error = {{"error", e.what()}, {"field", e.field()}};
    std::cerr << error.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json error = {{"error", e.what()}};
    std::cerr << error.dump() << "\n";
    return 1;
  }
  return 0;
}
