#include "manyopt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "manyopt/csv.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace manyopt {

namespace {

// ---------------------------------------------------------------------------
// config text format
// ---------------------------------------------------------------------------

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream stream(value);
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (!item.empty()) {
      items.push_back(item);
    }
  }
  return items;
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t consumed = 0;
    const long long parsed = std::stoll(value, &consumed);
    if (consumed != value.size()) {
      throw std::invalid_argument(value);
    }
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected an integer for '" + key + "', got '" + value + "'");
  }
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    std::size_t consumed = 0;
    const double parsed = std::stod(value, &consumed);
    if (consumed != value.size()) {
      throw std::invalid_argument(value);
    }
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected a number for '" + key + "', got '" + value + "'");
  }
}

std::vector<double> parse_real_list(const std::string& key, const std::string& value) {
  std::vector<double> values;
  for (const auto& item : split_list(value)) {
    values.push_back(parse_real(key, item));
  }
  if (values.empty()) {
    throw ConfigError(key, "expected a comma-separated list for '" + key + "'");
  }
  return values;
}

void set_key(ExperimentConfig& config, const std::string& key,
             const std::string& value) {
  if (key == "problem") {
    config.problem = value;
  } else if (key == "m") {
    config.objectives = static_cast<int>(parse_int(key, value));
  } else if (key == "update") {
    config.update = value;
  } else if (key == "d") {
    config.divisions = static_cast<int>(parse_int(key, value));
  } else if (key == "d1") {
    config.boundary_divisions = static_cast<int>(parse_int(key, value));
  } else if (key == "d2") {
    config.inside_divisions = static_cast<int>(parse_int(key, value));
  } else if (key == "tau") {
    config.shrinkage = parse_real(key, value);
  } else if (key == "t") {
    config.neighborhood_size = static_cast<int>(parse_int(key, value));
  } else if (key == "p_s") {
    config.neighbor_prob = parse_real(key, value);
  } else if (key == "p_c") {
    config.crossover_prob = parse_real(key, value);
  } else if (key == "eta_c") {
    config.crossover_index = parse_real(key, value);
  } else if (key == "p_m") {
    config.mutation_prob = parse_real(key, value);
  } else if (key == "eta_m") {
    config.mutation_index = parse_real(key, value);
  } else if (key == "pbi_theta") {
    config.pbi_theta = parse_real(key, value);
  } else if (key == "generations") {
    config.generations = static_cast<int>(parse_int(key, value));
  } else if (key == "runs") {
    config.runs = static_cast<int>(parse_int(key, value));
  } else if (key == "seed") {
    config.base_seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "metrics") {
    config.metrics = split_list(value);
  } else if (key == "hv_ref") {
    config.hv_reference = parse_real_list(key, value);
  } else if (key == "hv_mc_samples") {
    config.hv_mc_samples = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "plot") {
    config.plot = value;
  } else if (key == "output_dir") {
    config.output_dir = value;
  } else if (key == "threads") {
    config.threads = static_cast<int>(parse_int(key, value));
  } else if (key == "trace_every") {
    config.trace_every = static_cast<int>(parse_int(key, value));
  } else {
    throw ConfigError(key, "unknown config key '" + key + "'");
  }
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "problem", "m", "update", "d", "d1", "d2", "tau", "t", "p_s", "p_c",
      "eta_c", "p_m", "eta_m", "pbi_theta", "generations", "runs", "seed",
      "metrics", "hv_ref", "hv_mc_samples", "plot", "output_dir", "threads",
      "trace_every"};
  return keys;
}

// ---------------------------------------------------------------------------
// standard experimental settings
// ---------------------------------------------------------------------------

struct DivisionRow {
  int objectives;
  int boundary;
  int inside;  // 0 for single-layer
};

// divisions per objective count; M >= 8 uses the two-layer construction
constexpr DivisionRow kDivisionTable[] = {
    {3, 12, 0}, {5, 6, 0}, {8, 3, 2}, {10, 3, 2}, {15, 2, 1}};

int default_generations(ProblemFamily family, int objectives) {
  struct GenerationRow {
    ProblemFamily family;
    int by_objectives[5];  // M = 3, 5, 8, 10, 15
  };
  static constexpr GenerationRow kTable[] = {
      {ProblemFamily::dtlz1, {400, 600, 750, 1000, 1500}},
      {ProblemFamily::dtlz2, {250, 350, 500, 750, 1000}},
      {ProblemFamily::dtlz3, {1000, 1000, 1000, 1500, 2000}},
      {ProblemFamily::dtlz4, {600, 1000, 1250, 2000, 3000}},
  };
  if (is_wfg(family)) {
    return 3000;
  }
  static constexpr int kObjectiveColumns[] = {3, 5, 8, 10, 15};
  for (const auto& row : kTable) {
    if (row.family != family) {
      continue;
    }
    for (int c = 0; c < 5; ++c) {
      if (kObjectiveColumns[c] == objectives) {
        return row.by_objectives[c];
      }
    }
  }
  throw ConfigError("generations",
                    "no default generation count for this instance; set 'generations'");
}

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

// Fixed salt so Monte-Carlo hypervolume scoring is deterministic per run and
// independent of the engine stream.
constexpr std::uint64_t kMetricSeedSalt = 0x6d616e796f707421ULL;

double score_metric(const std::string& name, const Front& front,
                    const Experiment& experiment, const Front& reference_front,
                    std::uint64_t run_seed) {
  if (name == "igd") {
    return igd(front, reference_front);
  }
  if (experiment.problem.objectives <= 10) {
    return hv_exact(front, experiment.hv_reference);
  }
  Rng rng(run_seed ^ kMetricSeedSalt);
  return hv_monte_carlo(front, experiment.hv_reference,
                        experiment.config.hv_mc_samples, rng)
      .value;
}

void for_each_run(int runs, int threads, const std::function<void(int)>& body) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  threads = std::max(1, std::min(threads, runs));
  if (threads == 1) {
    for (int r = 0; r < runs; ++r) {
      body(r);
    }
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const int r = next.fetch_add(1);
        if (r >= runs) {
          return;
        }
        try {
          body(r);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) {
            first_error = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& worker : workers) {
    worker.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

json stats_row_to_json(const StatsRow& row) {
  json j;
  j["best"] = row.best;
  j["median"] = row.median;
  j["worst"] = row.worst;
  j["per_run"] = row.per_run;
  return j;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig config;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == '#') {
      continue;
    }
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) +
                                " is not of the form key = value");
    }
    const std::string key = trim(trimmed.substr(0, eq));
    const std::string value = trim(trimmed.substr(eq + 1));
    set_key(config, key, value);
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw ConfigError("", "cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str());
}

void apply_env_overrides(ExperimentConfig& config) {
  for (const auto& key : known_keys()) {
    std::string env_name = "MANYOPT_";
    for (char c : key) {
      env_name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (const char* value = std::getenv(env_name.c_str())) {
      set_key(config, key, value);
    }
  }
}

Experiment resolve(ExperimentConfig config) {
  Experiment experiment;

  ProblemFamily family;
  try {
    family = parse_problem_family(config.problem);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("problem", e.what());
  }
  if (config.objectives < 2) {
    throw ConfigError("m", "need at least 2 objectives");
  }
  experiment.problem = make_instance(family, config.objectives);

  // weight layout: explicit d / d1+d2 win, otherwise the division table
  if (config.divisions && (config.boundary_divisions || config.inside_divisions)) {
    throw ConfigError("d", "set either d or d1/d2, not both");
  }
  if (config.boundary_divisions.has_value() != config.inside_divisions.has_value()) {
    throw ConfigError("d1", "two-layer weights need both d1 and d2");
  }
  if (!config.divisions && !config.boundary_divisions) {
    bool found = false;
    for (const auto& row : kDivisionTable) {
      if (row.objectives == config.objectives) {
        if (row.inside == 0) {
          config.divisions = row.boundary;
        } else {
          config.boundary_divisions = row.boundary;
          config.inside_divisions = row.inside;
        }
        found = true;
        break;
      }
    }
    if (!found) {
      throw ConfigError("d", "no default divisions for m=" +
                                 std::to_string(config.objectives) +
                                 "; set d or d1/d2");
    }
  }
  if (config.shrinkage < 0.0 || config.shrinkage > 1.0) {
    throw ConfigError("tau", "shrinkage factor must lie in [0, 1]");
  }

  WeightSet weights;
  try {
    weights = config.divisions
                  ? generate_simplex_lattice(config.objectives, *config.divisions)
                  : generate_two_layer(config.objectives, *config.boundary_divisions,
                                       *config.inside_divisions, config.shrinkage);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("d", e.what());
  }
  if (config.neighborhood_size < 1 || config.neighborhood_size > weights.size()) {
    throw ConfigError("t", "neighborhood size must lie in [1, " +
                               std::to_string(weights.size()) + "]");
  }
  experiment.weights = build_neighborhoods(std::move(weights), config.neighborhood_size);

  if (!config.generations) {
    config.generations = default_generations(family, config.objectives);
  }
  if (!config.mutation_prob) {
    config.mutation_prob = 0.5 / experiment.problem.variables;
  }
  if (!config.metrics) {
    config.metrics = std::vector<std::string>{is_dtlz(family) ? "igd" : "hv"};
  }
  for (const auto& name : *config.metrics) {
    if (name != "igd" && name != "hv") {
      throw ConfigError("metrics", "unknown metric '" + name + "'");
    }
    if (name == "igd" && is_wfg(family)) {
      throw ConfigError("metrics",
                        "IGD needs an analytic reference front, which WFG does "
                        "not have; use hv");
    }
  }
  const bool wants_hv =
      std::find(config.metrics->begin(), config.metrics->end(), "hv") !=
      config.metrics->end();
  if (!config.hv_reference) {
    config.hv_reference = default_hv_reference(family, config.objectives);
  }
  if (wants_hv) {
    if (static_cast<int>(config.hv_reference->size()) != config.objectives) {
      throw ConfigError("hv_ref", "reference point needs one component per objective");
    }
    for (double z : *config.hv_reference) {
      if (z <= 0.0) {
        throw ConfigError("hv_ref", "reference components must be positive");
      }
    }
  }
  if (config.runs < 1) {
    throw ConfigError("runs", "need at least one run");
  }
  if (config.threads < 0) {
    throw ConfigError("threads", "thread count cannot be negative");
  }
  if (config.trace_every < 0) {
    throw ConfigError("trace_every", "trace interval cannot be negative");
  }
  if (config.hv_mc_samples < 1) {
    throw ConfigError("hv_mc_samples", "need at least one sample");
  }
  if (config.plot != "none" && config.plot != "scatter" && config.plot != "parallel") {
    throw ConfigError("plot", "plot must be none, scatter or parallel");
  }

  experiment.engine.update = parse_update_strategy(config.update);
  experiment.engine.variation.crossover_prob = config.crossover_prob;
  experiment.engine.variation.crossover_index = config.crossover_index;
  experiment.engine.variation.mutation_prob = *config.mutation_prob;
  experiment.engine.variation.mutation_index = config.mutation_index;
  experiment.engine.variation.neighbor_prob = config.neighbor_prob;
  experiment.engine.pbi_penalty = config.pbi_theta;
  experiment.engine.generations = *config.generations;
  experiment.metric_names = *config.metrics;
  experiment.hv_reference = *config.hv_reference;
  experiment.config = std::move(config);
  return experiment;
}

std::string canonical_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "problem = " << c.problem << '\n';
  out << "m = " << c.objectives << '\n';
  out << "update = " << c.update << '\n';
  if (c.divisions) {
    out << "d = " << *c.divisions << '\n';
  }
  if (c.boundary_divisions) {
    out << "d1 = " << *c.boundary_divisions << '\n';
    out << "d2 = " << *c.inside_divisions << '\n';
    out << "tau = " << format_double(c.shrinkage) << '\n';
  }
  out << "t = " << c.neighborhood_size << '\n';
  out << "p_s = " << format_double(c.neighbor_prob) << '\n';
  out << "p_c = " << format_double(c.crossover_prob) << '\n';
  out << "eta_c = " << format_double(c.crossover_index) << '\n';
  if (c.mutation_prob) {
    out << "p_m = " << format_double(*c.mutation_prob) << '\n';
  }
  out << "eta_m = " << format_double(c.mutation_index) << '\n';
  out << "pbi_theta = " << format_double(c.pbi_theta) << '\n';
  if (c.generations) {
    out << "generations = " << *c.generations << '\n';
  }
  out << "runs = " << c.runs << '\n';
  out << "seed = " << c.base_seed << '\n';
  if (c.metrics) {
    out << "metrics = ";
    for (std::size_t i = 0; i < c.metrics->size(); ++i) {
      out << (i ? "," : "") << (*c.metrics)[i];
    }
    out << '\n';
  }
  if (c.hv_reference) {
    out << "hv_ref = ";
    for (std::size_t i = 0; i < c.hv_reference->size(); ++i) {
      out << (i ? "," : "") << format_double((*c.hv_reference)[i]);
    }
    out << '\n';
  }
  out << "hv_mc_samples = " << c.hv_mc_samples << '\n';
  out << "plot = " << c.plot << '\n';
  out << "output_dir = " << c.output_dir << '\n';
  out << "threads = " << c.threads << '\n';
  out << "trace_every = " << c.trace_every << '\n';
  return out.str();
}

StatsRow make_stats_row(std::vector<double> per_run, bool lower_is_better) {
  StatsRow row;
  row.per_run = per_run;
  std::sort(per_run.begin(), per_run.end());
  const std::size_t n = per_run.size();
  const double median = n % 2 == 1
                            ? per_run[n / 2]
                            : 0.5 * (per_run[n / 2 - 1] + per_run[n / 2]);
  row.median = median;
  if (lower_is_better) {
    row.best = per_run.front();
    row.worst = per_run.back();
  } else {
    row.best = per_run.back();
    row.worst = per_run.front();
  }
  return row;
}

ExperimentResult run_experiment(const ExperimentConfig& raw_config) {
  ExperimentResult result;
  result.experiment = resolve(raw_config);
  const Experiment& experiment = result.experiment;
  const ExperimentConfig& config = experiment.config;

  Front reference_front;
  const bool wants_igd =
      std::find(experiment.metric_names.begin(), experiment.metric_names.end(),
                "igd") != experiment.metric_names.end();
  if (wants_igd) {
    reference_front = reference_set(experiment.problem.family, experiment.weights);
  }

  result.records.resize(config.runs);
  std::vector<std::map<std::string, double>> scores(config.runs);
  for_each_run(config.runs, config.threads, [&](int r) {
    const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(r);
    GenerationObserver observer;
    std::vector<std::pair<int, std::map<std::string, double>>> trace;
    if (config.trace_every > 0) {
      observer = [&](int generation, const Population& population) {
        if (generation % config.trace_every != 0 &&
            generation != experiment.engine.generations) {
          return;
        }
        Front front;
        front.reserve(population.size());
        for (const auto& individual : population) {
          front.push_back(individual.objectives);
        }
        std::map<std::string, double> values;
        for (const auto& name : experiment.metric_names) {
          values[name] = score_metric(name, front, experiment, reference_front, seed);
        }
        trace.emplace_back(generation, std::move(values));
      };
    }
    RunRecord record = run(experiment.problem, experiment.weights,
                           experiment.engine, seed, observer);
    record.metric_trace = std::move(trace);
    for (const auto& name : experiment.metric_names) {
      scores[r][name] = score_metric(name, record.final_objectives, experiment,
                                     reference_front, seed);
    }
    result.records[r] = std::move(record);
  });

  for (const auto& name : experiment.metric_names) {
    std::vector<double> per_run(config.runs);
    for (int r = 0; r < config.runs; ++r) {
      per_run[r] = scores[r][name];
    }
    result.stats[name] = make_stats_row(std::move(per_run), name == "igd");
  }

  // serialize stats + counters
  json stats_json;
  {
    // the embedded snapshot holds the science keys only; where the artifacts
    // land and how many workers ran provably do not change the results
    json config_json;
    std::istringstream canonical(canonical_config(config));
    std::string line;
    while (std::getline(canonical, line)) {
      const auto eq = line.find('=');
      const std::string key = trim(line.substr(0, eq));
      if (key == "output_dir" || key == "threads" || key == "plot" ||
          key == "trace_every") {
        continue;
      }
      config_json[key] = trim(line.substr(eq + 1));
    }
    stats_json["config"] = config_json;
    stats_json["front_filter"] = "nondominated";
    json metrics_json;
    for (const auto& [name, row] : result.stats) {
      metrics_json[name] = stats_row_to_json(row);
    }
    stats_json["metrics"] = metrics_json;
  }
  json counters_json;
  {
    json per_run = json::array();
    RunCounters totals;
    for (const auto& record : result.records) {
      json entry;
      entry["seed"] = record.seed;
      entry["evaluations"] = record.counters.evaluations;
      entry["pbi_comparisons"] = record.counters.pbi_comparisons;
      entry["swaps"] = record.counters.swaps;
      per_run.push_back(entry);
      totals.evaluations += record.counters.evaluations;
      totals.pbi_comparisons += record.counters.pbi_comparisons;
      totals.swaps += record.counters.swaps;
    }
    counters_json["per_run"] = per_run;
    counters_json["totals"] = {{"evaluations", totals.evaluations},
                               {"pbi_comparisons", totals.pbi_comparisons},
                               {"swaps", totals.swaps}};
  }
  result.stats_json = stats_json.dump(2) + "\n";
  result.counters_json = counters_json.dump(2) + "\n";

  if (!config.output_dir.empty()) {
    const fs::path dir(config.output_dir);
    fs::create_directories(dir);
    {
      std::ofstream file(dir / "config", std::ios::binary);
      file << canonical_config(config);
    }
    for (const auto& record : result.records) {
      const Front filtered = nondominated(record.final_objectives);
      write_csv((dir / ("front_seed" + std::to_string(record.seed) + ".csv")).string(),
                filtered,
                {"manyopt front", "problem: " + record.problem_id,
                 "seed: " + std::to_string(record.seed), "filter: nondominated"});
      if (config.plot != "none") {
        export_plot_data(record,
                         config.plot == "scatter" ? PlotKind::scatter
                                                  : PlotKind::parallel_coordinates,
                         (dir / ("plot_seed" + std::to_string(record.seed) + ".csv"))
                             .string());
      }
    }
    {
      std::ofstream file(dir / "stats.json", std::ios::binary);
      file << result.stats_json;
    }
    {
      std::ofstream file(dir / "counters.json", std::ios::binary);
      file << result.counters_json;
    }
  }
  return result;
}

SweepResult sensitivity_sweep(const ExperimentConfig& base,
                              const std::vector<int>& t_values,
                              const std::vector<double>& ps_values) {
  if (t_values.empty()) {
    throw ConfigError("t_values", "sweep needs at least one neighborhood size");
  }
  if (ps_values.empty()) {
    throw ConfigError("ps_values", "sweep needs at least one selection probability");
  }
  SweepResult result;
  result.t_values = t_values;
  result.ps_values = ps_values;
  json cells_json = json::array();
  for (int t : t_values) {
    for (double ps : ps_values) {
      ExperimentConfig cell_config = base;
      cell_config.neighborhood_size = t;
      cell_config.neighbor_prob = ps;
      if (!base.output_dir.empty()) {
        char label[64];
        std::snprintf(label, sizeof(label), "t%d_ps%g", t, ps);
        cell_config.output_dir =
            (fs::path(base.output_dir) / label).string();
      }
      ExperimentResult cell = run_experiment(cell_config);
      SweepCell summary;
      summary.neighborhood_size = t;
      summary.neighbor_prob = ps;
      summary.stats = cell.stats;
      json cell_json;
      cell_json["t"] = t;
      cell_json["p_s"] = ps;
      for (const auto& [name, row] : summary.stats) {
        cell_json[name] = stats_row_to_json(row);
      }
      cells_json.push_back(cell_json);
      result.cells.push_back(std::move(summary));
    }
  }
  json grid;
  grid["t_values"] = t_values;
  grid["ps_values"] = ps_values;
  grid["cells"] = cells_json;
  result.grid_json = grid.dump(2) + "\n";
  if (!base.output_dir.empty()) {
    fs::create_directories(base.output_dir);
    std::ofstream file(fs::path(base.output_dir) / "grid.json", std::ios::binary);
    file << result.grid_json;
  }
  return result;
}

void export_plot_data(const RunRecord& record, PlotKind kind,
                      const std::string& path) {
  std::string columns = "columns: ";
  for (int i = 0; i < record.objectives; ++i) {
    columns += (i ? ",f" : "f") + std::to_string(i + 1);
  }
  write_csv(path, record.final_objectives,
            {"manyopt plot data",
             std::string("kind: ") + (kind == PlotKind::scatter
                                          ? "scatter"
                                          : "parallel-coordinates"),
             "problem: " + record.problem_id,
             "seed: " + std::to_string(record.seed), columns});
}

}  // namespace manyopt
