// Copyright 2026 The iondfs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library exclusively through the
// public C API; all physics lives behind that boundary.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iondfs.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_invalid_config = 2;
constexpr int exit_numerical_failure = 3;

int exit_code_for_status(int status) {
  switch (status) {
    case IONDFS_OK:
      return exit_ok;
    case IONDFS_ERR_STEP_TOO_LARGE:
    case IONDFS_ERR_NOT_PSD:
    case IONDFS_ERR_NOT_HERMITIAN:
    case IONDFS_ERR_NUMERICAL_FAILURE:
    case IONDFS_ERR_CLOSURE_ITERATION_LIMIT:
    case IONDFS_ERR_INTERNAL:
      return exit_numerical_failure;
    default:
      return exit_invalid_config;
  }
}

// 17 significant digits: enough to round-trip any double exactly.
std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

struct Config {
  std::string n_list;
  std::vector<int> n_values;
  double gamma = 1.0;
  double g = 1.0;
  double total_time = std::numbers::pi;
  std::string pair = "0,1";
  int pair_i = 0;
  int pair_j = 1;
  std::string code = "CI";
  std::string state = "001";
  int steps = 200;
  std::string out_path;
  std::string format = "csv";
  int n_min = 17;
  int jobs = 1;
  std::string config_path;
};

bool parse_int(const std::string& token, int& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

// Accepts comma-separated entries; each entry is an integer or a range a..b.
std::optional<std::vector<int>> parse_n_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) return std::nullopt;
    const size_t dots = token.find("..");
    if (dots == std::string::npos) {
      int v = 0;
      if (!parse_int(token, v)) return std::nullopt;
      values.push_back(v);
    } else {
      int lo = 0, hi = 0;
      if (!parse_int(token.substr(0, dots), lo)) return std::nullopt;
      if (!parse_int(token.substr(dots + 2), hi)) return std::nullopt;
      if (lo > hi) return std::nullopt;
      for (int v = lo; v <= hi; ++v) values.push_back(v);
    }
  }
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// Resolves the string-valued options after CLI parsing; returns an error
// message on bad input.
std::optional<std::string> finalize_config(Config& cfg) {
  const auto ns = parse_n_list(cfg.n_list);
  if (!ns) return "invalid --n-list '" + cfg.n_list + "' (expected e.g. 1,2,4 or 17..64)";
  cfg.n_values = *ns;
  for (int n : cfg.n_values) {
    if (n < 1) return "--n-list entries must be >= 1";
    if (n > 128) return "--n-list entries above 128 are not supported";
  }
  const size_t comma = cfg.pair.find(',');
  if (comma == std::string::npos || !parse_int(cfg.pair.substr(0, comma), cfg.pair_i) ||
      !parse_int(cfg.pair.substr(comma + 1), cfg.pair_j))
    return "invalid --pair '" + cfg.pair + "' (expected e.g. 0,1)";
  if (cfg.total_time <= 0.0) return "--time must be > 0";
  if (cfg.jobs < 1 || cfg.jobs > 64) return "--jobs must be in [1, 64]";
  return std::nullopt;
}

// Applies key=value lines from a --config file to options of the parsed
// subcommand, reusing each option's own conversion and validation. Explicit
// command-line flags win over file values; unknown keys are errors.
std::optional<std::string> apply_config_file(CLI::App* cmd, const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) return "cannot open config file '" + path + "'";

  const auto trim = [](const std::string& s) {
    const size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string();
    const size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const size_t eq = text.find('=');
    if (eq == std::string::npos)
      return "config line " + std::to_string(line_no) + " is not key=value";
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty())
      return "config line " + std::to_string(line_no) + " has an empty key or value";
    CLI::Option* opt =
        key == "config" ? nullptr : cmd->get_option_no_throw("--" + key);
    if (opt == nullptr) return "unknown config key '" + key + "'";
    if (opt->count() > 0) continue;
    try {
      if (opt->get_expected_max() > 1) {
        // Repeatable options take whitespace-separated entries.
        std::stringstream pieces(value);
        std::string piece;
        while (pieces >> piece) opt->add_result(piece);
      } else {
        opt->add_result(value);
      }
      opt->run_callback();
    } catch (const CLI::Error& e) {
      return "config key '" + key + "': " + std::string(e.what());
    }
  }
  return std::nullopt;
}

int write_output(const Config& cfg, const std::string& payload) {
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    std::cout << payload;
    return exit_ok;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << cfg.out_path << "'\n";
    return exit_invalid_config;
  }
  out << payload;
  if (!out.good()) {
    std::cerr << "error: failed writing output file '" << cfg.out_path << "'\n";
    return exit_invalid_config;
  }
  return exit_ok;
}

struct RunOutcome {
  int n = 0;
  int status = IONDFS_OK;
  std::string error;
  double one_minus_f = 0.0;
  double integrated_leakage = 0.0;
  std::vector<double> times;
  std::vector<double> leakage;
};

// Fans the per-n experiments out over --jobs worker threads. Results land in
// index-stable slots, so the output is identical for any job count.
std::vector<RunOutcome> run_experiments(const Config& cfg, double gamma, bool keep_series) {
  std::vector<RunOutcome> outcomes(cfg.n_values.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    for (size_t idx; (idx = cursor.fetch_add(1)) < cfg.n_values.size();) {
      RunOutcome& slot = outcomes[idx];
      slot.n = cfg.n_values[idx];
      iondfs_experiment* handle = nullptr;
      slot.status = iondfs_alternation_run(slot.n, gamma, cfg.g, cfg.total_time, cfg.pair_i,
                                           cfg.pair_j, cfg.code.c_str(), cfg.state.c_str(),
                                           cfg.steps, &handle);
      if (slot.status != IONDFS_OK) {
        slot.error = iondfs_last_error();
        continue;
      }
      double f = 0.0;
      iondfs_experiment_fidelity(handle, &f);
      slot.one_minus_f = 1.0 - f;
      iondfs_experiment_integrated_leakage(handle, &slot.integrated_leakage);
      if (keep_series) {
        size_t count = 0;
        iondfs_experiment_sample_count(handle, &count);
        slot.times.resize(count);
        slot.leakage.resize(count);
        iondfs_experiment_times(handle, slot.times.data(), count);
        iondfs_experiment_leakage(handle, slot.leakage.data(), count);
      }
      iondfs_experiment_free(handle);
    }
  };
  const int jobs = std::min<int>(cfg.jobs, static_cast<int>(cfg.n_values.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return outcomes;
}

// First failure wins; keeps error reporting deterministic.
std::optional<int> report_failures(const std::vector<RunOutcome>& outcomes) {
  for (const RunOutcome& o : outcomes) {
    if (o.status != IONDFS_OK) {
      std::cerr << "error: n=" << o.n << ": " << iondfs_status_name(o.status) << ": " << o.error
                << "\n";
      return exit_code_for_status(o.status);
    }
  }
  return std::nullopt;
}

ordered_json params_json(const Config& cfg, double gamma) {
  ordered_json params;
  params["gamma"] = gamma;
  params["g"] = cfg.g;
  params["time"] = cfg.total_time;
  params["pair"] = {cfg.pair_i, cfg.pair_j};
  params["code"] = cfg.code;
  params["state"] = cfg.state;
  params["steps"] = cfg.steps;
  return params;
}

int run_error_vs_n(const Config& cfg) {
  std::vector<RunOutcome> outcomes = run_experiments(cfg, cfg.gamma, false);
  if (const auto failure = report_failures(outcomes)) return *failure;

  std::vector<int> ns;
  std::vector<double> errors;
  for (const RunOutcome& o : outcomes) {
    ns.push_back(o.n);
    errors.push_back(o.one_minus_f);
  }
  double exponent = 0.0, log_prefactor = 0.0, residual = 0.0;
  const int fit_status = iondfs_fit_power_law(ns.data(), errors.data(), ns.size(), cfg.n_min,
                                              &exponent, &log_prefactor, &residual);
  const bool have_fit = fit_status == IONDFS_OK;
  if (!have_fit)
    std::cerr << "warning: power-law fit refused: " << iondfs_status_name(fit_status) << ": "
              << iondfs_last_error() << "\n";

  int n_max_used = 0;
  for (int n : ns)
    if (n >= cfg.n_min) n_max_used = std::max(n_max_used, n);

  ordered_json fit;
  if (have_fit) {
    fit["exponent"] = exponent;
    fit["log_prefactor"] = log_prefactor;
    fit["residual"] = residual;
    fit["n_min"] = cfg.n_min;
    fit["n_max"] = n_max_used;
  }

  std::string payload;
  if (cfg.format == "csv") {
    std::ostringstream csv;
    csv << "n,one_minus_f,integrated_leakage\n";
    for (const RunOutcome& o : outcomes)
      csv << o.n << ',' << format_double(o.one_minus_f) << ','
          << format_double(o.integrated_leakage) << '\n';
    if (have_fit) csv << "# fit " << fit.dump() << '\n';
    payload = csv.str();
  } else {
    ordered_json doc;
    doc["command"] = "error-vs-n";
    doc["params"] = params_json(cfg, cfg.gamma);
    doc["params"]["n_min"] = cfg.n_min;
    ordered_json rows = ordered_json::array();
    for (const RunOutcome& o : outcomes)
      rows.push_back({{"n", o.n},
                      {"one_minus_f", o.one_minus_f},
                      {"integrated_leakage", o.integrated_leakage}});
    doc["rows"] = rows;
    doc["fit"] = have_fit ? fit : ordered_json(nullptr);
    payload = doc.dump(2) + "\n";
  }
  return write_output(cfg, payload);
}

int run_leakage_curve(const Config& cfg) {
  std::vector<RunOutcome> outcomes = run_experiments(cfg, 0.0, true);
  if (const auto failure = report_failures(outcomes)) return *failure;

  std::string payload;
  if (cfg.format == "csv") {
    std::ostringstream csv;
    csv << "n,t,leakage\n";
    for (const RunOutcome& o : outcomes)
      for (size_t k = 0; k < o.times.size(); ++k)
        csv << o.n << ',' << format_double(o.times[k]) << ',' << format_double(o.leakage[k])
            << '\n';
    payload = csv.str();
  } else {
    ordered_json doc;
    doc["command"] = "leakage-curve";
    doc["params"] = params_json(cfg, 0.0);
    ordered_json rows = ordered_json::array();
    for (const RunOutcome& o : outcomes)
      for (size_t k = 0; k < o.times.size(); ++k)
        rows.push_back({{"n", o.n}, {"t", o.times[k]}, {"leakage", o.leakage[k]}});
    doc["rows"] = rows;
    payload = doc.dump(2) + "\n";
  }
  return write_output(cfg, payload);
}

int run_analytic_compare(const Config& cfg) {
  std::vector<RunOutcome> outcomes = run_experiments(cfg, 0.0, false);
  if (const auto failure = report_failures(outcomes)) return *failure;

  struct Row {
    int n;
    double numeric;
    double analytic;
    double relative_error;
  };
  std::vector<Row> rows;
  for (const RunOutcome& o : outcomes) {
    double analytic = 0.0;
    const int status = iondfs_analytic_total_population(cfg.total_time, o.n, &analytic);
    if (status != IONDFS_OK) {
      std::cerr << "error: n=" << o.n << ": " << iondfs_status_name(status) << ": "
                << iondfs_last_error() << "\n";
      return exit_code_for_status(status);
    }
    const double denom = std::max(std::abs(analytic), 1e-300);
    rows.push_back({o.n, o.integrated_leakage, analytic,
                    std::abs(o.integrated_leakage - analytic) / denom});
  }

  std::string payload;
  if (cfg.format == "csv") {
    std::ostringstream csv;
    csv << "n,numeric_integrated_leakage,analytic_total_population,relative_error\n";
    for (const Row& r : rows)
      csv << r.n << ',' << format_double(r.numeric) << ',' << format_double(r.analytic) << ','
          << format_double(r.relative_error) << '\n';
    payload = csv.str();
  } else {
    ordered_json doc;
    doc["command"] = "analytic-compare";
    doc["params"] = params_json(cfg, 0.0);
    ordered_json jrows = ordered_json::array();
    for (const Row& r : rows)
      jrows.push_back({{"n", r.n},
                       {"numeric_integrated_leakage", r.numeric},
                       {"analytic_total_population", r.analytic},
                       {"relative_error", r.relative_error}});
    doc["rows"] = jrows;
    payload = doc.dump(2) + "\n";
  }
  return write_output(cfg, payload);
}

int run_closure_check(const Config& cfg, const std::vector<std::string>& pair_args) {
  std::vector<int> pairs_flat;
  for (const std::string& entry : pair_args) {
    const size_t comma = entry.find(',');
    int i = 0, j = 0;
    if (comma == std::string::npos || !parse_int(entry.substr(0, comma), i) ||
        !parse_int(entry.substr(comma + 1), j)) {
      std::cerr << "error: invalid --pairs entry '" << entry << "' (expected e.g. 0,1)\n";
      return exit_invalid_config;
    }
    pairs_flat.push_back(i);
    pairs_flat.push_back(j);
  }

  int dimension = 0, universal = 0;
  const int status = iondfs_closure_check(cfg.code.c_str(), pairs_flat.data(),
                                          pairs_flat.size() / 2, &dimension, &universal);
  if (status != IONDFS_OK) {
    std::cerr << "error: " << iondfs_status_name(status) << ": " << iondfs_last_error() << "\n";
    return exit_code_for_status(status);
  }

  ordered_json doc;
  doc["command"] = "closure-check";
  doc["code"] = cfg.code;
  ordered_json jpairs = ordered_json::array();
  for (size_t k = 0; k + 1 < pairs_flat.size(); k += 2)
    jpairs.push_back({pairs_flat[k], pairs_flat[k + 1]});
  doc["pairs"] = jpairs;
  doc["closure_dimension"] = dimension;
  doc["universal"] = universal != 0;
  return write_output(cfg, doc.dump(2) + "\n");
}

void add_common_options(CLI::App* cmd, Config& cfg, const std::string& default_n_list) {
  cfg.n_list = default_n_list;
  cmd->add_option("--config", cfg.config_path, "Read options from a key=value file");
  cmd->add_option("--n-list", cfg.n_list,
                  "Alternation counts: comma-separated integers and/or a..b ranges")
      ->capture_default_str();
  cmd->add_option("--g", cfg.g, "Coupling strength g")->capture_default_str();
  cmd->add_option("--time", cfg.total_time,
                  "Time under each of the two couplings (wall duration is twice this)")
      ->capture_default_str();
  cmd->add_option("--pair", cfg.pair, "Driven qubit pair as i,j")->capture_default_str();
  cmd->add_option("--code", cfg.code, "Code space: CI, CII, PAIR, or QUBIT_CI")
      ->capture_default_str();
  cmd->add_option("--state", cfg.state,
                  "Initial state: ket bitstring (e.g. 001) or 'plus' for the balanced "
                  "superposition of the code's first two kets")
      ->capture_default_str();
  cmd->add_option("--steps", cfg.steps, "RK4 steps per pulse segment")
      ->check(CLI::Range(10, 100000))
      ->capture_default_str();
  cmd->add_option("--out", cfg.out_path, "Output path (default: stdout)");
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--jobs", cfg.jobs, "Worker threads for the n sweep")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulse-alternation simulator for dephasing-protected encoded qubits"};
  app.require_subcommand(1);

  Config error_cfg, leakage_cfg, compare_cfg, closure_cfg;
  std::vector<std::string> closure_pairs = {"0,1", "1,2", "0,2"};

  CLI::App* error_cmd = app.add_subcommand(
      "error-vs-n", "Operation error 1-f against the alternation count under dephasing");
  add_common_options(error_cmd, error_cfg, "1..64");
  error_cmd->add_option("--gamma", error_cfg.gamma, "Collective dephasing rate")
      ->capture_default_str();
  error_cmd->add_option("--n-min", error_cfg.n_min, "Smallest n used by the power-law fit")
      ->capture_default_str();

  CLI::App* leakage_cmd = app.add_subcommand(
      "leakage-curve", "Out-of-code population over one operation, closed system");
  add_common_options(leakage_cmd, leakage_cfg, "1,2,4,8");

  CLI::App* compare_cmd = app.add_subcommand(
      "analytic-compare", "Numeric integrated leakage against the closed-form model");
  add_common_options(compare_cmd, compare_cfg, "1,2,4,8,16");

  CLI::App* closure_cmd = app.add_subcommand(
      "closure-check", "Lie-algebra closure of the projected XY couplings (JSON output)");
  closure_cmd->add_option("--config", closure_cfg.config_path,
                          "Read options from a key=value file");
  closure_cmd->add_option("--code", closure_cfg.code, "Code space: CI or CII")
      ->capture_default_str();
  closure_cmd->add_option("--pairs", closure_pairs, "Qubit pairs, each as i,j")
      ->capture_default_str();
  closure_cmd->add_option("--out", closure_cfg.out_path, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_invalid_config;
  }

  auto apply_config = [](CLI::App* cmd, const std::string& path) -> std::optional<int> {
    if (const auto err = apply_config_file(cmd, path)) {
      std::cerr << "error: " << *err << "\n";
      return exit_invalid_config;
    }
    return std::nullopt;
  };

  auto finalize = [](Config& cfg) -> std::optional<int> {
    if (const auto err = finalize_config(cfg)) {
      std::cerr << "error: " << *err << "\n";
      return exit_invalid_config;
    }
    return std::nullopt;
  };

  if (error_cmd->parsed()) {
    if (const auto rc = apply_config(error_cmd, error_cfg.config_path)) return *rc;
    if (const auto rc = finalize(error_cfg)) return *rc;
    if (error_cfg.gamma < 0.0) {
      std::cerr << "error: --gamma must be >= 0\n";
      return exit_invalid_config;
    }
    return run_error_vs_n(error_cfg);
  }
  if (leakage_cmd->parsed()) {
    if (const auto rc = apply_config(leakage_cmd, leakage_cfg.config_path)) return *rc;
    if (const auto rc = finalize(leakage_cfg)) return *rc;
    return run_leakage_curve(leakage_cfg);
  }
  if (compare_cmd->parsed()) {
    if (const auto rc = apply_config(compare_cmd, compare_cfg.config_path)) return *rc;
    if (const auto rc = finalize(compare_cfg)) return *rc;
    return run_analytic_compare(compare_cfg);
  }
  if (closure_cmd->parsed()) {
    if (const auto rc = apply_config(closure_cmd, closure_cfg.config_path)) return *rc;
    return run_closure_check(closure_cfg, closure_pairs);
  }

  return exit_invalid_config;
}
