// Command-line front end. Only talks to the shared library through the
// public C API; all numerics live behind it.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "corrocal/corrocal.h"

using nlohmann::json;

namespace {

int exit_code_of(corrocal_status status) {
  switch (status) {
    case CORROCAL_OK:
      return 0;
    case CORROCAL_ERR_IO:
      return 1;
    case CORROCAL_ERR_NUMERIC:
      return 3;
    default:
      return 2;  // domain/config errors and invalid usage
  }
}

int run(corrocal_status (*fn)(const char*, char**), const json& config,
        bool quiet = false) {
  char* result = nullptr;
  const corrocal_status status = fn(config.dump().c_str(), &result);
  if (status != CORROCAL_OK) {
    std::cerr << "error: " << corrocal_last_error() << '\n';
    return exit_code_of(status);
  }
  if (!quiet) std::cout << result << '\n';
  corrocal_string_free(result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corrocal - chloride ingress calibration and prediction"};
  app.require_subcommand(1);
  // let --config/--output-dir/--seed appear after the subcommand too
  app.fallthrough();

  std::string config_path;
  std::string output_dir;
  long long seed = -1;
  app.add_option("--config", config_path, "JSON run configuration file");
  app.add_option("--output-dir", output_dir, "directory for output artifacts");
  app.add_option("--seed", seed, "RNG seed (overrides config)");

  auto* fit_temp = app.add_subcommand("fit-temperature",
                                      "fit the cosine internal-temperature model");
  std::string temperature_csv;
  fit_temp->add_option("--temperature-csv", temperature_csv,
                       "CSV with header t_seconds,temp_celsius|temp_kelvin");

  auto* ingest = app.add_subcommand("ingest",
                                    "detect resistance jumps and build events");
  std::string sensor_csv;
  std::vector<std::string> exclusions;
  double threshold_factor = 0.0;
  int window = 0;
  ingest->add_option("--sensor-csv", sensor_csv,
                     "CSV with header wire_id,wire_depth_m,t_seconds,resistance_ohm");
  ingest->add_option("--exclude", exclusions, "wire ids to exclude");
  ingest->add_option("--threshold-factor", threshold_factor,
                     "jump threshold factor (default 10)");
  ingest->add_option("--window", window, "trailing median window (default 20)");

  auto* calibrate = app.add_subcommand("calibrate", "identify model parameters");
  std::string method = "gehlen";
  int points_k = 0;
  std::string events_json;
  calibrate->add_option("--method", method, "gehlen or nn")
      ->check(CLI::IsMember({"gehlen", "nn"}));
  calibrate->add_option("--points", points_k,
                        "use only the first k calibration points");
  calibrate->add_option("--events-json", events_json,
                        "events file from a prior ingest run");

  auto* sensitivity = app.add_subcommand("sensitivity", "Sobol sensitivity analysis");
  bool dummy = false;
  long long n_base = 0;
  sensitivity->add_flag("--dummy", dummy, "run the dummy-model methodology check");
  sensitivity->add_option("--n-base", n_base, "Sobol samples per matrix (power of two)");

  auto* predict = app.add_subcommand("predict", "time-vs-depth bands and D curves");
  std::string model_json;
  bool rcm_literature = false;
  predict->add_option("--model", model_json, "calibrated diffusion model JSON file");
  predict->add_flag("--rcm-literature", rcm_literature,
                    "use the literature RCM parameter set");

  auto* sanity = app.add_subcommand("sanity-check",
                                    "run the clean-data and dummy-model suite");

  CLI11_PARSE(app, argc, argv);

  json config = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config file: " << config_path << '\n';
      return 1;
    }
    try {
      in >> config;
    } catch (const std::exception& e) {
      std::cerr << "error: invalid config JSON: " << e.what() << '\n';
      return 2;
    }
  }
  // Flags win over the config file; the environment wins over both for seed.
  if (!output_dir.empty()) config["output_dir"] = output_dir;
  if (seed >= 0) config["seed"] = static_cast<std::uint64_t>(seed);
  if (const char* env_seed = std::getenv("CORROCAL_SEED")) {
    config["seed"] = static_cast<std::uint64_t>(std::strtoull(env_seed, nullptr, 10));
  }

  if (*fit_temp) {
    if (!temperature_csv.empty()) config["paths"]["temperature_csv"] = temperature_csv;
    return run(&corrocal_run_fit_temperature, config);
  }
  if (*ingest) {
    if (!sensor_csv.empty()) config["paths"]["sensor_csv"] = sensor_csv;
    if (!exclusions.empty()) config["exclusions"] = exclusions;
    if (threshold_factor > 0.0) config["ingest"]["threshold_factor"] = threshold_factor;
    if (window > 0) config["ingest"]["window"] = window;
    return run(&corrocal_run_ingest, config);
  }
  if (*calibrate) {
    config["method"] = method;
    if (points_k > 0) config["points_k"] = points_k;
    if (!events_json.empty()) config["paths"]["events_json"] = events_json;
    return run(&corrocal_run_calibrate, config);
  }
  if (*sensitivity) {
    if (dummy) config["dummy"] = true;
    if (n_base > 0) config["sensitivity"]["n_base"] = n_base;
    return run(&corrocal_run_sensitivity, config);
  }
  if (*predict) {
    if (rcm_literature) {
      config["model"] = "rcm_literature";
    } else if (!model_json.empty()) {
      config["paths"]["model_json"] = model_json;
    }
    return run(&corrocal_run_predict, config);
  }
  if (*sanity) {
    char* result = nullptr;
    const corrocal_status status =
        corrocal_run_sanity_check(config.dump().c_str(), &result);
    if (status != CORROCAL_OK) {
      std::cerr << "error: " << corrocal_last_error() << '\n';
      return exit_code_of(status);
    }
    const json doc = json::parse(result);
    corrocal_string_free(result);
    for (const auto& check : doc.at("checks")) {
      std::cout << (check.at("pass").get<bool>() ? "PASS" : "FAIL") << "  "
                << check.at("name").get<std::string>() << '\n';
    }
    return doc.at("all_pass").get<bool>() ? 0 : 3;
  }
  return 2;
}
