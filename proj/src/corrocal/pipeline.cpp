#include "corrocal/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "corrocal/bayes_opt.hpp"
#include "corrocal/csv.hpp"
#include "corrocal/fixtures.hpp"
#include "corrocal/serialize.hpp"

namespace corrocal::pipeline {

using nlohmann::json;

namespace {

std::uint64_t seed_of(const json& config) {
  return config.value("seed", std::uint64_t{0});
}

std::string path_of(const json& config, const char* key) {
  if (!config.contains("paths") || !config.at("paths").contains(key)) {
    throw ConfigError(std::string("config: missing paths.") + key);
  }
  return config.at("paths").at(key).get<std::string>();
}

// Writes `doc` under output_dir when the config names one.
void maybe_write(const json& config, const std::string& filename, const json& doc) {
  if (!config.contains("output_dir")) return;
  const std::filesystem::path dir = config.at("output_dir").get<std::string>();
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / filename);
  if (!out) throw IoError("cannot write " + (dir / filename).string());
  out << doc.dump(2) << '\n';
}

std::filesystem::path output_path(const json& config, const std::string& filename) {
  const std::filesystem::path dir =
      config.value("output_dir", std::string{"."});
  std::filesystem::create_directories(dir);
  return dir / filename;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

CosineTemperatureModel temperature_model_of(const json& config) {
  if (config.contains("temperature_model")) {
    return temperature_model_from_json(config.at("temperature_model"));
  }
  if (config.contains("paths") &&
      config.at("paths").contains("temperature_model")) {
    return temperature_model_from_json(
        read_json_file(config.at("paths").at("temperature_model").get<std::string>()));
  }
  return reference_temperature_model();
}

ModelHyperparameters hyper_of(const json& config) {
  return config.contains("hyperparameters")
             ? hyperparameters_from_json(config.at("hyperparameters"))
             : ModelHyperparameters{};
}

CriticalContent critical_of(const json& config) {
  return config.contains("critical_content")
             ? critical_content_from_json(config.at("critical_content"))
             : CriticalContent{};
}

ParameterBounds bounds_of(const json& config) {
  return config.contains("bounds") ? bounds_from_json(config.at("bounds"))
                                   : ParameterBounds{};
}

// Calibration points: inline list, events file from a prior ingest run, or
// the bundled published dataset.
std::vector<CalibrationPoint> points_of(const json& config,
                                        const CosineTemperatureModel& temp_model) {
  std::vector<CalibrationPoint> points;
  if (config.contains("points")) {
    for (const auto& j : config.at("points")) {
      CalibrationPoint p = calibration_point_from_json(j);
      if (p.temp <= 0.0) p.temp = temp_model.evaluate(p.t);
      points.push_back(p);
    }
  } else if (config.contains("paths") && config.at("paths").contains("events_json")) {
    const json events = read_json_file(
        config.at("paths").at("events_json").get<std::string>());
    for (const auto& e : events.at("events")) {
      if (e.value("excluded", false)) continue;
      const double t = e.at("onset_time_s").get<double>();
      points.push_back({e.at("wire_depth_m").get<double>(), t, temp_model.evaluate(t)});
    }
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.x < b.x; });
  } else {
    points = default_calibration_points();
  }
  const int k = config.value("points_k", 0);
  if (k > 0 && k < static_cast<int>(points.size())) {
    points.resize(static_cast<std::size_t>(k));
  }
  if (points.empty()) throw ConfigError("calibrate: no calibration points");
  return points;
}

// Clock zero (the concreting date) as epoch seconds or ISO-8601; sample
// times are shifted so that ages are measured from it.
double time_origin_of(const json& config) {
  if (!config.contains("time_origin")) return 0.0;
  const json& o = config.at("time_origin");
  return o.is_string() ? parse_time_value(o.get<std::string>()) : o.get<double>();
}

}  // namespace

json run_fit_temperature(const json& config) {
  auto samples = read_temperature_csv(path_of(config, "temperature_csv"));
  const double origin = time_origin_of(config);
  for (auto& s : samples) s.t -= origin;
  const CosineTemperatureModel model = fit_cosine(samples);

  double sse = 0.0;
  for (const auto& s : samples) {
    const double r = model.evaluate(s.t) - s.temp;
    sse += r * r;
  }
  json result{{"provenance", provenance(config, seed_of(config))},
              {"model", to_json(model)},
              {"n_samples", samples.size()},
              {"rmse_k", std::sqrt(sse / static_cast<double>(samples.size()))}};
  maybe_write(config, "temperature_model.json", result);
  return result;
}

json run_ingest(const json& config) {
  auto samples = read_sensor_csv(path_of(config, "sensor_csv"));
  const double origin = time_origin_of(config);
  for (auto& s : samples) s.t -= origin;

  JumpDetectionConfig jump;
  if (config.contains("ingest")) {
    const json& j = config.at("ingest");
    jump.threshold_factor = j.value("threshold_factor", jump.threshold_factor);
    jump.window = j.value("window", jump.window);
    jump.lead_time = j.value("lead_time_days", 24.0) * 86400.0;
  }
  std::set<std::string> exclusions;
  for (const auto& id : config.value("exclusions", std::vector<std::string>{})) {
    exclusions.insert(id);
  }

  auto events = detect_jumps(samples, jump);
  const CosineTemperatureModel temp_model = temperature_model_of(config);
  const auto points = assemble_calibration_points(events, temp_model, exclusions);

  json jevents = json::array();
  for (const auto& e : events) jevents.push_back(to_json(e));
  json jpoints = json::array();
  for (const auto& p : points) jpoints.push_back(to_json(p));

  json result{{"provenance", provenance(config, seed_of(config))},
              {"events", jevents},
              {"points", jpoints}};
  maybe_write(config, "events.json", result);
  return result;
}

json run_calibrate(const json& config) {
  const std::string method = config.value("method", std::string{"gehlen"});
  const ModelHyperparameters hyper = hyper_of(config);
  const CriticalContent c_crit = critical_of(config);
  const CosineTemperatureModel temp_model = temperature_model_of(config);
  const auto points = points_of(config, temp_model);

  json jpoints = json::array();
  for (const auto& p : points) jpoints.push_back(to_json(p));

  json result{{"provenance", provenance(config, seed_of(config))},
              {"method", method},
              {"points", jpoints}};

  if (method == "gehlen") {
    const ParameterBounds bounds = bounds_of(config);
    BayesOptConfig bo;
    bo.seed = seed_of(config);
    if (config.contains("bayes")) {
      const json& j = config.at("bayes");
      bo.n_init = j.value("n_init", bo.n_init);
      bo.max_iter = j.value("max_iter", bo.max_iter);
      bo.stall_window = j.value("stall_window", bo.stall_window);
      bo.stall_tol = j.value("stall_tol", bo.stall_tol);
      bo.ei_restarts = j.value("ei_restarts", bo.ei_restarts);
    }
    const CalibrationResult cal = calibrate(points, bounds, bo, hyper, c_crit.mean);
    result["calibration"] = to_json(cal);
    result["bounds"] = to_json(bounds);

    DiffusionModel model;
    model.kind = DiffusionModel::Kind::gehlen;
    model.gehlen = cal.best_params;
    json model_doc = diffusion_model_to_json(model);
    model_doc["provenance"] = provenance(config, bo.seed);
    model_doc["hyperparameters"] = to_json(hyper);
    maybe_write(config, "gehlen_model.json", model_doc);
    maybe_write(config, "calibration.json", result);
  } else if (method == "nn") {
    TrainConfig tc;
    tc.seed = seed_of(config);
    if (config.contains("train")) {
      const json& j = config.at("train");
      tc.learning_rate = j.value("learning_rate", tc.learning_rate);
      tc.beta1 = j.value("beta1", tc.beta1);
      tc.beta2 = j.value("beta2", tc.beta2);
      tc.epsilon = j.value("epsilon", tc.epsilon);
      tc.max_epochs = j.value("max_epochs", tc.max_epochs);
      tc.tolerance = j.value("tolerance", tc.tolerance);
    }
    const TrainResult train = nn_train(points, hyper, c_crit.mean, tc);

    // Re-predicted chloride content at each training point.
    json predicted = json::array();
    for (const auto& p : points) {
      const double d = nn_forward(train.params, train.normalizer, p.t, p.temp);
      predicted.push_back(concentration_with_d(p.x, p.t, d, hyper));
    }
    result["final_loss_m2"] = train.loss_trace.back();
    result["epochs"] = train.loss_trace.size() - 1;
    result["converged"] = train.converged;
    result["predicted_content_kg_m3"] = predicted;

    DiffusionModel model;
    model.kind = DiffusionModel::Kind::nn;
    model.network = train.params;
    model.normalizer = train.normalizer;
    json model_doc = diffusion_model_to_json(model);
    model_doc["provenance"] = provenance(config, tc.seed);
    model_doc["hyperparameters"] = to_json(hyper);
    maybe_write(config, "nn_model.json", model_doc);
    maybe_write(config, "calibration.json", result);
  } else {
    throw ConfigError("calibrate: unknown method '" + method + "'");
  }
  return result;
}

json run_sensitivity(const json& config) {
  const std::uint64_t seed = seed_of(config);
  json result{{"provenance", provenance(config, seed)}};

  std::size_t n_base = 8192;
  if (config.contains("sensitivity")) {
    n_base = config.at("sensitivity").value("n_base", n_base);
  }

  if (config.value("dummy", false)) {
    const IndexEstimates est = run_dummy_analysis(n_base, seed);
    result["model"] = "dummy";
    result["parameter_order"] = {"x1", "x2", "x3"};
    result["s1"] = est.s1;
    result["st"] = est.st;
    result["variance"] = est.variance;
    maybe_write(config, "sensitivity.json", result);
    return result;
  }

  SensitivityConfig sc;
  sc.n_base = n_base;
  sc.bounds = bounds_of(config);
  sc.seed = seed;
  const CosineTemperatureModel temp_model = temperature_model_of(config);
  sc.datapoints = points_of(config, temp_model);
  const ModelHyperparameters hyper = hyper_of(config);

  const SobolResult sobol = run_analysis(sc, hyper);
  result["model"] = "gehlen_concentration";
  result["sensitivity"] = to_json(sobol);
  maybe_write(config, "sensitivity.json", result);

  if (config.contains("output_dir")) {
    std::ofstream csv(output_path(config, "sensitivity.csv"));
    csv << "parameter,s1_avg,st_avg\n";
    csv.precision(10);
    for (int d = 0; d < 3; ++d) {
      csv << SobolResult::parameter_names[d] << ',' << sobol.s1_avg[d] << ','
          << sobol.st_avg[d] << '\n';
    }
  }
  return result;
}

json run_predict(const json& config) {
  DiffusionModel model;
  if (config.value("model", std::string{}) == "rcm_literature") {
    model = DiffusionModel::rcm_literature();
  } else if (config.contains("paths") && config.at("paths").contains("model_json")) {
    model = diffusion_model_from_json(
        read_json_file(config.at("paths").at("model_json").get<std::string>()));
  } else {
    throw ConfigError("predict: no model given (paths.model_json or model=rcm_literature)");
  }

  const ModelHyperparameters hyper = hyper_of(config);
  const CriticalContent c_crit = critical_of(config);
  const CosineTemperatureModel temp_model = temperature_model_of(config);

  std::pair<double, double> temp_bounds{temp_model.min_temp(), temp_model.max_temp()};
  if (config.contains("temp_bounds")) {
    temp_bounds.first = config.at("temp_bounds").at(0).get<double>();
    temp_bounds.second = config.at("temp_bounds").at(1).get<double>();
  }

  std::vector<double> grid;
  if (config.contains("time_grid")) {
    grid = config.at("time_grid").get<std::vector<double>>();
  } else {
    grid = default_time_grid();
  }

  const PredictionBand band =
      predict_band(model, hyper, c_crit, temp_bounds, temp_model, grid);
  const DiffusionCurve curve =
      effective_diffusion_curve(model, hyper, grid, temp_model);

  if (config.contains("output_dir")) {
    write_band_csv(output_path(config, "band.csv").string(), band);
    write_dcurve_csv(output_path(config, "dcurve.csv").string(), curve);
  }

  json result{{"provenance", provenance(config, seed_of(config))},
              {"model_tag", band.model_tag},
              {"n_grid", band.times.size()},
              {"depth_mean_first_m", band.depth_mean.front()},
              {"depth_mean_last_m", band.depth_mean.back()},
              {"d_eff_first_m2_s", curve.d_eff.front()},
              {"d_eff_last_m2_s", curve.d_eff.back()}};
  maybe_write(config, "predict.json", result);
  return result;
}

json run_sanity_check(const json& config) {
  const ModelHyperparameters hyper;
  const CosineTemperatureModel temp_model = reference_temperature_model();
  const GehlenParameters truth = synthetic_reference_parameters();
  const auto& expected_depths = synthetic_reference_depths();
  const auto points = default_calibration_points();

  json checks = json::array();
  bool all_pass = true;
  auto record = [&](const std::string& name, bool pass, json details) {
    checks.push_back(json{{"name", name}, {"pass", pass}, {"details", details}});
    all_pass = all_pass && pass;
  };

  // 1. Forward depths reproduce the published synthetic values.
  {
    bool pass = true;
    json got = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double x =
          depth_of_content(1.62, points[i].t, truth, hyper, points[i].temp);
      got.push_back(x);
      if (std::abs(x - expected_depths[i]) > 1e-5) pass = false;
    }
    record("forward_depths", pass, json{{"depths_m", got}});
  }

  // 2. Optimizer recovers the generating parameters from clean data.
  {
    std::vector<CalibrationPoint> synthetic = points;
    for (std::size_t i = 0; i < synthetic.size(); ++i) {
      synthetic[i].x = expected_depths[i];
    }
    BayesOptConfig bo;
    bo.seed = seed_of(config);
    const CalibrationResult cal =
        calibrate(synthetic, ParameterBounds{}, bo, hyper, 1.62);
    const bool pass =
        std::abs(cal.best_params.aging_exponent - truth.aging_exponent) <= 0.02 &&
        std::abs(cal.best_params.d_t - truth.d_t) <= 0.05 * truth.d_t &&
        std::abs(cal.best_params.b_e - truth.b_e) <= 0.05 * truth.b_e &&
        cal.stop_reason == StopReason::stalled;
    record("optimizer_recovery", pass,
           json{{"best_params", to_json(cal.best_params)},
                {"stop_reason", to_string(cal.stop_reason)},
                {"best_objective_m2", cal.best_objective}});
  }

  // 3. Dummy-model index ordering x3 > x1 > x2, near-additive sum.
  {
    const IndexEstimates est = run_dummy_analysis(8192, seed_of(config));
    const double sum_s1 = est.s1[0] + est.s1[1] + est.s1[2];
    const bool pass = est.s1[2] > est.s1[0] && est.s1[0] > est.s1[1] &&
                      est.st[2] > est.st[0] && est.st[0] > est.st[1] &&
                      sum_s1 > 0.9 && sum_s1 < 1.05;
    record("dummy_sobol", pass,
           json{{"s1", est.s1}, {"st", est.st}, {"s1_sum", sum_s1}});
  }

  json result{{"provenance", provenance(config, seed_of(config))},
              {"checks", checks},
              {"all_pass", all_pass}};
  maybe_write(config, "sanity_check.json", result);
  return result;
}

}  // namespace corrocal::pipeline
