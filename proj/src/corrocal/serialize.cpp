#include "corrocal/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace corrocal {

using nlohmann::json;

std::string config_hash(const json& config) {
  const std::string text = config.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json provenance(const json& config, std::uint64_t seed) {
  return json{{"tool_version", kToolVersion},
              {"config_hash", config_hash(config)},
              {"seed", seed}};
}

json to_json(const ModelHyperparameters& h) {
  return json{{"delta_x", h.delta_x},
              {"c_surface", h.c_surface},
              {"t_ref_age", h.t_ref_age},
              {"temp_ref", h.temp_ref}};
}

ModelHyperparameters hyperparameters_from_json(const json& j) {
  ModelHyperparameters h;
  h.delta_x = j.value("delta_x", h.delta_x);
  h.c_surface = j.value("c_surface", h.c_surface);
  h.t_ref_age = j.value("t_ref_age", h.t_ref_age);
  h.temp_ref = j.value("temp_ref", h.temp_ref);
  h.validate();
  return h;
}

json to_json(const GehlenParameters& p) {
  return json{{"aging_exponent", p.aging_exponent}, {"d_t", p.d_t}, {"b_e", p.b_e}};
}

GehlenParameters gehlen_from_json(const json& j) {
  GehlenParameters p;
  p.aging_exponent = j.at("aging_exponent").get<double>();
  p.d_t = j.at("d_t").get<double>();
  p.b_e = j.at("b_e").get<double>();
  p.validate();
  return p;
}

json to_json(const CriticalContent& c) {
  return json{{"mean", c.mean}, {"lower", c.lower}, {"upper", c.upper}};
}

CriticalContent critical_content_from_json(const json& j) {
  CriticalContent c;
  c.mean = j.value("mean", c.mean);
  c.lower = j.value("lower", c.lower);
  c.upper = j.value("upper", c.upper);
  return c;
}

json to_json(const ParameterBounds& b) {
  return json{{"a", {b.a.lo, b.a.hi}},
              {"d_t", {b.d_t.lo, b.d_t.hi}},
              {"b_e", {b.b_e.lo, b.b_e.hi}}};
}

ParameterBounds bounds_from_json(const json& j) {
  ParameterBounds b;
  auto read = [&](const char* key, Interval& iv) {
    if (j.contains(key)) {
      iv.lo = j.at(key).at(0).get<double>();
      iv.hi = j.at(key).at(1).get<double>();
    }
  };
  read("a", b.a);
  read("d_t", b.d_t);
  read("b_e", b.b_e);
  b.validate();
  return b;
}

json to_json(const CosineTemperatureModel& m) {
  return json{{"amplitude", m.amplitude},
              {"phase_shift", m.phase_shift},
              {"period", m.period},
              {"offset", m.offset}};
}

CosineTemperatureModel temperature_model_from_json(const json& j) {
  CosineTemperatureModel m;
  m.amplitude = j.at("amplitude").get<double>();
  m.phase_shift = j.at("phase_shift").get<double>();
  m.period = j.at("period").get<double>();
  m.offset = j.at("offset").get<double>();
  m.validate();
  return m;
}

json to_json(const CorrosionEvent& e) {
  return json{{"wire_id", e.wire_id},
              {"wire_depth_m", e.wire_depth},
              {"failure_time_s", e.failure_time},
              {"onset_time_s", e.onset_time},
              {"onset_temp_k", e.onset_temp},
              {"excluded", e.excluded},
              {"exclusion_reason", e.exclusion_reason}};
}

json to_json(const CalibrationPoint& p) {
  return json{{"x_m", p.x}, {"t_s", p.t}, {"temp_k", p.temp}};
}

CalibrationPoint calibration_point_from_json(const json& j) {
  CalibrationPoint p;
  p.x = j.at("x_m").get<double>();
  p.t = j.at("t_s").get<double>();
  p.temp = j.value("temp_k", 0.0);
  return p;
}

json to_json(const CalibrationResult& r) {
  return json{{"best_params", to_json(r.best_params)},
              {"best_objective_m2", r.best_objective},
              {"objective_trace", r.objective_trace},
              {"residuals_m", r.residuals},
              {"stop_reason", to_string(r.stop_reason)}};
}

json to_json(const SobolResult& r) {
  json runs = json::array();
  for (const SobolRun& run : r.runs) {
    runs.push_back(json{{"s1", run.s1},
                        {"st", run.st},
                        {"variance", run.variance},
                        {"variance_sum", run.variance_sum},
                        {"decomposition_flag", run.decomposition_flag},
                        {"out_of_range", run.out_of_range}});
  }
  return json{{"parameter_order", r.parameter_names},
              {"runs", runs},
              {"s1_avg", r.s1_avg},
              {"st_avg", r.st_avg}};
}

json nn_model_to_json(const NetworkParameters& p, const JointNormalizer& norm) {
  return json{{"topology", {NetworkParameters::kInput, NetworkParameters::kHidden,
                            NetworkParameters::kHidden, 1}},
              {"output_scale", "log10"},
              {"normalizer", {{"mean", norm.mean}, {"std", norm.std_dev}}},
              {"w1", p.w1}, {"b1", p.b1},
              {"w2", p.w2}, {"b2", p.b2},
              {"w3", p.w3}, {"b3", p.b3}};
}

void nn_model_from_json(const json& j, NetworkParameters& p, JointNormalizer& norm) {
  norm.mean = j.at("normalizer").at("mean").get<double>();
  norm.std_dev = j.at("normalizer").at("std").get<double>();
  p.w1 = j.at("w1").get<std::vector<double>>();
  p.b1 = j.at("b1").get<std::vector<double>>();
  p.w2 = j.at("w2").get<std::vector<double>>();
  p.b2 = j.at("b2").get<std::vector<double>>();
  p.w3 = j.at("w3").get<std::vector<double>>();
  p.b3 = j.at("b3").get<std::vector<double>>();
  constexpr int h = NetworkParameters::kHidden;
  if (p.w1.size() != h * 2 || p.b1.size() != h || p.w2.size() != h * h ||
      p.b2.size() != h || p.w3.size() != h || p.b3.size() != 1) {
    throw FormatError("nn model: weight shapes inconsistent with topology");
  }
}

json diffusion_model_to_json(const DiffusionModel& m) {
  json j;
  switch (m.kind) {
    case DiffusionModel::Kind::nn:
      j["kind"] = "nn";
      j["network"] = nn_model_to_json(m.network, m.normalizer);
      break;
    case DiffusionModel::Kind::rcm_literature:
      j["kind"] = "rcm_literature";
      j["gehlen"] = to_json(m.gehlen);
      break;
    default:
      j["kind"] = "gehlen";
      j["gehlen"] = to_json(m.gehlen);
  }
  return j;
}

DiffusionModel diffusion_model_from_json(const json& j) {
  DiffusionModel m;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "nn") {
    m.kind = DiffusionModel::Kind::nn;
    nn_model_from_json(j.at("network"), m.network, m.normalizer);
  } else if (kind == "rcm_literature") {
    m.kind = DiffusionModel::Kind::rcm_literature;
    m.gehlen = j.contains("gehlen") ? gehlen_from_json(j.at("gehlen"))
                                    : DiffusionModel::rcm_literature().gehlen;
  } else if (kind == "gehlen") {
    m.kind = DiffusionModel::Kind::gehlen;
    m.gehlen = gehlen_from_json(j.at("gehlen"));
  } else {
    throw FormatError("diffusion model: unknown kind '" + kind + "'");
  }
  return m;
}

}  // namespace corrocal
