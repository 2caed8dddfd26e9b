#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corrocal/fixtures.hpp"
#include "corrocal/serialize.hpp"

using namespace corrocal;
using nlohmann::json;

TEST_CASE("config hash is stable and content-sensitive") {
  const json a = {{"method", "gehlen"}, {"seed", 0}};
  const json b = {{"method", "gehlen"}, {"seed", 1}};
  CHECK(config_hash(a) == config_hash(a));
  CHECK(config_hash(a) != config_hash(b));
  CHECK(config_hash(a).size() == 16);
  // frozen value: hashing must never silently change between releases
  CHECK(config_hash(json::object()) == "9bf65e00c699fdaf");
}

TEST_CASE("provenance block carries version, hash and seed") {
  const json config = {{"method", "nn"}};
  const json p = provenance(config, 42);
  CHECK(p.at("tool_version") == kToolVersion);
  CHECK(p.at("config_hash") == config_hash(config));
  CHECK(p.at("seed") == 42);
}

TEST_CASE("hyperparameters round trip") {
  ModelHyperparameters h;
  h.delta_x = 0.002;
  h.c_surface = 14.2;
  const ModelHyperparameters back = hyperparameters_from_json(to_json(h));
  CHECK(back.delta_x == h.delta_x);
  CHECK(back.c_surface == h.c_surface);
  CHECK(back.t_ref_age == h.t_ref_age);
  CHECK(back.temp_ref == h.temp_ref);
  // missing keys fall back to defaults
  const ModelHyperparameters defaulted = hyperparameters_from_json(json::object());
  CHECK(defaulted.c_surface == doctest::Approx(18.19));
}

TEST_CASE("parameter triple round trips and is validated") {
  const GehlenParameters p = synthetic_reference_parameters();
  const GehlenParameters back = gehlen_from_json(to_json(p));
  CHECK(back.aging_exponent == p.aging_exponent);
  CHECK(back.d_t == p.d_t);
  CHECK(back.b_e == p.b_e);
  json bad = to_json(p);
  bad["d_t"] = -1.0;
  CHECK_THROWS_AS(gehlen_from_json(bad), DomainError);
  CHECK_THROWS_AS(gehlen_from_json(json::object()), json::exception);
}

TEST_CASE("critical content and bounds round trip") {
  CriticalContent c;
  c.mean = 2.0;
  c.lower = 1.0;
  c.upper = 4.0;
  const CriticalContent cb = critical_content_from_json(to_json(c));
  CHECK(cb.mean == 2.0);
  CHECK(cb.lower == 1.0);
  CHECK(cb.upper == 4.0);

  ParameterBounds b;
  b.b_e = {2050.0, 2050.0};
  const ParameterBounds bb = bounds_from_json(to_json(b));
  CHECK(bb.a.lo == b.a.lo);
  CHECK(bb.a.hi == b.a.hi);
  CHECK(bb.b_e.lo == 2050.0);
  CHECK(bb.b_e.hi == 2050.0);
  json bad = to_json(b);
  bad["a"] = {0.9, 0.1};
  CHECK_THROWS_AS(bounds_from_json(bad), ConfigError);
}

TEST_CASE("temperature model round trips") {
  const CosineTemperatureModel m = reference_temperature_model();
  const CosineTemperatureModel back = temperature_model_from_json(to_json(m));
  CHECK(back.amplitude == m.amplitude);
  CHECK(back.phase_shift == m.phase_shift);
  CHECK(back.period == m.period);
  CHECK(back.offset == m.offset);
  json bad = to_json(m);
  bad["period"] = 0.0;
  CHECK_THROWS_AS(temperature_model_from_json(bad), DomainError);
}

TEST_CASE("calibration points round trip") {
  for (const CalibrationPoint& p : default_calibration_points()) {
    const CalibrationPoint back = calibration_point_from_json(to_json(p));
    CHECK(back.x == p.x);
    CHECK(back.t == p.t);
    CHECK(back.temp == p.temp);
  }
}

TEST_CASE("network model file round trips bit-exactly") {
  NetworkParameters p = NetworkParameters::initialize(17);
  JointNormalizer norm{1.3e8, 6.2e7};
  const json j = nn_model_to_json(p, norm);
  CHECK(j.at("output_scale") == "log10");

  NetworkParameters back;
  JointNormalizer norm_back;
  nn_model_from_json(j, back, norm_back);
  CHECK(norm_back.mean == norm.mean);
  CHECK(norm_back.std_dev == norm.std_dev);
  const auto wa = p.flat();
  const auto wb = back.flat();
  REQUIRE(wa.size() == wb.size());
  for (std::size_t i = 0; i < wa.size(); ++i) CHECK(*wa[i] == *wb[i]);

  json truncated = j;
  truncated["w2"] = std::vector<double>(3, 0.0);
  NetworkParameters scratch;
  CHECK_THROWS_AS(nn_model_from_json(truncated, scratch, norm_back), FormatError);
}

TEST_CASE("diffusion model files cover all kinds") {
  DiffusionModel g;
  g.kind = DiffusionModel::Kind::gehlen;
  g.gehlen = synthetic_reference_parameters();
  const DiffusionModel gb = diffusion_model_from_json(diffusion_model_to_json(g));
  CHECK(gb.kind == DiffusionModel::Kind::gehlen);
  CHECK(gb.gehlen.d_t == g.gehlen.d_t);

  const DiffusionModel lit = DiffusionModel::rcm_literature();
  const DiffusionModel lb = diffusion_model_from_json(diffusion_model_to_json(lit));
  CHECK(lb.kind == DiffusionModel::Kind::rcm_literature);
  CHECK(lb.gehlen.b_e == 4800.0);

  DiffusionModel n;
  n.kind = DiffusionModel::Kind::nn;
  n.network = NetworkParameters::initialize(3);
  n.normalizer = {1e8, 5e7};
  const DiffusionModel nb = diffusion_model_from_json(diffusion_model_to_json(n));
  CHECK(nb.kind == DiffusionModel::Kind::nn);
  const ModelHyperparameters hyper;
  CHECK(nb.d_eff(hyper, 1.1e8, 285.0) ==
        doctest::Approx(n.d_eff(hyper, 1.1e8, 285.0)).epsilon(1e-15));

  CHECK_THROWS_AS(diffusion_model_from_json(json{{"kind", "mystery"}}), FormatError);
}

TEST_CASE("calibration and sensitivity results serialize") {
  CalibrationResult r;
  r.best_params = synthetic_reference_parameters();
  r.best_objective = -1e-9;
  r.objective_trace = {-1.0, -0.5, -1e-9};
  r.residuals = {1e-5, -1e-5};
  r.stop_reason = StopReason::stalled;
  const json j = to_json(r);
  CHECK(j.at("stop_reason") == "stalled");
  CHECK(j.at("objective_trace").size() == 3);
  CHECK(j.at("best_params").at("b_e") == r.best_params.b_e);

  SobolResult s;
  SobolRun run;
  run.s1 = {0.01, 0.35, 0.64};
  run.variance = 2.0;
  s.runs.push_back(run);
  s.s1_avg = run.s1;
  const json sj = to_json(s);
  CHECK(sj.at("parameter_order")[0] == "b_e");
  CHECK(sj.at("parameter_order")[2] == "a");
  CHECK(sj.at("runs").size() == 1);
  CHECK(sj.at("s1_avg")[2] == doctest::Approx(0.64));
}
