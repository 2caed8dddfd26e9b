#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "corrocal/corrocal.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  corrocal_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version string") {
  const char* v = corrocal_version();
  REQUIRE(v != nullptr);
  CHECK(std::strcmp(v, "0.1.0") == 0);
}

TEST_CASE("null arguments are rejected without crashing") {
  char* result = nullptr;
  CHECK(corrocal_run_calibrate(nullptr, &result) == CORROCAL_ERR_INVALID);
  CHECK(corrocal_run_calibrate("{}", nullptr) == CORROCAL_ERR_INVALID);
  CHECK(corrocal_temp_model_create(nullptr, nullptr) == CORROCAL_ERR_INVALID);
  CHECK(corrocal_temp_model_eval(nullptr, 0.0, nullptr) == CORROCAL_ERR_INVALID);
  CHECK(corrocal_diffusion_model_load(nullptr, nullptr) == CORROCAL_ERR_INVALID);
  corrocal_string_free(nullptr);          // must be a no-op
  corrocal_temp_model_destroy(nullptr);   // likewise
  corrocal_diffusion_model_destroy(nullptr);
}

TEST_CASE("malformed and invalid configs map to the domain status") {
  char* result = nullptr;
  CHECK(corrocal_run_calibrate("this is not json", &result) ==
        CORROCAL_ERR_DOMAIN);
  CHECK(std::strlen(corrocal_last_error()) > 0);
  CHECK(corrocal_run_calibrate(R"({"method":"unknown"})", &result) ==
        CORROCAL_ERR_DOMAIN);
}

TEST_CASE("missing input files map to the io status") {
  char* result = nullptr;
  const char* config =
      R"({"paths":{"temperature_csv":"definitely_missing.csv"}})";
  CHECK(corrocal_run_fit_temperature(config, &result) == CORROCAL_ERR_IO);
  CHECK(std::strlen(corrocal_last_error()) > 0);

  corrocal_diffusion_model* model = nullptr;
  CHECK(corrocal_diffusion_model_load("no_such_model.json", &model) ==
        CORROCAL_ERR_IO);
}

TEST_CASE("sanity check run reports all internal checks passing") {
  char* result = nullptr;
  REQUIRE(corrocal_run_sanity_check("{}", &result) == CORROCAL_OK);
  const json j = json::parse(take(result));
  CHECK(j.at("all_pass").get<bool>());
  CHECK(j.at("provenance").at("tool_version") == "0.1.0");
}

TEST_CASE("temperature model handle lifecycle") {
  const char* model_json =
      R"({"amplitude":11.10,"phase_shift":2542453.44,)"
      R"("period":32407303.30,"offset":284.39})";
  corrocal_temp_model* model = nullptr;
  REQUIRE(corrocal_temp_model_create(model_json, &model) == CORROCAL_OK);
  REQUIRE(model != nullptr);

  double temp = 0.0;
  REQUIRE(corrocal_temp_model_eval(model, 0.0, &temp) == CORROCAL_OK);
  CHECK(temp == doctest::Approx(11.10 * std::cos(2.0 * M_PI * 2542453.44 /
                                                 32407303.30) +
                                284.39)
                    .epsilon(1e-12));

  char* round = nullptr;
  REQUIRE(corrocal_temp_model_to_json(model, &round) == CORROCAL_OK);
  const json j = json::parse(take(round));
  CHECK(j.at("amplitude") == doctest::Approx(11.10));
  CHECK(j.at("period") == doctest::Approx(32407303.30));
  corrocal_temp_model_destroy(model);

  corrocal_temp_model* bad = nullptr;
  CHECK(corrocal_temp_model_create(R"({"amplitude":1})", &bad) ==
        CORROCAL_ERR_DOMAIN);
}

TEST_CASE("temperature fit through the C boundary") {
  const double period = 3.15576e7;
  double t[64], temp[64];
  for (int i = 0; i < 64; ++i) {
    t[i] = i * 604800.0;
    temp[i] = 9.0 * std::cos(2.0 * M_PI * t[i] / period) + 284.0;
  }
  corrocal_temp_model* model = nullptr;
  REQUIRE(corrocal_temp_model_fit(t, temp, 64, &model) == CORROCAL_OK);
  double at0 = 0.0;
  corrocal_temp_model_eval(model, 0.0, &at0);
  CHECK(at0 == doctest::Approx(293.0).epsilon(1e-3));
  corrocal_temp_model_destroy(model);

  corrocal_temp_model* few = nullptr;
  CHECK(corrocal_temp_model_fit(t, temp, 2, &few) == CORROCAL_ERR_DOMAIN);
}

TEST_CASE("diffusion model handle lifecycle") {
  corrocal_diffusion_model* model = nullptr;
  REQUIRE(corrocal_diffusion_model_create(R"({"kind":"rcm_literature"})",
                                          &model) == CORROCAL_OK);
  double d = 0.0;
  // at the reference age (28 days) and temperature both corrections are 1
  REQUIRE(corrocal_diffusion_model_d_eff(model, 2.419e6, 293.15, &d) ==
          CORROCAL_OK);
  CHECK(d == doctest::Approx(17.6e-12).epsilon(1e-12));
  // invalid query propagates as a status, not an exception
  CHECK(corrocal_diffusion_model_d_eff(model, -1.0, 293.15, &d) ==
        CORROCAL_ERR_DOMAIN);
  corrocal_diffusion_model_destroy(model);

  corrocal_diffusion_model* bad = nullptr;
  CHECK(corrocal_diffusion_model_create(R"({"kind":"mystery"})", &bad) ==
        CORROCAL_ERR_DOMAIN);
  CHECK(corrocal_diffusion_model_create("not json", &bad) ==
        CORROCAL_ERR_DOMAIN);
}
