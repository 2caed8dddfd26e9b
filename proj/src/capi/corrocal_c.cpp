#include "corrocal/corrocal.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "corrocal/pipeline.hpp"
#include "corrocal/predict.hpp"
#include "corrocal/serialize.hpp"
#include "corrocal/temperature.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

corrocal_status status_of_current_exception() {
  try {
    throw;
  } catch (const corrocal::IoError& e) {
    g_last_error = e.what();
    return CORROCAL_ERR_IO;
  } catch (const corrocal::FitError& e) {
    g_last_error = e.what();
    return CORROCAL_ERR_NUMERIC;
  } catch (const corrocal::LinAlgError& e) {
    g_last_error = e.what();
    return CORROCAL_ERR_NUMERIC;
  } catch (const corrocal::DivergenceError& e) {
    g_last_error = e.what();
    return CORROCAL_ERR_NUMERIC;
  } catch (const corrocal::BracketError& e) {
    g_last_error = e.what();
    return CORROCAL_ERR_NUMERIC;
  } catch (const corrocal::DegenerateError& e) {
    g_last_error = e.what();
    return CORROCAL_ERR_NUMERIC;
  } catch (const std::exception& e) {
    // DomainError, ConfigError, FormatError, DataError, JSON parse errors.
    g_last_error = e.what();
    return CORROCAL_ERR_DOMAIN;
  } catch (...) {
    g_last_error = "unknown error";
    return CORROCAL_ERR_DOMAIN;
  }
}

using RunFn = json (*)(const json&);

corrocal_status run_command(RunFn fn, const char* config_json,
                            char** result_json) {
  if (config_json == nullptr || result_json == nullptr) {
    g_last_error = "null argument";
    return CORROCAL_ERR_INVALID;
  }
  try {
    json config = json::parse(config_json);
    const json result = fn(config);
    *result_json = dup_string(result.dump(2));
    return CORROCAL_OK;
  } catch (...) {
    return status_of_current_exception();
  }
}

}  // namespace

struct corrocal_temp_model {
  corrocal::CosineTemperatureModel model;
};

struct corrocal_diffusion_model {
  corrocal::DiffusionModel model;
  corrocal::ModelHyperparameters hyper;
};

extern "C" {

const char* corrocal_version(void) { return corrocal::kToolVersion; }

const char* corrocal_last_error(void) { return g_last_error.c_str(); }

void corrocal_string_free(char* s) { std::free(s); }

corrocal_status corrocal_run_fit_temperature(const char* config_json,
                                             char** result_json) {
  return run_command(&corrocal::pipeline::run_fit_temperature, config_json,
                     result_json);
}

corrocal_status corrocal_run_ingest(const char* config_json, char** result_json) {
  return run_command(&corrocal::pipeline::run_ingest, config_json, result_json);
}

corrocal_status corrocal_run_calibrate(const char* config_json,
                                       char** result_json) {
  return run_command(&corrocal::pipeline::run_calibrate, config_json, result_json);
}

corrocal_status corrocal_run_sensitivity(const char* config_json,
                                         char** result_json) {
  return run_command(&corrocal::pipeline::run_sensitivity, config_json,
                     result_json);
}

corrocal_status corrocal_run_predict(const char* config_json,
                                     char** result_json) {
  return run_command(&corrocal::pipeline::run_predict, config_json, result_json);
}

corrocal_status corrocal_run_sanity_check(const char* config_json,
                                          char** result_json) {
  return run_command(&corrocal::pipeline::run_sanity_check, config_json,
                     result_json);
}

corrocal_status corrocal_temp_model_create(const char* model_json,
                                           corrocal_temp_model** out) {
  if (model_json == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return CORROCAL_ERR_INVALID;
  }
  try {
    auto model = corrocal::temperature_model_from_json(json::parse(model_json));
    *out = new corrocal_temp_model{model};
    return CORROCAL_OK;
  } catch (...) {
    return status_of_current_exception();
  }
}

corrocal_status corrocal_temp_model_fit(const double* t, const double* temp_k,
                                        size_t n, corrocal_temp_model** out) {
  if (t == nullptr || temp_k == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return CORROCAL_ERR_INVALID;
  }
  try {
    std::vector<corrocal::TemperatureSample> samples(n);
    for (size_t i = 0; i < n; ++i) samples[i] = {t[i], temp_k[i]};
    *out = new corrocal_temp_model{corrocal::fit_cosine(samples)};
    return CORROCAL_OK;
  } catch (...) {
    return status_of_current_exception();
  }
}

corrocal_status corrocal_temp_model_eval(const corrocal_temp_model* model,
                                         double t, double* temp_k) {
  if (model == nullptr || temp_k == nullptr) {
    g_last_error = "null argument";
    return CORROCAL_ERR_INVALID;
  }
  *temp_k = model->model.evaluate(t);
  return CORROCAL_OK;
}

corrocal_status corrocal_temp_model_to_json(const corrocal_temp_model* model,
                                            char** model_json) {
  if (model == nullptr || model_json == nullptr) {
    g_last_error = "null argument";
    return CORROCAL_ERR_INVALID;
  }
  *model_json = dup_string(corrocal::to_json(model->model).dump(2));
  return CORROCAL_OK;
}

void corrocal_temp_model_destroy(corrocal_temp_model* model) { delete model; }

corrocal_status corrocal_diffusion_model_create(const char* model_json,
                                                corrocal_diffusion_model** out) {
  if (model_json == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return CORROCAL_ERR_INVALID;
  }
  try {
    const json j = json::parse(model_json);
    auto* handle = new corrocal_diffusion_model;
    handle->model = corrocal::diffusion_model_from_json(j);
    if (j.contains("hyperparameters")) {
      handle->hyper = corrocal::hyperparameters_from_json(j.at("hyperparameters"));
    }
    *out = handle;
    return CORROCAL_OK;
  } catch (...) {
    return status_of_current_exception();
  }
}

corrocal_status corrocal_diffusion_model_load(const char* path,
                                              corrocal_diffusion_model** out) {
  if (path == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return CORROCAL_ERR_INVALID;
  }
  try {
    std::ifstream in(path);
    if (!in) throw corrocal::IoError(std::string("cannot open file: ") + path);
    json j;
    in >> j;
    auto* handle = new corrocal_diffusion_model;
    handle->model = corrocal::diffusion_model_from_json(j);
    if (j.contains("hyperparameters")) {
      handle->hyper = corrocal::hyperparameters_from_json(j.at("hyperparameters"));
    }
    *out = handle;
    return CORROCAL_OK;
  } catch (...) {
    return status_of_current_exception();
  }
}

corrocal_status corrocal_diffusion_model_d_eff(
    const corrocal_diffusion_model* model, double t, double temp_k,
    double* d_eff) {
  if (model == nullptr || d_eff == nullptr) {
    g_last_error = "null argument";
    return CORROCAL_ERR_INVALID;
  }
  try {
    *d_eff = model->model.d_eff(model->hyper, t, temp_k);
    return CORROCAL_OK;
  } catch (...) {
    return status_of_current_exception();
  }
}

void corrocal_diffusion_model_destroy(corrocal_diffusion_model* model) {
  delete model;
}

}  // extern "C"
