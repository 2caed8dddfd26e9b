#pragma once

#include <json.hpp>

namespace corrocal::pipeline {

// High-level run entry points shared by the C API. Each takes one JSON
// config, optionally writes artifacts into config["output_dir"], and returns
// the result document (always carrying a provenance block). Errors surface
// as the corrocal exception types.

nlohmann::json run_fit_temperature(const nlohmann::json& config);
nlohmann::json run_ingest(const nlohmann::json& config);
nlohmann::json run_calibrate(const nlohmann::json& config);
nlohmann::json run_sensitivity(const nlohmann::json& config);
nlohmann::json run_predict(const nlohmann::json& config);
nlohmann::json run_sanity_check(const nlohmann::json& config);

}  // namespace corrocal::pipeline
