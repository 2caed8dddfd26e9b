#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "corrocal/bayes_opt.hpp"
#include "corrocal/bounds.hpp"
#include "corrocal/ingest.hpp"
#include "corrocal/model.hpp"
#include "corrocal/nn.hpp"
#include "corrocal/predict.hpp"
#include "corrocal/sensitivity.hpp"
#include "corrocal/temperature.hpp"

namespace corrocal {

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a 64-bit of the canonical (dumped) config text, hex-encoded.
std::string config_hash(const nlohmann::json& config);

// Provenance block embedded in every output artifact.
nlohmann::json provenance(const nlohmann::json& config, std::uint64_t seed);

nlohmann::json to_json(const ModelHyperparameters& h);
ModelHyperparameters hyperparameters_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GehlenParameters& p);
GehlenParameters gehlen_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CriticalContent& c);
CriticalContent critical_content_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ParameterBounds& b);
ParameterBounds bounds_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CosineTemperatureModel& m);
CosineTemperatureModel temperature_model_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CorrosionEvent& e);
nlohmann::json to_json(const CalibrationPoint& p);
CalibrationPoint calibration_point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CalibrationResult& r);

nlohmann::json to_json(const SobolResult& r);

// Trained-network model file: topology, normalizer, row-major weights.
nlohmann::json nn_model_to_json(const NetworkParameters& p,
                                const JointNormalizer& norm);
void nn_model_from_json(const nlohmann::json& j, NetworkParameters& p,
                        JointNormalizer& norm);

// Diffusion-model file covering both calibrated kinds plus the literature
// RCM parameter set.
nlohmann::json diffusion_model_to_json(const DiffusionModel& m);
DiffusionModel diffusion_model_from_json(const nlohmann::json& j);

}  // namespace corrocal
