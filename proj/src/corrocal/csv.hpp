#pragma once

#include <string>
#include <vector>

#include "corrocal/ingest.hpp"
#include "corrocal/predict.hpp"
#include "corrocal/profile_fit.hpp"
#include "corrocal/temperature.hpp"

namespace corrocal {

// Time field: plain (epoch or relative) seconds, or an ISO-8601 UTC
// timestamp such as 2007-05-14 or 2007-05-14T09:30:00.
double parse_time_value(const std::string& s);

// Header `t_seconds,temp_celsius` or `t_seconds,temp_kelvin`.
// Celsius values are converted to Kelvin on ingest.
std::vector<TemperatureSample> read_temperature_csv(const std::string& path);

// Header `wire_id,wire_depth_m,t_seconds,resistance_ohm`.
std::vector<ResistanceSample> read_sensor_csv(const std::string& path);

// Header `depth_m,chloride_kg_per_m3` or `depth_m,chloride_mpct`.
// M% values are converted with cement_content.
std::vector<ProfileLayer> read_profile_csv(const std::string& path,
                                           double cement_content);

void write_band_csv(const std::string& path, const PredictionBand& band);
void write_dcurve_csv(const std::string& path, const DiffusionCurve& curve);

}  // namespace corrocal
