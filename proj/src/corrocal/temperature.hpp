#pragma once

#include <vector>

#include "corrocal/errors.hpp"

namespace corrocal {

// Internal concrete temperature as a cosine of time:
//   T(t) = amplitude * cos(2 pi (t + phase_shift) / period) + offset
struct CosineTemperatureModel {
  double amplitude = 0.0;    // [K]
  double phase_shift = 0.0;  // [s], additive inside the cosine argument
  double period = 0.0;       // [s]
  double offset = 0.0;       // [K]

  double evaluate(double t) const;
  double min_temp() const { return offset - amplitude; }
  double max_temp() const { return offset + amplitude; }

  void validate() const;
};

// The published regression coefficients of the internal-temperature fit.
CosineTemperatureModel reference_temperature_model();

struct TemperatureSample {
  double t = 0.0;     // [s] since concreting
  double temp = 0.0;  // [K]
};

// Least-squares cosine fit. Multi-start over phase (4 starts across one
// period); period initialized at one solar year. Deterministic.
// Throws FitError when no initialization reduces the residual, DataError on
// fewer than 8 samples.
CosineTemperatureModel fit_cosine(const std::vector<TemperatureSample>& samples);

}  // namespace corrocal
