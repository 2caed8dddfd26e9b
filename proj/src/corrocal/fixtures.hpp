#pragma once

#include <vector>

#include "corrocal/ingest.hpp"
#include "corrocal/model.hpp"

namespace corrocal {

// Published wire-sensor events: depth [m] and corrosion-onset time [s]
// (24 days prior to the resistance jump). The first wire (0.01 m) is the
// noisy point that is excluded from calibration by default.
struct WireEvent {
  const char* wire_id;
  double depth;        // [m]
  double onset_time;   // [s]
  double ambient_temp; // [K], logged metadata; calibration uses the cosine model
};

const std::vector<WireEvent>& published_wire_events();

// The four default calibration points (wires 0.015..0.03 m), with onset
// temperatures evaluated from the reference cosine model.
std::vector<CalibrationPoint> default_calibration_points();

// The synthetic-recovery reference: parameter triple and the depths it
// produces at the four calibration times.
GehlenParameters synthetic_reference_parameters();
const std::vector<double>& synthetic_reference_depths();

}  // namespace corrocal
