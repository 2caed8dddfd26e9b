#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "corrocal/errors.hpp"
#include "corrocal/temperature.hpp"

namespace corrocal {

struct ResistanceSample {
  double t = 0.0;           // [s]
  double resistance = 0.0;  // [ohm]
  std::string wire_id;
  double wire_depth = 0.0;  // [m]
};

// Default corrosion lead time: the wire starts corroding 24 days before
// its resistance jump.
constexpr double kDefaultLeadTimeSeconds = 24.0 * 86400.0;

struct CorrosionEvent {
  std::string wire_id;
  double wire_depth = 0.0;   // [m]
  double failure_time = 0.0; // [s]
  double onset_time = 0.0;   // [s] = failure_time - lead_time
  double onset_temp = 0.0;   // [K], from the cosine model at onset_time
  double raw_temp = 0.0;     // [K], metadata only (e.g. a logged ambient value)
  bool excluded = false;
  std::string exclusion_reason;
};

struct JumpDetectionConfig {
  double threshold_factor = 10.0;  // jump = resistance > factor * trailing median
  int window = 20;                 // trailing-median window length [samples]
  double lead_time = kDefaultLeadTimeSeconds;
};

// One calibration point: depth, corrosion-onset time, onset temperature.
struct CalibrationPoint {
  double x = 0.0;  // [m]
  double t = 0.0;  // [s]
  double temp = 0.0;  // [K]
};

// Scan each wire's time-ordered series for the first sample whose resistance
// exceeds factor x trailing-window median. At most one event per wire; wires
// that never exceed yield nothing. Throws FormatError on unsorted or
// duplicate timestamps within a wire.
std::vector<CorrosionEvent> detect_jumps(
    const std::vector<ResistanceSample>& samples,
    const JumpDetectionConfig& config);

// Drop excluded wires (recording the reason), stamp onset temperatures from
// the cosine model, and return (x, t, T) triples sorted by depth.
// Marks exclusions in `events` in place.
std::vector<CalibrationPoint> assemble_calibration_points(
    std::vector<CorrosionEvent>& events,
    const CosineTemperatureModel& temp_model,
    const std::set<std::string>& exclusions);

}  // namespace corrocal
