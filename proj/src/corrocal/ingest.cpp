#include "corrocal/ingest.hpp"

#include <algorithm>
#include <map>

namespace corrocal {

namespace {

double median_of(std::vector<double> v) {
  const size_t n = v.size();
  std::nth_element(v.begin(), v.begin() + n / 2, v.end());
  double hi = v[n / 2];
  if (n % 2 == 1) return hi;
  std::nth_element(v.begin(), v.begin() + n / 2 - 1, v.end());
  return 0.5 * (hi + v[n / 2 - 1]);
}

}  // namespace

std::vector<CorrosionEvent> detect_jumps(
    const std::vector<ResistanceSample>& samples,
    const JumpDetectionConfig& config) {
  std::map<std::string, std::vector<const ResistanceSample*>> by_wire;
  for (const auto& s : samples) by_wire[s.wire_id].push_back(&s);

  std::vector<CorrosionEvent> events;
  for (auto& [wire_id, series] : by_wire) {
    for (size_t i = 1; i < series.size(); ++i) {
      if (series[i]->t == series[i - 1]->t) {
        throw FormatError("detect_jumps: duplicate timestamp for wire " + wire_id);
      }
      if (series[i]->t < series[i - 1]->t) {
        throw FormatError("detect_jumps: unsorted timestamps for wire " + wire_id);
      }
    }
    std::vector<double> window;
    for (size_t i = 1; i < series.size(); ++i) {
      const size_t begin = i > static_cast<size_t>(config.window)
                               ? i - static_cast<size_t>(config.window)
                               : 0;
      window.clear();
      for (size_t j = begin; j < i; ++j) window.push_back(series[j]->resistance);
      const double med = median_of(window);
      if (series[i]->resistance > config.threshold_factor * med && med > 0.0) {
        CorrosionEvent ev;
        ev.wire_id = wire_id;
        ev.wire_depth = series[i]->wire_depth;
        ev.failure_time = series[i]->t;
        ev.onset_time = ev.failure_time - config.lead_time;
        if (!(ev.onset_time > 0.0)) {
          throw DomainError("detect_jumps: onset time not positive for wire " +
                            wire_id);
        }
        events.push_back(std::move(ev));
        break;  // at most one failure per wire
      }
    }
  }
  return events;
}

std::vector<CalibrationPoint> assemble_calibration_points(
    std::vector<CorrosionEvent>& events,
    const CosineTemperatureModel& temp_model,
    const std::set<std::string>& exclusions) {
  std::vector<CalibrationPoint> points;
  for (auto& ev : events) {
    ev.onset_temp = temp_model.evaluate(ev.onset_time);
    if (exclusions.count(ev.wire_id) > 0) {
      ev.excluded = true;
      ev.exclusion_reason = "excluded by configuration";
      continue;
    }
    points.push_back({ev.wire_depth, ev.onset_time, ev.onset_temp});
  }
  std::sort(points.begin(), points.end(),
            [](const CalibrationPoint& a, const CalibrationPoint& b) {
              return a.x < b.x;
            });
  return points;
}

}  // namespace corrocal
