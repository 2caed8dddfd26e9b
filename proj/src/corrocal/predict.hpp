#pragma once

#include <functional>
#include <string>
#include <vector>

#include "corrocal/model.hpp"
#include "corrocal/nn.hpp"
#include "corrocal/temperature.hpp"

namespace corrocal {

// A calibrated diffusion model: either the parametric triple or the trained
// network, both evaluated as D(t, T).
struct DiffusionModel {
  enum class Kind { gehlen, nn, rcm_literature };
  Kind kind = Kind::gehlen;
  GehlenParameters gehlen;      // for gehlen / rcm_literature
  NetworkParameters network;    // for nn
  JointNormalizer normalizer;   // for nn

  double d_eff(const ModelHyperparameters& hyper, double t, double temp) const;
  static DiffusionModel rcm_literature();
};

struct PredictionBand {
  std::vector<double> times;       // [s]
  std::vector<double> depth_lo;    // [m]
  std::vector<double> depth_mean;  // [m]
  std::vector<double> depth_hi;    // [m]
  std::string model_tag;
};

// Corrosion-front depth band over a time grid. Corner rule:
//   hi   = (lower c_crit, upper temperature)
//   lo   = (upper c_crit, lower temperature)
//   mean = (mean c_crit, cosine T(t))
PredictionBand predict_band(const DiffusionModel& model,
                            const ModelHyperparameters& hyper,
                            const CriticalContent& c_crit,
                            std::pair<double, double> temp_bounds,
                            const CosineTemperatureModel& temp_model,
                            const std::vector<double>& time_grid);

struct DiffusionCurve {
  std::vector<double> times;
  std::vector<double> d_eff;
};

DiffusionCurve effective_diffusion_curve(const DiffusionModel& model,
                                         const ModelHyperparameters& hyper,
                                         const std::vector<double>& time_grid,
                                         const CosineTemperatureModel& temp_model);

// Default grid: 200 log-spaced points from 30 days to 20 years.
std::vector<double> default_time_grid();

}  // namespace corrocal
