#include "corrocal/predict.hpp"

#include <cmath>

namespace corrocal {

double DiffusionModel::d_eff(const ModelHyperparameters& hyper, double t,
                             double temp) const {
  if (kind == Kind::nn) return nn_forward(network, normalizer, t, temp);
  return effective_diffusion(gehlen, hyper, t, temp);
}

DiffusionModel DiffusionModel::rcm_literature() {
  DiffusionModel m;
  m.kind = Kind::rcm_literature;
  // RCM coefficient with the literature aging and temperature parameters
  // (k_t = 1, so d_t equals the measured migration coefficient).
  m.gehlen = GehlenParameters{0.3, 17.6e-12, 4800.0};
  return m;
}

namespace {

const char* tag_of(DiffusionModel::Kind kind) {
  switch (kind) {
    case DiffusionModel::Kind::nn:
      return "nn";
    case DiffusionModel::Kind::rcm_literature:
      return "rcm_literature";
    default:
      return "gehlen";
  }
}

}  // namespace

PredictionBand predict_band(const DiffusionModel& model,
                            const ModelHyperparameters& hyper,
                            const CriticalContent& c_crit,
                            std::pair<double, double> temp_bounds,
                            const CosineTemperatureModel& temp_model,
                            const std::vector<double>& time_grid) {
  c_crit.validate(hyper.c_surface);
  if (time_grid.empty() || !(time_grid.front() > 0.0)) {
    throw ConfigError("predict_band: time grid must be positive");
  }
  for (std::size_t i = 1; i < time_grid.size(); ++i) {
    if (!(time_grid[i] > time_grid[i - 1])) {
      throw ConfigError("predict_band: time grid must be increasing");
    }
  }

  PredictionBand band;
  band.model_tag = tag_of(model.kind);
  band.times = time_grid;
  // Collapsed temperature bounds pin the mean path to the same temperature,
  // so a fully collapsed uncertainty yields a zero-width band.
  const bool temps_collapsed = temp_bounds.first == temp_bounds.second;
  for (double t : time_grid) {
    const double temp_mean =
        temps_collapsed ? temp_bounds.first : temp_model.evaluate(t);
    const double d_mean = model.d_eff(hyper, t, temp_mean);
    const double d_hi = model.d_eff(hyper, t, temp_bounds.second);
    const double d_lo = model.d_eff(hyper, t, temp_bounds.first);
    band.depth_mean.push_back(depth_of_content_with_d(c_crit.mean, t, d_mean, hyper));
    band.depth_hi.push_back(depth_of_content_with_d(c_crit.lower, t, d_hi, hyper));
    band.depth_lo.push_back(depth_of_content_with_d(c_crit.upper, t, d_lo, hyper));
  }
  return band;
}

DiffusionCurve effective_diffusion_curve(const DiffusionModel& model,
                                         const ModelHyperparameters& hyper,
                                         const std::vector<double>& time_grid,
                                         const CosineTemperatureModel& temp_model) {
  DiffusionCurve curve;
  curve.times = time_grid;
  for (double t : time_grid) {
    curve.d_eff.push_back(model.d_eff(hyper, t, temp_model.evaluate(t)));
  }
  return curve;
}

std::vector<double> default_time_grid() {
  constexpr double lo = 30.0 * 86400.0;
  constexpr double hi = 20.0 * 365.25 * 86400.0;
  constexpr int n = 200;
  std::vector<double> grid(n);
  const double log_lo = std::log(lo);
  const double log_hi = std::log(hi);
  for (int i = 0; i < n; ++i) {
    grid[i] = std::exp(log_lo + (log_hi - log_lo) * i / (n - 1));
  }
  return grid;
}

}  // namespace corrocal
