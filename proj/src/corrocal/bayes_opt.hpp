#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corrocal/bounds.hpp"
#include "corrocal/ingest.hpp"
#include "corrocal/model.hpp"

namespace corrocal {

struct BayesOptConfig {
  int n_init = 10;        // random initial design size
  int max_iter = 200;     // acquisition iterations after the initial design
  int stall_window = 4;   // stop when the best objective stagnates this long
  double stall_tol = 1e-12;  // [m^2]
  int ei_restarts = 8;    // local refinements of the acquisition maximizer
  std::uint64_t seed = 0;

  void validate() const {
    if (n_init < 2) throw ConfigError("bayes opt: n_init must be >= 2");
    if (stall_window < 2) throw ConfigError("bayes opt: stall_window must be >= 2");
  }
};

enum class StopReason { stalled, max_iter };

struct CalibrationResult {
  GehlenParameters best_params;
  double best_objective = 0.0;          // negative MSE [m^2]
  std::vector<double> objective_trace;  // per evaluation, in order
  std::vector<double> residuals;        // predicted - observed depth [m]
  StopReason stop_reason = StopReason::max_iter;
};

// Negative mean squared depth error of the closed-form inversion at the
// calibration points; the quantity maximized by the optimizer.
double depth_mse_objective(const GehlenParameters& params,
                           const std::vector<CalibrationPoint>& points,
                           const ModelHyperparameters& hyper, double c_crit);

// GP-surrogate / expected-improvement search for (a, d_t, b_e).
// d_t is searched in log10 scale; the unit cube is the internal domain.
// Deterministic under a fixed seed.
CalibrationResult calibrate(const std::vector<CalibrationPoint>& points,
                            const ParameterBounds& bounds,
                            const BayesOptConfig& config,
                            const ModelHyperparameters& hyper, double c_crit);

const char* to_string(StopReason reason);

}  // namespace corrocal
