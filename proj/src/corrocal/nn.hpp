#pragma once

#include <cstdint>
#include <vector>

#include "corrocal/ingest.hpp"
#include "corrocal/model.hpp"

namespace corrocal {

// Joint normalizer: one mean and one standard deviation computed over the
// pooled values of both input features (t and T), applied to each.
struct JointNormalizer {
  double mean = 0.0;
  double std_dev = 1.0;

  double normalize(double v) const { return (v - mean) / std_dev; }
  double denormalize(double v) const { return v * std_dev + mean; }

  static JointNormalizer fit(const std::vector<double>& times,
                             const std::vector<double>& temps);
};

// Feed-forward network 2 -> 10 -> 10 -> 1, rectifier hidden activations,
// identity output. The raw output is log10 of the diffusion coefficient.
struct NetworkParameters {
  static constexpr int kInput = 2;
  static constexpr int kHidden = 10;

  std::vector<double> w1;  // kHidden x kInput, row-major
  std::vector<double> b1;  // kHidden
  std::vector<double> w2;  // kHidden x kHidden, row-major
  std::vector<double> b2;  // kHidden
  std::vector<double> w3;  // 1 x kHidden
  std::vector<double> b3;  // 1

  static NetworkParameters initialize(std::uint64_t seed);

  std::size_t size() const {
    return w1.size() + b1.size() + w2.size() + b2.size() + w3.size() + b3.size();
  }
  // Flat parameter views in a fixed order (w1, b1, w2, b2, w3, b3).
  std::vector<double*> flat();
  std::vector<const double*> flat() const;
};

struct TrainConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  long max_epochs = 200000;
  double tolerance = 1e-7;  // stop on |loss_k - loss_{k-1}| < tolerance
  std::uint64_t seed = 0;

  void validate() const {
    if (!(tolerance > 0.0)) throw ConfigError("train config: tolerance must be > 0");
  }
};

// D_Eff = 10^(network output); strictly positive by construction.
double nn_forward(const NetworkParameters& params, const JointNormalizer& norm,
                  double t, double temp);

// Depth MSE with the network's diffusion coefficient substituted into the
// closed-form inversion.
double nn_loss(const NetworkParameters& params, const JointNormalizer& norm,
               const std::vector<CalibrationPoint>& points,
               const ModelHyperparameters& hyper, double c_crit);

// Gradient of nn_loss w.r.t. every weight and bias, same flat order as
// NetworkParameters::flat(). Reverse-mode accumulation through the explicit
// loss formula.
std::vector<double> nn_grad(const NetworkParameters& params,
                            const JointNormalizer& norm,
                            const std::vector<CalibrationPoint>& points,
                            const ModelHyperparameters& hyper, double c_crit);

struct TrainResult {
  NetworkParameters params;
  JointNormalizer normalizer;
  std::vector<double> loss_trace;
  bool converged = false;  // tolerance-triggered stop (vs max epochs)
};

// Adam training on the full batch. Deterministic under seed.
// Throws DivergenceError when the loss becomes non-finite.
TrainResult nn_train(const std::vector<CalibrationPoint>& points,
                     const ModelHyperparameters& hyper, double c_crit,
                     const TrainConfig& config);

}  // namespace corrocal
