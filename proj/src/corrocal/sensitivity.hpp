#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "corrocal/bounds.hpp"
#include "corrocal/ingest.hpp"
#include "corrocal/model.hpp"

namespace corrocal {

struct SensitivityConfig {
  std::size_t n_base = 8192;  // samples per matrix, power of two
  ParameterBounds bounds;     // uniform priors
  std::vector<CalibrationPoint> datapoints;  // (x, t, T) combinations
  std::uint64_t seed = 0;     // 0 = unscrambled Sobol points
};

// Per-run and averaged Sobol indices. Parameter order follows the model's
// input vector: (b_e, d_t, a).
struct SobolRun {
  std::array<double, 3> s1{};
  std::array<double, 3> st{};
  double variance = 0.0;       // Var(Y) for this datapoint
  double variance_sum = 0.0;   // sum_i S1_i * Var(Y), the decomposition check
  bool decomposition_flag = false;  // set when sum S1 deviates notably from 1
  std::array<bool, 3> out_of_range{};  // raw index outside [-0.05, 1.05]
};

struct SobolResult {
  std::vector<SobolRun> runs;
  std::array<double, 3> s1_avg{};
  std::array<double, 3> st_avg{};
  static constexpr std::array<const char*, 3> parameter_names{"b_e", "d_t", "a"};
};

// Saltelli cross-matrix outputs: y_A, y_B and one y_AB per dimension,
// where AB_i is A with column i replaced by B's column i.
struct SaltelliOutputs {
  std::vector<double> y_a;
  std::vector<double> y_b;
  std::vector<std::vector<double>> y_ab;  // [dim][sample]
};

using SampleModelFn = std::function<double(const std::vector<double>& unit_point)>;

SaltelliOutputs saltelli_evaluate(const SampleModelFn& model,
                                  const std::vector<std::vector<double>>& a,
                                  const std::vector<std::vector<double>>& b);

struct IndexEstimates {
  std::vector<double> s1;  // Saltelli 2010 estimator
  std::vector<double> st;  // Jansen estimator
  double variance = 0.0;
};

// Throws DegenerateError when Var(Y) vanishes (constant model).
IndexEstimates sobol_indices(const SaltelliOutputs& outputs);

// Full analysis of the concentration model over (b_e, d_t, a): one index set
// per datapoint, averaged across datapoints, with the variance-sum check.
SobolResult run_analysis(const SensitivityConfig& config,
                         const ModelHyperparameters& hyper);

// The cubic/quadratic/linear dummy model used as the methodology oracle.
double dummy_model(const std::vector<double>& x);

// Index estimates for the dummy model on U(0,1)^3 at the configured n_base.
IndexEstimates run_dummy_analysis(std::size_t n_base, std::uint64_t seed = 0);

}  // namespace corrocal
