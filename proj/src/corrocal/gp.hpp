#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "corrocal/errors.hpp"

namespace corrocal {

// Matern-5/2 kernel with per-dimension length scales.
struct KernelConfig {
  Eigen::VectorXd length_scales;  // one per input dimension
  double signal_variance = 1.0;
  double jitter = 1e-10;          // fixed noise on the diagonal

  double operator()(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
};

// Gaussian-process posterior over the objective, inputs in [0,1]^d.
// Targets are standardized internally; predictions are mapped back.
class GaussianProcess {
 public:
  // Throws LinAlgError when the kernel matrix stays indefinite after
  // escalating jitter up to 1e-4.
  GaussianProcess(std::vector<Eigen::VectorXd> x, std::vector<double> y,
                  KernelConfig kernel);

  struct Prediction {
    double mean = 0.0;
    double variance = 0.0;  // >= 0
  };
  Prediction predict(const Eigen::VectorXd& x) const;

  // Negative log marginal likelihood of the standardized targets under the
  // given kernel (for hyperparameter selection).
  static double negative_log_marginal_likelihood(
      const std::vector<Eigen::VectorXd>& x, const std::vector<double>& y,
      const KernelConfig& kernel);

  // Multi-start search over log length scales and signal variance.
  static KernelConfig fit_hyperparameters(const std::vector<Eigen::VectorXd>& x,
                                          const std::vector<double>& y,
                                          int dims, std::uint64_t seed);

  const KernelConfig& kernel() const { return kernel_; }

 private:
  std::vector<Eigen::VectorXd> x_;
  Eigen::VectorXd alpha_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  KernelConfig kernel_;
  double y_mean_ = 0.0;
  double y_scale_ = 1.0;
};

// Expected improvement for maximization: EI = s*phi(z) + (mu - f_best)*Phi(z).
double expected_improvement(double mean, double variance, double f_best);

}  // namespace corrocal
