#include "corrocal/gp.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace corrocal {

namespace {

constexpr double kSqrt5 = 2.23606797749979;

double standard_normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

double standard_normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

Eigen::MatrixXd kernel_matrix(const std::vector<Eigen::VectorXd>& x,
                              const KernelConfig& kernel) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd k(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      k(i, j) = k(j, i) = kernel(x[i], x[j]);
    }
  }
  return k;
}

void standardize(const std::vector<double>& y, double& mean, double& scale) {
  mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(y.size());
  double var = 0.0;
  for (double v : y) var += (v - mean) * (v - mean);
  var /= static_cast<double>(y.size());
  scale = var > 0.0 ? std::sqrt(var) : 1.0;
}

}  // namespace

double KernelConfig::operator()(const Eigen::VectorXd& a,
                                const Eigen::VectorXd& b) const {
  double r2 = 0.0;
  for (int d = 0; d < a.size(); ++d) {
    const double diff = (a(d) - b(d)) / length_scales(d);
    r2 += diff * diff;
  }
  const double r = std::sqrt(r2);
  const double s = kSqrt5 * r;
  return signal_variance * (1.0 + s + s * s / 3.0) * std::exp(-s);
}

GaussianProcess::GaussianProcess(std::vector<Eigen::VectorXd> x,
                                 std::vector<double> y, KernelConfig kernel)
    : x_(std::move(x)), kernel_(std::move(kernel)) {
  if (x_.size() < 2) throw ConfigError("gp: at least 2 points required");
  standardize(y, y_mean_, y_scale_);
  Eigen::VectorXd t(static_cast<int>(y.size()));
  for (int i = 0; i < t.size(); ++i) t(i) = (y[i] - y_mean_) / y_scale_;

  Eigen::MatrixXd k = kernel_matrix(x_, kernel_);
  double jitter = kernel_.jitter;
  while (true) {
    Eigen::MatrixXd kj = k;
    kj.diagonal().array() += jitter;
    llt_.compute(kj);
    if (llt_.info() == Eigen::Success) break;
    jitter *= 10.0;
    if (jitter > 1e-4) {
      throw LinAlgError("gp: kernel matrix not positive definite at max jitter");
    }
  }
  alpha_ = llt_.solve(t);
}

GaussianProcess::Prediction GaussianProcess::predict(
    const Eigen::VectorXd& x) const {
  const int n = static_cast<int>(x_.size());
  Eigen::VectorXd k_star(n);
  for (int i = 0; i < n; ++i) k_star(i) = kernel_(x, x_[i]);
  const double mean_std = k_star.dot(alpha_);
  const Eigen::VectorXd v = llt_.matrixL().solve(k_star);
  double var_std = kernel_(x, x) - v.squaredNorm();
  if (var_std < 0.0) var_std = 0.0;
  return {y_mean_ + y_scale_ * mean_std, y_scale_ * y_scale_ * var_std};
}

double GaussianProcess::negative_log_marginal_likelihood(
    const std::vector<Eigen::VectorXd>& x, const std::vector<double>& y,
    const KernelConfig& kernel) {
  double mean, scale;
  standardize(y, mean, scale);
  Eigen::VectorXd t(static_cast<int>(y.size()));
  for (int i = 0; i < t.size(); ++i) t(i) = (y[i] - mean) / scale;

  Eigen::MatrixXd k = kernel_matrix(x, kernel);
  k.diagonal().array() += std::max(kernel.jitter, 1e-10);
  Eigen::LLT<Eigen::MatrixXd> llt(k);
  if (llt.info() != Eigen::Success) {
    return std::numeric_limits<double>::infinity();
  }
  const Eigen::VectorXd alpha = llt.solve(t);
  const Eigen::MatrixXd l = llt.matrixL();
  double logdet = 0.0;
  for (int i = 0; i < k.rows(); ++i) {
    logdet += std::log(l(i, i));
  }
  return 0.5 * t.dot(alpha) + logdet +
         0.5 * static_cast<double>(t.size()) * std::log(2.0 * M_PI);
}

KernelConfig GaussianProcess::fit_hyperparameters(
    const std::vector<Eigen::VectorXd>& x, const std::vector<double>& y,
    int dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_ls(std::log(0.05), std::log(2.0));
  std::uniform_real_distribution<double> log_sv(std::log(0.1), std::log(10.0));

  KernelConfig best;
  best.length_scales = Eigen::VectorXd::Constant(dims, 0.5);
  best.signal_variance = 1.0;
  double best_nlml = negative_log_marginal_likelihood(x, y, best);

  for (int trial = 0; trial < 24; ++trial) {
    KernelConfig cand;
    cand.length_scales.resize(dims);
    for (int d = 0; d < dims; ++d) cand.length_scales(d) = std::exp(log_ls(rng));
    cand.signal_variance = std::exp(log_sv(rng));
    const double nlml = negative_log_marginal_likelihood(x, y, cand);
    if (nlml < best_nlml) {
      best_nlml = nlml;
      best = cand;
    }
  }

  // Coordinate-wise ascent around the best start.
  for (int sweep = 0; sweep < 3; ++sweep) {
    for (int d = 0; d <= dims; ++d) {
      for (double factor : {0.5, 0.8, 1.25, 2.0}) {
        KernelConfig cand = best;
        if (d < dims) {
          cand.length_scales(d) *= factor;
        } else {
          cand.signal_variance *= factor;
        }
        const double nlml = negative_log_marginal_likelihood(x, y, cand);
        if (nlml < best_nlml) {
          best_nlml = nlml;
          best = cand;
        }
      }
    }
  }
  return best;
}

double expected_improvement(double mean, double variance, double f_best) {
  const double sigma = std::sqrt(std::max(variance, 0.0));
  const double gain = mean - f_best;
  if (sigma <= 0.0) return std::max(0.0, gain);
  const double z = gain / sigma;
  const double ei = sigma * standard_normal_pdf(z) + gain * standard_normal_cdf(z);
  return std::max(0.0, ei);
}

}  // namespace corrocal
