#include "corrocal/temperature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "corrocal/least_squares.hpp"

namespace corrocal {

double CosineTemperatureModel::evaluate(double t) const {
  return amplitude * std::cos(2.0 * M_PI * (t + phase_shift) / period) + offset;
}

void CosineTemperatureModel::validate() const {
  if (!(amplitude >= 0.0)) throw DomainError("temperature model: amplitude must be >= 0");
  if (!(period > 0.0)) throw DomainError("temperature model: period must be > 0");
  if (!(offset > amplitude)) {
    throw DomainError("temperature model: offset must exceed amplitude (T > 0 K)");
  }
}

CosineTemperatureModel reference_temperature_model() {
  return CosineTemperatureModel{11.10, 2542453.44, 32407303.30, 284.39};
}

namespace {

constexpr double kSolarYearSeconds = 31557600.0;

// theta = (A, phi, P, c)
void cosine_residuals(const std::vector<TemperatureSample>& samples,
                      const Eigen::VectorXd& theta, Eigen::VectorXd& r,
                      Eigen::MatrixXd* jac) {
  const double A = theta(0), phi = theta(1), P = theta(2), c = theta(3);
  const int n = static_cast<int>(samples.size());
  r.resize(n);
  if (jac) jac->resize(n, 4);
  for (int i = 0; i < n; ++i) {
    const double t = samples[i].t;
    const double arg = 2.0 * M_PI * (t + phi) / P;
    const double cs = std::cos(arg);
    const double sn = std::sin(arg);
    r(i) = A * cs + c - samples[i].temp;
    if (jac) {
      (*jac)(i, 0) = cs;
      (*jac)(i, 1) = -A * sn * 2.0 * M_PI / P;
      (*jac)(i, 2) = A * sn * 2.0 * M_PI * (t + phi) / (P * P);
      (*jac)(i, 3) = 1.0;
    }
  }
}

}  // namespace

CosineTemperatureModel fit_cosine(const std::vector<TemperatureSample>& samples) {
  if (samples.size() < 8) {
    throw DataError("fit_cosine: at least 8 samples required");
  }
  double lo = samples.front().temp, hi = samples.front().temp, sum = 0.0;
  for (const auto& s : samples) {
    lo = std::min(lo, s.temp);
    hi = std::max(hi, s.temp);
    sum += s.temp;
  }
  const double mean = sum / static_cast<double>(samples.size());
  const double amp0 = 0.5 * (hi - lo);

  ResidualFn fn = [&](const Eigen::VectorXd& th, Eigen::VectorXd& r,
                      Eigen::MatrixXd* jac) { cosine_residuals(samples, th, r, jac); };

  // Residual of the constant baseline; any accepted fit must beat it.
  double baseline = 0.0;
  for (const auto& s : samples) baseline += (s.temp - mean) * (s.temp - mean);

  bool have_best = false;
  LevenbergResult best;
  for (int k = 0; k < 4; ++k) {
    Eigen::VectorXd th0(4);
    th0 << amp0, k * kSolarYearSeconds / 4.0, kSolarYearSeconds, mean;
    LevenbergResult res = levenberg_marquardt(fn, th0, 400);
    if (!res.theta.allFinite()) continue;
    if (!have_best || res.sse < best.sse) {
      best = res;
      have_best = true;
    }
  }
  if (!have_best || !(best.sse <= baseline * (1.0 + 1e-12) + 1e-12)) {
    // Degenerate (constant) data: the flat model is the minimizer.
    if (amp0 < 1e-9) {
      return CosineTemperatureModel{0.0, 0.0, kSolarYearSeconds, mean};
    }
    throw FitError("fit_cosine: no initialization reduced the residual");
  }

  CosineTemperatureModel model{best.theta(0), best.theta(1), best.theta(2),
                               best.theta(3)};
  if (model.period < 0.0) {
    model.period = -model.period;
    model.phase_shift = -model.phase_shift;
  }
  if (model.amplitude < 0.0) {
    model.amplitude = -model.amplitude;
    model.phase_shift += model.period / 2.0;
  }
  model.phase_shift = std::fmod(model.phase_shift, model.period);
  if (model.phase_shift < 0.0) model.phase_shift += model.period;
  return model;
}

}  // namespace corrocal
