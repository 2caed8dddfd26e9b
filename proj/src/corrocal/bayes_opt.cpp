#include "corrocal/bayes_opt.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "corrocal/gp.hpp"
#include "corrocal/least_squares.hpp"
#include "corrocal/sobol.hpp"

namespace corrocal {

double depth_mse_objective(const GehlenParameters& params,
                           const std::vector<CalibrationPoint>& points,
                           const ModelHyperparameters& hyper, double c_crit) {
  if (points.empty()) throw ConfigError("depth_mse_objective: no points");
  double sse = 0.0;
  for (const CalibrationPoint& p : points) {
    const double predicted = depth_of_content(c_crit, p.t, params, hyper, p.temp);
    const double err = predicted - p.x;
    sse += err * err;
  }
  return -sse / static_cast<double>(points.size());
}

namespace {

// Maps between the unit cube and (a, log10 d_t, b_e). Collapsed bounds pin
// the coordinate to its fixed value.
class CubeMap {
 public:
  explicit CubeMap(const ParameterBounds& bounds)
      : lo_{bounds.a.lo, std::log10(bounds.d_t.lo), bounds.b_e.lo},
        hi_{bounds.a.hi, std::log10(bounds.d_t.hi), bounds.b_e.hi} {}

  GehlenParameters to_params(const Eigen::VectorXd& u) const {
    GehlenParameters p;
    p.aging_exponent = lo_[0] + u(0) * (hi_[0] - lo_[0]);
    p.d_t = std::pow(10.0, lo_[1] + u(1) * (hi_[1] - lo_[1]));
    p.b_e = lo_[2] + u(2) * (hi_[2] - lo_[2]);
    return p;
  }

 private:
  std::array<double, 3> lo_, hi_;
};

Eigen::VectorXd clamp_unit(Eigen::VectorXd u) {
  for (int d = 0; d < u.size(); ++d) u(d) = std::clamp(u(d), 0.0, 1.0);
  return u;
}

// Pattern search on the acquisition surface starting from u0.
Eigen::VectorXd refine_ei(const GaussianProcess& gp, Eigen::VectorXd u0,
                          double f_best) {
  auto ei_at = [&](const Eigen::VectorXd& u) {
    const auto pred = gp.predict(u);
    return expected_improvement(pred.mean, pred.variance, f_best);
  };
  double best_ei = ei_at(u0);
  double step = 0.08;
  while (step > 1e-5) {
    bool improved = false;
    for (int d = 0; d < u0.size(); ++d) {
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd cand = u0;
        cand(d) = std::clamp(cand(d) + sign * step, 0.0, 1.0);
        const double ei = ei_at(cand);
        if (ei > best_ei) {
          best_ei = ei;
          u0 = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return u0;
}

}  // namespace

const char* to_string(StopReason reason) {
  return reason == StopReason::stalled ? "stalled" : "max_iter";
}

CalibrationResult calibrate(const std::vector<CalibrationPoint>& points,
                            const ParameterBounds& bounds,
                            const BayesOptConfig& config,
                            const ModelHyperparameters& hyper, double c_crit) {
  if (points.empty()) throw ConfigError("calibrate: no calibration points");
  bounds.validate();
  config.validate();
  hyper.validate();

  const CubeMap cube(bounds);
  auto objective = [&](const Eigen::VectorXd& u) {
    return depth_mse_objective(cube.to_params(u), points, hyper, c_crit);
  };

  // Depth residuals in unit-cube coordinates, with a central-difference
  // Jacobian. Drives the exploitation polish below.
  const ResidualFn residual_fn = [&](const Eigen::VectorXd& u,
                                     Eigen::VectorXd& r, Eigen::MatrixXd* jac) {
    auto fill = [&](const Eigen::VectorXd& v, Eigen::VectorXd& out) {
      const GehlenParameters p = cube.to_params(clamp_unit(v));
      out.resize(static_cast<Eigen::Index>(points.size()));
      for (std::size_t i = 0; i < points.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) =
            depth_of_content(c_crit, points[i].t, p, hyper, points[i].temp) -
            points[i].x;
      }
    };
    fill(u, r);
    if (jac != nullptr) {
      jac->resize(r.size(), u.size());
      const double h = 1e-7;
      Eigen::VectorXd rp, rm;
      for (int d = 0; d < u.size(); ++d) {
        Eigen::VectorXd up = u, um = u;
        up(d) += h;
        um(d) -= h;
        fill(up, rp);
        fill(um, rm);
        jac->col(d) = (rp - rm) / (2.0 * h);
      }
    }
  };

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Eigen::VectorXd> xs;
  std::vector<double> ys;
  CalibrationResult result;

  auto evaluate = [&](const Eigen::VectorXd& u) {
    const double y = objective(u);
    xs.push_back(u);
    ys.push_back(y);
    result.objective_trace.push_back(y);
    return y;
  };

  for (int i = 0; i < config.n_init; ++i) {
    Eigen::VectorXd u(3);
    for (int d = 0; d < 3; ++d) u(d) = unit(rng);
    evaluate(u);
  }

  KernelConfig kernel;
  kernel.length_scales = Eigen::VectorXd::Constant(3, 0.3);
  std::vector<double> best_history;
  best_history.push_back(*std::max_element(ys.begin(), ys.end()));

  result.stop_reason = StopReason::max_iter;
  bool last_improved = true;
  for (int iter = 0; iter < config.max_iter; ++iter) {
    if (iter % 5 == 0) {
      kernel = GaussianProcess::fit_hyperparameters(xs, ys, 3, rng());
    }
    const GaussianProcess gp(xs, ys, kernel);
    const double f_best = best_history.back();
    const auto incumbent_it = std::max_element(ys.begin(), ys.end());
    const Eigen::VectorXd incumbent = xs[incumbent_it - ys.begin()];

    if (!last_improved) {
      // EI exploration did not move the best value. The stall rule allows
      // only a handful of flat iterations, so spend this evaluation on a
      // damped least-squares polish of the incumbent instead of another
      // surrogate guess.
      const LevenbergResult polish = levenberg_marquardt(residual_fn, incumbent, 60);
      evaluate(clamp_unit(polish.theta));
      best_history.push_back(std::max(f_best, ys.back()));
      last_improved = ys.back() - f_best > config.stall_tol;
      if (static_cast<int>(best_history.size()) > config.stall_window) {
        const auto tail = best_history.end() - config.stall_window;
        const double spread = *std::max_element(tail, best_history.end()) -
                              *std::min_element(tail, best_history.end());
        if (spread < config.stall_tol) {
          result.stop_reason = StopReason::stalled;
          break;
        }
      }
      continue;
    }

    // 512 quasi-random candidates plus local perturbations of the incumbent.
    const auto sobol = sobol_matrix(512, 3, rng() | 1);
    std::vector<Eigen::VectorXd> candidates;
    candidates.reserve(512 + 24);
    for (const auto& row : sobol) {
      Eigen::VectorXd u(3);
      for (int d = 0; d < 3; ++d) u(d) = row[d];
      candidates.push_back(u);
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (double radius : {0.2, 0.05, 0.01}) {
      for (int k = 0; k < 8; ++k) {
        Eigen::VectorXd u = incumbent;
        for (int d = 0; d < 3; ++d) u(d) += radius * gauss(rng);
        candidates.push_back(clamp_unit(u));
      }
    }

    std::vector<std::pair<double, int>> scored;
    scored.reserve(candidates.size());
    for (int c = 0; c < static_cast<int>(candidates.size()); ++c) {
      const auto pred = gp.predict(candidates[c]);
      scored.emplace_back(expected_improvement(pred.mean, pred.variance, f_best), c);
    }
    const int n_refine = std::min<int>(config.ei_restarts,
                                       static_cast<int>(scored.size()));
    std::partial_sort(scored.begin(), scored.begin() + n_refine, scored.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });

    Eigen::VectorXd next = candidates[scored[0].second];
    double next_ei = -1.0;
    for (int k = 0; k < n_refine; ++k) {
      const Eigen::VectorXd refined =
          refine_ei(gp, candidates[scored[k].second], f_best);
      const auto pred = gp.predict(refined);
      const double ei = expected_improvement(pred.mean, pred.variance, f_best);
      if (ei > next_ei) {
        next_ei = ei;
        next = refined;
      }
    }

    evaluate(next);
    last_improved = ys.back() - f_best > config.stall_tol;
    best_history.push_back(std::max(f_best, ys.back()));

    if (static_cast<int>(best_history.size()) > config.stall_window) {
      const auto tail = best_history.end() - config.stall_window;
      const double spread = *std::max_element(tail, best_history.end()) -
                            *std::min_element(tail, best_history.end());
      if (spread < config.stall_tol) {
        result.stop_reason = StopReason::stalled;
        break;
      }
    }
  }

  const auto best_it = std::max_element(ys.begin(), ys.end());
  result.best_objective = *best_it;
  result.best_params = cube.to_params(xs[best_it - ys.begin()]);
  for (const CalibrationPoint& p : points) {
    result.residuals.push_back(
        depth_of_content(c_crit, p.t, result.best_params, hyper, p.temp) - p.x);
  }
  return result;
}

}  // namespace corrocal
