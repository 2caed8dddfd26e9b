#include "corrocal/profile_fit.hpp"

#include <cmath>

#include "corrocal/least_squares.hpp"
#include "corrocal/model.hpp"

namespace corrocal {

void ChlorideProfile::validate() const {
  if (!(exposure_age > 0.0)) throw DomainError("profile: exposure age must be > 0");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].chloride < 0.0) {
      throw DomainError("profile: chloride contents must be nonnegative");
    }
    if (i > 0 && !(layers[i].depth > layers[i - 1].depth)) {
      throw DomainError("profile: layer depths must be strictly increasing");
    }
  }
}

ProfileFitResult fit_profile(const ChlorideProfile& profile) {
  profile.validate();
  std::vector<ProfileLayer> used;
  for (const ProfileLayer& layer : profile.layers) {
    if (layer.depth > profile.exclusion_depth) used.push_back(layer);
  }
  if (used.size() < 4) {
    throw DataError("fit_profile: fewer than 4 layers after exclusion");
  }

  const double t = profile.exposure_age;
  double mean_c = 0.0;
  for (const auto& layer : used) mean_c += layer.chloride;
  mean_c /= static_cast<double>(used.size());
  double ss_tot = 0.0;
  for (const auto& layer : used) {
    ss_tot += (layer.chloride - mean_c) * (layer.chloride - mean_c);
  }
  if (!(ss_tot > 1e-12 * std::max(1.0, mean_c * mean_c))) {
    throw FitError("fit_profile: constant profile is unidentifiable");
  }

  // theta = (C_S, log10 D)
  ResidualFn fn = [&](const Eigen::VectorXd& th, Eigen::VectorXd& r,
                      Eigen::MatrixXd* jac) {
    const double cs = th(0);
    const double d = std::pow(10.0, th(1));
    const int n = static_cast<int>(used.size());
    r.resize(n);
    if (jac) jac->resize(n, 2);
    const double denom = 2.0 * std::sqrt(d * t);
    for (int i = 0; i < n; ++i) {
      const double x = used[i].depth;
      const double xi = x / denom;
      const double g = 1.0 - erf(xi);
      r(i) = cs * g - used[i].chloride;
      if (jac) {
        (*jac)(i, 0) = g;
        // d/d(log10 D): xi depends on D as D^(-1/2)
        const double dxi_dlog = -0.5 * xi * std::log(10.0);
        const double derf = 2.0 / std::sqrt(M_PI) * std::exp(-xi * xi);
        (*jac)(i, 1) = -cs * derf * dxi_dlog;
      }
    }
  };

  bool have_best = false;
  LevenbergResult best;
  const double cs0 = used.front().chloride > 0.0 ? used.front().chloride : mean_c;
  for (double log_d : {-13.5, -12.5, -11.5, -10.5}) {
    Eigen::VectorXd th0(2);
    th0 << std::max(cs0, 1e-6), log_d;
    LevenbergResult res = levenberg_marquardt(fn, th0, 400);
    if (!res.theta.allFinite()) continue;
    if (!have_best || res.sse < best.sse) {
      best = res;
      have_best = true;
    }
  }
  if (!have_best) throw FitError("fit_profile: no initialization converged");

  ProfileFitResult out;
  out.c_s = best.theta(0);
  out.d_eff = std::pow(10.0, best.theta(1));
  out.n_used = static_cast<int>(used.size());
  out.r_squared = 1.0 - best.sse / ss_tot;
  return out;
}

}  // namespace corrocal
