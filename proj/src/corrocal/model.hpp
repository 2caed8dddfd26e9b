#pragma once

#include <array>
#include <utility>

#include "corrocal/errors.hpp"

namespace corrocal {

// Fixed hyperparameters of the chloride transport model.
// Units: meters, seconds, Kelvin, kg/m^3 throughout.
struct ModelHyperparameters {
  double delta_x = 0.0;          // substitute surface depth [m]
  double c_surface = 18.19;      // chloride concentration at delta_x [kg/m^3]
  double t_ref_age = 2.419e6;    // reference concrete age [s] (28 days)
  double temp_ref = 293.15;      // reference temperature [K]

  void validate() const;
};

// The identified parameter triple of the effective diffusion coefficient.
// d_t is the product k_t * D_RCM,0; the two factors are not separately
// identifiable from depth/time data and are never exposed apart.
struct GehlenParameters {
  double aging_exponent = 0.0;   // a [-], < 1
  double d_t = 0.0;              // [m^2/s]
  double b_e = 0.0;              // temperature regression coefficient [K]

  void validate() const;
};

// Critical corrosion-initiating chloride content with its uncertainty range.
struct CriticalContent {
  double mean = 1.62;    // [kg/m^3]
  double lower = 0.54;
  double upper = 5.4;

  void validate(double c_surface) const;
};

// Error function, |error| <= 1e-10 on the real line.
// Series expansion for small |x|, continued fraction for the tail.
double erf(double x);

// Inverse error function on (-1, 1). Polynomial initial guess refined by
// Newton steps against erf; |erf(erf_inv(p)) - p| <= 1e-12.
// Throws DomainError when |p| >= 1.
double erf_inv(double p);

// Effective diffusion coefficient D_Eff,C(t):
//   exp(b_e * (1/T_ref - 1/T)) * d_t * (t0 / t)^a
// Throws DomainError on t <= 0 or temp <= 0.
double effective_diffusion(const GehlenParameters& params,
                           const ModelHyperparameters& hyper,
                           double t, double temp);

// Chloride concentration at depth x and age t:
//   C = c_surface * (1 - erf((x - delta_x) / (2 sqrt(D t))))
// x below delta_x (the convection zone) is rejected, not extrapolated.
double concentration(double x, double t,
                     const GehlenParameters& params,
                     const ModelHyperparameters& hyper,
                     double temp);

// Same, for an externally supplied diffusion coefficient d_eff.
double concentration_with_d(double x, double t, double d_eff,
                            const ModelHyperparameters& hyper);

// Depth at which the concentration equals c_target:
//   x = delta_x + 2 erf_inv(1 - c_target / c_surface) * sqrt(D t)
double depth_of_content(double c_target, double t,
                        const GehlenParameters& params,
                        const ModelHyperparameters& hyper,
                        double temp);

// Same, for an externally supplied diffusion coefficient.
double depth_of_content_with_d(double c_target, double t, double d_eff,
                               const ModelHyperparameters& hyper);

// Time at which the c_target front reaches depth x, by bisection of
// depth_of_content over t_bracket. temp_of_t supplies T(t).
// Relative tolerance 1e-6 in t. Throws BracketError without a sign change.
template <typename TempFn>
double time_to_depth(double x, double c_target,
                     const GehlenParameters& params,
                     const ModelHyperparameters& hyper,
                     TempFn&& temp_of_t,
                     std::pair<double, double> t_bracket);

// 3 % NaCl brine at ~1 g/mL gives 18.19 kg/m^3 of chloride ions.
double nacl_mass_fraction_to_chloride(double w, double solution_density);

// M% of cement mass -> kg/m^3 (0.6 M% at 270 kg/m^3 cement = 1.62 kg/m^3).
double mass_percent_to_kg_per_m3(double m_pct, double cement_content);

// --- implementation of the templated inversion ---

template <typename TempFn>
double time_to_depth(double x, double c_target,
                     const GehlenParameters& params,
                     const ModelHyperparameters& hyper,
                     TempFn&& temp_of_t,
                     std::pair<double, double> t_bracket) {
  auto depth_at = [&](double t) {
    return depth_of_content(c_target, t, params, hyper, temp_of_t(t));
  };
  double lo = t_bracket.first;
  double hi = t_bracket.second;
  if (!(lo > 0.0) || !(hi > lo)) {
    throw DomainError("time_to_depth: bracket must satisfy 0 < lo < hi");
  }
  double f_lo = depth_at(lo) - x;
  double f_hi = depth_at(hi) - x;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw BracketError("time_to_depth: depth does not cross target on bracket");
  }
  while (hi - lo > 1e-6 * lo) {
    double mid = 0.5 * (lo + hi);
    double f_mid = depth_at(mid) - x;
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace corrocal
