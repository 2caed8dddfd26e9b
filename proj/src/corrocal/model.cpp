#include "corrocal/model.hpp"

#include <cmath>
#include <limits>

namespace corrocal {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955126;

// Maclaurin series sum_{k} (-1)^k x^(2k+1) / (k! (2k+1)), scaled by 2/sqrt(pi).
// Used for |x| <= 2 where cancellation stays benign.
double erf_series(double x) {
  double term = x;
  double sum = x;
  const double x2 = x * x;
  for (int k = 1; k < 80; ++k) {
    term *= -x2 / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// Complementary error function for x > 2 via the Gauss continued fraction
//   erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm.
double erfc_cf(double x) {
  const double tiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int k = 1; k < 300; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return std::exp(-x * x) / std::sqrt(M_PI) / f;
}

}  // namespace

void ModelHyperparameters::validate() const {
  if (!(c_surface > 0.0)) throw DomainError("hyperparameters: c_surface must be > 0");
  if (!(t_ref_age > 0.0)) throw DomainError("hyperparameters: t_ref_age must be > 0");
  if (!(temp_ref > 0.0)) throw DomainError("hyperparameters: temp_ref must be > 0");
  if (!(delta_x >= 0.0)) throw DomainError("hyperparameters: delta_x must be >= 0");
}

void GehlenParameters::validate() const {
  if (!std::isfinite(aging_exponent) || !std::isfinite(d_t) || !std::isfinite(b_e)) {
    throw DomainError("gehlen parameters must be finite");
  }
  if (!(d_t > 0.0)) throw DomainError("gehlen parameters: d_t must be > 0");
  if (!(b_e > 0.0)) throw DomainError("gehlen parameters: b_e must be > 0");
  if (!(aging_exponent > 0.0 && aging_exponent < 1.0)) {
    throw DomainError("gehlen parameters: aging exponent must lie in (0, 1)");
  }
}

void CriticalContent::validate(double c_surface) const {
  if (!(0.0 < lower && lower <= mean && mean <= upper && upper < c_surface)) {
    throw DomainError(
        "critical content must satisfy 0 < lower <= mean <= upper < c_surface");
  }
}

double erf(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  double r;
  if (ax <= 2.0) {
    r = erf_series(ax);
  } else if (ax < 27.0) {
    r = 1.0 - erfc_cf(ax);
  } else {
    r = 1.0;
  }
  return x < 0.0 ? -r : r;
}

double erf_inv(double p) {
  if (!(std::abs(p) < 1.0)) {
    throw DomainError("erf_inv: argument must lie in (-1, 1)");
  }
  if (p == 0.0) return 0.0;

  // Initial guess: Giles (2012) central/tail polynomials, ~1e-7 accurate.
  double w = -std::log((1.0 - p) * (1.0 + p));
  double x;
  if (w < 5.0) {
    w -= 2.5;
    x = 2.81022636e-08;
    x = 3.43273939e-07 + x * w;
    x = -3.5233877e-06 + x * w;
    x = -4.39150654e-06 + x * w;
    x = 0.00021858087 + x * w;
    x = -0.00125372503 + x * w;
    x = -0.00417768164 + x * w;
    x = 0.246640727 + x * w;
    x = 1.50140941 + x * w;
  } else {
    w = std::sqrt(w) - 3.0;
    x = -0.000200214257;
    x = 0.000100950558 + x * w;
    x = 0.00134934322 + x * w;
    x = -0.00367342844 + x * w;
    x = 0.00573950773 + x * w;
    x = -0.0076224613 + x * w;
    x = 0.00943887047 + x * w;
    x = 1.00167406 + x * w;
    x = 2.83297682 + x * w;
  }
  x *= p;

  // Two Newton refinements take the forward residual below 1e-12.
  for (int i = 0; i < 2; ++i) {
    const double err = erf(x) - p;
    x -= err / (kTwoOverSqrtPi * std::exp(-x * x));
  }
  return x;
}

double effective_diffusion(const GehlenParameters& params,
                           const ModelHyperparameters& hyper,
                           double t, double temp) {
  if (!(t > 0.0)) throw DomainError("effective_diffusion: t must be > 0");
  if (!(temp > 0.0)) throw DomainError("effective_diffusion: temp must be > 0");
  const double k_e = std::exp(params.b_e * (1.0 / hyper.temp_ref - 1.0 / temp));
  const double aging = std::pow(hyper.t_ref_age / t, params.aging_exponent);
  return k_e * params.d_t * aging;
}

double concentration_with_d(double x, double t, double d_eff,
                            const ModelHyperparameters& hyper) {
  if (x < hyper.delta_x) {
    throw DomainError("concentration: depth inside the convection zone (x < delta_x)");
  }
  if (!(t > 0.0)) throw DomainError("concentration: t must be > 0");
  const double xi = (x - hyper.delta_x) / (2.0 * std::sqrt(d_eff * t));
  return hyper.c_surface * (1.0 - erf(xi));
}

double concentration(double x, double t,
                     const GehlenParameters& params,
                     const ModelHyperparameters& hyper,
                     double temp) {
  return concentration_with_d(x, t, effective_diffusion(params, hyper, t, temp),
                              hyper);
}

double depth_of_content_with_d(double c_target, double t, double d_eff,
                               const ModelHyperparameters& hyper) {
  if (!(c_target > 0.0 && c_target < hyper.c_surface)) {
    throw DomainError("depth_of_content: target content must lie in (0, c_surface)");
  }
  if (!(t > 0.0)) throw DomainError("depth_of_content: t must be > 0");
  const double k = erf_inv(1.0 - c_target / hyper.c_surface);
  return hyper.delta_x + 2.0 * k * std::sqrt(d_eff * t);
}

double depth_of_content(double c_target, double t,
                        const GehlenParameters& params,
                        const ModelHyperparameters& hyper,
                        double temp) {
  return depth_of_content_with_d(
      c_target, t, effective_diffusion(params, hyper, t, temp), hyper);
}

double nacl_mass_fraction_to_chloride(double w, double solution_density) {
  constexpr double kSaturation = 0.26;
  if (!(w >= 0.0 && w < kSaturation)) {
    throw DomainError("nacl_mass_fraction_to_chloride: w outside [0, 0.26)");
  }
  if (!(solution_density > 0.0)) {
    throw DomainError("nacl_mass_fraction_to_chloride: density must be > 0");
  }
  constexpr double kMolarMassCl = 35.45;    // g/mol
  constexpr double kMolarMassNaCl = 58.44;  // g/mol
  return w * solution_density * (kMolarMassCl / kMolarMassNaCl);
}

double mass_percent_to_kg_per_m3(double m_pct, double cement_content) {
  if (!(m_pct >= 0.0)) throw DomainError("mass_percent_to_kg_per_m3: m_pct must be >= 0");
  if (!(cement_content > 0.0)) {
    throw DomainError("mass_percent_to_kg_per_m3: cement content must be > 0");
  }
  return m_pct / 100.0 * cement_content;
}

}  // namespace corrocal
