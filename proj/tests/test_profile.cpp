#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "corrocal/model.hpp"
#include "corrocal/profile_fit.hpp"

using namespace corrocal;

namespace {

constexpr double kYear = 3.15576e7;

ChlorideProfile make_profile(double c_s, double d_eff, double age_years,
                             int n_layers = 12, double spacing = 0.004) {
  ChlorideProfile profile;
  profile.exposure_age = age_years * kYear;
  const double denom = 2.0 * std::sqrt(d_eff * profile.exposure_age);
  for (int i = 0; i < n_layers; ++i) {
    const double x = (i + 0.5) * spacing;
    profile.layers.push_back({x, c_s * (1.0 - corrocal::erf(x / denom))});
  }
  return profile;
}

}  // namespace

TEST_CASE("noiseless profile is recovered to a fraction of a percent") {
  const double c_s = 14.2;
  const double d_eff = 0.6e-12;
  const auto profile = make_profile(c_s, d_eff, 17.0);
  const ProfileFitResult fit = fit_profile(profile);
  CHECK(std::abs(fit.c_s - c_s) <= 0.005 * c_s);
  CHECK(std::abs(fit.d_eff - d_eff) <= 0.005 * d_eff);
  CHECK(fit.r_squared > 0.9999);
  CHECK(fit.n_used == 12);
}

TEST_CASE("recovery works across the parameter range") {
  for (double c_s : {5.0, 14.2, 25.0}) {
    for (double d_eff : {0.1e-12, 0.6e-12, 5e-12}) {
      const auto profile = make_profile(c_s, d_eff, 10.0);
      const ProfileFitResult fit = fit_profile(profile);
      CHECK(std::abs(fit.c_s - c_s) <= 0.005 * c_s);
      CHECK(std::abs(fit.d_eff - d_eff) <= 0.005 * d_eff);
    }
  }
}

TEST_CASE("noisy profiles stay within ten percent in the median") {
  const double c_s = 14.2;
  const double d_eff = 0.6e-12;
  std::vector<double> cs_err, d_err;
  int good_r2 = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto profile = make_profile(c_s, d_eff, 17.0);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 0.05);
    for (auto& layer : profile.layers) {
      layer.chloride = std::max(0.0, layer.chloride * (1.0 + noise(rng)));
    }
    const ProfileFitResult fit = fit_profile(profile);
    cs_err.push_back(std::abs(fit.c_s - c_s) / c_s);
    d_err.push_back(std::abs(fit.d_eff - d_eff) / d_eff);
    if (fit.r_squared > 0.9) ++good_r2;
  }
  std::sort(cs_err.begin(), cs_err.end());
  std::sort(d_err.begin(), d_err.end());
  CHECK(cs_err[50] <= 0.10);
  CHECK(d_err[50] <= 0.10);
  // 5 % multiplicative noise barely dents the fit quality
  CHECK(good_r2 >= 95);
}

TEST_CASE("exclusion depth drops shallow layers") {
  auto profile = make_profile(14.2, 0.6e-12, 17.0);
  profile.exclusion_depth = 0.011;  // removes the midpoints at 2, 6 and 10 mm
  const ProfileFitResult fit = fit_profile(profile);
  CHECK(fit.n_used == 9);
  CHECK(std::abs(fit.c_s - 14.2) <= 0.01 * 14.2);

  // disturbed convection zone: corrupt the shallow layers, exclude them
  auto disturbed = make_profile(14.2, 0.6e-12, 17.0);
  disturbed.layers[0].chloride *= 0.4;
  disturbed.layers[1].chloride *= 0.7;
  disturbed.exclusion_depth = 0.011;
  const ProfileFitResult fit2 = fit_profile(disturbed);
  CHECK(std::abs(fit2.c_s - 14.2) <= 0.01 * 14.2);
  CHECK(std::abs(fit2.d_eff - 0.6e-12) <= 0.01 * 0.6e-12);
}

TEST_CASE("degenerate inputs are rejected") {
  // too few layers after exclusion
  auto profile = make_profile(14.2, 0.6e-12, 17.0, 5);
  profile.exclusion_depth = 0.01;
  CHECK_THROWS_AS(fit_profile(profile), DataError);
  CHECK_THROWS_AS(fit_profile(make_profile(14.2, 0.6e-12, 17.0, 3)), DataError);

  // constant profile
  ChlorideProfile flat;
  flat.exposure_age = 10 * kYear;
  for (int i = 0; i < 8; ++i) flat.layers.push_back({0.004 * (i + 1), 3.0});
  CHECK_THROWS_AS(fit_profile(flat), FitError);

  // invalid structure
  ChlorideProfile bad = make_profile(14.2, 0.6e-12, 17.0);
  bad.exposure_age = 0.0;
  CHECK_THROWS_AS(fit_profile(bad), DomainError);
  ChlorideProfile unsorted = make_profile(14.2, 0.6e-12, 17.0);
  std::swap(unsorted.layers[2], unsorted.layers[3]);
  CHECK_THROWS_AS(fit_profile(unsorted), DomainError);
  ChlorideProfile negative = make_profile(14.2, 0.6e-12, 17.0);
  negative.layers[4].chloride = -0.1;
  CHECK_THROWS_AS(fit_profile(negative), DomainError);
}
