#pragma once

#include <vector>

#include "corrocal/errors.hpp"

namespace corrocal {

struct ProfileLayer {
  double depth = 0.0;     // layer midpoint [m]
  double chloride = 0.0;  // [kg/m^3]
};

// A drilling-dust chloride depth profile. Contents given in M% are converted
// to kg/m^3 with the cement content before fitting.
struct ChlorideProfile {
  std::vector<ProfileLayer> layers;   // depths strictly increasing
  double exposure_age = 0.0;          // [s]
  double exclusion_depth = 0.0;       // layers at or above this depth ignored [m]
  double cement_content = 270.0;      // [kg/m^3], for M% conversion

  void validate() const;
};

struct ProfileFitResult {
  double c_s = 0.0;        // fitted surface concentration [kg/m^3]
  double d_eff = 0.0;      // fitted diffusion coefficient [m^2/s]
  double r_squared = 0.0;
  int n_used = 0;
};

// Least-squares fit of C_S * (1 - erf(x / (2 sqrt(D t)))) to the profile
// layers below the exclusion depth. Gauss-Newton with D in log scale,
// multi-started over four decades. Throws DataError when fewer than 4 layers
// survive exclusion, FitError on an unidentifiable (constant) profile.
ProfileFitResult fit_profile(const ChlorideProfile& profile);

}  // namespace corrocal
