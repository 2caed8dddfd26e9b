#pragma once

#include <array>

#include "corrocal/errors.hpp"

namespace corrocal {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Expert-defined search bounds for the Gehlen parameter triple.
struct ParameterBounds {
  Interval a{0.1, 0.9};
  Interval d_t{1e-12, 30e-12};
  Interval b_e{1000.0, 5200.0};

  // lo == hi is allowed: it pins the parameter (dimensionality reduction).
  void validate() const {
    for (const Interval& iv : {a, d_t, b_e}) {
      if (!(iv.lo <= iv.hi)) {
        throw ConfigError("parameter bounds must satisfy lo <= hi componentwise");
      }
    }
  }
};

}  // namespace corrocal
