#pragma once

#include <cstdint>
#include <vector>

#include "corrocal/errors.hpp"

namespace corrocal {

// Low-discrepancy Sobol points in [0,1)^dims, direct (index-binary) ordering.
// Direction numbers from the Joe-Kuo table; supports up to 8 dimensions,
// which covers the Saltelli design for the 3-parameter model (2d = 6).
// seed != 0 applies a deterministic digital shift (XOR scrambling) per
// dimension. Throws ConfigError when n is not a power of two.
std::vector<std::vector<double>> sobol_matrix(std::size_t n, int dims,
                                              std::uint64_t seed = 0);

bool is_power_of_two(std::size_t n);

}  // namespace corrocal
