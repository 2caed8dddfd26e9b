#include "corrocal/sobol.hpp"

#include <random>

namespace corrocal {

namespace {

constexpr int kBits = 32;

struct JoeKuoEntry {
  int s;
  int a;
  std::uint32_t m[5];
};

// Dimensions 2..8 of the new-joe-kuo-6 table; dimension 1 is van der Corput.
constexpr JoeKuoEntry kJoeKuo[] = {
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
};

std::vector<std::uint32_t> direction_numbers(int dim) {
  std::vector<std::uint32_t> v(kBits);
  if (dim == 0) {
    for (int j = 0; j < kBits; ++j) v[j] = 1u << (kBits - j - 1);
    return v;
  }
  const JoeKuoEntry& e = kJoeKuo[dim - 1];
  std::vector<std::uint32_t> m(e.m, e.m + e.s);
  m.resize(kBits);
  for (int j = e.s; j < kBits; ++j) {
    std::uint32_t val = m[j - e.s] ^ (m[j - e.s] << e.s);
    for (int k = 1; k < e.s; ++k) {
      if ((e.a >> (e.s - 1 - k)) & 1) val ^= m[j - k] << k;
    }
    m[j] = val;
  }
  for (int j = 0; j < kBits; ++j) v[j] = m[j] << (kBits - j - 1);
  return v;
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::vector<std::vector<double>> sobol_matrix(std::size_t n, int dims,
                                              std::uint64_t seed) {
  if (!is_power_of_two(n)) {
    throw ConfigError("sobol_matrix: sample count must be a power of two");
  }
  if (dims < 1 || dims > 8) {
    throw ConfigError("sobol_matrix: supported dimensions are 1..8");
  }

  std::vector<std::uint32_t> shift(dims, 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < dims; ++k) {
      shift[k] = static_cast<std::uint32_t>(rng() >> 32);
    }
  }

  std::vector<std::vector<std::uint32_t>> V;
  V.reserve(dims);
  for (int k = 0; k < dims; ++k) V.push_back(direction_numbers(k));

  constexpr double kScale = 1.0 / 4294967296.0;  // 2^-32
  std::vector<std::vector<double>> pts(n, std::vector<double>(dims));
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < dims; ++k) {
      std::uint32_t x = 0;
      std::size_t idx = i;
      int j = 0;
      while (idx) {
        if (idx & 1) x ^= V[k][j];
        idx >>= 1;
        ++j;
      }
      pts[i][k] = (x ^ shift[k]) * kScale;
    }
  }
  return pts;
}

}  // namespace corrocal
