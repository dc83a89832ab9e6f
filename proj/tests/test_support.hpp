#pragma once

#include <complex>
#include <numbers>
#include <random>

#include "wco/polynomial.hpp"

namespace wco::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed1234);
  return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// Uniform in the disc |z| <= r.
inline cplx disc_point(double r = 0.95) {
  return std::polar(r * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi));
}

}  // namespace wco::testing
