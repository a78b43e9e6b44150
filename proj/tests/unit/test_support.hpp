#pragma once

// Shared helpers for the unit tests: a seeded generator and tolerance checks.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "heislor/group.hpp"

namespace heislor::testing {

/// Deterministic uniform generator; every property test names its own seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

 private:
  std::mt19937_64 engine_;
};

inline ::testing::AssertionResult near_point(const GroupElement& a, const GroupElement& b, double tol) {
  const double d = max_norm_distance(a, b);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "(" << a.x << ", " << a.y << ", " << a.z << ") vs (" << b.x << ", " << b.y
                                       << ", " << b.z << "): max-norm distance " << d << " > " << tol;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace heislor::testing
