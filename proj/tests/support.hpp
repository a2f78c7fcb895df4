#pragma once

#include <random>
#include <vector>

#include "bmatrix/hebbian.hpp"
#include "oracles.hpp"

namespace testing_support {

inline bmatrix::BipolarVector to_bipolar(const oracle::Pattern& p) {
  return bmatrix::BipolarVector(std::vector<bmatrix::Sign>(p.begin(), p.end()));
}

inline oracle::Pattern to_pattern(const bmatrix::BipolarVector& v) {
  return oracle::Pattern(v.values().begin(), v.values().end());
}

inline std::vector<bmatrix::BipolarVector> random_bipolar(std::size_t n, std::size_t count,
                                                          std::mt19937& rng) {
  std::vector<bmatrix::BipolarVector> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(to_bipolar(oracle::random_pattern(n, rng)));
  return out;
}

inline std::vector<oracle::Pattern> to_patterns(const std::vector<bmatrix::BipolarVector>& v) {
  std::vector<oracle::Pattern> out;
  for (const auto& x : v) out.push_back(to_pattern(x));
  return out;
}

}  // namespace testing_support
