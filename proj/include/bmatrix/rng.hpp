#pragma once

#include <cstdint>
#include <random>

namespace bmatrix {

using Rng = std::mt19937_64;

// Independent stream for one trial, a function of (master_seed, trial) only.
inline Rng trial_stream(std::uint64_t master_seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32), 0x424d5458u};
  return Rng(seq);
}

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
inline double unit_uniform(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace bmatrix
