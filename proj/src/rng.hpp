#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

#include "frameopt/types.hpp"

namespace frameopt::detail {

inline std::uint64_t splitmix_scramble(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// splitmix64 stream; `stream_index` decorrelates per-trial and per-restart
// streams derived from one user seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed, std::uint64_t stream_index = 0)
      : state_(splitmix_scramble(
            seed ^ splitmix_scramble(stream_index * 0x9E3779B97F4A7C15ULL +
                                     0xD1B54A32D192ED03ULL))) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix_scramble(state_);
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Box-Muller pair of independent standard normals.
  std::pair<double, double> gaussian_pair() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(th), r * std::sin(th)};
  }

  double gaussian() { return gaussian_pair().first; }

  // Standard complex normal, E|z|^2 = 1.
  Complex complex_gaussian() {
    auto [a, b] = gaussian_pair();
    return Complex(a, b) / std::sqrt(2.0);
  }

 private:
  std::uint64_t state_;
};

}  // namespace frameopt::detail
