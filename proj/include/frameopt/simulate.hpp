#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frameopt/erasure.hpp"

namespace frameopt {

struct SimConfig {
  std::uint64_t seed = 0;
  long trials = 10000;
  int signals = 1;  // unit-norm random signals per sampled pattern
  int m = 1;
  bool weighted = true;  // false: unweighted reconstruction error (q = 1)
};

struct PatternCount {
  ErasurePattern pattern;
  long count = 0;
};

struct SimReport {
  SimConfig config;
  std::string prng = "splitmix64";
  double empirical_max = 0;
  double empirical_mean = 0;
  double bound = 0;        // worst-case measure the samples must stay under
  double attainment = 0;   // empirical_max / bound
  std::vector<PatternCount> pattern_hits;  // lex order
};

// Monte Carlo erasure run: per trial, sample a size-m pattern (sequential
// draws weighted by p without replacement; zero remaining mass falls back to
// uniform) and unit-norm complex Gaussian signals, and record ||E x||. Each
// trial consumes an independent splitmix64 stream derived from (seed, trial),
// so reports are reproducible bit for bit and independent of scheduling.
SimReport simulate(const Frame& f, const Frame& g, const ProbabilityModel& m,
                   const SimConfig& cfg, const Tolerances& tol = {});

}  // namespace frameopt
