#include <doctest.h>

#include <cmath>
#include <map>

#include "frameopt/errors.hpp"
#include "frameopt/simulate.hpp"
#include "support/test_support.hpp"

using namespace frameopt;
using namespace frameopt::testing;

namespace {

ProbabilityModel uniform_model(int big, int n) {
  return weights_from_probabilities(RealVec::Constant(big, 1.0 / big), n);
}

}  // namespace

TEST_CASE("simulation is reproducible bit for bit") {
  SplitMix64 rng(61);
  Frame f = random_frame(rng, 2, 4);
  Frame g = canonical_dual(f);
  ProbabilityModel model =
      weights_from_probabilities(random_probabilities(rng, 4), 2);
  SimConfig cfg;
  cfg.seed = 99;
  cfg.trials = 500;
  cfg.m = 2;
  SimReport a = simulate(f, g, model, cfg);
  SimReport b = simulate(f, g, model, cfg);
  CHECK(a.empirical_max == b.empirical_max);
  CHECK(a.empirical_mean == b.empirical_mean);
  CHECK(a.attainment == b.attainment);
  REQUIRE(a.pattern_hits.size() == b.pattern_hits.size());
  for (std::size_t i = 0; i < a.pattern_hits.size(); ++i) {
    CHECK(a.pattern_hits[i].pattern == b.pattern_hits[i].pattern);
    CHECK(a.pattern_hits[i].count == b.pattern_hits[i].count);
  }

  SimConfig other = cfg;
  other.seed = 100;
  SimReport c = simulate(f, g, model, other);
  CHECK(c.empirical_max != a.empirical_max);
}

TEST_CASE("no sample ever exceeds the worst-case bound") {
  SplitMix64 rng(62);
  for (int rep = 0; rep < 3; ++rep) {
    Frame f = random_frame(rng, 2, 4);
    Frame g = random_dual(rng, f);
    ProbabilityModel model =
        weights_from_probabilities(random_probabilities(rng, 4), 2);
    for (int m : {1, 2}) {
      SimConfig cfg;
      cfg.seed = 7 * rep + m;
      cfg.trials = 2000;
      cfg.m = m;
      SimReport sim = simulate(f, g, model, cfg);
      CHECK(sim.bound == doctest::Approx(
          measure_O(f, g, model, m).value).epsilon(1e-12));
      CHECK(sim.empirical_max <= sim.bound * (1 + 1e-12));
      CHECK(sim.empirical_mean <= sim.empirical_max);
      CHECK(sim.attainment == doctest::Approx(
          sim.empirical_max / sim.bound).epsilon(1e-12));
    }
  }
}

TEST_CASE("pattern sampling follows the probabilities") {
  // One erasure: hit counts converge to p_i. Use a skewed model and a loose
  // 4-sigma gate per index.
  Frame f = real_frame({{1, 0}, {1, 1}, {0, 1}});
  Frame g = canonical_dual(f);
  ProbabilityModel model =
      weights_from_probabilities(real_vec({0.6, 0.3, 0.1}), 2);
  SimConfig cfg;
  cfg.seed = 5;
  cfg.trials = 40000;
  SimReport sim = simulate(f, g, model, cfg);
  std::map<int, long> hits;
  for (const PatternCount& pc : sim.pattern_hits) {
    REQUIRE(pc.pattern.size() == 1);
    hits[pc.pattern[0]] = pc.count;
  }
  long total = 0;
  for (auto& [idx, count] : hits) total += count;
  CHECK(total == cfg.trials);
  for (int i = 0; i < 3; ++i) {
    double p = model.p(i);
    double sigma = std::sqrt(p * (1 - p) * cfg.trials);
    CHECK(std::abs(hits[i] - p * cfg.trials) < 4 * sigma);
  }
}

TEST_CASE("zero-probability vectors are never sampled alone but can fill a pattern") {
  Frame f = real_frame({{1, 0}, {0, 1}, {1, 1}});
  Frame g = canonical_dual(f);
  ProbabilityModel model =
      weights_from_probabilities(real_vec({0.0, 0.5, 0.5}), 2);
  SimConfig one;
  one.seed = 1;
  one.trials = 3000;
  SimReport sim1 = simulate(f, g, model, one);
  for (const PatternCount& pc : sim1.pattern_hits)
    CHECK(pc.pattern != ErasurePattern{0});

  // With m = N every pattern is the full set regardless of weights.
  SimConfig all = one;
  all.m = 3;
  SimReport sim3 = simulate(f, g, model, all);
  REQUIRE(sim3.pattern_hits.size() == 1);
  CHECK(sim3.pattern_hits[0].pattern == ErasurePattern{0, 1, 2});
  CHECK(sim3.pattern_hits[0].count == all.trials);
}

TEST_CASE("unweighted mode bounds by the plain operator norm") {
  SplitMix64 rng(63);
  Frame f = random_frame(rng, 2, 4);
  Frame g = random_dual(rng, f);
  ProbabilityModel model =
      weights_from_probabilities(random_probabilities(rng, 4), 2);
  SimConfig cfg;
  cfg.weighted = false;
  cfg.trials = 1000;
  cfg.seed = 3;
  SimReport sim = simulate(f, g, model, cfg);
  double want =
      measure_with_weights(f, g, RealVec::Ones(4), 1, MeasureKind::O).value;
  CHECK(sim.bound == doctest::Approx(want).epsilon(1e-12));
  CHECK(sim.empirical_max <= sim.bound * (1 + 1e-12));
}

TEST_CASE("simulation validates inputs") {
  Frame f = real_frame({{1, 0}, {1, 1}, {0, 1}});
  ProbabilityModel model = uniform_model(3, 2);
  SimConfig cfg;
  CHECK_THROWS_AS(simulate(f, f, model, cfg), NotDualError);
  Frame g = canonical_dual(f);
  SimConfig bad_m = cfg;
  bad_m.m = 4;
  CHECK_THROWS_AS(simulate(f, g, model, bad_m), BadMultiplicityError);
  SimConfig bad_trials = cfg;
  bad_trials.trials = 0;
  CHECK_THROWS_AS(simulate(f, g, model, bad_trials), DimensionMismatchError);
}

TEST_CASE("attainment approaches one on a frame whose bound is achievable") {
  // Orthonormal basis plus repeat: the worst pattern {0} is sampled often and
  // the maximizing signal direction is e_1, hit with positive density.
  Frame f = real_frame({{1, 0}, {0, 1}, {0, 1}});
  Frame g = canonical_dual(f);
  ProbabilityModel model =
      weights_from_probabilities(real_vec({0.4, 0.3, 0.3}), 2);
  SimConfig cfg;
  cfg.seed = 11;
  cfg.trials = 20000;
  SimReport sim = simulate(f, g, model, cfg);
  CHECK(sim.attainment > 0.95);
  CHECK(sim.attainment <= 1.0 + 1e-12);
}
