#include <doctest.h>

#include <cmath>

#include "frameopt/errors.hpp"
#include "frameopt/probability.hpp"
#include "support/test_support.hpp"

using namespace frameopt;
using namespace frameopt::testing;

TEST_CASE("uniform probabilities give the flat weight") {
  RealVec p = RealVec::Constant(4, 0.25);
  ProbabilityModel model = weights_from_probabilities(p, 2);
  // q_i = (1/(1 - 1/N)) (N-1)/n = N/n when p is uniform.
  for (int i = 0; i < 4; ++i)
    CHECK(model.q(i) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_FALSE(model.sub_unit_weight);
}

TEST_CASE("golden weights for a skewed distribution") {
  // p = (1/2, 1/4, 1/4), n = 2: q_i = (1/(1-p_i)) (3-1)/2 = 1/(1-p_i).
  ProbabilityModel model =
      weights_from_probabilities(real_vec({0.5, 0.25, 0.25}), 2);
  CHECK(model.q(0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(model.q(1) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(model.q(2) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("weight reciprocals always sum to the dimension") {
  SplitMix64 rng(21);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 1 + static_cast<int>(rng.next() % 4);
    int big = n + static_cast<int>(rng.next() % 5);
    if (big == n && n == 1) big = 2;  // N = n = 1 forces p = (1), degenerate
    RealVec p = random_probabilities(rng, big);
    ProbabilityModel model = weights_from_probabilities(p, n);
    double recip = 0;
    for (int i = 0; i < big; ++i) recip += 1.0 / model.q(i);
    CHECK(recip == doctest::Approx(n).epsilon(1e-12));
  }
}

TEST_CASE("weights are monotone in the probabilities") {
  SplitMix64 rng(22);
  for (int rep = 0; rep < 20; ++rep) {
    int big = 3 + static_cast<int>(rng.next() % 4);
    RealVec p = random_probabilities(rng, big);
    ProbabilityModel model = weights_from_probabilities(p, 2);
    for (int i = 0; i < big; ++i)
      for (int j = 0; j < big; ++j)
        if (p(i) < p(j)) CHECK(model.q(i) <= model.q(j) + 1e-14);
  }
}

TEST_CASE("sub-unit weights only occur for bases and raise the flag") {
  // N = n = 2 with a skewed p: q_i = (1/(1-p_i))/2 < 1 for the small entry.
  ProbabilityModel basis = weights_from_probabilities(real_vec({0.8, 0.2}), 2);
  CHECK(basis.sub_unit_weight);
  CHECK(basis.q.minCoeff() < 1.0);

  SplitMix64 rng(23);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 1 + static_cast<int>(rng.next() % 3);
    int big = n + 1 + static_cast<int>(rng.next() % 4);  // strictly redundant
    ProbabilityModel m =
        weights_from_probabilities(random_probabilities(rng, big), n);
    CHECK(m.q.minCoeff() >= 1.0 - 1e-12);
    CHECK_FALSE(m.sub_unit_weight);
  }
}

TEST_CASE("validation failures") {
  CHECK_THROWS_AS(weights_from_probabilities(real_vec({1.0, 0.0}), 1),
                  DegenerateProbabilityError);
  CHECK_THROWS_AS(weights_from_probabilities(real_vec({0.7, 0.2}), 2),
                  NotNormalizedError);
  CHECK_THROWS_AS(weights_from_probabilities(real_vec({1.2, -0.2}), 2),
                  DegenerateProbabilityError);
  CHECK_THROWS_AS(weights_from_probabilities(real_vec({0.5, 0.5}), 3),
                  DimensionMismatchError);
  CHECK_THROWS_AS(weights_from_probabilities(real_vec({0.5, 0.5}), 0),
                  DimensionMismatchError);
}

TEST_CASE("zero probabilities are allowed") {
  ProbabilityModel model =
      weights_from_probabilities(real_vec({0.0, 0.5, 0.5}), 2);
  CHECK(model.q(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(model.q(1) == doctest::Approx(2.0).epsilon(1e-14));
}
