#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "frameopt/errors.hpp"
#include "frameopt/frame.hpp"
#include "support/test_support.hpp"

using namespace frameopt;
using namespace frameopt::testing;

TEST_CASE("frame construction validates shape and rank") {
  CHECK_THROWS_AS(Frame(Mat::Zero(3, 2)), DimensionMismatchError);
  Mat degenerate(2, 3);
  degenerate.setZero();
  degenerate(0, 0) = 1;
  degenerate(0, 1) = 2;
  degenerate(0, 2) = 3;
  Frame f(degenerate);  // construction defers the rank check
  CHECK_THROWS_AS(frame_operator(f), RankDeficientError);
  CHECK_THROWS_AS(canonical_dual(f), RankDeficientError);
}

TEST_CASE("frame operator and bounds on a known frame") {
  // Columns (1,0),(1,1),(0,1): S = [[2,1],[1,2]], eigenvalues 1 and 3.
  Frame f = real_frame({{1, 0}, {1, 1}, {0, 1}});
  Mat s = frame_operator(f);
  CHECK(std::abs(s(0, 0) - Complex(2, 0)) < 1e-14);
  CHECK(std::abs(s(0, 1) - Complex(1, 0)) < 1e-14);
  CHECK(std::abs(s(1, 1) - Complex(2, 0)) < 1e-14);
  auto [a, b] = frame_bounds(f);
  CHECK(a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("canonical dual is dual and minimizes Frobenius norm") {
  SplitMix64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 2 + static_cast<int>(rng.next() % 3);       // 2..4
    int big = n + static_cast<int>(rng.next() % 3);     // n..n+2
    Frame f = random_frame(rng, n, big);
    Frame g = canonical_dual(f);
    CHECK(is_dual(f, g));
    // T_G T_F^H = I restated directly.
    Mat prod = g.synthesis * f.synthesis.adjoint();
    CHECK(max_diff(prod, Mat::Identity(n, n)) < 1e-10);
    // Trace identity: sum of <g_i, f_i> equals the dimension.
    Complex tr = 0;
    for (int i = 0; i < big; ++i) tr += inner(g.vector(i), f.vector(i));
    CHECK(std::abs(tr - Complex(n, 0)) < 1e-10);
    if (big > n) {
      Frame other = random_dual(rng, f);
      CHECK(is_dual(f, other));
      CHECK(g.synthesis.norm() <= other.synthesis.norm() + 1e-12);
    }
  }
}

TEST_CASE("is_dual rejects non-duals and mismatched shapes") {
  Frame f = real_frame({{1, 0}, {1, 1}, {0, 1}});
  CHECK_FALSE(is_dual(f, f));
  Frame small = real_frame({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(is_dual(f, small), DimensionMismatchError);
}

TEST_CASE("dual parameterization spans exactly the duals") {
  SplitMix64 rng(12);
  for (int rep = 0; rep < 10; ++rep) {
    int n = 2 + static_cast<int>(rng.next() % 2);
    int big = n + 1 + static_cast<int>(rng.next() % 2);
    Frame f = random_frame(rng, n, big);
    DualParameterization p = dual_space(f);
    CHECK(p.rank == n);
    CHECK(p.dof() == n * (big - n));
    CHECK(static_cast<int>(p.basis.size()) == p.dof());

    // Null basis columns are orthonormal and killed by the synthesis map.
    Mat k = p.null_basis;
    CHECK(max_diff(k.adjoint() * k, Mat::Identity(big - n, big - n)) < 1e-12);
    CHECK((f.synthesis * k).cwiseAbs().maxCoeff() < 1e-12);

    // Basis elements are Frobenius-orthonormal perturbation directions.
    for (std::size_t a = 0; a < p.basis.size(); ++a)
      for (std::size_t b = a; b < p.basis.size(); ++b) {
        Complex dot = (p.basis[b].conjugate().cwiseProduct(p.basis[a])).sum();
        double want = a == b ? 1.0 : 0.0;
        CHECK(std::abs(dot - Complex(want, 0)) < 1e-12);
      }

    Vec coeffs(p.dof());
    for (int i = 0; i < p.dof(); ++i) coeffs(i) = rng.complex_gaussian();
    Frame g = dual_from_params(p, coeffs);
    CHECK(is_dual(f, g));
    Vec back = coefficients_for_dual(p, g);
    CHECK((back - coeffs).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("coefficients_for_dual rejects a non-dual") {
  Frame f = real_frame({{1, 0}, {1, 1}, {0, 1}});
  DualParameterization p = dual_space(f);
  CHECK_THROWS_AS(coefficients_for_dual(p, f), NotDualError);
}

TEST_CASE("dual space of a basis has zero degrees of freedom") {
  Frame f = real_frame({{2, 0}, {1, 1}});
  DualParameterization p = dual_space(f);
  CHECK(p.dof() == 0);
  Frame g = dual_from_params(p, Vec(0));
  CHECK(max_diff(g.synthesis, canonical_dual(f).synthesis) < 1e-12);
}

TEST_CASE("apply_unitary conjugates the frame and validates unitarity") {
  SplitMix64 rng(13);
  Frame f = random_frame(rng, 3, 5);
  Mat u = random_unitary(rng, 3);
  Frame uf = apply_unitary(f, u);
  CHECK(max_diff(uf.synthesis, u * f.synthesis) == 0.0);
  Mat not_u = u;
  not_u(0, 0) += 0.1;
  CHECK_THROWS_AS(apply_unitary(f, not_u), NotUnitaryError);
  CHECK_THROWS_AS(apply_unitary(f, Mat::Identity(2, 2)), DimensionMismatchError);
}

TEST_CASE("tolerances honor FRAMEOPT_TOL") {
  ::setenv("FRAMEOPT_TOL", "1e-6", 1);
  Tolerances t = Tolerances::from_env();
  CHECK(t.base == doctest::Approx(1e-6));
  ::setenv("FRAMEOPT_TOL", "garbage", 1);
  Tolerances fallback = Tolerances::from_env();
  CHECK(fallback.base == doctest::Approx(1e-10));
  ::unsetenv("FRAMEOPT_TOL");
  Tolerances plain = Tolerances::from_env();
  CHECK(plain.base == doctest::Approx(1e-10));
}
