#pragma once

#include <utility>
#include <vector>

#include "frameopt/errors.hpp"
#include "frameopt/types.hpp"

namespace frameopt {

// S_F = sum_i f_i f_i^* as a Hermitian matrix. Throws RankDeficientError if
// the smallest eigenvalue falls below the relative rank cutoff.
Mat frame_operator(const Frame& f, const Tolerances& tol = {});

// Optimal frame bounds (A, B): the extreme eigenvalues of S_F.
std::pair<double, double> frame_bounds(const Frame& f,
                                       const Tolerances& tol = {});

// Canonical dual frame {S_F^{-1} f_i}.
Frame canonical_dual(const Frame& f, const Tolerances& tol = {});

// True iff T_G T_F^H = I within tol.base (max norm) and the trace identity
// sum_i <g_i, f_i> = n holds within the same tolerance.
bool is_dual(const Frame& f, const Frame& g, const Tolerances& tol = {});

// Frame {U f_i}. Throws NotUnitaryError if U^H U differs from I by more than
// tol.base in max norm.
Frame apply_unitary(const Frame& f, const Mat& u, const Tolerances& tol = {});

// Affine parameterization of all duals of F: every dual has synthesis
// base + sum_k c_k basis[k] with complex coefficients c, and every such
// combination is a dual. basis[m*n + j] places the conjugate of null space
// vector k_m into row j; dof() = n * (N - n).
struct DualParameterization {
  Frame base;                // canonical dual
  Mat null_basis;            // N x (N - n), orthonormal columns spanning ker T_F
  std::vector<Mat> basis;    // n x N perturbation directions, Frobenius-orthonormal
  int rank = 0;

  int dof() const { return static_cast<int>(basis.size()); }
};

DualParameterization dual_space(const Frame& f, const Tolerances& tol = {});

// base + sum_k coeffs[k] basis[k]. Throws DimensionMismatchError unless
// coeffs.size() == dof().
Frame dual_from_params(const DualParameterization& p, const Vec& coeffs);

// Coefficients c with dual_from_params(p, c) == g, valid whenever g is a dual
// of the frame p was derived from. Throws NotDualError if g lies outside the
// affine family by more than tol.base.
Vec coefficients_for_dual(const DualParameterization& p, const Frame& g,
                          const Tolerances& tol = {});

}  // namespace frameopt
