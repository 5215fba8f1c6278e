#pragma once

#include "frameopt/types.hpp"

namespace frameopt {

// Erasure probabilities p_1..p_N together with the derived weight numbers
// q_i = (sum_j p_j / (sum_j p_j - p_i)) * (N - 1) / n.
// The weights satisfy sum_i 1/q_i = n and inherit the ordering of p.
struct ProbabilityModel {
  RealVec p;
  RealVec q;
  int dim = 0;  // ambient dimension n the weights were computed for
  // True when some q_i < 1, which can happen only for N == n. Such models
  // are legal but admit no probability uniform Parseval frame.
  bool sub_unit_weight = false;

  int size() const { return static_cast<int>(p.size()); }
};

// Validates p (each p_i in [0,1), sum within norm_tol of 1, N >= n) and
// computes the weight numbers. Throws DegenerateProbabilityError,
// NotNormalizedError, or DimensionMismatchError.
ProbabilityModel weights_from_probabilities(const RealVec& p, int n,
                                            double norm_tol = 1e-12);

}  // namespace frameopt
