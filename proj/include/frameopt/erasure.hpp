#pragma once

#include <string>
#include <vector>

#include "frameopt/probability.hpp"
#include "frameopt/types.hpp"

namespace frameopt {

// Erasure pattern: strictly increasing 0-based vector indices.
using ErasurePattern = std::vector<int>;

struct ErrorOperator {
  Mat matrix;
  ErasurePattern pattern;
};

enum class MeasureKind { O, R, A };

std::string measure_name(MeasureKind k);

// E = sum_{i in pattern} q_i g_i f_i^*. The empty pattern gives the zero
// matrix. Weights are taken from the model; weight overrides (e.g. the
// unweighted simulator mode) pass q explicitly.
ErrorOperator error_operator(const Frame& f, const Frame& g,
                             const ProbabilityModel& m,
                             const ErasurePattern& pattern);
ErrorOperator error_operator_weighted(const Frame& f, const Frame& g,
                                      const RealVec& q,
                                      const ErasurePattern& pattern);

// Largest singular value.
double operator_norm(const Mat& m);

// Largest eigenvalue modulus. For an ErrorOperator the eigenvalues are taken
// from the m x m reduction Q F_L^H G_L when that is smaller than n x n.
double spectral_radius(const Mat& m);
double spectral_radius(const Frame& f, const Frame& g, const RealVec& q,
                       const ErasurePattern& pattern);

struct PatternValue {
  ErasurePattern pattern;
  double norm;  // operator norm of E
  double rho;   // spectral radius of E
};

struct MeasureReport {
  MeasureKind kind = MeasureKind::A;
  int m = 1;
  double value = 0;
  std::vector<ErasurePattern> argmax;      // ties within tol.tie_rel, lex order
  std::vector<PatternValue> per_pattern;   // all C(N, m) patterns, lex order
};

// Worst case over all patterns of size m of: the operator norm (O), the
// spectral radius (R), or their average per pattern (A). Patterns are
// enumerated lexicographically; 1 <= m <= N or BadMultiplicityError.
MeasureReport measure(const Frame& f, const Frame& g,
                      const ProbabilityModel& model, int m, MeasureKind kind,
                      const Tolerances& tol = {});
MeasureReport measure_with_weights(const Frame& f, const Frame& g,
                                   const RealVec& q, int m, MeasureKind kind,
                                   const Tolerances& tol = {});

MeasureReport measure_O(const Frame& f, const Frame& g,
                        const ProbabilityModel& m, int mult,
                        const Tolerances& tol = {});
MeasureReport measure_r(const Frame& f, const Frame& g,
                        const ProbabilityModel& m, int mult,
                        const Tolerances& tol = {});
MeasureReport measure_A(const Frame& f, const Frame& g,
                        const ProbabilityModel& m, int mult,
                        const Tolerances& tol = {});

// One-erasure A measure without any decomposition: per index i the norm is
// q_i ||f_i|| ||g_i||, the radius is q_i |<f_i, g_i>|, and the report value
// is the largest (norm + rho) / 2.
MeasureReport one_erasure_closed_form(const Frame& f, const Frame& g,
                                      const ProbabilityModel& m,
                                      const Tolerances& tol = {});

}  // namespace frameopt
