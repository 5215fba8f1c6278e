#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frameopt/erasure.hpp"
#include "frameopt/frame.hpp"

namespace frameopt {

struct SearchConfig {
  long max_iters = 200000;     // total subgradient budget across restarts
  double step = 0.5;           // initial step size, decays as step/sqrt(k)
  int restarts = 8;            // restart 0 starts at the canonical dual
  std::uint64_t seed = 0;
  double tol = 1e-9;           // convergence tolerance on the objective
  double polish_floor = 1e-11; // pattern-search step floor for the polish phase
};

struct SearchResult {
  Frame dual;
  double value = 0;
  bool converged = false;
  long iterations = 0;
  double value_at_canonical = 0;
};

// Objective value max_i q_i (w1 |<f_i, g_i>| + w2 ||f_i|| ||g_i||) at the dual
// with coefficient vector x (real embedding: x[2k], x[2k+1] are the real and
// imaginary parts of complex coefficient k). Weights (w1, w2) are (1/2, 1/2)
// for A, (0, 1) for O, (1, 0) for R.
double objective_value(const Frame& f, const ProbabilityModel& m,
                       const DualParameterization& p, const RealVec& x,
                       MeasureKind kind);

// Subgradient of the objective above: the gradient of the first term
// attaining the max. Returns an empty vector when dof() == 0.
RealVec subgradient_of_objective(const Frame& f, const ProbabilityModel& m,
                                 const DualParameterization& p,
                                 const RealVec& x, MeasureKind kind);

// Minimizes the one-erasure measure over all duals of F: multi-restart
// projected subgradient descent followed by a deterministic shrinking-step
// pattern-search polish. Identical seed and config give identical output.
SearchResult search_measure(const Frame& f, const ProbabilityModel& m,
                            MeasureKind kind, const SearchConfig& cfg = {});
SearchResult pasod_search(const Frame& f, const ProbabilityModel& m,
                          const SearchConfig& cfg = {});

struct OptimalityCertificate {
  std::string kind;  // e.g. "canonical-is-pasod-sufficient", "unique-pod"
  bool holds = false;
  double threshold = 0;            // the extremal value l or c
  std::vector<int> partition_primary;    // indices attaining the threshold
  std::vector<int> partition_secondary;  // the rest
  RealVec per_index;               // per-index values the threshold maximizes
  // Span conditions behind `holds`: the two partition spans intersect
  // trivially, and the partition the criterion singles out is independent.
  bool spans_disjoint = false;
  bool partition_independent = false;
  // Set when holds and N > n: a non-canonical dual attaining the same
  // one-erasure A measure, demonstrating non-uniqueness.
  std::optional<Frame> witness;
  bool non_unique_overcomplete = false;
  std::string note;
};

// Sufficient condition for the canonical dual to attain the optimal
// one-erasure A measure: with l_i = q_i (<f_i, S^-1 f_i> + ||f_i|| ||S^-1 f_i||)
// and L1 the argmax set, span{f_i : i in L1} intersects span{f_i : i not in L1}
// trivially and {f_i : i in L1} is linearly independent. When it holds and
// N > n the certificate carries an epsilon-witness dual proving the optimum
// is attained by more than one dual.
OptimalityCertificate check_canonical_pasod_sufficient(
    const Frame& f, const ProbabilityModel& m, const Tolerances& tol = {});

// Equivalence test for the canonical dual being the unique minimizer of the
// one-erasure operator-norm measure. Tight frames use the constant q_i
// ||f_i||^2 characterization, general frames the span condition on the argmax
// partition of c_i = q_i ||S^-1 f_i|| ||f_i||.
OptimalityCertificate check_unique_pod(const Frame& f,
                                       const ProbabilityModel& m,
                                       const Tolerances& tol = {});

// Tight frames only (NotTightError otherwise): canonical is the unique
// minimizer for all three measures iff q_i ||f_i||^2 is constant.
OptimalityCertificate check_unique_pasod_tight(const Frame& f,
                                               const ProbabilityModel& m,
                                               const Tolerances& tol = {});

struct TightEquivalenceReport {
  bool canonical_optimal_O = false;
  bool canonical_optimal_R = false;
  bool canonical_optimal_A = false;
  bool agree = false;
  double search_value_O = 0;
  double search_value_R = 0;
  double search_value_A = 0;
  double canonical_value_O = 0;
  double canonical_value_R = 0;
  double canonical_value_A = 0;
};

// For tight frames membership of the canonical dual in the three optimal-dual
// sets coincides; checked by running the measure search for O, R, and A.
TightEquivalenceReport tight_equivalences(const Frame& f,
                                          const ProbabilityModel& m,
                                          const SearchConfig& cfg = {},
                                          const Tolerances& tol = {});

// |A(UF, UG) - A(F, G)| for the one-erasure measure; U must be unitary.
bool unitary_invariance_check(const Frame& f, const Frame& g,
                              const ProbabilityModel& m, const Mat& u,
                              double tol = 1e-12);

}  // namespace frameopt
