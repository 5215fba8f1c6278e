#pragma once

#include "frameopt/erasure.hpp"
#include "frameopt/frame.hpp"
#include "frameopt/probability.hpp"

namespace frameopt {

// Characterization residuals for a dual pair (F, G) against the weight
// numbers: a POD pair has <f_i, g_i> = ||f_i|| ||g_i|| = 1/q_i for all i, a
// PSOD pair has <f_i, g_i> = |<f_i, g_i>| = 1/q_i, a PASOD pair has
// |<f_i, g_i>| = ||f_i|| ||g_i|| = 1/q_i. Any of them forces all three
// one-erasure measures to equal 1, the global optimum over dual pairs.
struct PairVerdict {
  bool dual = false;
  bool pod = false;
  bool psod = false;
  bool pasod = false;
  Vec inner_residual;          // <f_i, g_i> - 1/q_i
  RealVec abs_inner_residual;  // |<f_i, g_i>| - 1/q_i
  RealVec normprod_residual;   // ||f_i|| ||g_i|| - 1/q_i
};

// Evaluates the characterizations at tol.pair. When require_dual is set (the
// default) a pair failing is_dual throws NotDualError; fixtures and the CLI
// pass false to report on arbitrary pairs.
PairVerdict pair_verdict(const Frame& f, const Frame& g,
                         const ProbabilityModel& m, const Tolerances& tol = {},
                         bool require_dual = true);

// The best possible value of each worst-case one-erasure measure over all
// dual pairs with a common probability model.
constexpr double global_pair_optimum() { return 1.0; }

// True iff the squared norms are majorized by the spectrum: both inputs
// sorted nonincreasing (NotSortedError otherwise), partial sums of a2 bounded
// by partial sums of lambda (zero padded), totals equal within tol.
bool majorization_check(const RealVec& a2, const RealVec& lambda,
                        double tol = 1e-12);

// Parseval frame whose i-th vector has norm 1/sqrt(q_i), so that erasure
// probabilities are transported into the frame geometry. Exists iff the
// squared norms are majorized by (1, ..., 1); throws MajorizationFailedError
// otherwise (possible only when N == n and q is not identically 1).
Frame construct_probability_uniform_parseval(const ProbabilityModel& m);

// Frame with prescribed frame operator spectrum and vector norms, both given
// sorted nonincreasing. Row rotations on [diag(sqrt(lambda)); 0] move the
// squared row norms onto the targets one retirement at a time.
Frame frame_with_operator_and_norms(const RealVec& lambda, const RealVec& norms);

struct PairUniqueness {
  bool unique = false;
  double c = 0;  // common value of q_i ||f_i||^2 when unique
  PairVerdict canonical_pair;
};

// Tight frames only (NotTightError otherwise): (F, canonical dual) is the
// unique optimal pair iff q_i ||f_i||^2 is constant.
PairUniqueness unique_pair_check_tight(const Frame& f,
                                       const ProbabilityModel& m,
                                       const Tolerances& tol = {});

}  // namespace frameopt
