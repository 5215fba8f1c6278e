#include "frameopt/dual_pairs.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace frameopt {

PairVerdict pair_verdict(const Frame& f, const Frame& g,
                         const ProbabilityModel& m, const Tolerances& tol,
                         bool require_dual) {
  if (f.dim() != g.dim() || f.size() != g.size())
    throw DimensionMismatchError("pair members must have the same shape");
  if (m.dim != f.dim() || m.size() != f.size())
    throw DimensionMismatchError("probability model dimension mismatch");

  PairVerdict v;
  v.dual = is_dual(f, g, tol);
  if (require_dual && !v.dual)
    throw NotDualError("pair characterizations apply to dual pairs only");

  const int big = f.size();
  v.inner_residual.resize(big);
  v.abs_inner_residual.resize(big);
  v.normprod_residual.resize(big);
  v.pod = v.psod = v.pasod = true;
  for (int i = 0; i < big; ++i) {
    Complex a = inner(f.vector(i), g.vector(i));
    double target = 1.0 / m.q(i);
    v.inner_residual(i) = a - target;
    v.abs_inner_residual(i) = std::abs(a) - target;
    v.normprod_residual(i) =
        f.vector(i).norm() * g.vector(i).norm() - target;
    bool inner_exact = std::abs(v.inner_residual(i)) <= tol.pair;
    bool abs_exact = std::abs(v.abs_inner_residual(i)) <= tol.pair;
    bool prod_exact = std::abs(v.normprod_residual(i)) <= tol.pair;
    v.pod = v.pod && inner_exact && prod_exact;
    v.psod = v.psod && inner_exact && abs_exact;
    v.pasod = v.pasod && abs_exact && prod_exact;
  }
  return v;
}

bool majorization_check(const RealVec& a2, const RealVec& lambda, double tol) {
  for (int i = 1; i < a2.size(); ++i)
    if (a2(i) > a2(i - 1)) throw NotSortedError("norms must be nonincreasing");
  for (int i = 1; i < lambda.size(); ++i)
    if (lambda(i) > lambda(i - 1))
      throw NotSortedError("eigenvalues must be nonincreasing");

  double sum_a = 0, sum_l = 0;
  for (int k = 0; k < a2.size(); ++k) {
    sum_a += a2(k);
    if (k < lambda.size()) sum_l += lambda(k);
    if (sum_a > sum_l + tol) return false;
  }
  return std::abs(sum_a - sum_l) <= tol;
}

namespace {

// Plane rotations on the rows of [diag(sqrt(lambda)); 0] moving the squared
// row norms onto `targets` (sorted nonincreasing) one retirement at a time:
// the largest remaining target is retired from the straddling adjacent pair
// of the active row norms, which preserves the majorization of what is left.
// Active rows stay pairwise orthogonal, so each rotation changes exactly two
// squared norms, convexly. Returns rows in retirement order mapped back to
// target positions.
Mat rotation_chain(const RealVec& lambda, const RealVec& targets) {
  const int n = static_cast<int>(lambda.size());
  const int big = static_cast<int>(targets.size());
  Mat w = Mat::Zero(big, n);
  std::vector<double> d(big, 0.0);
  for (int i = 0; i < n; ++i) {
    w(i, i) = std::sqrt(lambda(i));
    d[i] = lambda(i);
  }

  double scale = std::max({1.0, lambda(0), targets(0)});
  const double eps = 1e-12 * scale;

  std::vector<int> active(big);
  std::iota(active.begin(), active.end(), 0);
  Mat out(big, n);
  for (int pos = 0; pos < big; ++pos) {
    const double t = targets(pos);
    std::sort(active.begin(), active.end(),
              [&](int a, int b) { return d[a] > d[b]; });

    int exact = -1;
    for (int row : active)
      if (std::abs(d[row] - t) <= eps) {
        exact = row;
        break;
      }
    if (exact >= 0) {
      out.row(pos) = w.row(exact);
      active.erase(std::remove(active.begin(), active.end(), exact),
                   active.end());
      continue;
    }

    // Adjacent straddling pair in the sorted active norms.
    int hi = -1, lo = -1;
    for (size_t k = 0; k + 1 < active.size(); ++k)
      if (d[active[k]] >= t && t >= d[active[k + 1]]) {
        hi = active[k];
        lo = active[k + 1];
        break;
      }
    if (hi < 0)
      throw MajorizationFailedError(
          "internal: no straddling pair; majorization lost");

    double c2 = (t - d[lo]) / (d[hi] - d[lo]);
    double c = std::sqrt(c2);
    double s = std::sqrt(1.0 - c2);
    Eigen::RowVectorXcd row_hi = w.row(hi), row_lo = w.row(lo);
    w.row(hi) = c * row_hi + s * row_lo;
    w.row(lo) = -s * row_hi + c * row_lo;
    double leftover = d[hi] + d[lo] - t;
    d[lo] = leftover;
    out.row(pos) = w.row(hi);
    active.erase(std::remove(active.begin(), active.end(), hi), active.end());
  }
  return out;
}

}  // namespace

Frame frame_with_operator_and_norms(const RealVec& lambda,
                                    const RealVec& norms) {
  if (lambda.size() < 1 || norms.size() < lambda.size())
    throw DimensionMismatchError("need at least dim() norms");
  for (int i = 0; i < lambda.size(); ++i)
    if (lambda(i) <= 0)
      throw MajorizationFailedError("eigenvalues must be positive");
  for (int i = 0; i < norms.size(); ++i)
    if (norms(i) <= 0) throw MajorizationFailedError("norms must be positive");

  RealVec a2 = norms.cwiseAbs2();
  if (!majorization_check(a2, lambda))
    throw MajorizationFailedError(
        "squared norms are not majorized by the spectrum");
  Mat rows = rotation_chain(lambda, a2);
  // Rows of the rotated matrix are the frame vectors (conjugated), so the
  // synthesis operator is the adjoint and the frame operator is diag(lambda).
  return Frame(rows.adjoint());
}

Frame construct_probability_uniform_parseval(const ProbabilityModel& m) {
  const int n = m.dim;
  const int big = m.size();
  RealVec a2(big);
  for (int i = 0; i < big; ++i) a2(i) = 1.0 / m.q(i);

  std::vector<int> order(big);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return a2(a) > a2(b); });
  RealVec sorted(big);
  for (int k = 0; k < big; ++k) sorted(k) = a2(order[k]);

  RealVec lambda = RealVec::Ones(n);
  if (!majorization_check(sorted, lambda))
    throw MajorizationFailedError(
        "weights admit no probability uniform Parseval frame (some q_i < 1)");

  Mat rows = rotation_chain(lambda, sorted);
  Mat unsorted(big, n);
  for (int k = 0; k < big; ++k) unsorted.row(order[k]) = rows.row(k);
  return Frame(unsorted.adjoint());
}

PairUniqueness unique_pair_check_tight(const Frame& f,
                                       const ProbabilityModel& m,
                                       const Tolerances& tol) {
  auto [a, b] = frame_bounds(f, tol);
  if (b - a > tol.tie_rel * std::max(1.0, b))
    throw NotTightError("pair uniqueness test requires a tight frame");

  PairUniqueness u;
  RealVec qn(f.size());
  for (int i = 0; i < f.size(); ++i)
    qn(i) = m.q(i) * f.vector(i).squaredNorm();
  double spread = qn.maxCoeff() - qn.minCoeff();
  u.unique = spread <= tol.tie_rel * std::max(1.0, qn.maxCoeff());
  u.c = qn.mean();
  u.canonical_pair = pair_verdict(f, canonical_dual(f, tol), m, tol);
  return u;
}

}  // namespace frameopt
