#include "frameopt/erasure.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "frameopt/errors.hpp"

namespace frameopt {

std::string measure_name(MeasureKind k) {
  switch (k) {
    case MeasureKind::O: return "O";
    case MeasureKind::R: return "r";
    case MeasureKind::A: return "A";
  }
  return "?";
}

namespace {

void check_shapes(const Frame& f, const Frame& g, int weights) {
  if (f.dim() != g.dim() || f.size() != g.size())
    throw DimensionMismatchError("frame and dual must have the same shape");
  if (weights != f.size())
    throw DimensionMismatchError("weight count must equal the frame size");
}

void check_pattern(const ErasurePattern& pattern, int big) {
  int prev = -1;
  for (int i : pattern) {
    if (i <= prev)
      throw DimensionMismatchError("pattern indices must be strictly increasing");
    if (i < 0 || i >= big)
      throw DimensionMismatchError("pattern index out of range");
    prev = i;
  }
}

bool next_combination(ErasurePattern& c, int big) {
  const int m = static_cast<int>(c.size());
  for (int i = m - 1; i >= 0; --i) {
    if (c[i] < big - m + i) {
      ++c[i];
      for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

ErrorOperator error_operator_weighted(const Frame& f, const Frame& g,
                                      const RealVec& q,
                                      const ErasurePattern& pattern) {
  check_shapes(f, g, static_cast<int>(q.size()));
  check_pattern(pattern, f.size());
  Mat e = Mat::Zero(f.dim(), f.dim());
  for (int i : pattern)
    e += q(i) * g.synthesis.col(i) * f.synthesis.col(i).adjoint();
  return {std::move(e), pattern};
}

ErrorOperator error_operator(const Frame& f, const Frame& g,
                             const ProbabilityModel& m,
                             const ErasurePattern& pattern) {
  if (m.dim != f.dim())
    throw DimensionMismatchError("probability model dimension mismatch");
  return error_operator_weighted(f, g, m.q, pattern);
}

double operator_norm(const Mat& m) {
  if (m.size() == 0) return 0;
  return Eigen::JacobiSVD<Mat>(m).singularValues().maxCoeff();
}

double spectral_radius(const Mat& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatchError("spectral radius needs a square matrix");
  if (m.size() == 0) return 0;
  Eigen::ComplexEigenSolver<Mat> es(m, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_radius(const Frame& f, const Frame& g, const RealVec& q,
                       const ErasurePattern& pattern) {
  const int m = static_cast<int>(pattern.size());
  if (m == 0) return 0;
  if (m >= f.dim())
    return spectral_radius(error_operator_weighted(f, g, q, pattern).matrix);
  // Nonzero eigenvalues of sum q_i g_i f_i^* agree with those of the m x m
  // matrix F_L^H G_L Q_L.
  Mat fl(f.dim(), m), gl(f.dim(), m);
  RealVec ql(m);
  for (int k = 0; k < m; ++k) {
    fl.col(k) = f.synthesis.col(pattern[k]);
    gl.col(k) = g.synthesis.col(pattern[k]);
    ql(k) = q(pattern[k]);
  }
  Mat small = fl.adjoint() * gl * ql.asDiagonal();
  return spectral_radius(small);
}

MeasureReport measure_with_weights(const Frame& f, const Frame& g,
                                   const RealVec& q, int mult,
                                   MeasureKind kind, const Tolerances& tol) {
  check_shapes(f, g, static_cast<int>(q.size()));
  const int big = f.size();
  if (mult < 1 || mult > big)
    throw BadMultiplicityError("erasure multiplicity must lie in 1..N");

  MeasureReport report;
  report.kind = kind;
  report.m = mult;

  ErasurePattern pattern(mult);
  for (int i = 0; i < mult; ++i) pattern[i] = i;
  do {
    // Dense SVD and eigensolve on the full n x n operator; the m x m
    // reduction overload stays available as an independent cross-check.
    ErrorOperator e = error_operator_weighted(f, g, q, pattern);
    PatternValue pv;
    pv.pattern = pattern;
    pv.norm = operator_norm(e.matrix);
    pv.rho = spectral_radius(e.matrix);
    report.per_pattern.push_back(std::move(pv));
  } while (next_combination(pattern, big));

  auto pattern_value = [kind](const PatternValue& pv) {
    switch (kind) {
      case MeasureKind::O: return pv.norm;
      case MeasureKind::R: return pv.rho;
      case MeasureKind::A: return (pv.norm + pv.rho) / 2;
    }
    return 0.0;
  };
  double best = 0;
  for (const PatternValue& pv : report.per_pattern)
    best = std::max(best, pattern_value(pv));
  report.value = best;
  double tie_floor = best - tol.tie_rel * std::max(1.0, std::abs(best));
  for (const PatternValue& pv : report.per_pattern)
    if (pattern_value(pv) >= tie_floor) report.argmax.push_back(pv.pattern);
  return report;
}

MeasureReport measure(const Frame& f, const Frame& g,
                      const ProbabilityModel& model, int mult,
                      MeasureKind kind, const Tolerances& tol) {
  if (model.dim != f.dim())
    throw DimensionMismatchError("probability model dimension mismatch");
  return measure_with_weights(f, g, model.q, mult, kind, tol);
}

MeasureReport measure_O(const Frame& f, const Frame& g,
                        const ProbabilityModel& m, int mult,
                        const Tolerances& tol) {
  return measure(f, g, m, mult, MeasureKind::O, tol);
}

MeasureReport measure_r(const Frame& f, const Frame& g,
                        const ProbabilityModel& m, int mult,
                        const Tolerances& tol) {
  return measure(f, g, m, mult, MeasureKind::R, tol);
}

MeasureReport measure_A(const Frame& f, const Frame& g,
                        const ProbabilityModel& m, int mult,
                        const Tolerances& tol) {
  return measure(f, g, m, mult, MeasureKind::A, tol);
}

MeasureReport one_erasure_closed_form(const Frame& f, const Frame& g,
                                      const ProbabilityModel& m,
                                      const Tolerances& tol) {
  check_shapes(f, g, m.size());
  if (m.dim != f.dim())
    throw DimensionMismatchError("probability model dimension mismatch");

  MeasureReport report;
  report.kind = MeasureKind::A;
  report.m = 1;
  const int big = f.size();
  for (int i = 0; i < big; ++i) {
    PatternValue pv;
    pv.pattern = {i};
    pv.rho = m.q(i) * std::abs(inner(f.vector(i), g.vector(i)));
    pv.norm = m.q(i) * f.vector(i).norm() * g.vector(i).norm();
    report.per_pattern.push_back(std::move(pv));
  }
  double best = 0;
  for (const PatternValue& pv : report.per_pattern)
    best = std::max(best, (pv.norm + pv.rho) / 2);
  report.value = best;
  double tie_floor = best - tol.tie_rel * std::max(1.0, std::abs(best));
  for (const PatternValue& pv : report.per_pattern)
    if ((pv.norm + pv.rho) / 2 >= tie_floor)
      report.argmax.push_back(pv.pattern);
  return report;
}

}  // namespace frameopt
