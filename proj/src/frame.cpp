#include "frameopt/frame.hpp"

#include <Eigen/Dense>
#include <utility>

namespace frameopt {

Frame::Frame(Mat m) : synthesis(std::move(m)) {
  if (synthesis.rows() < 1)
    throw DimensionMismatchError("frame dimension must be at least 1");
  if (synthesis.cols() < synthesis.rows())
    throw DimensionMismatchError("a frame needs at least dim() vectors");
}

namespace {

// Relative cutoff below which an eigenvalue of S_F counts as zero.
double eig_cutoff(const Frame& f, double max_eig, const Tolerances& tol) {
  double scale = std::max(f.dim(), f.size());
  return scale * max_eig * tol.rank_scale;
}

Eigen::SelfAdjointEigenSolver<Mat> solve_frame_operator(const Frame& f,
                                                        const Tolerances& tol) {
  Mat s = f.synthesis * f.synthesis.adjoint();
  s = ((s + s.adjoint()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Mat> es(s);
  double top = es.eigenvalues().maxCoeff();
  if (es.eigenvalues().minCoeff() <= eig_cutoff(f, top, tol))
    throw RankDeficientError("frame vectors do not span the space");
  return es;
}

}  // namespace

Mat frame_operator(const Frame& f, const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es = solve_frame_operator(f, tol);
  return es.eigenvectors() * es.eigenvalues().asDiagonal() *
         es.eigenvectors().adjoint();
}

std::pair<double, double> frame_bounds(const Frame& f, const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es = solve_frame_operator(f, tol);
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

Frame canonical_dual(const Frame& f, const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es = solve_frame_operator(f, tol);
  Mat s_inv = es.eigenvectors() *
              es.eigenvalues().cwiseInverse().asDiagonal() *
              es.eigenvectors().adjoint();
  return Frame(s_inv * f.synthesis);
}

bool is_dual(const Frame& f, const Frame& g, const Tolerances& tol) {
  if (f.dim() != g.dim() || f.size() != g.size())
    throw DimensionMismatchError("dual candidate must match the frame's shape");
  Mat prod = g.synthesis * f.synthesis.adjoint();
  prod.diagonal().array() -= 1.0;
  if (prod.cwiseAbs().maxCoeff() > tol.base) return false;
  Complex trace = f.synthesis.conjugate().cwiseProduct(g.synthesis).sum();
  return std::abs(trace - Complex(f.dim(), 0)) <= tol.base;
}

Frame apply_unitary(const Frame& f, const Mat& u, const Tolerances& tol) {
  if (u.rows() != f.dim() || u.cols() != f.dim())
    throw DimensionMismatchError("unitary must be dim x dim");
  Mat gram = u.adjoint() * u;
  gram.diagonal().array() -= 1.0;
  if (gram.cwiseAbs().maxCoeff() > tol.base)
    throw NotUnitaryError("matrix is not unitary");
  return Frame(u * f.synthesis);
}

DualParameterization dual_space(const Frame& f, const Tolerances& tol) {
  const int n = f.dim();
  const int big = f.size();
  Eigen::JacobiSVD<Mat> svd(f.synthesis, Eigen::ComputeFullV);
  double sv_cutoff =
      std::max(n, big) * svd.singularValues().maxCoeff() * tol.rank_scale;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > sv_cutoff) ++rank;
  if (rank < n) throw RankDeficientError("frame vectors do not span the space");

  DualParameterization p;
  p.rank = rank;
  p.base = canonical_dual(f, tol);
  p.null_basis = svd.matrixV().rightCols(big - rank);
  p.basis.reserve(static_cast<size_t>(n) * (big - rank));
  for (int m = 0; m < big - rank; ++m)
    for (int j = 0; j < n; ++j) {
      Mat u = Mat::Zero(n, big);
      u.row(j) = p.null_basis.col(m).adjoint();
      p.basis.push_back(std::move(u));
    }
  return p;
}

Frame dual_from_params(const DualParameterization& p, const Vec& coeffs) {
  if (coeffs.size() != p.dof())
    throw DimensionMismatchError("coefficient count must equal dof()");
  const int n = p.base.dim();
  const int null_dim = static_cast<int>(p.null_basis.cols());
  Mat c = Mat::Zero(n, null_dim);
  for (int m = 0; m < null_dim; ++m)
    for (int j = 0; j < n; ++j) c(j, m) = coeffs(m * n + j);
  return Frame(p.base.synthesis + c * p.null_basis.adjoint());
}

Vec coefficients_for_dual(const DualParameterization& p, const Frame& g,
                          const Tolerances& tol) {
  if (g.dim() != p.base.dim() || g.size() != p.base.size())
    throw DimensionMismatchError("dual candidate must match the frame's shape");
  Mat delta = g.synthesis - p.base.synthesis;
  // Rows of any dual perturbation lie in the row span of null_basis^H, so
  // right-multiplying recovers the coefficient matrix exactly.
  Mat c = delta * p.null_basis;
  Mat residual = delta - c * p.null_basis.adjoint();
  if (residual.cwiseAbs().maxCoeff() > tol.base)
    throw NotDualError("candidate is not a dual of the base frame");
  const int n = p.base.dim();
  Vec coeffs(p.dof());
  for (int m = 0; m < p.null_basis.cols(); ++m)
    for (int j = 0; j < n; ++j) coeffs(m * n + j) = c(j, m);
  return coeffs;
}

}  // namespace frameopt
