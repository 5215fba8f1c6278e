#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdlib>
#include <optional>
#include <string>

namespace frameopt {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;

// Inner product linear in the first argument: <x, y> = sum_k x_k conj(y_k).
inline Complex inner(const Vec& x, const Vec& y) { return y.dot(x); }

// Tolerances used by verification predicates. `base` drives the duality,
// symmetry, and pair checks; the FRAMEOPT_TOL environment variable overrides
// the default, and an explicit value passed by a caller (CLI flag) overrides
// both.
struct Tolerances {
  double base = 1e-10;        // duality / symmetry residuals, max norm
  double rank_scale = 1e-12;  // rank cutoff: max(n,N) * sigma_max * rank_scale
  double tie_rel = 1e-9;      // relative tie window for argmax sets
  double pair = 1e-9;         // pair characterization residuals

  static Tolerances from_env() {
    Tolerances t;
    if (const char* s = std::getenv("FRAMEOPT_TOL")) {
      char* end = nullptr;
      double v = std::strtod(s, &end);
      if (end != s && v > 0) t.base = v;
    }
    return t;
  }
};

// A finite frame for C^n given by its synthesis matrix: vectors are the
// columns of `synthesis` (n rows, N >= n columns).
struct Frame {
  Mat synthesis;

  Frame() = default;
  explicit Frame(Mat m);

  int dim() const { return static_cast<int>(synthesis.rows()); }
  int size() const { return static_cast<int>(synthesis.cols()); }
  Vec vector(int i) const { return synthesis.col(i); }
};

}  // namespace frameopt
