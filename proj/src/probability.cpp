#include "frameopt/probability.hpp"

#include <cmath>

#include "frameopt/errors.hpp"

namespace frameopt {

ProbabilityModel weights_from_probabilities(const RealVec& p, int n,
                                            double norm_tol) {
  const int big = static_cast<int>(p.size());
  if (n < 1) throw DimensionMismatchError("dimension must be at least 1");
  if (big < n)
    throw DimensionMismatchError("need at least dim() probabilities");
  for (int i = 0; i < big; ++i) {
    if (!(p(i) >= 0.0) || p(i) >= 1.0)
      throw DegenerateProbabilityError(
          "probabilities must lie in [0, 1): index " + std::to_string(i + 1));
  }
  double total = p.sum();
  if (std::abs(total - 1.0) > norm_tol)
    throw NotNormalizedError("probabilities must sum to 1");

  ProbabilityModel m;
  m.p = p;
  m.dim = n;
  m.q.resize(big);
  for (int i = 0; i < big; ++i)
    m.q(i) = total / (total - p(i)) * (big - 1) / n;
  m.sub_unit_weight = (m.q.minCoeff() < 1.0);
  return m;
}

}  // namespace frameopt
