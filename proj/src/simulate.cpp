#include "frameopt/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "frameopt/frame.hpp"
#include "rng.hpp"

namespace frameopt {

namespace {

// Sequential weighted draws without replacement; exhausted probability mass
// falls back to a uniform draw over the remaining indices, so zero-weight
// indices are reachable only when nothing else is left.
ErasurePattern sample_pattern(const RealVec& p, int m,
                              detail::SplitMix64& rng) {
  const int big = static_cast<int>(p.size());
  std::vector<int> remaining(big);
  for (int i = 0; i < big; ++i) remaining[i] = i;
  RealVec weights = p;

  ErasurePattern pattern;
  pattern.reserve(m);
  for (int draw = 0; draw < m; ++draw) {
    double total = 0;
    for (int i : remaining) total += weights(i);
    int chosen;
    if (total <= 1e-300) {
      size_t idx = std::min<size_t>(
          static_cast<size_t>(rng.uniform() * remaining.size()),
          remaining.size() - 1);
      chosen = remaining[idx];
    } else {
      double u = rng.uniform() * total;
      double acc = 0;
      chosen = remaining.back();
      for (int i : remaining) {
        acc += weights(i);
        if (u < acc) {
          chosen = i;
          break;
        }
      }
    }
    pattern.push_back(chosen);
    remaining.erase(std::remove(remaining.begin(), remaining.end(), chosen),
                    remaining.end());
  }
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

}  // namespace

SimReport simulate(const Frame& f, const Frame& g, const ProbabilityModel& m,
                   const SimConfig& cfg, const Tolerances& tol) {
  if (f.dim() != g.dim() || f.size() != g.size())
    throw DimensionMismatchError("frame and dual must have the same shape");
  if (m.dim != f.dim() || m.size() != f.size())
    throw DimensionMismatchError("probability model dimension mismatch");
  if (cfg.m < 1 || cfg.m > f.size())
    throw BadMultiplicityError("erasure multiplicity must lie in 1..N");
  if (cfg.trials < 1 || cfg.signals < 1)
    throw DimensionMismatchError("trials and signals must be positive");
  if (!is_dual(f, g, tol))
    throw NotDualError("simulation requires a dual pair");

  RealVec weights = cfg.weighted ? m.q : RealVec::Ones(f.size());

  SimReport report;
  report.config = cfg;
  report.bound =
      measure_with_weights(f, g, weights, cfg.m, MeasureKind::O, tol).value;

  std::map<ErasurePattern, long> hits;
  double total_err = 0;
  double max_err = 0;
  const int n = f.dim();
  for (long trial = 0; trial < cfg.trials; ++trial) {
    detail::SplitMix64 rng(cfg.seed, static_cast<std::uint64_t>(trial));
    ErasurePattern pattern = sample_pattern(m.p, cfg.m, rng);
    ++hits[pattern];
    Mat e = error_operator_weighted(f, g, weights, pattern).matrix;
    for (int s = 0; s < cfg.signals; ++s) {
      Vec x(n);
      for (int i = 0; i < n; ++i) x(i) = rng.complex_gaussian();
      double norm = x.norm();
      if (norm == 0) {
        x.setZero();
        x(0) = 1;
      } else {
        x /= norm;
      }
      double err = (e * x).norm();
      total_err += err;
      max_err = std::max(max_err, err);
    }
  }

  report.empirical_max = max_err;
  report.empirical_mean =
      total_err / (static_cast<double>(cfg.trials) * cfg.signals);
  report.attainment = report.bound > 0 ? max_err / report.bound : 0.0;
  report.pattern_hits.reserve(hits.size());
  for (const auto& [pattern, count] : hits)
    report.pattern_hits.push_back({pattern, count});
  return report;
}

}  // namespace frameopt
