#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frameopt/dual_pairs.hpp"
#include "frameopt/erasure.hpp"
#include "frameopt/frame.hpp"
#include "frameopt/optimality.hpp"
#include "frameopt/probability.hpp"
#include "frameopt/simulate.hpp"
#include "frameopt/verify.hpp"

namespace py = pybind11;
using namespace frameopt;

namespace {

MeasureKind kind_from_name(const std::string& name) {
  if (name == "O") return MeasureKind::O;
  if (name == "r" || name == "R") return MeasureKind::R;
  if (name == "A") return MeasureKind::A;
  throw py::value_error("measure must be 'O', 'r', or 'A'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "probabilistic optimal dual frame analysis for erasures";

  py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError");
  py::register_exception<RankDeficientError>(m, "RankDeficientError");
  py::register_exception<NotUnitaryError>(m, "NotUnitaryError");
  py::register_exception<NotTightError>(m, "NotTightError");
  py::register_exception<NotDualError>(m, "NotDualError");
  py::register_exception<DegenerateProbabilityError>(
      m, "DegenerateProbabilityError");
  py::register_exception<NotNormalizedError>(m, "NotNormalizedError");
  py::register_exception<BadMultiplicityError>(m, "BadMultiplicityError");
  py::register_exception<NotSortedError>(m, "NotSortedError");
  py::register_exception<MajorizationFailedError>(m,
                                                  "MajorizationFailedError");

  py::class_<Frame>(m, "Frame")
      .def(py::init<Mat>(), py::arg("synthesis"),
           "columns of `synthesis` are the frame vectors")
      .def_readonly("synthesis", &Frame::synthesis)
      .def_property_readonly("dim", &Frame::dim)
      .def_property_readonly("size", &Frame::size)
      .def("vector", &Frame::vector, py::arg("i"));

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("base", &Tolerances::base)
      .def_readwrite("rank_scale", &Tolerances::rank_scale)
      .def_readwrite("tie_rel", &Tolerances::tie_rel)
      .def_readwrite("pair", &Tolerances::pair)
      .def_static("from_env", &Tolerances::from_env);

  py::class_<ProbabilityModel>(m, "ProbabilityModel")
      .def_readonly("p", &ProbabilityModel::p)
      .def_readonly("q", &ProbabilityModel::q)
      .def_readonly("dim", &ProbabilityModel::dim)
      .def_readonly("sub_unit_weight", &ProbabilityModel::sub_unit_weight);

  py::class_<DualParameterization>(m, "DualParameterization")
      .def_readonly("base", &DualParameterization::base)
      .def_readonly("null_basis", &DualParameterization::null_basis)
      .def_readonly("basis", &DualParameterization::basis)
      .def_property_readonly("dof", &DualParameterization::dof);

  py::class_<PatternValue>(m, "PatternValue")
      .def_readonly("pattern", &PatternValue::pattern)
      .def_readonly("norm", &PatternValue::norm)
      .def_readonly("rho", &PatternValue::rho);

  py::class_<MeasureReport>(m, "MeasureReport")
      .def_property_readonly(
          "measure", [](const MeasureReport& r) { return measure_name(r.kind); })
      .def_readonly("m", &MeasureReport::m)
      .def_readonly("value", &MeasureReport::value)
      .def_readonly("argmax", &MeasureReport::argmax)
      .def_readonly("per_pattern", &MeasureReport::per_pattern);

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("max_iters", &SearchConfig::max_iters)
      .def_readwrite("step", &SearchConfig::step)
      .def_readwrite("restarts", &SearchConfig::restarts)
      .def_readwrite("seed", &SearchConfig::seed)
      .def_readwrite("tol", &SearchConfig::tol)
      .def_readwrite("polish_floor", &SearchConfig::polish_floor);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("dual", &SearchResult::dual)
      .def_readonly("value", &SearchResult::value)
      .def_readonly("converged", &SearchResult::converged)
      .def_readonly("iterations", &SearchResult::iterations)
      .def_readonly("value_at_canonical", &SearchResult::value_at_canonical);

  py::class_<OptimalityCertificate>(m, "OptimalityCertificate")
      .def_readonly("kind", &OptimalityCertificate::kind)
      .def_readonly("holds", &OptimalityCertificate::holds)
      .def_readonly("threshold", &OptimalityCertificate::threshold)
      .def_readonly("partition_primary",
                    &OptimalityCertificate::partition_primary)
      .def_readonly("partition_secondary",
                    &OptimalityCertificate::partition_secondary)
      .def_readonly("per_index", &OptimalityCertificate::per_index)
      .def_readonly("spans_disjoint", &OptimalityCertificate::spans_disjoint)
      .def_readonly("partition_independent",
                    &OptimalityCertificate::partition_independent)
      .def_readonly("witness", &OptimalityCertificate::witness)
      .def_readonly("non_unique_overcomplete",
                    &OptimalityCertificate::non_unique_overcomplete)
      .def_readonly("note", &OptimalityCertificate::note);

  py::class_<TightEquivalenceReport>(m, "TightEquivalenceReport")
      .def_readonly("canonical_optimal_O",
                    &TightEquivalenceReport::canonical_optimal_O)
      .def_readonly("canonical_optimal_R",
                    &TightEquivalenceReport::canonical_optimal_R)
      .def_readonly("canonical_optimal_A",
                    &TightEquivalenceReport::canonical_optimal_A)
      .def_readonly("agree", &TightEquivalenceReport::agree);

  py::class_<PairVerdict>(m, "PairVerdict")
      .def_readonly("dual", &PairVerdict::dual)
      .def_readonly("pod", &PairVerdict::pod)
      .def_readonly("psod", &PairVerdict::psod)
      .def_readonly("pasod", &PairVerdict::pasod)
      .def_readonly("inner_residual", &PairVerdict::inner_residual)
      .def_readonly("abs_inner_residual", &PairVerdict::abs_inner_residual)
      .def_readonly("normprod_residual", &PairVerdict::normprod_residual);

  py::class_<PairUniqueness>(m, "PairUniqueness")
      .def_readonly("unique", &PairUniqueness::unique)
      .def_readonly("c", &PairUniqueness::c)
      .def_readonly("canonical_pair", &PairUniqueness::canonical_pair);

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("trials", &SimConfig::trials)
      .def_readwrite("signals", &SimConfig::signals)
      .def_readwrite("m", &SimConfig::m)
      .def_readwrite("weighted", &SimConfig::weighted);

  py::class_<PatternCount>(m, "PatternCount")
      .def_readonly("pattern", &PatternCount::pattern)
      .def_readonly("count", &PatternCount::count);

  py::class_<SimReport>(m, "SimReport")
      .def_readonly("prng", &SimReport::prng)
      .def_readonly("empirical_max", &SimReport::empirical_max)
      .def_readonly("empirical_mean", &SimReport::empirical_mean)
      .def_readonly("bound", &SimReport::bound)
      .def_readonly("attainment", &SimReport::attainment)
      .def_readonly("pattern_hits", &SimReport::pattern_hits);

  py::class_<ReferenceRow>(m, "ReferenceRow")
      .def_readonly("example", &ReferenceRow::example)
      .def_readonly("check", &ReferenceRow::check)
      .def_readonly("status", &ReferenceRow::status)
      .def_readonly("computed", &ReferenceRow::computed)
      .def_readonly("expected", &ReferenceRow::expected)
      .def_readonly("note", &ReferenceRow::note);

  m.def("weights_from_probabilities", &weights_from_probabilities,
        py::arg("p"), py::arg("n"), py::arg("norm_tol") = 1e-12);
  m.def("frame_operator", &frame_operator, py::arg("frame"),
        py::arg("tol") = Tolerances{});
  m.def("frame_bounds", &frame_bounds, py::arg("frame"),
        py::arg("tol") = Tolerances{});
  m.def("canonical_dual", &canonical_dual, py::arg("frame"),
        py::arg("tol") = Tolerances{});
  m.def("is_dual", &is_dual, py::arg("frame"), py::arg("dual"),
        py::arg("tol") = Tolerances{});
  m.def("apply_unitary", &apply_unitary, py::arg("frame"), py::arg("u"),
        py::arg("tol") = Tolerances{});
  m.def("dual_space", &dual_space, py::arg("frame"),
        py::arg("tol") = Tolerances{});
  m.def("dual_from_params", &dual_from_params, py::arg("params"),
        py::arg("coeffs"));
  m.def("coefficients_for_dual", &coefficients_for_dual, py::arg("params"),
        py::arg("dual"), py::arg("tol") = Tolerances{});

  m.def("error_operator",
        [](const Frame& f, const Frame& g, const ProbabilityModel& model,
           const ErasurePattern& pattern) {
          return error_operator(f, g, model, pattern).matrix;
        },
        py::arg("frame"), py::arg("dual"), py::arg("model"),
        py::arg("pattern"));
  m.def("operator_norm", &operator_norm, py::arg("matrix"));
  m.def("spectral_radius",
        py::overload_cast<const Mat&>(&spectral_radius), py::arg("matrix"));
  m.def("measure",
        [](const Frame& f, const Frame& g, const ProbabilityModel& model,
           int mult, const std::string& kind, const Tolerances& tol) {
          return measure(f, g, model, mult, kind_from_name(kind), tol);
        },
        py::arg("frame"), py::arg("dual"), py::arg("model"), py::arg("m") = 1,
        py::arg("kind") = "A", py::arg("tol") = Tolerances{});
  m.def("one_erasure_closed_form", &one_erasure_closed_form, py::arg("frame"),
        py::arg("dual"), py::arg("model"), py::arg("tol") = Tolerances{});

  m.def("pasod_search", &pasod_search, py::arg("frame"), py::arg("model"),
        py::arg("config") = SearchConfig{});
  m.def("search_measure",
        [](const Frame& f, const ProbabilityModel& model,
           const std::string& kind, const SearchConfig& cfg) {
          return search_measure(f, model, kind_from_name(kind), cfg);
        },
        py::arg("frame"), py::arg("model"), py::arg("kind") = "A",
        py::arg("config") = SearchConfig{});
  m.def("check_canonical_pasod_sufficient", &check_canonical_pasod_sufficient,
        py::arg("frame"), py::arg("model"), py::arg("tol") = Tolerances{});
  m.def("check_unique_pod", &check_unique_pod, py::arg("frame"),
        py::arg("model"), py::arg("tol") = Tolerances{});
  m.def("check_unique_pasod_tight", &check_unique_pasod_tight,
        py::arg("frame"), py::arg("model"), py::arg("tol") = Tolerances{});
  m.def("tight_equivalences", &tight_equivalences, py::arg("frame"),
        py::arg("model"), py::arg("config") = SearchConfig{},
        py::arg("tol") = Tolerances{});
  m.def("unitary_invariance_check", &unitary_invariance_check,
        py::arg("frame"), py::arg("dual"), py::arg("model"), py::arg("u"),
        py::arg("tol") = 1e-12);

  m.def("pair_verdict", &pair_verdict, py::arg("frame"), py::arg("dual"),
        py::arg("model"), py::arg("tol") = Tolerances{},
        py::arg("require_dual") = true);
  m.def("global_pair_optimum", &global_pair_optimum);
  m.def("majorization_check", &majorization_check, py::arg("norms_squared"),
        py::arg("eigenvalues"), py::arg("tol") = 1e-12);
  m.def("construct_probability_uniform_parseval",
        &construct_probability_uniform_parseval, py::arg("model"));
  m.def("frame_with_operator_and_norms", &frame_with_operator_and_norms,
        py::arg("eigenvalues"), py::arg("norms"));
  m.def("unique_pair_check_tight", &unique_pair_check_tight, py::arg("frame"),
        py::arg("model"), py::arg("tol") = Tolerances{});

  m.def("simulate", &simulate, py::arg("frame"), py::arg("dual"),
        py::arg("model"), py::arg("config") = SimConfig{},
        py::arg("tol") = Tolerances{});
  m.def("run_reference_checks", &run_reference_checks,
        py::arg("perturb") = false, py::arg("tol") = Tolerances{});

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
