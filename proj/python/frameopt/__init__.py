"""Probabilistic optimal dual frame analysis for erasures."""

from frameopt._core import (  # noqa: F401
    BadMultiplicityError,
    DegenerateProbabilityError,
    DimensionMismatchError,
    DualParameterization,
    Frame,
    MajorizationFailedError,
    MeasureReport,
    NotDualError,
    NotNormalizedError,
    NotSortedError,
    NotTightError,
    NotUnitaryError,
    OptimalityCertificate,
    PairUniqueness,
    PairVerdict,
    PatternCount,
    PatternValue,
    ProbabilityModel,
    RankDeficientError,
    ReferenceRow,
    SearchConfig,
    SearchResult,
    SimConfig,
    SimReport,
    TightEquivalenceReport,
    Tolerances,
    __version__,
    apply_unitary,
    canonical_dual,
    check_canonical_pasod_sufficient,
    check_unique_pasod_tight,
    check_unique_pod,
    coefficients_for_dual,
    construct_probability_uniform_parseval,
    dual_from_params,
    dual_space,
    error_operator,
    frame_bounds,
    frame_operator,
    frame_with_operator_and_norms,
    global_pair_optimum,
    is_dual,
    majorization_check,
    measure,
    one_erasure_closed_form,
    operator_norm,
    pair_verdict,
    pasod_search,
    run_reference_checks,
    search_measure,
    simulate,
    spectral_radius,
    tight_equivalences,
    unique_pair_check_tight,
    unitary_invariance_check,
    weights_from_probabilities,
)
