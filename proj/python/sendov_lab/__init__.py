"""Critical-point containment certificates for factored polynomials."""

from ._core import (  # noqa: F401
    AsymptoticConfig,
    CoefficientPolynomial,
    ConvergenceError,
    DiskCertificate,
    FactoredPolynomial,
    HalfplaneWitness,
    HypothesisError,
    HypothesisIVResult,
    N0Result,
    NotLocatedError,
    RemainderRule,
    RootResult,
    SearchReport,
    SearchSpace,
    SendovWitness,
    SolveOptions,
    Thm2Report,
    TraceEntry,
    ValidationError,
    __version__,
    all_roots,
    build_P,
    build_f,
    build_fn,
    build_fn_displayed,
    canonicalize,
    check_hypothesis_iv,
    corollary1_applicable,
    corollary1_witness,
    deflated_derivative,
    derivative,
    expand,
    find_n0,
    free_critical_points,
    gauss_lucas_check,
    lemma_critical_point,
    lemma_distance,
    lemma_predicate,
    margin,
    maximize_margin,
    phi,
    remark1_check,
    remark1_value,
    sendov_witness,
    solve_a0,
    thm1_disk,
    thm1_halfplane_witness,
    thm1_identity_residual,
    thm2_certificate,
)
