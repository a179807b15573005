"""Rating alternatives from pairwise comparison matrices by tropical rank-one approximation."""

from ._core import (
    DEFAULT_TOLERANCE,
    DomainError,
    PreconditionError,
    UsageError,
    check_matrix,
    conj_transpose,
    derive_weights,
    eigenspace_generators,
    kleene_star,
    mat_add,
    mat_distance,
    mat_mul,
    normalize,
    rank_scores,
    rate,
    reduce_generators,
    run_ahp,
    solve_multi,
    solve_single,
    solve_weighted,
    spectral_radius,
    trace,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "DomainError",
    "PreconditionError",
    "UsageError",
    "check_matrix",
    "conj_transpose",
    "derive_weights",
    "eigenspace_generators",
    "kleene_star",
    "mat_add",
    "mat_distance",
    "mat_mul",
    "normalize",
    "rank_scores",
    "rate",
    "reduce_generators",
    "run_ahp",
    "solve_multi",
    "solve_single",
    "solve_weighted",
    "spectral_radius",
    "trace",
]
