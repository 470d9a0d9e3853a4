"""Burst detection with optimised base and change rates."""

from ._core import (
    CapacityError,
    Diagnostics,
    DomainError,
    Error,
    Family,
    InfeasibleError,
    InputError,
    Solution,
    approx_exp,
    approx_geo,
    exact,
    exp_alpha,
    generate,
    geo_alpha,
    hamming,
    refit_beta,
    score,
    viterbi,
)

__all__ = [
    "CapacityError",
    "Diagnostics",
    "DomainError",
    "Error",
    "Family",
    "InfeasibleError",
    "InputError",
    "Solution",
    "approx_exp",
    "approx_geo",
    "exact",
    "exp_alpha",
    "generate",
    "geo_alpha",
    "hamming",
    "refit_beta",
    "score",
    "viterbi",
]
