"""Codimension and top components of product-rank loci of matrix tuples."""

from ._core import (
    Disagreement,
    InvalidInput,
    NotFound,
    OverflowError,
    ResourceLimit,
    closest_point,
    closure_components,
    components,
    fiber_codim,
    lowest_kernel,
    orbit_codim,
    q_series,
    qip,
    rlcm,
    rlct,
    run_cli,
    selfcheck,
)

__all__ = [
    "Disagreement",
    "InvalidInput",
    "NotFound",
    "OverflowError",
    "ResourceLimit",
    "closest_point",
    "closure_components",
    "components",
    "fiber_codim",
    "lowest_kernel",
    "orbit_codim",
    "q_series",
    "qip",
    "rlcm",
    "rlct",
    "run_cli",
    "selfcheck",
]
