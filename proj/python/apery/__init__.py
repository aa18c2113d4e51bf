"""Invariants of simplicial affine semigroups over the nonnegative integers.

Thin convenience layer over the compiled core; all arithmetic is exact.
"""

import json as _json

from apery._core import (
    Error,
    Semigroup,
    apery_set,
    betas_and_d_s,
    gr_is_cohen_macaulay,
    gr_is_gorenstein,
    has_monomial_reduction,
    is_cohen_macaulay,
    is_gorenstein,
    is_minimal_multiplicity,
    multiplicity,
    parse_generators,
    reduction_number,
    regularity,
)
from apery import _core as _core

__version__ = "0.1.0"

__all__ = [
    "Error",
    "Semigroup",
    "analyze",
    "apery_set",
    "betas_and_d_s",
    "gr_is_cohen_macaulay",
    "gr_is_gorenstein",
    "has_monomial_reduction",
    "is_cohen_macaulay",
    "is_gorenstein",
    "is_minimal_multiplicity",
    "multiplicity",
    "parse_generators",
    "reduction_number",
    "regularity",
]


def analyze(generators, hilbert_cap=40):
    """Full report as a plain dict, same schema as the CLI JSON output."""
    return _json.loads(_core.analyze_json(generators, hilbert_cap))
