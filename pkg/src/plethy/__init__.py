"""Restriction coefficients from GL_n to S_n via plethysm with H, with independent checks."""

from .partitions import Partition, enumerate_partitions, partitions_of
from .plethysm import h_series, plethysm_into_series
from .polyring import Poly
from .restriction import (
    brute_force_restriction,
    corollary_sign_multiplicity,
    corollary_trivial_multiplicity,
    littlewood_restriction,
)
from .symfn import SymFn
from .vecpart import count_pk, count_qk

__all__ = [
    "Partition",
    "Poly",
    "SymFn",
    "brute_force_restriction",
    "corollary_sign_multiplicity",
    "corollary_trivial_multiplicity",
    "count_pk",
    "count_qk",
    "enumerate_partitions",
    "h_series",
    "littlewood_restriction",
    "partitions_of",
    "plethysm_into_series",
]


def clear_caches() -> None:
    """Drop every memoized table (used to time computations from a cold start)."""
    from . import induction, partitions, plethysm, polyring, restriction, symfn, vecpart

    for module in (partitions, polyring, symfn, plethysm, vecpart, induction, restriction):
        for obj in vars(module).values():
            if callable(getattr(obj, "cache_clear", None)):
                obj.cache_clear()
