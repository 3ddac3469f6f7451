"""Exact lattice-simplex groups, h*-polynomials and binary-code classifications."""

from ._latcode import (
    LatcodeError,
    classify,
    count_points,
    ehrhart,
    enumerate_escc,
    group_of_simplex,
    hstar,
    hstar_from_code,
    verify_tables,
)

__all__ = [
    "LatcodeError",
    "classify",
    "count_points",
    "ehrhart",
    "enumerate_escc",
    "group_of_simplex",
    "hstar",
    "hstar_from_code",
    "verify_tables",
]
