"""Numerical verification of Basel-problem identities (C++ core)."""

import json

from ._core import (
    NotConverged,
    PoleError,
    __version__,
    arctan_power_coeff,
    describe,
    incomplete_beta,
    integrate_semi_infinite,
    integrate_unit,
    list_ids,
    polylog,
    polylog_real,
    verify,
    verify_all_json,
)


def verify_all(grid=5, tol=None, ids=()):
    """Full report as a dict with the same schema as the CLI's JSON output."""
    return json.loads(verify_all_json(grid, tol, list(ids)))


__all__ = [
    "NotConverged",
    "PoleError",
    "__version__",
    "arctan_power_coeff",
    "describe",
    "incomplete_beta",
    "integrate_semi_infinite",
    "integrate_unit",
    "list_ids",
    "polylog",
    "polylog_real",
    "verify",
    "verify_all",
    "verify_all_json",
]
