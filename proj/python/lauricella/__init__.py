"""Lauricella F_A / F_B functions, their identities and the Holmgren problem."""

import json as _json

from ._lauricella import (
    DomainError,
    EvalResult,
    NonConvergenceError,
    ParameterError,
    QuadratureError,
    SingularityError,
    fa,
    fb,
    fundamental_solution,
    gauss_2f1,
    green_function,
    limit_fa,
    limit_fb,
    solve_exact_case,
    summation_fa,
    summation_fb,
)
from ._lauricella import run as _run


def run(line, seed=0):
    """Run a CLI command line; returns (exit_code, report dict)."""
    code, text = _run(line, seed)
    return code, _json.loads(text)


__all__ = [
    "DomainError",
    "EvalResult",
    "NonConvergenceError",
    "ParameterError",
    "QuadratureError",
    "SingularityError",
    "fa",
    "fb",
    "fundamental_solution",
    "gauss_2f1",
    "green_function",
    "limit_fa",
    "limit_fb",
    "run",
    "solve_exact_case",
    "summation_fa",
    "summation_fb",
]
