"""Five solvers behind one ``solve`` contract."""

from __future__ import annotations

import numpy as np

from ..problems.spec import ProblemSpec
from .apso import solve_apso
from .bfgs import solve_bfgs
from .common import NEVER, CancelToken, SolveResult, Status
from .quasilinear import solve_mqa, solve_sqa
from .settings import (
    ALGORITHMS,
    PROFILE_LABELS,
    PROFILES,
    SolverSettings,
    load_profiles,
    profile_table,
    resolve_profile,
    save_profiles,
)
from .sgra import solve_sgra

__all__ = [
    "ALGORITHMS", "PROFILES", "PROFILE_LABELS", "CancelToken", "SolveResult",
    "SolverSettings", "Status", "load_profiles", "profile_table", "resolve_profile",
    "save_profiles", "solve", "solve_apso", "solve_bfgs", "solve_mqa", "solve_sgra",
    "solve_sqa", "supports",
]

_SOLVERS = {
    "bfgs": solve_bfgs,
    "sqa": solve_sqa,
    "mqa": solve_mqa,
    "sgra": solve_sgra,
}


def supports(algorithm: str, problem: ProblemSpec) -> bool:
    """BFGS is the only unconstrained-only method."""
    return not (algorithm == "bfgs" and problem.constrained)


def solve(problem: ProblemSpec, algorithm: str, x0, settings: SolverSettings | None = None,
          profile: str = "pnp", seed: int = 0, cancel: CancelToken = NEVER) -> SolveResult:
    settings = settings or resolve_profile(algorithm, profile)
    if algorithm != "apso" and algorithm not in _SOLVERS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    # Divergent iterates overflow routinely; the solvers detect non-finite values.
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        if algorithm == "apso":
            return solve_apso(problem, x0, settings, seed=seed, cancel=cancel)
        return _SOLVERS[algorithm](problem, x0, settings, cancel=cancel)
