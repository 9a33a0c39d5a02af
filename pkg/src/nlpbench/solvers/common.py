"""Shared solve contract: result type, status codes and cancellation."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..problems.spec import ProblemSpec, evaluate_objective


class Status(str, enum.Enum):
    CONVERGED = "converged"
    MAX_ITER = "max_iter"
    TIMEOUT = "timeout"
    NUMERICAL_FAILURE = "numerical_failure"


class CancelToken:
    """Cooperative deadline polled by solvers between iterations."""

    def __init__(self, seconds: Optional[float] = None):
        self.deadline = None if seconds is None else time.perf_counter() + seconds
        self._cancelled = False

    def cancel(self) -> None:
        self._cancelled = True

    @property
    def cancelled(self) -> bool:
        if self._cancelled:
            return True
        return self.deadline is not None and time.perf_counter() >= self.deadline


NEVER = CancelToken()


@dataclass
class SolveResult:
    x_final: np.ndarray
    f_final: float
    status: Status
    iterations: int
    cpu_seconds: float = 0.0
    trace: Optional[list] = None
    multipliers: Optional[np.ndarray] = None
    message: str = ""
    extras: dict = field(default_factory=dict)

    @property
    def converged(self) -> bool:
        return self.status is Status.CONVERGED


def finish(problem: ProblemSpec, x, status: Status, iterations: int, t0: float,
           **kwargs) -> SolveResult:
    """Build a result with ``f_final`` recomputed from ``x_final``."""
    x = np.array(x, dtype=float)
    try:
        f = evaluate_objective(problem, x)
    except ArithmeticError:
        f = float("nan")
    return SolveResult(x, f, status, iterations, time.perf_counter() - t0, **kwargs)


def require_unconstrained(problem: ProblemSpec, algorithm: str) -> None:
    if problem.constrained:
        raise ValueError(f"{algorithm} handles unconstrained problems only; "
                         f"{problem.id} is constrained")
