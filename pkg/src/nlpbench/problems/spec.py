"""Problem container and evaluation entry points.

Every objective and constraint function in the registry accepts either a
single point of shape ``(n,)`` or a batch of shape ``(m, n)`` and indexes
coordinates with ``x[..., i]``.  The finite-difference engine and the swarm
solver rely on this to evaluate whole stencils/populations in one call.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

Vector = np.ndarray
ScalarMap = Callable[[np.ndarray], np.ndarray]
VectorMap = Callable[[np.ndarray], np.ndarray]

# Half-width used in place of an infinite bound when sampling initial guesses.
SAMPLING_HALF_WIDTH = 1e3


class Provenance(str, enum.Enum):
    PAPER_CLAIMED = "paper-claimed"
    ORACLE_CORRECTED = "oracle-corrected"
    BEST_KNOWN = "best-known"


class EvaluationError(ArithmeticError):
    """A problem function could not be evaluated at ``x``.

    ``coordinate`` names the offending decision variable when the failure
    is a registered singularity (e.g. the pole of the Rump function);
    finite-difference code also fills it with the perturbed index.
    """

    def __init__(self, message: str, problem_id: str = "", x=None,
                 coordinate: Optional[int] = None):
        super().__init__(message)
        self.problem_id = problem_id
        self.x = None if x is None else np.array(x, dtype=float)
        self.coordinate = coordinate


@dataclass(frozen=True)
class Singularity:
    """Hyperplane ``x[coordinate] == value`` where a function has a pole."""

    coordinate: int
    value: float

    def distance(self, x: np.ndarray) -> np.ndarray:
        return np.abs(np.asarray(x)[..., self.coordinate] - self.value)


@dataclass(frozen=True)
class Optimum:
    x: Optional[np.ndarray]
    f: float


@dataclass(frozen=True, eq=False)
class ProblemSpec:
    id: str
    name: str
    dimension: int
    lower_bounds: np.ndarray
    upper_bounds: np.ndarray
    objective: ScalarMap
    analytic_gradient: Optional[VectorMap] = None
    analytic_hessian: Optional[Callable[[np.ndarray], np.ndarray]] = None
    # Vectorised constraint maps returning shape (..., n_eq) / (..., n_ineq).
    eq_map: Optional[VectorMap] = None
    ineq_map: Optional[VectorMap] = None
    n_eq: int = 0
    n_ineq: int = 0
    # The appendix statement of the optimum, kept verbatim for validation.
    claimed_optima: tuple = ()
    reference_optima: tuple = ()
    optimum_provenance: Provenance = Provenance.PAPER_CLAIMED
    singularities: tuple = ()
    # Indices of constraints known to be linear (their Hessians vanish).
    linear_eq: frozenset = frozenset()
    linear_ineq: frozenset = frozenset()
    notes: str = ""
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        lo = np.asarray(self.lower_bounds, dtype=float)
        hi = np.asarray(self.upper_bounds, dtype=float)
        if lo.shape != (self.dimension,) or hi.shape != (self.dimension,):
            raise ValueError(f"{self.id}: bounds must have length {self.dimension}")
        bounded = np.isfinite(lo) & np.isfinite(hi)
        if np.any(lo[bounded] >= hi[bounded]):
            raise ValueError(f"{self.id}: lower bound must be below upper bound")
        lo.setflags(write=False)
        hi.setflags(write=False)
        object.__setattr__(self, "lower_bounds", lo)
        object.__setattr__(self, "upper_bounds", hi)

    # -- descriptive helpers -------------------------------------------------

    @property
    def constrained(self) -> bool:
        return self.id.startswith("B.")

    @property
    def f_star(self) -> float:
        return self.reference_optima[0].f

    @property
    def x_star(self) -> Optional[np.ndarray]:
        return self.reference_optima[0].x

    @property
    def sampling_lower(self) -> np.ndarray:
        return np.where(np.isfinite(self.lower_bounds), self.lower_bounds,
                        -SAMPLING_HALF_WIDTH)

    @property
    def sampling_upper(self) -> np.ndarray:
        return np.where(np.isfinite(self.upper_bounds), self.upper_bounds,
                        SAMPLING_HALF_WIDTH)

    @property
    def enforces_bounds(self) -> bool:
        """Constrained (B) domains are part of the problem; unconstrained (A) domains
        only describe where initial guesses are drawn."""
        return self.constrained

    @property
    def eq_constraints(self) -> list:
        return [_component(self.eq_map, j) for j in range(self.n_eq)]

    @property
    def ineq_constraints(self) -> list:
        return [_component(self.ineq_map, i) for i in range(self.n_ineq)]

    def bound_rows(self):
        """Finite bounds written as ``g(x) <= 0`` rows.

        Returns ``(index, sign, value)`` triples; the row is
        ``sign * (x[index] - value)``.
        """
        rows = []
        if not self.enforces_bounds:
            return rows
        for i in range(self.dimension):
            if np.isfinite(self.lower_bounds[i]):
                rows.append((i, -1.0, float(self.lower_bounds[i])))
            if np.isfinite(self.upper_bounds[i]):
                rows.append((i, 1.0, float(self.upper_bounds[i])))
        return rows

    def summary(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "dimension": self.dimension,
            "bounds": [[_json_bound(lo), _json_bound(hi)]
                       for lo, hi in zip(self.lower_bounds, self.upper_bounds)],
            "n_eq": self.n_eq,
            "n_ineq": self.n_ineq,
            "f_star": self.f_star,
            "provenance": self.optimum_provenance.value,
        }


def _json_bound(v: float):
    return float(v) if np.isfinite(v) else None


def _component(vector_map: VectorMap, j: int) -> ScalarMap:
    def c(x):
        return vector_map(x)[..., j]
    return c


# -- evaluation --------------------------------------------------------------

def _as_point(problem: ProblemSpec, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape[-1:] != (problem.dimension,) or x.ndim not in (1, 2):
        raise ValueError(
            f"{problem.id}: expected a vector of length {problem.dimension}, "
            f"got shape {x.shape}")
    return x


def _check_singularities(problem: ProblemSpec, x: np.ndarray) -> None:
    for s in problem.singularities:
        if np.any(s.distance(x) == 0.0):
            raise EvaluationError(
                f"{problem.id}: singular at x[{s.coordinate}] = {s.value}",
                problem.id, x, s.coordinate)


def _finite_or_raise(problem: ProblemSpec, x: np.ndarray, value, what: str):
    if not np.all(np.isfinite(value)):
        coordinate = None
        if x.ndim == 2:
            bad = ~np.isfinite(np.reshape(value, (x.shape[0], -1))).all(axis=1)
            x = x[np.argmax(bad)]
        raise EvaluationError(f"{problem.id}: {what} is not finite at x = {x}",
                              problem.id, x, coordinate)
    return value


def evaluate_objective(problem: ProblemSpec, x) -> float | np.ndarray:
    """Objective value at ``x`` (or at each row of a batch)."""
    x = _as_point(problem, x)
    _check_singularities(problem, x)
    with np.errstate(all="ignore"):
        value = problem.objective(x)
    value = _finite_or_raise(problem, x, value, "objective")
    return float(value) if x.ndim == 1 else np.asarray(value, dtype=float)


def evaluate_constraints(problem: ProblemSpec, x):
    """``(eq_values, ineq_values)`` for the printed constraints."""
    x = _as_point(problem, x)
    _check_singularities(problem, x)
    lead = x.shape[:-1]
    with np.errstate(all="ignore"):
        eq = (np.asarray(problem.eq_map(x), dtype=float) if problem.n_eq
              else np.zeros(lead + (0,)))
        ineq = (np.asarray(problem.ineq_map(x), dtype=float) if problem.n_ineq
                else np.zeros(lead + (0,)))
    _finite_or_raise(problem, x, eq, "equality constraint")
    _finite_or_raise(problem, x, ineq, "inequality constraint")
    return eq, ineq


def evaluate_bound_rows(problem: ProblemSpec, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    rows = problem.bound_rows()
    if not rows:
        return np.zeros(x.shape[:-1] + (0,))
    idx = np.array([r[0] for r in rows])
    sign = np.array([r[1] for r in rows])
    val = np.array([r[2] for r in rows])
    return sign * (x[..., idx] - val)


def all_inequalities(problem: ProblemSpec, x) -> np.ndarray:
    """Printed inequalities followed by the enforced bound rows."""
    _, ineq = evaluate_constraints(problem, x)
    return np.concatenate([ineq, evaluate_bound_rows(problem, x)], axis=-1)


def max_violation(problem: ProblemSpec, x) -> float:
    eq, _ = evaluate_constraints(problem, x)
    g = all_inequalities(problem, x)
    parts = [np.abs(eq).ravel(), np.maximum(g, 0.0).ravel()]
    return float(max((p.max() for p in parts if p.size), default=0.0))


def near_singularity(problem: ProblemSpec, x, tol: float = 1e-3) -> bool:
    return any(bool(np.any(s.distance(x) < tol)) for s in problem.singularities)


def stack_points(points: Sequence) -> np.ndarray:
    return np.vstack([np.asarray(p, dtype=float) for p in points])
