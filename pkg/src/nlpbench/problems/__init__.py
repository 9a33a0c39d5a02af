"""Registry of the 60 benchmark problems (A.01-A.30 unconstrained,
B.01-B.30 constrained)."""

from __future__ import annotations

import json
from typing import Optional

import numpy as np

from . import constrained, unconstrained
from .spec import (
    EvaluationError,
    Optimum,
    ProblemSpec,
    Provenance,
    Singularity,
    all_inequalities,
    evaluate_bound_rows,
    evaluate_constraints,
    evaluate_objective,
    max_violation,
    near_singularity,
)

try:
    from ._optima import REFERENCE
except ImportError:  # generator not run yet
    REFERENCE = {}

__all__ = [
    "EvaluationError", "Optimum", "ProblemSpec", "Provenance", "Singularity",
    "all_inequalities", "catalog_json", "evaluate_bound_rows",
    "evaluate_constraints", "evaluate_objective", "get_problem",
    "list_problems", "max_violation", "near_singularity", "problem_ids",
]


def _optima(points) -> tuple:
    return tuple(Optimum(None if x is None else np.asarray(x, dtype=float), float(f))
                 for x, f in points)


def _reference(pid: str, claimed: tuple, default: Provenance):
    entry = REFERENCE.get(pid)
    if entry is None:
        return claimed, default
    # Frozen entries hold polished minimizers with f* = f(x*) exactly.
    provenance = Provenance(entry["provenance"])
    if entry["x"] is None:
        return (Optimum(None, float(entry["f"])),), provenance
    return tuple(Optimum(np.asarray(x, dtype=float), float(entry["f"]))
                 for x in entry["x"]), provenance


def _build() -> dict:
    registry = {}
    for pid, name, n, (lo, hi), f, g, h, claimed, singular in unconstrained.TABLE:
        claimed = _optima(claimed)
        ref, prov = _reference(pid, claimed, Provenance.PAPER_CLAIMED)
        registry[pid] = ProblemSpec(
            id=pid, name=name, dimension=n, lower_bounds=lo, upper_bounds=hi,
            objective=f, analytic_gradient=g, analytic_hessian=h,
            claimed_optima=claimed, reference_optima=ref,
            optimum_provenance=prov, singularities=tuple(singular))
    for row in constrained.TABLE:
        pid = row["id"]
        eq_map, n_eq = row.get("eq", (None, 0))
        ineq_map, n_ineq = row.get("ineq", (None, 0))
        claimed = _optima(row["claimed"])
        default = Provenance.BEST_KNOWN if row.get("best_known") else Provenance.PAPER_CLAIMED
        ref, prov = _reference(pid, claimed, default)
        lo, hi = row["bounds"]
        registry[pid] = ProblemSpec(
            id=pid, name=f"Constrained {pid[2:]}", dimension=row["n"],
            lower_bounds=lo, upper_bounds=hi, objective=row["f"],
            analytic_gradient=row["g"], eq_map=eq_map, ineq_map=ineq_map,
            n_eq=n_eq, n_ineq=n_ineq, claimed_optima=claimed,
            reference_optima=ref, optimum_provenance=prov,
            singularities=tuple(row.get("singular", ())),
            linear_eq=frozenset(row.get("lin_eq", ())),
            linear_ineq=frozenset(row.get("lin_ineq", ())))
    return registry


_REGISTRY = _build()


def problem_ids() -> list:
    return sorted(_REGISTRY)


def get_problem(problem_id: str) -> ProblemSpec:
    try:
        return _REGISTRY[problem_id]
    except KeyError:
        raise KeyError(f"unknown problem id {problem_id!r}") from None


def list_problems(constrained: Optional[bool] = None,
                  max_dimension: Optional[int] = None) -> list:
    """Problems sorted by id, filtered conjunctively."""
    out = []
    for pid in problem_ids():
        p = _REGISTRY[pid]
        if constrained is not None and p.constrained != constrained:
            continue
        if max_dimension is not None and p.dimension > max_dimension:
            continue
        out.append(p)
    return out


def catalog_json(problems=None, indent: Optional[int] = 2) -> str:
    problems = list_problems() if problems is None else problems
    return json.dumps([p.summary() for p in problems], indent=indent)
