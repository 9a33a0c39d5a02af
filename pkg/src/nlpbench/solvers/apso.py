"""Accelerated particle swarm optimisation (global best only).

    x <- (1 - beta) x + beta g* + alpha0 * gamma**t * eps,  eps ~ N(0, I)

Constraints enter through the penalty ``w * (sum max(0, c_i)^2 + sum c_j^2)``;
positions are clamped to the sampling box.
"""

from __future__ import annotations

import time

import numpy as np

from ..problems.spec import ProblemSpec, evaluate_bound_rows, max_violation
from .common import NEVER, CancelToken, SolveResult, Status, finish
from .settings import SolverSettings, resolve_profile

FEASIBILITY_TOL = 1e-4


def penalized_fitness(problem: ProblemSpec, X: np.ndarray, weight: float) -> np.ndarray:
    """Penalised fitness of each row; rows that cannot be evaluated get ``inf``."""
    X = np.atleast_2d(X)
    with np.errstate(all="ignore"):
        fit = np.asarray(problem.objective(X), dtype=float)
        if problem.n_eq:
            h = problem.eq_map(X)
            fit = fit + weight * np.sum(h ** 2, axis=-1)
        if problem.n_ineq:
            c = np.maximum(problem.ineq_map(X), 0.0)
            fit = fit + weight * np.sum(c ** 2, axis=-1)
        b = np.maximum(evaluate_bound_rows(problem, X), 0.0)
        fit = fit + weight * np.sum(b ** 2, axis=-1)
    for s in problem.singularities:
        fit = np.where(s.distance(X) == 0.0, np.inf, fit)
    return np.where(np.isfinite(fit), fit, np.inf)


def apso_move(X, gbest, alpha, beta, rng, lo, hi):
    """One swarm update with clamping; ``alpha`` may be a per-coordinate array."""
    eps = rng.standard_normal(X.shape)
    return np.clip((1 - beta) * X + beta * gbest + alpha * eps, lo, hi)


def solve_apso(problem: ProblemSpec, x0, settings: SolverSettings | None = None,
               seed: int = 0, cancel: CancelToken = NEVER) -> SolveResult:
    settings = settings or resolve_profile("apso", "pnp")
    m = int(settings["no_particles"])
    iters = int(settings["no_iterations"])
    gamma = settings["gamma"]
    beta = settings["beta"]
    weight = settings["penalty_weight"]
    lo, hi = problem.sampling_lower, problem.sampling_upper
    alpha0 = settings["alpha0"] * (hi - lo)

    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    X = rng.uniform(lo, hi, size=(m, problem.dimension))
    X[0] = np.clip(np.asarray(x0, dtype=float), lo, hi)
    fit = penalized_fitness(problem, X, weight)
    j = int(np.argmin(fit))
    gbest, gfit = X[j].copy(), float(fit[j])
    trace = [gfit]
    status = Status.MAX_ITER
    t = 0
    for t in range(1, iters + 1):
        if cancel.cancelled:
            status = Status.TIMEOUT
            break
        X = apso_move(X, gbest, alpha0 * gamma ** t, beta, rng, lo, hi)
        fit = penalized_fitness(problem, X, weight)
        j = int(np.argmin(fit))
        if fit[j] < gfit:
            gbest, gfit = X[j].copy(), float(fit[j])
        trace.append(gfit)
    else:
        t = iters
    if status is not Status.TIMEOUT:
        try:
            feasible = (not problem.constrained) or \
                max_violation(problem, gbest) <= FEASIBILITY_TOL
        except ArithmeticError:
            feasible = False
        status = Status.CONVERGED if feasible else Status.MAX_ITER
    return finish(problem, gbest, status, t, t0, extras={"fitness_trace": trace,
                                                        "best_fitness": gfit})
