"""BFGS quasi-Newton method with an Armijo backtracking line search.

Before each update H is enlarged by s'y / y'Hy whenever that ratio exceeds one
(one-sided self-scaling), so the inverse-Hessian approximation keeps up with
curvature that falls by orders of magnitude along the path, as on high-degree
polynomial objectives. Quadratics never trigger the rescaling.
"""

from __future__ import annotations

import time

import numpy as np

from ..calculus import objective_gradient
from ..problems.spec import EvaluationError, ProblemSpec, evaluate_objective
from ..transform import PerformanceIndices
from .common import NEVER, CancelToken, SolveResult, Status, finish, require_unconstrained
from .settings import SolverSettings, resolve_profile

ARMIJO_C1 = 1e-4
MAX_HALVINGS = 50
CURVATURE_MIN = 1e-12


def bfgs_update(H: np.ndarray, s: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Inverse-Hessian BFGS update; the result is symmetrised."""
    rho = 1.0 / (y @ s)
    Hy = H @ y
    H = H - rho * (np.outer(s, Hy) + np.outer(Hy, s)) + (rho ** 2 * (y @ Hy) + rho) * np.outer(s, s)
    return 0.5 * (H + H.T)


def _safe_f(problem, x):
    try:
        return evaluate_objective(problem, x)
    except EvaluationError:
        return np.inf


def solve_bfgs(problem: ProblemSpec, x0, settings: SolverSettings | None = None,
               cancel: CancelToken = NEVER) -> SolveResult:
    require_unconstrained(problem, "bfgs")
    settings = settings or resolve_profile("bfgs", "pnp")
    step_tol = settings["StepTolerance"]
    fun_tol = settings["FunctionTolerance"]
    opt_tol = settings["OptimalityTolerance"]
    max_iter = int(settings["MaxIterations"])

    t0 = time.perf_counter()
    x = np.array(x0, dtype=float)
    n = x.size
    H = np.eye(n)
    scaled = False
    skipped = 0
    trace = []
    try:
        f = evaluate_objective(problem, x)
        g = objective_gradient(problem, x)
    except EvaluationError as exc:
        return finish(problem, x, Status.NUMERICAL_FAILURE, 0, t0, trace=trace,
                      message=str(exc))

    def done(status, k, reason):
        return finish(problem, x, status, k, t0, trace=trace, message=reason,
                      extras={"stop_reason": reason, "skipped_updates": skipped})

    for k in range(max_iter):
        trace.append(PerformanceIndices.of(0.0, g @ g))
        if np.max(np.abs(g)) <= opt_tol:
            return done(Status.CONVERGED, k, "optimality")
        if cancel.cancelled:
            return done(Status.TIMEOUT, k, "timeout")
        d = -H @ g
        slope = g @ d
        if not slope < 0:
            H = np.eye(n)
            d = -g
            slope = -(g @ g)
        alpha = 1.0
        for _ in range(MAX_HALVINGS + 1):
            x_new = x + alpha * d
            f_new = _safe_f(problem, x_new)
            if f_new <= f + ARMIJO_C1 * alpha * slope:
                break
            alpha *= 0.5
        else:
            return done(Status.NUMERICAL_FAILURE, k, "line search failed")
        try:
            g_new = objective_gradient(problem, x_new)
        except EvaluationError as exc:
            return done(Status.NUMERICAL_FAILURE, k, str(exc))
        s = x_new - x
        y = g_new - g
        sy = s @ y
        if sy > CURVATURE_MIN:
            if not scaled:
                H = (sy / (y @ y)) * np.eye(n)
                scaled = True
            else:
                H = max(1.0, sy / (y @ H @ y)) * H
            H = bfgs_update(H, s, y)
        else:
            skipped += 1
        df = abs(f - f_new)
        x, f, g = x_new, f_new, g_new
        if np.linalg.norm(s) <= step_tol:
            trace.append(PerformanceIndices.of(0.0, g @ g))
            return done(Status.CONVERGED, k + 1, "step")
        if df <= fun_tol * (1 + abs(f)):
            trace.append(PerformanceIndices.of(0.0, g @ g))
            return done(Status.CONVERGED, k + 1, "function")
    trace.append(PerformanceIndices.of(0.0, g @ g))
    if np.max(np.abs(g)) <= opt_tol:
        return done(Status.CONVERGED, max_iter, "optimality")
    return done(Status.MAX_ITER, max_iter, "max_iter")
