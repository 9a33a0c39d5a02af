"""Sequential gradient-restoration algorithm (SGRA).

Each cycle first restores feasibility with least-norm Gauss-Newton
corrections ``dz = -J^T (J J^T)^-1 h`` until ``P <= epsilon_1``, then takes
one gradient step along ``-(grad f + J^T lam)`` with least-squares
multipliers, backtracking on ``F = f + lam^T h``.  Unconstrained problems
run the gradient phase only.
"""

from __future__ import annotations

import time

import numpy as np

from ..problems.spec import EvaluationError, ProblemSpec
from ..transform import PerformanceIndices, add_slacks, estimate_multipliers, indices_from
from .common import NEVER, CancelToken, SolveResult, Status, finish
from .settings import SolverSettings, resolve_profile

ARMIJO_C1 = 1e-4
MAX_HALVINGS = 50
STAGNATION_WINDOW = 20
STAGNATION_MIN = 1e-16
MAX_RESTORATION_STEPS = 1000


class _Stagnation(Exception):
    pass


def _restore(aug, z, eps1, cancel):
    """Drive ``P = h^T h`` below ``eps1``; returns the restored point."""
    h = aug.eq_residual(z)
    P = h @ h
    history = [P]
    steps = 0
    while P > eps1:
        if cancel.cancelled or steps >= MAX_RESTORATION_STEPS:
            raise _Stagnation("restoration did not reach epsilon_1")
        J = aug.jacobian(z)
        dz = np.linalg.lstsq(J, -h, rcond=None)[0]
        alpha = 1.0
        for _ in range(MAX_HALVINGS + 1):
            trial = z + alpha * dz
            try:
                h_t = aug.eq_residual(trial)
                P_t = h_t @ h_t
            except EvaluationError:
                P_t = np.inf
            if P_t < P:
                break
            alpha *= 0.5
        else:
            raise _Stagnation("restoration step found no decrease")
        z, h, P = trial, h_t, P_t
        steps += 1
        history.append(P)
        if len(history) > STAGNATION_WINDOW and \
                history[-STAGNATION_WINDOW - 1] - P < STAGNATION_MIN:
            raise _Stagnation("restoration stagnated")
    return z, steps


def solve_sgra(problem: ProblemSpec, x0, settings: SolverSettings | None = None,
               cancel: CancelToken = NEVER) -> SolveResult:
    settings = settings or resolve_profile("sgra", "pnp")
    eps1, eps2 = settings["epsilon_1"], settings["epsilon_2"]
    max_cycles = int(settings["max_cycles"])
    aug = add_slacks(problem, settings["slack_init"], include_bounds=problem.constrained)
    constrained = aug.has_constraints
    t0 = time.perf_counter()
    z = aug.initial_point(x0)
    trace = []
    lam = np.zeros(aug.n_constraints)
    idx = PerformanceIndices.of(np.nan, np.nan)
    alpha0 = 1.0
    restorations = 0

    def done(status, k, msg=""):
        return finish(problem, z[:aug.n], status, k, t0, trace=trace, multipliers=lam,
                      message=msg, extras={"z_final": z, "P": idx.P, "Q": idx.Q,
                                           "R": idx.R, "restoration_steps": restorations})

    for k in range(max_cycles + 1):
        if cancel.cancelled:
            return done(Status.TIMEOUT, k)
        try:
            if constrained:
                z, n_rest = _restore(aug, z, eps1, cancel)
                restorations += n_rest
                h = aug.eq_residual(z)
                J = aug.jacobian(z)
            else:
                h, J = np.zeros(0), np.zeros((0, z.size))
            g = aug.gradient(z)
        except _Stagnation as exc:
            if cancel.cancelled:
                return done(Status.TIMEOUT, k, str(exc))
            return done(Status.NUMERICAL_FAILURE, k, str(exc))
        except (EvaluationError, np.linalg.LinAlgError) as exc:
            return done(Status.NUMERICAL_FAILURE, k, str(exc))
        lam = estimate_multipliers(aug, z, g, J) if constrained else np.zeros(0)
        idx = indices_from(g, J, h, lam)
        trace.append(idx)
        if idx.P <= eps1 and idx.Q <= eps2:
            return done(Status.CONVERGED, k)
        if k == max_cycles:
            break
        # Gradient phase on F = f + lam^T h.
        d = -(g + J.T @ lam) if constrained else -g
        F0 = aug.objective(z) + (lam @ h if constrained else 0.0)
        slope = -(d @ d)
        # Adaptive first trial: twice the previously accepted step.
        alpha = 2 * alpha0 if k else 1.0
        for _ in range(MAX_HALVINGS + 1):
            trial = z + alpha * d
            try:
                F = aug.objective(trial)
                if constrained:
                    F += lam @ aug.eq_residual(trial)
            except EvaluationError:
                F = np.inf
            if F <= F0 + ARMIJO_C1 * alpha * slope:
                break
            alpha *= 0.5
        else:
            return done(Status.NUMERICAL_FAILURE, k, "gradient phase found no decrease")
        alpha0 = alpha
        z = trial
    return done(Status.MAX_ITER, max_cycles)
