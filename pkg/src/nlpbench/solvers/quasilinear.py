"""Sequential (SQA) and modified (MQA) quasilinearization.

Both linearise the optimality system of ``F = f + lam^T h`` on the
slack-augmented problem and solve the Newton/KKT system

    [H_F  J^T] [dz   ]   [-grad f]
    [J    0  ] [lam^ ] = [-h     ]

SQA always takes the full step.  MQA halves the step until the
performance index (Q unconstrained, R = P + Q constrained) strictly
decreases, which guarantees descent.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from ..problems.spec import EvaluationError, ProblemSpec
from ..transform import (
    AugmentedProblem,
    PerformanceIndices,
    add_slacks,
    estimate_multipliers,
    indices_from,
)
from .common import NEVER, CancelToken, SolveResult, Status, finish
from .settings import SolverSettings, resolve_profile

COND_MAX = 1e12
DAMPING_BASE = 1e-8
DAMPING_STEPS = 40


def solve_kkt(H, J, g, h):
    """Solve the Newton/KKT system, damping ``+mu`` on the Hessian block and
    ``-mu`` on the zero block with ``mu = 1e-8 * 2**k`` while the matrix is
    ill-conditioned.  Returns ``(dz, lam_hat, mu)``.
    """
    n, m = H.shape[0], J.shape[0]
    K = np.block([[H, J.T], [J, np.zeros((m, m))]]) if m else H
    rhs = np.concatenate([-g, -h])
    signs = np.concatenate([np.ones(n), -np.ones(m)])
    for k in range(-1, DAMPING_STEPS + 1):
        mu = 0.0 if k < 0 else DAMPING_BASE * 2.0 ** k
        Km = K + np.diag(mu * signs) if mu else K
        if not np.all(np.isfinite(Km)):
            break
        if np.linalg.cond(Km) <= COND_MAX:
            sol = np.linalg.solve(Km, rhs)
            return sol[:n], sol[n:], mu
    raise np.linalg.LinAlgError("KKT matrix singular after damping ladder")


@dataclass
class _State:
    z: np.ndarray
    g: np.ndarray
    h: np.ndarray
    J: np.ndarray
    lam: np.ndarray
    idx: PerformanceIndices


def _state(aug: AugmentedProblem, z, lam=None) -> _State:
    g = aug.gradient(z)
    if not aug.has_constraints:
        return _State(z, g, np.zeros(0), np.zeros((0, z.size)), np.zeros(0),
                      PerformanceIndices.of(0.0, g @ g))
    h = aug.eq_residual(z)
    J = aug.jacobian(z)
    if lam is None:
        lam = estimate_multipliers(aug, z, g, J)
    return _State(z, g, h, J, lam, indices_from(g, J, h, lam))


def _merit(aug: AugmentedProblem, idx: PerformanceIndices) -> float:
    return idx.R if aug.has_constraints else idx.Q


def _stop(aug, idx, eps1, eps2) -> bool:
    return idx.R <= eps2 if aug.has_constraints else idx.Q <= eps1


def _quasilinear(problem: ProblemSpec, x0, settings: SolverSettings,
                 cancel: CancelToken, modified: bool) -> SolveResult:
    eps1, eps2 = settings["epsilon_1"], settings["epsilon_2"]
    max_iter = int(settings["max_iter"])
    shrink = settings.knobs.get("shrink", 0.5)
    min_step = settings.knobs.get("min_step", 1e-10)
    aug = add_slacks(problem, settings["slack_init"], include_bounds=problem.constrained)
    t0 = time.perf_counter()
    z = aug.initial_point(x0)
    trace = []
    steps = []

    def done(status, k, st, msg=""):
        return finish(problem, st.z[:aug.n], status, k, t0, trace=trace,
                      multipliers=st.lam, message=msg,
                      extras={"z_final": st.z, "step_sizes": steps,
                              "P": st.idx.P, "Q": st.idx.Q, "R": st.idx.R})

    try:
        st = _state(aug, z)
    except (EvaluationError, np.linalg.LinAlgError) as exc:
        dummy = _State(z, np.zeros_like(z), np.zeros(0), np.zeros((0, z.size)), np.zeros(0),
                       PerformanceIndices.of(np.nan, np.nan))
        return done(Status.NUMERICAL_FAILURE, 0, dummy, str(exc))
    trace.append(st.idx)
    for k in range(max_iter):
        if _stop(aug, st.idx, eps1, eps2):
            return done(Status.CONVERGED, k, st)
        if cancel.cancelled:
            return done(Status.TIMEOUT, k, st)
        try:
            H = aug.lagrangian_hessian(st.z, st.lam)
            dz, lam_hat, _ = solve_kkt(H, st.J, st.g, st.h)
        except (EvaluationError, np.linalg.LinAlgError) as exc:
            return done(Status.NUMERICAL_FAILURE, k, st, str(exc))
        if not modified:
            try:
                new = _state(aug, st.z + dz)
            except (EvaluationError, np.linalg.LinAlgError) as exc:
                return done(Status.NUMERICAL_FAILURE, k, st, str(exc))
            if not np.isfinite(new.idx.R):
                return done(Status.NUMERICAL_FAILURE, k, st, "non-finite index")
            steps.append(1.0)
        else:
            current = _merit(aug, st.idx)
            alpha = 1.0
            new = None
            while alpha >= min_step:
                try:
                    lam_a = st.lam + alpha * (lam_hat - st.lam)
                    trial = _state(aug, st.z + alpha * dz, lam_a if aug.has_constraints else None)
                    if _merit(aug, trial.idx) < current:
                        # Refreshing the multipliers by least squares can only
                        # lower Q; keep the trial multipliers if rounding says otherwise.
                        new = trial
                        if aug.has_constraints:
                            refreshed = _state(aug, trial.z)
                            if refreshed.idx.R <= trial.idx.R:
                                new = refreshed
                        break
                except (EvaluationError, np.linalg.LinAlgError):
                    pass
                alpha *= shrink
            if new is None:
                return done(Status.NUMERICAL_FAILURE, k, st, "step size underflow")
            steps.append(alpha)
        st = new
        trace.append(st.idx)
    if _stop(aug, st.idx, eps1, eps2):
        return done(Status.CONVERGED, max_iter, st)
    return done(Status.MAX_ITER, max_iter, st)


def solve_sqa(problem: ProblemSpec, x0, settings: SolverSettings | None = None,
              cancel: CancelToken = NEVER) -> SolveResult:
    return _quasilinear(problem, x0, settings or resolve_profile("sqa", "pnp"), cancel,
                        modified=False)


def solve_mqa(problem: ProblemSpec, x0, settings: SolverSettings | None = None,
              cancel: CancelToken = NEVER) -> SolveResult:
    return _quasilinear(problem, x0, settings or resolve_profile("mqa", "pnp"), cancel,
                        modified=True)
