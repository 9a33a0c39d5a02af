"""Slack-variable conversion, multiplier estimates and optimality measures.

An inequality ``c_i(x) <= 0`` becomes the equality ``c_i(x) + s_i**2 = 0``.
The augmented vector is ``z = (x, s)``; the stacked equalities are
``h(z) = (c_eq(x), c_ineq(x) + s**2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import lsq_linear

from .calculus import CENTRAL, fd_hessian, fd_jacobian, objective_gradient
from .problems.spec import (
    EvaluationError,
    ProblemSpec,
    evaluate_bound_rows,
    evaluate_constraints,
    evaluate_objective,
)

ACTIVE_TOL = 1e-4


@dataclass(frozen=True)
class PerformanceIndices:
    P: float
    Q: float
    R: float

    @classmethod
    def of(cls, P: float, Q: float) -> "PerformanceIndices":
        return cls(float(P), float(Q), float(P) + float(Q))


@dataclass(frozen=True)
class KktResidual:
    stationarity_norm: float
    primal_eq_norm: float
    primal_ineq_violation: float
    dual_min: float
    complementarity: float


# -- constraint evaluation in the original space ------------------------------

def inequality_values(problem: ProblemSpec, x, include_bounds: bool = True) -> np.ndarray:
    _, g = evaluate_constraints(problem, x)
    if include_bounds:
        g = np.concatenate([g, evaluate_bound_rows(problem, x)], axis=-1)
    return g


def _bound_jacobian(problem: ProblemSpec) -> np.ndarray:
    rows = problem.bound_rows()
    J = np.zeros((len(rows), problem.dimension))
    for r, (i, sign, _) in enumerate(rows):
        J[r, i] = sign
    return J


def constraint_jacobians(problem: ProblemSpec, x, include_bounds: bool = True):
    """Central-difference Jacobians ``(J_eq, J_ineq)`` at ``x``.

    Bound rows (when included) are appended to ``J_ineq`` exactly.
    """
    x = np.asarray(x, dtype=float)
    n = problem.dimension
    J_eq = (fd_jacobian(problem.eq_map, x, CENTRAL, vectorized=True)
            if problem.n_eq else np.zeros((0, n)))
    J_in = (fd_jacobian(problem.ineq_map, x, CENTRAL, vectorized=True)
            if problem.n_ineq else np.zeros((0, n)))
    if include_bounds:
        J_in = np.vstack([J_in, _bound_jacobian(problem)])
    return J_eq, J_in


def objective_hessian(problem: ProblemSpec, x) -> np.ndarray:
    """Analytic Hessian when registered, else differences of the gradient."""
    x = np.asarray(x, dtype=float)
    if problem.analytic_hessian is not None:
        return np.asarray(problem.analytic_hessian(x), dtype=float)
    if problem.analytic_gradient is not None:
        return fd_hessian(None, x, grad=problem.analytic_gradient, vectorized=True)
    return fd_hessian(lambda z: evaluate_objective(problem, z), x, vectorized=True)


# -- augmented problem -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AugmentedProblem:
    base: ProblemSpec
    slack_init: float = 1.0
    include_bounds: bool = False

    @property
    def n(self) -> int:
        return self.base.dimension

    @property
    def n_eq(self) -> int:
        return self.base.n_eq

    @property
    def n_slacks(self) -> int:
        rows = len(self.base.bound_rows()) if self.include_bounds else 0
        return self.base.n_ineq + rows

    @property
    def augmented_dimension(self) -> int:
        return self.n + self.n_slacks

    @property
    def n_constraints(self) -> int:
        return self.n_eq + self.n_slacks

    @property
    def has_constraints(self) -> bool:
        return self.n_constraints > 0

    def split(self, z):
        z = np.asarray(z, dtype=float)
        return z[..., :self.n], z[..., self.n:]

    def initial_point(self, x0) -> np.ndarray:
        """Satisfied rows start at their feasible slack, violated rows at ``slack_init``."""
        x0 = np.asarray(x0, dtype=float)
        if not self.n_slacks:
            return x0.copy()
        try:
            g = inequality_values(self.base, x0, self.include_bounds)
        except EvaluationError:
            g = np.full(self.n_slacks, np.nan)
        s = np.where(g < 0, np.sqrt(np.abs(g)), float(self.slack_init))
        return np.concatenate([x0, s])

    def feasible_slacks(self, x) -> np.ndarray:
        """Slacks ``sqrt(max(0, -c_i(x)))`` that zero every satisfied row."""
        g = inequality_values(self.base, x, self.include_bounds)
        return np.sqrt(np.maximum(0.0, -g))

    def lift(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.concatenate([x, self.feasible_slacks(x)])

    def objective(self, z) -> float:
        x, _ = self.split(z)
        return evaluate_objective(self.base, x)

    def gradient(self, z) -> np.ndarray:
        x, _ = self.split(z)
        return np.concatenate([objective_gradient(self.base, x), np.zeros(self.n_slacks)])

    def eq_residual(self, z) -> np.ndarray:
        x, s = self.split(z)
        eq, _ = evaluate_constraints(self.base, x)
        g = inequality_values(self.base, x, self.include_bounds)
        return np.concatenate([eq, g + s ** 2], axis=-1)

    def jacobian(self, z) -> np.ndarray:
        x, s = self.split(z)
        J_eq, J_in = constraint_jacobians(self.base, x, self.include_bounds)
        w = self.n_slacks
        top = np.hstack([J_eq, np.zeros((self.n_eq, w))])
        bottom = np.hstack([J_in, np.diag(2 * s)])
        return np.vstack([top, bottom])

    def lagrangian_hessian(self, z, lam) -> np.ndarray:
        """Hessian of ``F = f + lam^T h`` with respect to ``z``."""
        x, _ = self.split(z)
        H = np.zeros((self.augmented_dimension,) * 2)
        H[:self.n, :self.n] = objective_hessian(self.base, x)
        if not self.has_constraints:
            return H
        lam = np.asarray(lam, dtype=float)
        weights = self._nonlinear_weights(lam)
        if np.any(weights[0]) or np.any(weights[1]):
            w_eq, w_in = weights
            p = self.base

            def phi(xx):
                total = 0.0
                if p.n_eq:
                    total = total + p.eq_map(xx) @ w_eq
                if p.n_ineq:
                    total = total + p.ineq_map(xx) @ w_in
                return total

            H[:self.n, :self.n] += fd_hessian(phi, x, vectorized=True)
        k = np.arange(self.n, self.augmented_dimension)
        H[k, k] += 2 * lam[self.n_eq:]
        return H

    def _nonlinear_weights(self, lam):
        p = self.base
        w_eq = np.array(lam[:p.n_eq], dtype=float)
        w_in = np.array(lam[p.n_eq:p.n_eq + p.n_ineq], dtype=float)
        w_eq[list(p.linear_eq)] = 0.0
        w_in[list(p.linear_ineq)] = 0.0
        return w_eq, w_in


def add_slacks(problem: ProblemSpec, slack_init: float = 1.0,
               include_bounds: bool = False) -> AugmentedProblem:
    """Equality-only form of ``problem``.

    With ``include_bounds`` the finite domain bounds of a constrained problem
    are converted too (one slack per finite bound).
    """
    return AugmentedProblem(problem, float(slack_init), include_bounds)


def _as_augmented(problem, z):
    if isinstance(problem, AugmentedProblem):
        aug = problem
    else:
        aug = add_slacks(problem)
    z = np.asarray(z, dtype=float)
    if z.shape[-1] == aug.n and aug.n_slacks:
        z = aug.lift(z)
    return aug, z


# -- multipliers and indices -------------------------------------------------------

def estimate_multipliers(problem, x, grad_f, jac_h) -> np.ndarray:
    """Least-squares ``lam`` minimising ``|grad_f + jac_h^T lam|``.

    Normal equations ``(J J^T + d I) lam = -J grad_f`` with ``d = 1e-12``
    (scaled to the matrix) when ``J J^T`` is near singular.
    """
    J = np.asarray(jac_h, dtype=float)
    if J.shape[0] == 0:
        return np.zeros(0)
    g = np.asarray(grad_f, dtype=float)
    A = J @ J.T
    b = -J @ g
    scale = max(1.0, float(np.max(np.abs(np.diag(A)))))
    if np.linalg.cond(A) > 1e12:
        A = A + 1e-12 * scale * np.eye(A.shape[0])
    try:
        lam = np.linalg.solve(A, b)
    except np.linalg.LinAlgError:
        lam = np.linalg.lstsq(J.T, -g, rcond=None)[0]
    if not np.all(np.isfinite(lam)):
        lam = np.linalg.lstsq(J.T, -g, rcond=None)[0]
    return lam


def indices_from(grad_f, jac_h, h, lam) -> PerformanceIndices:
    h = np.asarray(h, dtype=float)
    P = float(h @ h)
    r = np.asarray(grad_f, dtype=float)
    if len(lam):
        r = r + np.asarray(jac_h).T @ np.asarray(lam)
    return PerformanceIndices.of(P, float(r @ r))


def performance_indices(problem, x, lam=None) -> PerformanceIndices:
    """``P = h^T h``, ``Q = |grad f + J^T lam|^2`` and ``R = P + Q``.

    ``problem`` may be a ProblemSpec (inequalities are lifted with feasible
    slacks when ``x`` has the original length) or an AugmentedProblem.
    ``lam`` defaults to the least-squares estimate.
    """
    aug, z = _as_augmented(problem, x)
    g = aug.gradient(z)
    if not aug.has_constraints:
        return PerformanceIndices.of(0.0, float(g @ g))
    h = aug.eq_residual(z)
    J = aug.jacobian(z)
    if lam is None:
        lam = estimate_multipliers(aug, z, g, J)
    return indices_from(g, J, h, np.atleast_1d(np.asarray(lam, dtype=float)))


# -- KKT ------------------------------------------------------------------------------

def kkt_multipliers(problem: ProblemSpec, x, active_tol: float = ACTIVE_TOL):
    """``(mu, lam)`` fitting stationarity; ``mu >= 0`` on active rows, 0 elsewhere.

    Rows are the printed inequalities followed by enforced bound rows.
    Solved as a bounded linear least-squares problem (``lam`` free).
    """
    x = np.asarray(x, dtype=float)
    g = objective_gradient(problem, x)
    J_eq, J_in = constraint_jacobians(problem, x)
    c_in = inequality_values(problem, x)
    active = np.flatnonzero(c_in >= -active_tol)
    A = np.vstack([J_eq, J_in[active]]).T
    mu = np.zeros(J_in.shape[0])
    if A.shape[1] == 0:
        return mu, np.zeros(0)
    lb = np.concatenate([np.full(J_eq.shape[0], -np.inf), np.zeros(active.size)])
    ub = np.full(A.shape[1], np.inf)
    sol = lsq_linear(A, -g, bounds=(lb, ub), method="bvls", tol=1e-14).x
    lam = sol[:J_eq.shape[0]]
    mu[active] = sol[J_eq.shape[0]:]
    return mu, lam


def kkt_residual(problem: ProblemSpec, x, mu=None, lam=None,
                 active_tol: float = ACTIVE_TOL) -> KktResidual:
    """Residuals of stationarity, primal and dual feasibility and
    complementarity at ``x``.

    ``mu`` may cover only the printed inequalities (bound rows then get
    zero multipliers) or all rows.  Omitted multipliers are fitted with
    :func:`kkt_multipliers`.
    """
    x = np.asarray(x, dtype=float)
    if mu is None or lam is None:
        fit_mu, fit_lam = kkt_multipliers(problem, x, active_tol)
        mu = fit_mu if mu is None else mu
        lam = fit_lam if lam is None else lam
    g = objective_gradient(problem, x)
    J_eq, J_in = constraint_jacobians(problem, x)
    eq, _ = evaluate_constraints(problem, x)
    c_in = inequality_values(problem, x)
    mu = np.asarray(mu, dtype=float)
    if mu.size < c_in.size:
        mu = np.concatenate([mu, np.zeros(c_in.size - mu.size)])
    lam = np.asarray(lam, dtype=float)
    r = g + J_in.T @ mu + J_eq.T @ lam
    return KktResidual(
        stationarity_norm=float(np.linalg.norm(r)),
        primal_eq_norm=float(np.linalg.norm(eq)),
        primal_ineq_violation=float(np.max(np.maximum(c_in, 0.0), initial=0.0)),
        dual_min=float(np.min(mu, initial=0.0)),
        complementarity=float(abs(mu @ c_in)),
    )
