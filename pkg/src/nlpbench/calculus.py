"""Finite-difference derivatives and gradient cross-checks.

Problem functions in the registry are vectorised, so a whole stencil is
evaluated in one call when ``vectorized=True``.  Plain scalar callables
(``lambda x: x[0] * x[1]``) work with the default ``vectorized=False``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .problems.spec import EvaluationError, ProblemSpec, evaluate_objective

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class FdScheme:
    mode: str = "central"
    base_step: Optional[float] = None
    relative: bool = True

    def __post_init__(self):
        if self.mode not in ("central", "forward"):
            raise ValueError(f"unknown finite-difference mode {self.mode!r}")
        if self.base_step is not None and not self.base_step > 0:
            raise ValueError("base_step must be positive")

    @property
    def step(self) -> float:
        if self.base_step is not None:
            return self.base_step
        return EPS ** (1 / 3) if self.mode == "central" else EPS ** 0.5

    def steps(self, x: np.ndarray, base: Optional[float] = None) -> np.ndarray:
        h = self.step if base is None else base
        if self.relative:
            return h * np.maximum(1.0, np.abs(x))
        return np.full(x.shape, h)


CENTRAL = FdScheme()
FORWARD = FdScheme(mode="forward")


def _evaluate(fn: Callable, points: np.ndarray, vectorized: bool,
              coords: Sequence[Optional[int]]) -> np.ndarray:
    """Evaluate ``fn`` on each row of ``points``.

    ``coords[r]`` names the coordinate perturbed to produce row ``r``; it is
    attached to any evaluation error so callers can tell where it happened.
    """
    if vectorized:
        try:
            with np.errstate(all="ignore"):
                values = np.asarray(fn(points), dtype=float)
            if np.all(np.isfinite(values)):
                return values
        except EvaluationError:
            pass
        # Fall through to locate the failing row.
    rows = []
    for r, p in enumerate(points):
        try:
            with np.errstate(all="ignore"):
                v = np.asarray(fn(p), dtype=float)
        except EvaluationError as exc:
            raise EvaluationError(str(exc), exc.problem_id, p, coords[r]) from exc
        if not np.all(np.isfinite(v)):
            raise EvaluationError(f"non-finite value at perturbed point {p}",
                                  x=p, coordinate=coords[r])
        rows.append(v)
    return np.array(rows)


def fd_gradient(f: Callable, x, scheme: FdScheme = CENTRAL,
                vectorized: bool = False) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    n = x.size
    h = scheme.steps(x)
    E = np.diag(h)
    if scheme.mode == "central":
        pts = np.concatenate([x + E, x - E])
        vals = _evaluate(f, pts, vectorized, list(range(n)) * 2)
        return (vals[:n] - vals[n:]) / (2 * h)
    pts = np.concatenate([x[None, :], x + E])
    vals = _evaluate(f, pts, vectorized, [None] + list(range(n)))
    return (vals[1:] - vals[0]) / h


def fd_jacobian(c: Callable, x, scheme: FdScheme = CENTRAL,
                vectorized: bool = False, m: Optional[int] = None) -> np.ndarray:
    """Jacobian of a vector map; rows are constraints, columns coordinates."""
    x = np.asarray(x, dtype=float)
    n = x.size
    if m == 0:
        return np.zeros((0, n))
    h = scheme.steps(x)
    E = np.diag(h)
    if scheme.mode == "central":
        pts = np.concatenate([x + E, x - E])
        vals = _evaluate(c, pts, vectorized, list(range(n)) * 2).reshape(2 * n, -1)
        J = (vals[:n] - vals[n:]) / (2 * h)[:, None]
    else:
        pts = np.concatenate([x[None, :], x + E])
        vals = _evaluate(c, pts, vectorized, [None] + list(range(n))).reshape(n + 1, -1)
        J = (vals[1:] - vals[0]) / h[:, None]
    return J.T.copy()


def fd_hessian(f: Callable, x, scheme: FdScheme = CENTRAL,
               vectorized: bool = False, grad: Optional[Callable] = None) -> np.ndarray:
    """Symmetric finite-difference Hessian.

    With ``grad`` the Hessian is the central-difference Jacobian of the
    gradient; otherwise second differences of ``f`` with step eps^(1/4).
    The result is symmetrised as (H + H.T) / 2.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    if grad is not None:
        H = fd_jacobian(grad, x, scheme, vectorized)
        return 0.5 * (H + H.T)
    h = scheme.steps(x, EPS ** 0.25 if scheme.base_step is None else scheme.base_step)
    I, J = np.triu_indices(n, 1)
    E = np.diag(h)
    # Stencil: x, x +- h_i e_i, and x +- h_i e_i +- h_j e_j for i < j.
    pts = [x[None, :], x + E, x - E]
    coords = [None] + list(range(n)) * 2
    if I.size:
        for si, sj in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            pts.append(x + si * E[I] + sj * E[J])
            coords += list(I)
    vals = _evaluate(f, np.concatenate(pts), vectorized, coords)
    f0 = vals[0]
    fp, fm = vals[1:n + 1], vals[n + 1:2 * n + 1]
    H = np.diag((fp - 2 * f0 + fm) / h ** 2)
    if I.size:
        k = I.size
        o = 2 * n + 1
        fpp, fpm, fmp, fmm = (vals[o + q * k:o + (q + 1) * k] for q in range(4))
        off = (fpp - fpm - fmp + fmm) / (4 * h[I] * h[J])
        H[I, J] = off
        H[J, I] = off
    return 0.5 * (H + H.T)


def objective_gradient(problem: ProblemSpec, x) -> np.ndarray:
    """Analytic gradient when registered, else central differences."""
    x = np.asarray(x, dtype=float)
    if problem.analytic_gradient is not None:
        with np.errstate(all="ignore"):
            g = np.asarray(problem.analytic_gradient(x), dtype=float)
        if np.all(np.isfinite(g)):
            return g
        raise EvaluationError(f"{problem.id}: gradient is not finite at {x}",
                              problem.id, x)
    return fd_gradient(lambda z: evaluate_objective(problem, z), x, vectorized=True)


def richardson_gradient(f: Callable, x, base_step: float = 1e-6,
                        dtype=np.longdouble) -> np.ndarray:
    """Reference gradient for cross-checks.

    Central differences at relative steps h and h/2, combined as
    (4 D(h/2) - D(h)) / 3 to cancel the h^2 truncation term, evaluated in
    extended precision.  ``f`` must be vectorised over rows.  Extended
    precision matters for functions such as Perm whose value is a small
    difference of ~1e10-sized terms near the minimizer.
    """
    x = np.asarray(x, dtype=dtype)
    n = x.size

    def central(b):
        h = dtype(b) * np.maximum(dtype(1), np.abs(x))
        E = np.diag(h)
        with np.errstate(all="ignore"):
            v = np.asarray(f(np.concatenate([x + E, x - E])))
        return (v[:n] - v[n:]) / (2 * h)

    g = (4 * central(base_step / 2) - central(base_step)) / 3
    return g.astype(float)


def check_gradient(problem: ProblemSpec, points) -> float:
    """Largest ``|g_analytic - g_fd| / max(1, |g_fd|)`` over points and coordinates.

    Both sides are evaluated in extended precision so the check measures the
    formula, not double-precision cancellation inside it.
    """
    if problem.analytic_gradient is None:
        raise ValueError(f"{problem.id} has no analytic gradient")
    worst = 0.0
    for x in np.atleast_2d(np.asarray(points, dtype=float)):
        g_fd = richardson_gradient(problem.objective, x)
        if not np.all(np.isfinite(g_fd)):
            raise EvaluationError(f"{problem.id}: reference gradient not finite at {x}",
                                  problem.id, x)
        with np.errstate(all="ignore"):
            g = np.asarray(problem.analytic_gradient(x.astype(np.longdouble))).astype(float)
        worst = max(worst, float(np.max(np.abs(g - g_fd) / np.maximum(1.0, np.abs(g_fd)))))
    return worst


def interior_points(problem: ProblemSpec, count: int = 20, seed: int = 0,
                    margin: float = 0.05, singular_tol: float = 1e-3,
                    rounding_tol: float = 1e-7) -> np.ndarray:
    """Seeded uniform points inside the sampling box for gradient checks.

    A ``margin`` fraction of the box is trimmed from each side.  Points
    within ``singular_tol`` of a registered singularity are redrawn, as are
    points where the extended-precision reference cannot resolve an O(1)
    gradient component, i.e. ``eps_ld * |f| / h > rounding_tol`` (Perm and
    Brown reach |f| ~ 1e20 in their domains).  After 100 consecutive
    rejections the box is halved around the published minimizer (the
    reference minimizer when none is published).
    """
    from .problems.spec import near_singularity

    eps_ld = float(np.finfo(np.longdouble).eps)
    rng = np.random.default_rng([seed, int(problem.id[0] == "B"), int(problem.id[2:])])
    box_lo, box_hi = problem.sampling_lower, problem.sampling_upper
    width = box_hi - box_lo
    lo, hi = box_lo + margin * width, box_hi - margin * width
    published = next((o.x for o in problem.claimed_optima if o.x is not None), None)
    centre = published if published is not None else problem.x_star
    centre = centre if centre is not None else 0.5 * (lo + hi)
    centre = np.clip(centre, box_lo, box_hi)
    out = []
    misses = 0
    while len(out) < count:
        p = rng.uniform(lo, hi)
        ok = not near_singularity(problem, p, singular_tol)
        if ok:
            try:
                fx = evaluate_objective(problem, p)
            except EvaluationError:
                ok = False
            else:
                h = 1e-6 * np.maximum(1.0, np.abs(p)).min()
                ok = eps_ld * abs(fx) / h <= rounding_tol
        if ok:
            out.append(p)
            misses = 0
            continue
        misses += 1
        if misses >= 100:
            half = 0.25 * (hi - lo)
            lo = np.maximum(box_lo, centre - half)
            hi = np.minimum(box_hi, centre + half)
            misses = 0
    return np.array(out)
