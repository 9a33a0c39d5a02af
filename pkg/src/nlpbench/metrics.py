"""Error, dispersion, convergence-rate and CPU aggregates, and solver ranking."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional

RANK_KEYS = ("convergence_rate", "mean_error", "mean_cpu")
E_MAX = 5.0
CPU_MAX = 10.0


def error_percent(f_found: float, f_star: float) -> float:
    """``100 |f - f*| / max(|f*|, 0.001)``."""
    return 100.0 * abs(f_found - f_star) / max(abs(f_star), 0.001)


@dataclass(frozen=True)
class ProblemMetrics:
    mean_error: float
    variance: float
    convergence_rate: float
    mean_cpu: float
    K: int
    Z: int
    k_conv: int


@dataclass(frozen=True)
class SolverMetrics:
    mean_error: float
    mean_variance: float
    convergence_rate: float
    mean_cpu: float
    problems: tuple


@dataclass
class MetricsSummary:
    per_problem: dict
    per_solver: dict
    rank_key: str = "convergence_rate"
    excluded: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "rank_key": self.rank_key,
            "solvers": [
                {"rank": r, "solver": s, "mean_error": self.per_solver[s].mean_error,
                 "mean_variance": self.per_solver[s].mean_variance,
                 "convergence_rate": self.per_solver[s].convergence_rate,
                 "mean_cpu": self.per_solver[s].mean_cpu,
                 "problems": list(self.per_solver[s].problems),
                 "excluded": self.excluded.get(s, [])}
                for r, s in rank(self, self.rank_key)
            ],
        }


def solver_label(algorithm: str, profile: str, multi_profile: bool) -> str:
    return f"{algorithm}-{profile}" if multi_profile else algorithm


def _nanmean(values) -> float:
    vals = [v for v in values if not math.isnan(v)]
    return sum(vals) / len(vals) if vals else math.nan


def aggregate(records: Iterable, E_max: float = E_MAX, CPU_max: float = CPU_MAX,
              rank_key: str = "convergence_rate",
              problems: Optional[Iterable[str]] = None) -> MetricsSummary:
    """Aggregate run records into per-problem and per-solver metrics.

    For each (solver, problem) cell:
      E_k   = mean over repetitions z of the run error (unevaluable runs
              contribute NaN and count as not converged)
      E_n   = mean over k of E_k
      s_n   = 1/(K-1) * sum_k (E_k - E_n)^2, and 0 when K = 1
      g_n   = 100 * K_conv / K, where run k converges when E_k <= E_max and
              its repetition-mean CPU time is <= CPU_max
      CPU_n = mean over k of the repetition-mean CPU time
    Solver values are unweighted means over the problems it attempted.

    The literal form g_n = 100 * (K - K_conv) / K counts failures; the rate
    here counts successes so that better solvers score higher.
    """
    cells = defaultdict(dict)
    profiles = set()
    for r in records:
        profiles.add(r.profile)
        cells[(r.algo, r.profile, r.problem)][(r.k, r.z)] = r
    if not cells:
        raise ValueError("no run records")
    multi = len(profiles) > 1
    per_problem = {}
    missing = []
    by_solver = defaultdict(list)
    for (algo, prof, pid), runs in sorted(cells.items()):
        ks = sorted({k for k, _ in runs})
        zs = sorted({z for _, z in runs})
        K, Z = max(ks) + 1, max(zs) + 1
        for k in range(K):
            for z in range(Z):
                if (k, z) not in runs:
                    missing.append(f"{pid}/{algo}/{prof}/k={k}/z={z}")
        if missing:
            continue
        E, C = [], []
        for k in range(K):
            es = [runs[(k, z)].e_pct for z in range(Z)]
            es = [math.nan if e is None else float(e) for e in es]
            E.append(sum(es) / Z)
            C.append(sum(float(runs[(k, z)].cpu_s) for z in range(Z)) / Z)
        E_n = _nanmean(E)
        valid = [e for e in E if not math.isnan(e)]
        var = (sum((e - E_n) * (e - E_n) for e in valid) / (len(valid) - 1)
               if len(valid) > 1 else 0.0)
        k_conv = sum(1 for e, c in zip(E, C) if not math.isnan(e) and e <= E_max and c <= CPU_max)
        label = solver_label(algo, prof, multi)
        per_problem[(label, pid)] = ProblemMetrics(E_n, var, 100.0 * k_conv / K, sum(C) / K,
                                                   K, Z, k_conv)
        by_solver[label].append(pid)
    if missing:
        raise ValueError("missing run records: " + ", ".join(missing))
    per_solver = {}
    excluded = {}
    wanted = sorted(problems) if problems is not None else None
    for label, pids in by_solver.items():
        ms = [per_problem[(label, p)] for p in pids]
        per_solver[label] = SolverMetrics(
            mean_error=_nanmean([m.mean_error for m in ms]),
            mean_variance=_nanmean([m.variance for m in ms]),
            convergence_rate=sum(m.convergence_rate for m in ms) / len(ms),
            mean_cpu=sum(m.mean_cpu for m in ms) / len(ms),
            problems=tuple(pids))
        if wanted is not None:
            excluded[label] = [p for p in wanted if p not in pids]
    return MetricsSummary(per_problem, per_solver, rank_key, excluded)


def _sort_value(v: float, descending: bool) -> float:
    if math.isnan(v):
        return math.inf
    return -v if descending else v


def rank(summary: MetricsSummary, key: Optional[str] = None) -> list:
    """``[(rank, solver), ...]``: descending by convergence rate, ascending by
    mean error or mean CPU; ties broken by mean error, then solver id."""
    key = key or summary.rank_key
    if key not in RANK_KEYS:
        raise ValueError(f"unknown rank key {key!r}; choose from {RANK_KEYS}")
    attr = {"convergence_rate": "convergence_rate", "mean_error": "mean_error",
            "mean_cpu": "mean_cpu"}[key]
    descending = key == "convergence_rate"

    def order(label):
        m = summary.per_solver[label]
        return (_sort_value(getattr(m, attr), descending),
                _sort_value(m.mean_error, False), label)

    return [(i + 1, s) for i, s in enumerate(sorted(summary.per_solver, key=order))]
