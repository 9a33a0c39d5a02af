"""Run matrix: problems x solver configs x K initial guesses x Z repetitions."""

from __future__ import annotations

import json
import math
import os
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional

import numpy as np

from .metrics import CPU_MAX, E_MAX, error_percent
from .problems import get_problem
from .problems.spec import ProblemSpec
from .solvers import CancelToken, Status, resolve_profile, solve, supports

SCHEMA_VERSION = 1
RECORD_FIELDS = ("v", "problem", "algo", "profile", "k", "z", "e_pct", "cpu_s", "status")
STATUSES = tuple(s.value for s in Status)


@dataclass(frozen=True)
class RunMatrixConfig:
    problem_ids: tuple
    solver_configs: tuple
    K: int = 50
    Z: int = 3
    seed: int = 0
    E_max: float = E_MAX
    CPU_max: float = CPU_MAX

    def __post_init__(self):
        if self.K < 1 or self.Z < 1:
            raise ValueError("K and Z must be at least 1")
        if not (self.E_max > 0 and self.CPU_max > 0):
            raise ValueError("E_max and CPU_max must be positive")
        object.__setattr__(self, "problem_ids", tuple(self.problem_ids))
        object.__setattr__(self, "solver_configs",
                           tuple(tuple(c) for c in self.solver_configs))
        for pid in self.problem_ids:
            get_problem(pid)
        for algo, prof in self.solver_configs:
            resolve_profile(algo, prof)

    def to_dict(self) -> dict:
        return {"problem_ids": list(self.problem_ids),
                "solver_configs": [list(c) for c in self.solver_configs],
                "K": self.K, "Z": self.Z, "seed": self.seed,
                "E_max": self.E_max, "CPU_max": self.CPU_max}

    @classmethod
    def from_dict(cls, d: dict) -> "RunMatrixConfig":
        return cls(**d)

    def pairs(self):
        """Supported (problem, algorithm, profile) triples in canonical order."""
        for pid in sorted(self.problem_ids):
            p = get_problem(pid)
            for algo, prof in sorted(self.solver_configs):
                if supports(algo, p):
                    yield pid, algo, prof


@dataclass(frozen=True)
class RunRecord:
    problem: str
    algo: str
    profile: str
    k: int
    z: int
    e_pct: Optional[float]
    cpu_s: float
    status: str
    error_ok: bool = field(default=False, compare=False)
    time_ok: bool = field(default=False, compare=False)

    @property
    def key(self):
        return (self.problem, self.algo, self.profile, self.k, self.z)

    @property
    def converged(self) -> bool:
        return self.error_ok and self.time_ok

    def to_json(self) -> str:
        return json.dumps({"v": SCHEMA_VERSION, "problem": self.problem, "algo": self.algo,
                           "profile": self.profile, "k": self.k, "z": self.z,
                           "e_pct": self.e_pct, "cpu_s": self.cpu_s, "status": self.status})

    @classmethod
    def from_dict(cls, d: dict, E_max: float = E_MAX, CPU_max: float = CPU_MAX) -> "RunRecord":
        return make_record(d["problem"], d["algo"], d["profile"], d["k"], d["z"],
                           d["e_pct"], d["cpu_s"], d["status"], E_max, CPU_max)


def make_record(problem, algo, profile, k, z, e_pct, cpu_s, status,
                E_max=E_MAX, CPU_max=CPU_MAX) -> RunRecord:
    error_ok = e_pct is not None and e_pct <= E_max
    time_ok = status != Status.TIMEOUT.value and cpu_s <= CPU_max
    return RunRecord(problem, algo, profile, int(k), int(z), e_pct, float(cpu_s), status,
                     error_ok, time_ok)


# -- initial guesses ---------------------------------------------------------------

def _stream(seed: int, problem_id: str, k: int) -> np.random.Generator:
    """Counter-based generator keyed by (seed, problem, k)."""
    key = np.random.SeedSequence([seed, zlib.crc32(problem_id.encode()), k])
    return np.random.Generator(np.random.Philox(key))


def generate_initial_guesses(problem: ProblemSpec, K: int, seed: int) -> list:
    lo, hi = problem.sampling_lower, problem.sampling_upper
    return [_stream(seed, problem.id, k).uniform(lo, hi) for k in range(K)]


def solver_seed(seed: int, problem_id: str, k: int) -> int:
    """Seed for stochastic solvers; independent of the repetition index."""
    return int(np.random.SeedSequence([seed, zlib.crc32(problem_id.encode()), k, 1])
               .generate_state(1)[0])


# -- execution -------------------------------------------------------------------------

def execute_run(problem: ProblemSpec, algorithm: str, profile: str, x0, k: int = 0,
                z: int = 0, seed: int = 0, budget: float = CPU_MAX,
                E_max: float = E_MAX) -> RunRecord:
    """Solve once; times only the solve call and never raises."""
    settings = resolve_profile(algorithm, profile)
    s_seed = solver_seed(seed, problem.id, k)
    cancel = CancelToken(budget)
    t0 = time.perf_counter()
    try:
        result = solve(problem, algorithm, x0, settings, seed=s_seed, cancel=cancel)
        cpu = time.perf_counter() - t0
        status = result.status.value
        f = result.f_final
    except Exception:  # any solver failure is recorded, never propagated
        cpu = time.perf_counter() - t0
        status = Status.NUMERICAL_FAILURE.value
        f = math.nan
    e = None if not math.isfinite(f) else error_percent(f, problem.f_star)
    return make_record(problem.id, algorithm, profile, k, z, e, cpu, status, E_max, budget)


def _run_cell(args) -> list:
    pid, algo, prof, guesses, Z, seed, budget, E_max = args
    problem = get_problem(pid)
    return [execute_run(problem, algo, prof, x0, k, z, seed, budget, E_max)
            for k, x0 in enumerate(guesses) for z in range(Z)]


def default_workers() -> int:
    env = os.environ.get("NLPBENCH_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def execute_matrix(config: RunMatrixConfig, workers: Optional[int] = None,
                   progress: Optional[Callable[[str, str, str], None]] = None) -> list:
    """Every supported cell of the matrix, sorted by (problem, solver, k, z)."""
    guesses = {pid: generate_initial_guesses(get_problem(pid), config.K, config.seed)
               for pid in config.problem_ids}
    tasks = [(pid, algo, prof, guesses[pid], config.Z, config.seed, config.CPU_max,
              config.E_max) for pid, algo, prof in config.pairs()]
    workers = default_workers() if workers is None else workers
    records = []
    if workers <= 1 or len(tasks) <= 1:
        for t in tasks:
            records.extend(_run_cell(t))
            if progress:
                progress(*t[:3])
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for t, out in zip(tasks, pool.map(_run_cell, tasks)):
                records.extend(out)
                if progress:
                    progress(*t[:3])
    return sorted(records, key=lambda r: r.key)


# -- JSON lines ---------------------------------------------------------------------------

def write_records(path, records: Iterable[RunRecord]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.to_json() + "\n")


class SchemaError(ValueError):
    def __init__(self, lines: list):
        super().__init__("invalid run records on line(s) " + ", ".join(map(str, lines)))
        self.lines = lines


def _valid(d) -> bool:
    if not isinstance(d, dict) or set(d) != set(RECORD_FIELDS) or d["v"] != SCHEMA_VERSION:
        return False
    if not all(isinstance(d[f], str) for f in ("problem", "algo", "profile", "status")):
        return False
    if d["status"] not in STATUSES:
        return False
    if not all(isinstance(d[f], int) and d[f] >= 0 for f in ("k", "z")):
        return False
    if d["e_pct"] is not None and not (isinstance(d["e_pct"], (int, float)) and d["e_pct"] >= 0):
        return False
    return isinstance(d["cpu_s"], (int, float)) and d["cpu_s"] >= 0


def read_records(path, E_max: float = E_MAX, CPU_max: float = CPU_MAX) -> list:
    """Parse a JSON-lines record file; raises SchemaError listing bad lines."""
    records, bad = [], []
    text = Path(path).read_text(encoding="utf-8")
    for i, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            d = json.loads(line)
        except json.JSONDecodeError:
            bad.append(i)
            continue
        if not _valid(d):
            bad.append(i)
            continue
        records.append(RunRecord.from_dict(d, E_max, CPU_max))
    if bad:
        raise SchemaError(bad)
    return records
