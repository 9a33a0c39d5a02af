"""Tuning profiles: plug and play (pnp), high accuracy (ha), quick solution (qs).

Knob names follow the settings tables: ``StepTolerance`` etc. for the
quasi-Newton baseline, ``epsilon_1``/``epsilon_2`` for the
quasilinearization and gradient-restoration methods, and
``no_particles``/``no_iterations``/``gamma`` for the swarm.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

ALGORITHMS = ("bfgs", "sqa", "mqa", "sgra", "apso")
PROFILES = ("pnp", "ha", "qs")
PROFILE_LABELS = {"pnp": "P&P", "ha": "HA", "qs": "QS"}

# Values from the settings tables; the remaining knobs are our fixed choices.
_TABLE = {
    "bfgs": {
        "pnp": {"StepTolerance": 1e-6, "FunctionTolerance": 1e-6, "OptimalityTolerance": 1e-6},
        "ha": {"StepTolerance": 1e-12, "FunctionTolerance": 1e-12, "OptimalityTolerance": 1e-12},
        "qs": {"StepTolerance": 1e-6, "FunctionTolerance": 1e-3, "OptimalityTolerance": 1e-3},
    },
    "sqa": {
        "pnp": {"epsilon_1": 1e-5, "epsilon_2": 1e-4},
        "ha": {"epsilon_1": 1e-8, "epsilon_2": 1e-5},
        "qs": {"epsilon_1": 1e-2, "epsilon_2": 1e-3},
    },
    "mqa": {
        "pnp": {"epsilon_1": 1e-5, "epsilon_2": 1e-4},
        "ha": {"epsilon_1": 1e-8, "epsilon_2": 1e-5},
        "qs": {"epsilon_1": 1e-2, "epsilon_2": 1e-3},
    },
    "sgra": {
        "pnp": {"epsilon_1": 1e-9, "epsilon_2": 1e-4},
        "ha": {"epsilon_1": 1e-10, "epsilon_2": 1e-6},
        "qs": {"epsilon_1": 1e-8, "epsilon_2": 1e-2},
    },
    "apso": {
        "pnp": {"no_particles": 15, "no_iterations": 300, "gamma": 0.9},
        "ha": {"no_particles": 50, "no_iterations": 500, "gamma": 0.95},
        "qs": {"no_particles": 10, "no_iterations": 100, "gamma": 0.95},
    },
}

_DEFAULTS = {
    "bfgs": {"MaxIterations": 1000},
    "sqa": {"max_iter": 500, "slack_init": 1.0},
    "mqa": {"max_iter": 500, "slack_init": 1.0, "shrink": 0.5, "min_step": 1e-10},
    "sgra": {"max_cycles": 500, "slack_init": 1.0},
    # alpha0 is a fraction of the sampling-box width per coordinate.
    "apso": {"alpha0": 0.2, "beta": 0.5, "penalty_weight": 1e8},
}


@dataclass(frozen=True)
class SolverSettings:
    algorithm: str
    profile: str
    knobs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.profile not in PROFILES and self.profile != "custom":
            raise ValueError(f"unknown profile {self.profile!r}")
        for k, v in self.knobs.items():
            if isinstance(v, float) and not v > 0 and k not in ("alpha0",):
                raise ValueError(f"{k} must be positive")

    def __getitem__(self, key):
        return self.knobs[key]

    def replace(self, **knobs) -> "SolverSettings":
        return SolverSettings(self.algorithm, "custom", {**self.knobs, **knobs})

    def to_dict(self) -> dict:
        return {"algorithm": self.algorithm, "profile": self.profile, "knobs": dict(self.knobs)}

    @classmethod
    def from_dict(cls, d: dict) -> "SolverSettings":
        return cls(d["algorithm"], d["profile"], dict(d["knobs"]))


def resolve_profile(algorithm: str, profile: str) -> SolverSettings:
    algorithm, profile = algorithm.lower(), profile.lower()
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {PROFILES}")
    return SolverSettings(algorithm, profile,
                          {**_TABLE[algorithm][profile], **_DEFAULTS[algorithm]})


def profile_table() -> dict:
    """All nine-plus profiles as ``{algorithm: {profile: knobs}}``."""
    return {a: {p: resolve_profile(a, p).knobs for p in PROFILES} for a in ALGORITHMS}


def save_profiles(path, table: dict | None = None) -> None:
    Path(path).write_text(json.dumps(table or profile_table(), indent=2))


def load_profiles(path) -> dict:
    """Read a profile file into ``{(algorithm, profile): SolverSettings}``."""
    raw = json.loads(Path(path).read_text())
    out = {}
    for algo, profiles in raw.items():
        for prof, knobs in profiles.items():
            base = resolve_profile(algo, prof).knobs
            out[(algo, prof)] = SolverSettings(algo, prof, {**base, **knobs})
    return out
