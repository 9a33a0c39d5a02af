"""Ranking tables rendered from aggregated metrics."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, replace

from .metrics import RANK_KEYS, MetricsSummary, rank

FORMATS = ("markdown", "csv", "json")
HEADER = ("Ranking", "Solver", "Ē[%]", "σ̄[%]", "γ̄[%]", "CPŪ[s]")


@dataclass(frozen=True)
class ReportSpec:
    input: str
    rank_key: str = "convergence_rate"
    format: str = "markdown"
    profile_label: str = ""

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; choose from {FORMATS}")
        if self.rank_key not in RANK_KEYS:
            raise ValueError(f"unknown rank key {self.rank_key!r}; choose from {RANK_KEYS}")


def _sci(v: float) -> str:
    return "nan" if math.isnan(v) else f"{v:.3e}"


def table_rows(summary: MetricsSummary, rank_key: str) -> list:
    """Formatted rows: 4 significant digits for errors, one decimal for the
    rate and four decimals for CPU seconds."""
    rows = []
    for r, label in rank(summary, rank_key):
        m = summary.per_solver[label]
        rows.append((str(r), label, _sci(m.mean_error), _sci(m.mean_variance),
                     f"{m.convergence_rate:.1f}", f"{m.mean_cpu:.4f}"))
    return rows


def render(summary: MetricsSummary, rank_key: str = "convergence_rate",
           fmt: str = "markdown", title: str = "") -> str:
    if fmt == "json":
        d = replace(summary, rank_key=rank_key).to_dict()
        if title:
            d["title"] = title
        return json.dumps(d, indent=2)
    rows = table_rows(summary, rank_key)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(HEADER)
        w.writerows(rows)
        return buf.getvalue()
    lines = []
    if title:
        lines += [f"**{title}** (ranked by {rank_key})", ""]
    lines.append("| " + " | ".join(HEADER) + " |")
    lines.append("|" + "|".join("---" for _ in HEADER) + "|")
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines) + "\n"
