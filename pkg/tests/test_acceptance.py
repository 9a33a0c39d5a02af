import json
import math
import random
import subprocess
import sys
import time

import numpy as np
import pytest

from nlpbench import cli
from nlpbench.calculus import check_gradient, interior_points
from nlpbench.harness import RunMatrixConfig, execute_matrix, generate_initial_guesses, make_record
from nlpbench.metrics import aggregate, error_percent
from nlpbench.problems import get_problem, list_problems
from nlpbench.solvers import resolve_profile, solve
from nlpbench.transform import kkt_residual
from reference_metrics import brute_force_reference

CONVEX = ("Matyas", "Sphere", "Sum Squares", "Trid", "Zakharov", "Booth", "Rotated Ellipse")
CONSTRAINED_SOLVERS = ("sqa", "mqa", "sgra", "apso")


def ids_by_name(names):
    by_name = {p.name: p.id for p in list_problems()}
    return tuple(by_name[n] for n in names)


def merit_trace(result, constrained):
    return [i.R if constrained else i.Q for i in result.trace]


def same(a, b):
    if isinstance(a, float) and math.isnan(a):
        return isinstance(b, float) and math.isnan(b)
    return a == pytest.approx(b, rel=1e-12, abs=1e-300)


class TestAcceptance:
    def test_01_gradients(self, verdict):
        t0 = time.perf_counter()
        worst = {p.id: check_gradient(p, interior_points(p, 20, seed=0)) for p in list_problems()}
        elapsed = time.perf_counter() - t0
        bad = sorted(pid for pid, err in worst.items() if not err <= 1e-5)
        verdict(1, len(worst) == 60 and not bad and elapsed < 30,
                f"max rel error {max(worst.values()):.2e} over {len(worst)} problems, "
                f"{elapsed:.1f}s, failures {bad}")

    def test_02_reference_optima(self, verdict, capsys):
        code = cli.main(["validate"])
        out = capsys.readouterr().out
        new = [line for line in out.splitlines() if "NEW" in line or "FAIL" in line]
        verdict(2, code == 0, f"validate exit code {code}; unexplained {new}")

    def test_03_convex_bfgs(self, verdict):
        pids = ids_by_name(CONVEX)
        config = RunMatrixConfig(pids, (("bfgs", "pnp"),), K=50, Z=1, seed=0)
        t0 = time.perf_counter()
        summary = aggregate(execute_matrix(config, workers=1))
        elapsed = time.perf_counter() - t0
        rates = {pid: summary.per_problem[("bfgs", pid)].convergence_rate for pid in pids}
        verdict(3, all(g == 100.0 for g in rates.values()) and elapsed < 120,
                f"gamma {rates}, {elapsed:.1f}s")

    def test_04_mqa_descent(self, verdict):
        violations = []
        runs = 0
        for p in list_problems():
            for k, x0 in enumerate(generate_initial_guesses(p, 5, seed=0)):
                m = merit_trace(solve(p, "mqa", x0), p.constrained)
                runs += 1
                if any(b > a for a, b in zip(m, m[1:])):
                    violations.append((p.id, k))
        verdict(4, runs == 300 and not violations,
                f"{runs} runs, increasing-index violations {violations}")

    def test_05_sgra_feasibility(self, verdict):
        eps1 = resolve_profile("sgra", "pnp")["epsilon_1"]
        converged, violations = 0, []
        for p in list_problems(constrained=True):
            for k, x0 in enumerate(generate_initial_guesses(p, 10, seed=0)):
                r = solve(p, "sgra", x0)
                if r.converged:
                    converged += 1
                    if not r.extras["P"] <= eps1:
                        violations.append((p.id, k, r.extras["P"]))
        verdict(5, not violations,
                f"{converged} converged runs of 300, P above {eps1:g}: {violations}")

    def test_06_sqa_one_step(self, verdict):
        counts = {}
        for pid in ("A.13", "A.14", "A.09"):
            p = get_problem(pid)
            rng = np.random.default_rng(0)
            results = [solve(p, "sqa", rng.uniform(p.sampling_lower, p.sampling_upper))
                       for _ in range(10)]
            counts[pid] = sorted({(r.iterations, r.converged) for r in results})
        verdict(6, all(c == [(1, True)] for c in counts.values()),
                f"(iterations, converged) per problem {counts}")

    def test_07_kkt_certification(self, verdict):
        # per problem, certify the converged run closest to f* among all solvers
        certified, failures = [], []
        for p in list_problems(constrained=True):
            best = None
            for algo in CONSTRAINED_SOLVERS:
                settings = resolve_profile(algo, "ha")
                for k, x0 in enumerate(generate_initial_guesses(p, 5, seed=0)):
                    r = solve(p, algo, x0, settings, seed=k)
                    e = error_percent(r.f_final, p.f_star)
                    if r.converged and e <= 1.0 and (best is None or e < best[0]):
                        best = (e, algo, r.x_final)
            if best is None:
                continue
            res = kkt_residual(p, best[2])
            if (res.stationarity_norm <= 1e-3 and res.primal_eq_norm <= 1e-4
                    and res.primal_ineq_violation <= 1e-4):
                certified.append(p.id)
            else:
                failures.append(f"{p.id}/{best[1]} stat={res.stationarity_norm:.2e} "
                                f"eq={res.primal_eq_norm:.1e} "
                                f"ineq={res.primal_ineq_violation:.1e}")
        verdict(7, not failures,
                f"{len(certified)} certified of {len(certified) + len(failures)}; "
                f"failures {failures}")

    def test_08_metrics_oracle(self, verdict):
        rng = random.Random(8)
        mixed = [make_record(f"A.0{p}", a, "pnp", k, z, rng.choice([None, rng.uniform(0, 12)]),
                             rng.uniform(0, 12), "converged")
                 for p in range(1, 4) for a in ("bfgs", "sqa") for k in range(6) for z in range(3)]
        single = [make_record(f"B.0{p}", a, "ha", 0, 0, rng.uniform(0, 9), rng.uniform(0, 3),
                              "converged") for p in range(1, 6) for a in ("mqa", "sgra")]
        failing = [make_record("A.05", "apso", "qs", k, z, None, 0.5, "numerical_failure")
                   for k in range(4) for z in range(2)]
        mismatches = []
        for name, records in (("mixed", mixed), ("K=1", single), ("all-failure", failing)):
            summary = aggregate(records)
            for label, want in brute_force_reference(records).items():
                m = summary.per_solver[label]
                got = (m.mean_error, m.mean_variance, m.convergence_rate, m.mean_cpu)
                if not all(same(g, w) for g, w in zip(got, want)):
                    mismatches.append((name, label, got, want))
        baron = [make_record("A.01", "baron", "pnp", k, 0, 1.0 if k < 46 else 50.0, 0.1,
                             "converged") for k in range(50)]
        gamma = aggregate(baron).per_solver["baron"].convergence_rate
        verdict(8, not mismatches and gamma == 92.0,
                f"gamma(46/50) = {gamma}; mismatches {mismatches}")

    def test_09_determinism(self, verdict, tmp_path):
        args = ["bench", "--suite", "unconstrained", "--solvers", "bfgs,sqa,mqa,sgra",
                "--profile", "pnp", "-K", "10", "-Z", "2", "--seed", "7"]
        t0 = time.perf_counter()
        sets = []
        for i in range(2):
            out = tmp_path / f"run{i}.jsonl"
            proc = subprocess.run([sys.executable, "-m", "nlpbench.cli", *args, "--out", str(out)],
                                  capture_output=True, text=True)
            assert proc.returncode == 0, proc.stderr
            rows = [json.loads(line) for line in out.read_text().splitlines()]
            sets.append(sorted(json.dumps({k: v for k, v in r.items() if k != "cpu_s"},
                                          sort_keys=True) for r in rows))
        elapsed = time.perf_counter() - t0
        verdict(9, sets[0] == sets[1] and len(sets[0]) > 0 and elapsed < 300,
                f"{len(sets[0])} records per run, identical={sets[0] == sets[1]}, {elapsed:.1f}s")

    def test_10_profile_trend(self, verdict):
        pids = ids_by_name(CONVEX)
        stats = {}
        for prof in ("qs", "ha"):
            config = RunMatrixConfig(pids, (("bfgs", prof),), K=50, Z=1, seed=0)
            summary = aggregate(execute_matrix(config, workers=1))
            stats[prof] = {pid: summary.per_problem[("bfgs", pid)] for pid in pids}
        failed = [pid for pid in pids
                  if not (stats["qs"][pid].mean_cpu <= stats["ha"][pid].mean_cpu
                          and stats["ha"][pid].mean_error <= stats["qs"][pid].mean_error)]
        verdict(10, len(failed) <= 1, f"problems breaking the trend {failed} (at most 1 allowed)")

    def test_11_apso(self, verdict):
        non_monotone, reached = [], {}
        for pid in ("B.06", "B.08"):
            p = get_problem(pid)
            hits = 0
            for seed in range(20):
                x0 = generate_initial_guesses(p, 1, seed=seed)[0]
                r = solve(p, "apso", x0, resolve_profile("apso", "ha"), seed=seed)
                t = r.extras["fitness_trace"]
                if any(b > a for a, b in zip(t, t[1:])):
                    non_monotone.append((pid, seed))
                hits += r.converged and error_percent(r.f_final, p.f_star) <= 5.0
            reached[pid] = hits
        for p in list_problems(constrained=True):
            for seed in range(2):
                r = solve(p, "apso", generate_initial_guesses(p, 1, seed=seed)[0], seed=seed)
                t = r.extras["fitness_trace"]
                if any(b > a for a, b in zip(t, t[1:])):
                    non_monotone.append((p.id, seed))
        verdict(11, not non_monotone and all(h >= 1 for h in reached.values()),
                f"feasible seeds within 5% {reached}; non-monotone traces {non_monotone}")
