"""Command-line entry point: list | solve | bench | report | validate."""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from .calculus import check_gradient, interior_points
from .harness import (
    RunMatrixConfig,
    SchemaError,
    execute_matrix,
    generate_initial_guesses,
    read_records,
    write_records,
)
from .metrics import CPU_MAX, E_MAX, RANK_KEYS, aggregate, error_percent
from .problems import catalog_json, get_problem, list_problems
from .problems.validation import KNOWN_DISCREPANCIES, OracleConfig, validate_reference_optimum
from .report import FORMATS, ReportSpec, render
from .solvers import ALGORITHMS, PROFILES, CancelToken, Status, solve, supports

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
GRADIENT_TOL = 1e-5
DEFAULT_SOLVERS = {
    "unconstrained": ("bfgs", "sqa", "mqa", "sgra"),
    "constrained": ("sqa", "mqa", "sgra", "apso"),
    "all": ("bfgs", "sqa", "mqa", "sgra", "apso"),
}


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors are reported as exit code 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _err(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


# -- list -------------------------------------------------------------------------------

def cmd_list(args) -> int:
    constrained = {"all": None, "constrained": True, "unconstrained": False}[args.suite]
    if args.constrained:
        constrained = True
    problems = list_problems(constrained=constrained, max_dimension=args.max_dim)
    if args.json:
        print(catalog_json(problems))
        return EXIT_OK
    for p in problems:
        kind = "constrained" if p.constrained else "unconstrained"
        print(f"{p.id}\t{p.name}\tn={p.dimension}\t{kind}\tf*={p.f_star:.10g}\t"
              f"{p.optimum_provenance.value}")
    return EXIT_OK


# -- solve ------------------------------------------------------------------------------

def cmd_solve(args) -> int:
    try:
        problem = get_problem(args.problem)
    except KeyError as exc:
        return _err(str(exc.args[0]) if exc.args else f"unknown problem {args.problem}")
    if not supports(args.algorithm, problem):
        return _err(f"{args.algorithm} does not handle constrained problem {problem.id}")
    if args.x0:
        try:
            x0 = np.array([float(v) for v in args.x0.split(",")])
        except ValueError:
            return _err("--x0 must be a comma-separated list of numbers")
        if x0.size != problem.dimension:
            return _err(f"--x0 needs {problem.dimension} values, got {x0.size}")
    else:
        x0 = generate_initial_guesses(problem, 1, args.seed)[0]
    result = solve(problem, args.algorithm, x0, profile=args.profile, seed=args.seed,
                   cancel=CancelToken(args.cpu_max))
    e = error_percent(result.f_final, problem.f_star) if np.isfinite(result.f_final) else None
    out = {"problem": problem.id, "algorithm": args.algorithm, "profile": args.profile,
           "x_final": result.x_final.tolist(), "f_final": result.f_final,
           "f_star": problem.f_star, "e_pct": e, "status": result.status.value,
           "iterations": result.iterations, "cpu_s": result.cpu_seconds,
           "message": result.message}
    for key in ("P", "Q", "R"):
        if key in result.extras:
            out[key] = float(result.extras[key])
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        for key, val in out.items():
            print(f"{key:>10}: {val}")
    return EXIT_OK if result.status is Status.CONVERGED else EXIT_FAIL


# -- bench ------------------------------------------------------------------------------

def _split(text: str) -> list:
    return [t.strip() for t in text.split(",") if t.strip()]


def cmd_bench(args) -> int:
    if args.problems:
        try:
            pids = [get_problem(p).id for p in _split(args.problems)]
        except KeyError as exc:
            return _err(str(exc.args[0]) if exc.args else "unknown problem")
    else:
        constrained = {"all": None, "constrained": True, "unconstrained": False}[args.suite]
        pids = [p.id for p in list_problems(constrained=constrained, max_dimension=args.max_dim)]
    solvers = _split(args.solvers) if args.solvers else list(DEFAULT_SOLVERS[args.suite])
    bad = [s for s in solvers if s not in ALGORITHMS]
    if bad:
        return _err(f"unknown solver(s): {', '.join(bad)}")
    constrained_only = all(get_problem(p).constrained for p in pids)
    if "bfgs" in solvers and constrained_only:
        print("notice: bfgs handles unconstrained problems only; omitted", file=sys.stderr)
        solvers = [s for s in solvers if s != "bfgs"]
    profiles = _split(args.profile)
    bad = [p for p in profiles if p not in PROFILES]
    if bad:
        return _err(f"unknown profile(s): {', '.join(bad)}")
    try:
        config = RunMatrixConfig(tuple(pids), tuple((s, p) for s in solvers for p in profiles),
                                 K=args.K, Z=args.Z, seed=args.seed, E_max=args.e_max,
                                 CPU_max=args.cpu_max)
    except ValueError as exc:
        return _err(str(exc))
    try:
        open(args.out, "w").close()
    except OSError as exc:
        return _err(f"cannot write {args.out}: {exc}")
    t0 = time.perf_counter()

    def progress(pid, algo, prof):
        if args.verbose:
            print(f"  done {pid} {algo}/{prof}", file=sys.stderr)

    records = execute_matrix(config, workers=args.workers, progress=progress)
    write_records(args.out, records)
    n_conv = sum(r.converged for r in records)
    print(f"{len(records)} runs over {len(pids)} problems and {len(config.solver_configs)} "
          f"solver configurations; {n_conv} converged; "
          f"{time.perf_counter() - t0:.1f}s; records in {args.out}")
    return EXIT_OK


# -- report -----------------------------------------------------------------------------

def cmd_report(args) -> int:
    try:
        spec = ReportSpec(args.input, args.rank_key, args.format, args.title)
        records = read_records(spec.input, args.e_max, args.cpu_max)
    except SchemaError as exc:
        return _err(str(exc))
    except (OSError, ValueError) as exc:
        return _err(str(exc))
    if not records:
        return _err(f"{spec.input} contains no run records")
    try:
        summary = aggregate(records, args.e_max, args.cpu_max, spec.rank_key)
    except ValueError as exc:
        return _err(str(exc))
    sys.stdout.write(render(summary, spec.rank_key, spec.format, spec.profile_label))
    return EXIT_OK


# -- validate ---------------------------------------------------------------------------

def cmd_validate(args) -> int:
    problems = [get_problem(p) for p in _split(args.problems)] if args.problems \
        else list_problems()
    failed = []
    t0 = time.perf_counter()
    for p in problems:
        if p.analytic_gradient is None:
            continue
        try:
            err = check_gradient(p, interior_points(p, 20, seed=args.seed))
        except Exception as exc:  # report any evaluation failure against the problem
            print(f"gradient {p.id}: error {exc}")
            failed.append(p.id)
            continue
        if err > GRADIENT_TOL:
            print(f"gradient {p.id}: FAIL max relative error {err:.3e}")
            failed.append(p.id)
    print(f"gradients: {len(failed)} failure(s) in {time.perf_counter() - t0:.1f}s"
          + (f" ({', '.join(failed)})" if failed else ""))
    new = []
    if not args.gradients_only:
        config = OracleConfig(seed=args.seed, time_budget=args.oracle_budget)
        for p in problems:
            r = validate_reference_optimum(p, config)
            if r.discrepant:
                known = p.id in KNOWN_DISCREPANCIES
                tag = "known" if known else "NEW"
                print(f"optimum {p.id}: {tag} discrepancy; {r.notes or 'undetermined'}")
                if not known:
                    new.append(p.id)
        print("known discrepancy ledger:")
        for pid, note in sorted(KNOWN_DISCREPANCIES.items()):
            print(f"  {pid}: {note}")
        print(f"optima: {len(new)} new discrepanc{'y' if len(new) == 1 else 'ies'}"
              + (f" ({', '.join(new)})" if new else ""))
    return EXIT_FAIL if failed or new else EXIT_OK


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="nlpbench", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("list", help="list benchmark problems")
    p.add_argument("--constrained", action="store_true", help="constrained problems only")
    p.add_argument("--suite", choices=tuple(DEFAULT_SOLVERS), default="all")
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("solve", help="run one solver on one problem")
    p.add_argument("problem")
    p.add_argument("algorithm", choices=ALGORITHMS)
    p.add_argument("profile", nargs="?", default="pnp", choices=PROFILES)
    p.add_argument("--x0", default="", help="comma-separated initial guess")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cpu-max", type=float, default=CPU_MAX)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="execute a run matrix")
    p.add_argument("--suite", choices=tuple(DEFAULT_SOLVERS), default="all")
    p.add_argument("--problems", default="", help="comma-separated problem ids")
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--solvers", default="", help="comma-separated algorithms")
    p.add_argument("--profile", default="pnp", help="comma-separated profiles")
    p.add_argument("-K", type=int, default=50, help="initial guesses per problem")
    p.add_argument("-Z", type=int, default=3, help="repetitions per guess")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--e-max", type=float, default=E_MAX)
    p.add_argument("--cpu-max", type=float, default=CPU_MAX)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default="runs.jsonl")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("report", help="render a ranking table from run records")
    p.add_argument("input")
    p.add_argument("--rank-key", choices=RANK_KEYS, default="convergence_rate")
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.add_argument("--title", default="")
    p.add_argument("--e-max", type=float, default=E_MAX)
    p.add_argument("--cpu-max", type=float, default=CPU_MAX)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("validate", help="check gradients and reference optima")
    p.add_argument("--problems", default="", help="comma-separated problem ids")
    p.add_argument("--gradients-only", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-budget", type=float, default=None,
                   help="seconds per problem for the multi-start oracle")
    p.set_defaults(func=cmd_validate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_dim", None) is not None and args.max_dim < 1:
        return _err("--max-dim must be positive")
    try:
        return args.func(args)
    except KeyError as exc:
        return _err(str(exc.args[0]) if exc.args else "unknown identifier")


if __name__ == "__main__":
    sys.exit(main())
