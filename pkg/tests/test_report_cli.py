import csv
import io
import json
import subprocess
import sys
from dataclasses import replace

import pytest

from nlpbench import cli
from nlpbench.harness import RunMatrixConfig, execute_matrix, make_record, write_records
from nlpbench.metrics import aggregate
from nlpbench.problems import get_problem
from nlpbench.report import HEADER, ReportSpec, render


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "nlpbench.cli", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def sample_records():
    return [make_record("A.01", algo, "pnp", k, 0, e, cpu, "converged")
            for algo, rows in {"bfgs": [(0.1, 0.01), (7.0, 0.02)],
                               "sqa": [(0.2, 0.05), (0.3, 0.04)]}.items()
            for k, (e, cpu) in enumerate(rows)]


class TestRender:
    def test_markdown_six_columns(self):
        text = render(aggregate(sample_records()))
        lines = text.strip().splitlines()
        assert all(line.count("|") == 7 for line in lines)
        assert lines[0] == "| " + " | ".join(HEADER) + " |"
        assert lines[2].startswith("| 1 | sqa | 2.500e-01 |")

    def test_number_formats(self):
        rows = list(csv.reader(io.StringIO(render(aggregate(sample_records()), fmt="csv"))))
        rank_, solver, e, s, g, c = rows[1]
        assert (solver, e, g, c) == ("sqa", "2.500e-01", "100.0", "0.0450")
        assert s == "5.000e-03"

    def test_cpu_ranking(self):
        rows = list(csv.reader(io.StringIO(
            render(aggregate(sample_records()), "mean_cpu", "csv"))))
        assert [r[1] for r in rows[1:]] == ["bfgs", "sqa"]

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            ReportSpec("x.jsonl", format="html")
        with pytest.raises(ValueError):
            ReportSpec("x.jsonl", rank_key="speed")


class TestCliList:
    @pytest.mark.parametrize("args,count", [((), 60), (("--constrained",), 30),
                                            (("--suite", "unconstrained", "--max-dim", "2"), 17)])
    def test_counts(self, args, count, capsys):
        assert cli.main(["list", *args]) == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == count

    def test_json(self, capsys):
        assert cli.main(["list", "--json"]) == 0
        assert len(json.loads(capsys.readouterr().out)) == 60

    def test_bad_flag(self):
        code, _, err = run_cli("list", "--bogus")
        assert code == 2 and "usage" in err


class TestCliSolve:
    def test_sphere(self, capsys):
        assert cli.main(["solve", "A.13", "bfgs", "pnp", "--json"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["status"] == "converged" and out["e_pct"] <= 1e-8

    def test_sgra_ha(self, capsys):
        assert cli.main(["solve", "B.13", "sgra", "ha", "--json"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["P"] <= 1e-10

    def test_unknown_problem(self):
        code, _, err = run_cli("solve", "A.99", "bfgs", "pnp")
        assert code == 2 and "A.99" in err

    def test_bfgs_on_constrained(self, capsys):
        assert cli.main(["solve", "B.13", "bfgs"]) == 2

    def test_not_converged_exit_1(self, capsys):
        assert cli.main(["solve", "A.10", "sgra", "qs", "--cpu-max", "0"]) == 1


class TestCliBenchReport:
    def test_round_trip(self, tmp_path, capsys):
        out = tmp_path / "runs.jsonl"
        assert cli.main(["bench", "--problems", "A.09,A.21", "--solvers", "bfgs,sqa",
                         "-K", "3", "-Z", "2", "--seed", "4", "--workers", "1",
                         "--out", str(out)]) == 0
        capsys.readouterr()
        assert len(out.read_text().splitlines()) == 2 * 2 * 3 * 2
        assert cli.main(["report", str(out), "--format", "json"]) == 0
        reported = json.loads(capsys.readouterr().out)
        config = RunMatrixConfig(("A.09", "A.21"), (("bfgs", "pnp"), ("sqa", "pnp")), K=3, Z=2,
                                 seed=4)
        records = execute_matrix(config, workers=1)
        expected = aggregate(records).to_dict()
        strip = lambda d: [{k: v for k, v in s.items() if k != "mean_cpu"}  # noqa: E731
                           for s in d["solvers"]]
        assert strip(reported) == strip(expected)

    def test_report_exact_from_file(self, tmp_path, capsys):
        records = sample_records()
        path = tmp_path / "runs.jsonl"
        write_records(path, records)
        assert cli.main(["report", str(path), "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == json.loads(
            json.dumps(aggregate(records).to_dict()))

    def test_constrained_suite_drops_bfgs(self, tmp_path):
        out = tmp_path / "runs.jsonl"
        code, stdout, err = run_cli("bench", "--suite", "constrained", "--problems", "B.13",
                                    "--solvers", "bfgs,sgra", "-K", "1", "-Z", "1",
                                    "--out", str(out))
        assert code == 0 and "bfgs" in err
        assert all(json.loads(line)["algo"] == "sgra" for line in out.read_text().splitlines())

    def test_unwritable_output(self, tmp_path):
        code, _, _ = run_cli("bench", "--problems", "A.13", "-K", "1", "-Z", "1",
                             "--out", str(tmp_path / "missing" / "runs.jsonl"))
        assert code == 2

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.jsonl"
        path.write_text("")
        assert run_cli("report", str(path))[0] == 2

    def test_schema_mismatch_lists_lines(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        good = make_record("A.01", "bfgs", "pnp", 0, 0, 0.1, 0.01, "converged").to_json()
        path.write_text(good + "\n{\"v\": 1}\n")
        code, _, err = run_cli("report", str(path))
        assert code == 2 and "2" in err


class TestCliValidate:
    def test_gradients_only(self, capsys):
        assert cli.main(["validate", "--gradients-only"]) == 0
        assert "0 failure(s)" in capsys.readouterr().out

    def test_injected_gradient_bug(self, monkeypatch, capsys):
        p = get_problem("A.21")
        broken = replace(p, analytic_gradient=lambda x: 2.0 * p.analytic_gradient(x))
        monkeypatch.setattr(cli, "list_problems", lambda *a, **k: [get_problem("A.13"), broken])
        assert cli.main(["validate", "--gradients-only"]) == 1
        assert "A.21" in capsys.readouterr().out

    def test_new_discrepancy_fails(self, monkeypatch, capsys):
        p = get_problem("A.13")
        wrong = replace(p, claimed_optima=(replace(p.claimed_optima[0], f=5.0),))
        monkeypatch.setattr(cli, "get_problem", lambda pid: wrong)
        assert cli.main(["validate", "--problems", "A.13"]) == 1
        assert "NEW" in capsys.readouterr().out
