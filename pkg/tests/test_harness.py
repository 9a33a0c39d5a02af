import json

import numpy as np
import pytest

from nlpbench.harness import (
    RunMatrixConfig,
    SchemaError,
    execute_matrix,
    execute_run,
    generate_initial_guesses,
    make_record,
    read_records,
    write_records,
)
from nlpbench.problems import get_problem


def strip_cpu(records):
    return [(r.problem, r.algo, r.profile, r.k, r.z, r.e_pct, r.status) for r in records]


class TestGuesses:
    def test_deterministic(self):
        p = get_problem("A.06")
        a = generate_initial_guesses(p, 10, seed=3)
        b = generate_initial_guesses(p, 10, seed=3)
        assert all(np.array_equal(u, v) for u, v in zip(a, b))

    def test_seed_changes_guesses(self):
        p = get_problem("A.06")
        a = generate_initial_guesses(p, 3, seed=3)
        b = generate_initial_guesses(p, 3, seed=4)
        assert not np.array_equal(a[0], b[0])

    def test_beale_box(self):
        pts = generate_initial_guesses(get_problem("A.01"), 50, seed=0)
        assert len(pts) == 50
        assert all(np.all(np.abs(x) <= 4.5) for x in pts)

    def test_prefix_stable(self):
        p = get_problem("B.06")
        short = generate_initial_guesses(p, 3, seed=9)
        long = generate_initial_guesses(p, 8, seed=9)
        assert all(np.array_equal(u, v) for u, v in zip(short, long))

    @pytest.mark.parametrize("pid", ["A.13", "B.22"])
    def test_within_sampling_box(self, pid):
        p = get_problem(pid)
        for x in generate_initial_guesses(p, 20, seed=1):
            assert np.all(x >= p.sampling_lower) and np.all(x <= p.sampling_upper)


class TestConfig:
    @pytest.mark.parametrize("kw", [{"K": 0}, {"Z": 0}, {"E_max": 0.0}, {"CPU_max": -1.0}])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            RunMatrixConfig(("A.13",), (("bfgs", "pnp"),), **kw)

    def test_unknown_problem(self):
        with pytest.raises(KeyError):
            RunMatrixConfig(("A.99",), (("bfgs", "pnp"),))

    def test_round_trip(self):
        c = RunMatrixConfig(("A.13", "B.13"), (("sqa", "ha"),), K=4, Z=2, seed=5)
        assert RunMatrixConfig.from_dict(json.loads(json.dumps(c.to_dict()))) == c


class TestRun:
    def test_sphere_converges(self):
        p = get_problem("A.13")
        for x0 in generate_initial_guesses(p, 3, seed=0):
            r = execute_run(p, "bfgs", "pnp", x0)
            assert r.error_ok and r.time_ok and r.status == "converged"

    def test_timeout(self):
        p = get_problem("A.10")
        r = execute_run(p, "mqa", "ha", generate_initial_guesses(p, 1, 0)[0], budget=1e-9)
        assert r.status == "timeout" and not r.time_ok

    def test_thresholds(self):
        r = make_record("A.13", "bfgs", "pnp", 0, 0, 4.9, 0.1, "converged")
        assert r.converged
        assert not make_record("A.13", "bfgs", "pnp", 0, 0, 5.1, 0.1, "converged").converged
        assert not make_record("A.13", "bfgs", "pnp", 0, 0, 1.0, 10.5, "converged").converged

    def test_failure_recorded(self):
        p = get_problem("A.29")
        r = execute_run(p, "sqa", "pnp", np.array([1.0, -2.0]))
        assert r.status == "numerical_failure" and r.e_pct is None and not r.error_ok


class TestMatrix:
    def test_record_count(self):
        c = RunMatrixConfig(("A.09", "A.21"), (("bfgs", "pnp"), ("sqa", "pnp")), K=3, Z=2)
        records = execute_matrix(c, workers=1)
        assert len(records) == 2 * 2 * 3 * 2
        assert records == sorted(records, key=lambda r: r.key)

    def test_unsupported_pairs_skipped(self):
        c = RunMatrixConfig(("A.09", "B.13"), (("bfgs", "pnp"), ("sgra", "pnp")), K=2, Z=1)
        records = execute_matrix(c, workers=1)
        assert {(r.problem, r.algo) for r in records} == {
            ("A.09", "bfgs"), ("A.09", "sgra"), ("B.13", "sgra")}

    def test_rerun_identical(self):
        c = RunMatrixConfig(("A.01", "B.14"), (("mqa", "pnp"), ("apso", "qs")), K=2, Z=2, seed=7)
        assert strip_cpu(execute_matrix(c, workers=1)) == strip_cpu(execute_matrix(c, workers=1))

    def test_parallel_matches_serial(self):
        c = RunMatrixConfig(("A.01", "A.09", "B.13"), (("sgra", "pnp"), ("sqa", "pnp")), K=2, Z=1)
        assert strip_cpu(execute_matrix(c, workers=1)) == strip_cpu(execute_matrix(c, workers=2))

    def test_guess_shared_across_solvers(self, monkeypatch):
        import nlpbench.harness as harness
        seen = {}
        real = harness.solve

        def spy(problem, algo, x0, *args, **kwargs):
            seen.setdefault(algo, []).append(np.array(x0))
            return real(problem, algo, x0, *args, **kwargs)

        monkeypatch.setattr(harness, "solve", spy)
        c = RunMatrixConfig(("A.01",), (("bfgs", "pnp"), ("sqa", "pnp"), ("sgra", "pnp")),
                            K=4, Z=1, seed=2)
        execute_matrix(c, workers=1)
        assert all(np.array_equal(a, b) for a, b in zip(seen["bfgs"], seen["sqa"]))
        assert all(np.array_equal(a, b) for a, b in zip(seen["bfgs"], seen["sgra"]))
        expected = generate_initial_guesses(get_problem("A.01"), 4, seed=2)
        assert all(np.array_equal(a, b) for a, b in zip(seen["bfgs"], expected))

    def test_apso_seed_independent_of_z(self):
        c = RunMatrixConfig(("B.13",), (("apso", "qs"),), K=1, Z=2)
        a, b = execute_matrix(c, workers=1)
        assert a.e_pct == b.e_pct


class TestRecordsIO:
    def test_round_trip(self, tmp_path):
        c = RunMatrixConfig(("A.09",), (("bfgs", "pnp"),), K=2, Z=2)
        records = execute_matrix(c, workers=1)
        path = tmp_path / "runs.jsonl"
        write_records(path, records)
        back = read_records(path)
        assert back == records
        first = json.loads(path.read_text().splitlines()[0])
        assert set(first) == {"v", "problem", "algo", "profile", "k", "z", "e_pct", "cpu_s",
                              "status"} and first["v"] == 1

    def test_schema_errors_list_lines(self, tmp_path):
        good = make_record("A.09", "bfgs", "pnp", 0, 0, 0.0, 0.01, "converged").to_json()
        bad = json.dumps({"v": 2, "problem": "A.09"})
        path = tmp_path / "runs.jsonl"
        path.write_text("\n".join([good, bad, "not json", good]) + "\n")
        with pytest.raises(SchemaError) as exc:
            read_records(path)
        assert exc.value.lines == [2, 3]
