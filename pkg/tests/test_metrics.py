import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlpbench.harness import make_record
from nlpbench.metrics import aggregate, error_percent, rank
from reference_metrics import brute_force_reference


def rec(problem, algo, k, z, e, cpu=0.01, profile="pnp", status="converged"):
    return make_record(problem, algo, profile, k, z, e, cpu, status)


class TestErrorPercent:
    @pytest.mark.parametrize("f,f_star,expected", [
        (0.0005, 0.0, 50.0), (-210.0, -210.0, 0.0), (105.0, 100.0, 5.0),
    ])
    def test_values(self, f, f_star, expected):
        assert error_percent(f, f_star) == pytest.approx(expected)

    @given(st.floats(0.001, 1e6), st.floats(-1e6, 1e6))
    def test_scale_invariant(self, f_star, f):
        a = error_percent(f, f_star)
        b = error_percent(10 * f, 10 * f_star)
        assert b == pytest.approx(a, rel=1e-9, abs=1e-9)


class TestAggregate:
    def test_hand_example(self):
        s = aggregate([rec("A.01", "bfgs", 0, 0, 1.0), rec("A.01", "bfgs", 1, 0, 3.0)])
        m = s.per_problem[("bfgs", "A.01")]
        assert m.mean_error == 2.0 and m.variance == 2.0

    def test_rate_92(self):
        records = [rec("A.01", "baron", k, 0, 1.0 if k < 46 else 50.0) for k in range(50)]
        assert aggregate(records).per_solver["baron"].convergence_rate == 92.0

    def test_single_record(self):
        s = aggregate([rec("A.01", "bfgs", 0, 0, 0.1)])
        m = s.per_problem[("bfgs", "A.01")]
        assert m.convergence_rate == 100.0 and m.variance == 0.0

    def test_cpu_threshold(self):
        s = aggregate([rec("A.01", "bfgs", 0, 0, 0.1, cpu=12.0)])
        assert s.per_solver["bfgs"].convergence_rate == 0.0

    def test_failures_excluded_from_error(self):
        s = aggregate([rec("A.01", "sqa", 0, 0, None, status="numerical_failure"),
                       rec("A.01", "sqa", 1, 0, 2.0)])
        m = s.per_problem[("sqa", "A.01")]
        assert m.mean_error == 2.0 and m.convergence_rate == 50.0

    def test_missing_cell(self):
        with pytest.raises(ValueError):
            aggregate([rec("A.01", "bfgs", 0, 0, 1.0), rec("A.01", "bfgs", 1, 1, 1.0)])

    def test_empty(self):
        with pytest.raises(ValueError):
            aggregate([])

    def test_profile_labels(self):
        s = aggregate([rec("A.01", "bfgs", 0, 0, 1.0, profile="pnp"),
                       rec("A.01", "bfgs", 0, 0, 1.0, profile="ha")])
        assert set(s.per_solver) == {"bfgs-pnp", "bfgs-ha"}

    def test_exclusions(self):
        s = aggregate([rec("A.01", "bfgs", 0, 0, 1.0), rec("B.01", "sqa", 0, 0, 1.0)],
                      problems=["A.01", "B.01"])
        assert s.excluded == {"bfgs": ["B.01"], "sqa": ["A.01"]}

    def test_bounds(self):
        rng = random.Random(0)
        records = [rec(f"A.0{p}", a, k, z, rng.choice([None, rng.uniform(0, 20)]),
                       cpu=rng.uniform(0, 12))
                   for p in range(1, 4) for a in ("x", "y") for k in range(5) for z in range(2)]
        s = aggregate(records)
        for m in s.per_problem.values():
            assert 0 <= m.convergence_rate <= 100 and (math.isnan(m.variance) or m.variance >= 0)

    @given(st.randoms(use_true_random=False))
    @settings(max_examples=25, deadline=None)
    def test_order_invariant(self, rnd):
        records = [rec("A.01", "bfgs", k, z, rnd.uniform(0, 10)) for k in range(6)
                   for z in range(2)]
        shuffled = list(records)
        rnd.shuffle(shuffled)
        a, b = aggregate(records), aggregate(shuffled)
        assert a.per_solver["bfgs"].convergence_rate == b.per_solver["bfgs"].convergence_rate

    def test_matches_reference(self):
        rng = random.Random(5)
        records = [rec(f"A.0{p}", a, k, z, rng.choice([None, rng.uniform(0, 9)]),
                       cpu=rng.uniform(0, 11), profile=prof)
                   for p in range(1, 5) for a in ("bfgs", "sqa") for prof in ("pnp", "qs")
                   for k in range(7) for z in range(3)]
        s = aggregate(records)
        ref = brute_force_reference(records)
        for label, (e, v, g, c) in ref.items():
            m = s.per_solver[label]
            for got, want in ((m.mean_error, e), (m.mean_variance, v),
                              (m.convergence_rate, g), (m.mean_cpu, c)):
                assert got == pytest.approx(want, rel=1e-12, abs=1e-300)


class TestRank:
    def _summary(self, rows):
        records = []
        for algo, errors in rows.items():
            records += [rec("A.01", algo, k, 0, e) for k, e in enumerate(errors)]
        return aggregate(records)

    def test_by_rate(self):
        s = self._summary({"good": [1, 1], "bad": [1, 9]})
        assert rank(s) == [(1, "good"), (2, "bad")]

    def test_tie_broken_by_error(self):
        s = self._summary({"a": [0.2], "b": [0.1]})
        assert rank(s) == [(1, "b"), (2, "a")]

    def test_cpu_ascending(self):
        records = [rec("A.01", "slow", 0, 0, 1.0, cpu=2.0), rec("A.01", "fast", 0, 0, 1.0, cpu=0.5)]
        assert rank(aggregate(records), "mean_cpu") == [(1, "fast"), (2, "slow")]

    def test_unknown_key(self):
        with pytest.raises(ValueError):
            rank(self._summary({"a": [1]}), "speed")
