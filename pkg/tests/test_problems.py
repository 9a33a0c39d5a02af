import json

import numpy as np
import pytest

from nlpbench.problems import catalog_json, get_problem, list_problems, problem_ids
from nlpbench.problems.spec import (
    EvaluationError,
    Provenance,
    evaluate_constraints,
    evaluate_objective,
    max_violation,
)
from nlpbench.problems.validation import (
    KNOWN_DISCREPANCIES,
    OracleConfig,
    agrees,
    claimed_point_checks,
    validate_reference_optimum,
)

ALL = problem_ids()


class TestRegistry:
    def test_closed_registry(self):
        expected = [f"A.{i:02d}" for i in range(1, 31)] + [f"B.{i:02d}" for i in range(1, 31)]
        assert ALL == expected
        for pid in expected:
            assert get_problem(pid).id == pid

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            get_problem("A.99")

    @pytest.mark.parametrize("constrained,count", [(False, 30), (True, 30), (None, 60)])
    def test_list_counts(self, constrained, count):
        assert len(list_problems(constrained=constrained)) == count

    def test_two_dimensional_subset(self):
        subset = list_problems(constrained=False, max_dimension=2)
        assert all(p.dimension <= 2 and not p.constrained for p in subset)
        expected = {"A.01", "A.02", "A.03", "A.04", "A.05", "A.08", "A.09", "A.17",
                    "A.19", "A.20", "A.21", "A.23", "A.25", "A.27", "A.28", "A.29", "A.30"}
        assert {p.id for p in subset} == expected

    def test_catalog_json(self):
        rows = json.loads(catalog_json())
        assert len(rows) == 60
        assert {"id", "name", "dimension", "bounds", "n_eq", "n_ineq", "f_star",
                "provenance"} <= set(rows[0])


class TestEvaluate:
    @pytest.mark.parametrize("pid,x,f", [
        # Beale as printed uses 2.5 in the second term, so (3, 0.5) leaves 0.25^2.
        ("A.01", (3, 0.5), 0.0625),
        ("A.13", (0.0,) * 30, 0.0),
        ("A.15", tuple(i * (11 - i) for i in range(1, 11)), -210.0),
    ])
    def test_objective_at_claimed(self, pid, x, f):
        assert evaluate_objective(get_problem(pid), np.array(x, dtype=float)) == \
            pytest.approx(f, abs=1e-12)

    def test_batched_matches_pointwise(self):
        rng = np.random.default_rng(0)
        for p in list_problems():
            X = rng.uniform(p.sampling_lower, p.sampling_upper, size=(4, p.dimension)) * 0.01
            with np.errstate(all="ignore"):
                batch = p.objective(X)
                single = np.array([p.objective(x) for x in X])
            np.testing.assert_array_equal(batch, single, err_msg=p.id)

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            evaluate_objective(get_problem("A.01"), np.zeros(3))

    def test_b13_equality(self):
        eq, ineq = evaluate_constraints(get_problem("B.13"), np.array([4.0, 4.0]))
        np.testing.assert_allclose(eq, [0.0], atol=1e-14)

    def test_b06_inequalities(self):
        _, ineq = evaluate_constraints(get_problem("B.06"), np.array([14.095, 0.84296]))
        assert ineq.size == 2 and np.all(ineq <= 1e-4)

    @pytest.mark.parametrize("pid", [p for p in ALL if p.startswith("A.")])
    def test_unconstrained_have_no_constraints(self, pid):
        p = get_problem(pid)
        eq, ineq = evaluate_constraints(p, p.sampling_lower * 0.5 + p.sampling_upper * 0.5)
        assert eq.size == 0 and ineq.size == 0

    def test_pure(self):
        for p in list_problems():
            x = 0.3 * p.sampling_lower + 0.7 * p.sampling_upper
            with np.errstate(all="ignore"):
                a, b = p.objective(x), p.objective(x)
                c1, c2 = evaluate_constraints(p, x), evaluate_constraints(p, x)
            assert np.array_equal(a, b, equal_nan=True)
            for u, v in zip(c1, c2):
                assert np.array_equal(u, v, equal_nan=True)

    def test_singularity_raises(self):
        p = get_problem("A.29")
        with pytest.raises(EvaluationError) as exc:
            evaluate_objective(p, np.array([1.0, -2.0]))
        assert exc.value.problem_id == "A.29"


class TestReferenceOptima:
    @pytest.mark.parametrize("pid", ALL)
    def test_reference_consistent(self, pid):
        p = get_problem(pid)
        for opt in p.reference_optima:
            if opt.x is None:
                continue
            assert evaluate_objective(p, opt.x) == pytest.approx(
                p.f_star, abs=1e-6 * max(1.0, abs(p.f_star)))
            if p.constrained:
                assert max_violation(p, opt.x) <= 1e-6

    @pytest.mark.parametrize("pid", ALL)
    def test_provenance(self, pid):
        p = get_problem(pid)
        if p.optimum_provenance is Provenance.PAPER_CLAIMED:
            assert agrees(p.claimed_optima[0].f, p.f_star)
        if p.optimum_provenance is Provenance.ORACLE_CORRECTED:
            assert pid in KNOWN_DISCREPANCIES

    def test_power_sum_claimed_point_off(self):
        fs, _ = claimed_point_checks(get_problem("A.12"))
        assert fs[0] > 0

    def test_bohachevsky_oracle_agrees(self):
        r = validate_reference_optimum(get_problem("A.02"), OracleConfig(starts=10))
        assert r.agrees and abs(r.oracle_f) < 1e-8

    def test_hump_oracle_records_value(self):
        r = validate_reference_optimum(get_problem("A.08"), OracleConfig(starts=20))
        assert r.agrees is False and r.oracle_f < 0 and r.discrepant
