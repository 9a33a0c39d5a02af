import numpy as np
import pytest

from nlpbench.calculus import objective_gradient
from nlpbench.problems import get_problem
from nlpbench.problems.spec import Optimum, ProblemSpec
from nlpbench.transform import (
    add_slacks,
    constraint_jacobians,
    estimate_multipliers,
    indices_from,
    kkt_residual,
    performance_indices,
)


def toy_inequality():
    """min x^2 subject to x - 1 <= 0."""
    return ProblemSpec(
        id="T.01", name="toy", dimension=1,
        lower_bounds=np.array([-np.inf]), upper_bounds=np.array([np.inf]),
        objective=lambda x: x[..., 0] ** 2,
        analytic_gradient=lambda x: 2 * x,
        ineq_map=lambda x: np.stack([x[..., 0] - 1], axis=-1), n_ineq=1,
        claimed_optima=(Optimum(np.zeros(1), 0.0),))


class TestSlacks:
    def test_toy_residual(self):
        aug = add_slacks(toy_inequality(), slack_init=1.0)
        z = aug.initial_point(np.zeros(1))
        np.testing.assert_allclose(z, [0.0, 1.0])
        np.testing.assert_allclose(aug.eq_residual(z), [0.0])

    def test_equality_only_identity(self):
        p = get_problem("B.13")
        aug = add_slacks(p)
        assert aug.n_slacks == 0 and aug.augmented_dimension == p.dimension
        x = np.array([1.0, 7.0])
        np.testing.assert_array_equal(aug.lift(x), x)
        assert aug.objective(x) == pytest.approx(p.objective(x))

    def test_b06_dimension(self):
        assert add_slacks(get_problem("B.06")).augmented_dimension == 4

    def test_bounds_become_slacked_rows(self):
        p = get_problem("B.06")
        aug = add_slacks(p, include_bounds=True)
        assert aug.n_slacks == 2 + int(np.isfinite(p.lower_bounds).sum()
                                       + np.isfinite(p.upper_bounds).sum())

    def test_jacobian_matches_fd(self):
        from nlpbench.calculus import fd_jacobian
        aug = add_slacks(get_problem("B.06"))
        z = np.array([15.0, 2.0, 0.7, 1.3])
        np.testing.assert_allclose(aug.jacobian(z), fd_jacobian(aug.eq_residual, z),
                                   rtol=1e-6, atol=1e-6)

    def test_lagrangian_hessian_symmetric(self):
        aug = add_slacks(get_problem("B.06"))
        H = aug.lagrangian_hessian(np.array([15.0, 2.0, 0.7, 1.3]), np.array([0.5, -0.2]))
        np.testing.assert_allclose(H, H.T)
        assert H[2, 2] == pytest.approx(1.0) and H[3, 3] == pytest.approx(-0.4)

    def test_feasible_slacks(self):
        aug = add_slacks(toy_inequality())
        z = aug.lift(np.array([0.2]))
        np.testing.assert_allclose(aug.eq_residual(z), [0.0], atol=1e-15)


class TestMultipliers:
    def test_b13_hand_solution(self):
        p = get_problem("B.13")
        x = np.array([4.0, 4.0])
        g = objective_gradient(p, x)
        J, _ = constraint_jacobians(p, x)
        lam = estimate_multipliers(p, x, g, J)
        np.testing.assert_allclose(lam, [-g[0]], rtol=1e-9)
        np.testing.assert_allclose(g + J.T @ lam, 0.0, atol=1e-7)

    def test_unconstrained(self):
        g = np.array([3.0, 4.0])
        lam = estimate_multipliers(None, np.zeros(2), g, np.zeros((0, 2)))
        assert lam.size == 0
        assert indices_from(g, np.zeros((0, 2)), np.zeros(0), lam).Q == pytest.approx(25.0)

    def test_orthogonal_gradient(self):
        lam = estimate_multipliers(None, np.zeros(2), np.array([1.0, -1.0]),
                                   np.array([[1.0, 1.0]]))
        np.testing.assert_allclose(lam, [0.0], atol=1e-15)


class TestIndices:
    def test_sphere_origin(self):
        idx = performance_indices(get_problem("A.13"), np.zeros(30))
        assert (idx.P, idx.Q, idx.R) == (0.0, 0.0, 0.0)

    def test_b13_at_optimum(self):
        p = get_problem("B.13")
        x = np.array([4.0, 4.0])
        lam = -objective_gradient(p, x)[:1]
        idx = performance_indices(p, x, lam)
        assert idx.P == 0.0 and idx.Q == pytest.approx(0.0, abs=1e-12)

    def test_b13_infeasible(self):
        idx = performance_indices(get_problem("B.13"), np.array([5.0, 4.0]))
        assert idx.P == pytest.approx(1.0)
        assert idx.R == pytest.approx(idx.P + idx.Q)


class TestKkt:
    def test_b14_optimum(self):
        p = get_problem("B.14")
        res = kkt_residual(p, np.array([1.0, 2.0, 0.0]))
        assert res.stationarity_norm <= 1e-6
        assert res.primal_eq_norm <= 1e-12 and res.primal_ineq_violation <= 1e-12

    def test_interior_unconstrained(self):
        res = kkt_residual(get_problem("A.13"), np.zeros(30))
        assert res.stationarity_norm == 0.0 and res.primal_eq_norm == 0.0
        assert res.primal_ineq_violation == 0.0 and res.complementarity == 0.0

    def test_violation(self):
        res = kkt_residual(toy_inequality(), np.array([1.5]), mu=[0.0], lam=[])
        assert res.primal_ineq_violation == pytest.approx(0.5)
