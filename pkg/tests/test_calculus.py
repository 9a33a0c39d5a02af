import time
from dataclasses import replace

import numpy as np
import pytest

from nlpbench.calculus import (
    CENTRAL,
    FORWARD,
    FdScheme,
    check_gradient,
    fd_gradient,
    fd_hessian,
    fd_jacobian,
    interior_points,
)
from nlpbench.problems import get_problem, list_problems
from nlpbench.problems.spec import EvaluationError, evaluate_objective, near_singularity


def sphere(x):
    return np.sum(np.asarray(x) ** 2, axis=-1)


class TestScheme:
    def test_default_steps(self):
        eps = np.finfo(float).eps
        assert CENTRAL.step == pytest.approx(eps ** (1 / 3))
        assert FORWARD.step == pytest.approx(eps ** 0.5)

    def test_invalid(self):
        with pytest.raises(ValueError):
            FdScheme("central", base_step=0.0)
        with pytest.raises(ValueError):
            FdScheme("sideways")

    def test_relative_steps(self):
        s = FdScheme("central", base_step=1e-4, relative=True)
        np.testing.assert_allclose(s.steps(np.array([0.5, 100.0])), [1e-4, 1e-2])


class TestGradient:
    @pytest.mark.parametrize("scheme", [CENTRAL, FORWARD])
    def test_quadratic(self, scheme):
        tol = 1e-8 if scheme is CENTRAL else 1e-6
        np.testing.assert_allclose(fd_gradient(sphere, np.array([1.0, 2.0]), scheme),
                                   [2.0, 4.0], atol=tol)

    def test_matyas(self):
        p = get_problem("A.09")
        g = fd_gradient(lambda x: evaluate_objective(p, x), np.array([1.0, 1.0]))
        np.testing.assert_allclose(g, [0.04, 0.04], atol=1e-6)

    def test_constant(self):
        np.testing.assert_array_equal(fd_gradient(lambda x: 3.0, np.zeros(4)), np.zeros(4))

    def test_vectorized_matches_loop(self):
        p = get_problem("A.01")
        x = np.array([1.0, 0.3])
        a = fd_gradient(p.objective, x, vectorized=True)
        b = fd_gradient(lambda z: evaluate_objective(p, z), x)
        np.testing.assert_array_equal(a, b)

    def test_error_names_coordinate(self):
        p = get_problem("A.29")
        # The backward stencil point in coordinate 1 lands on the x2 = -2 pole.
        scheme = FdScheme("central", base_step=0.5, relative=False)
        with pytest.raises(EvaluationError) as exc:
            fd_gradient(lambda z: evaluate_objective(p, z), np.array([1.0, -1.5]), scheme)
        assert exc.value.coordinate == 1


class TestHessian:
    def test_identity(self):
        H = fd_hessian(sphere, np.array([0.3, -1.2, 4.0]))
        np.testing.assert_allclose(H, 2 * np.eye(3), atol=1e-5)

    def test_bilinear(self):
        H = fd_hessian(lambda x: x[..., 0] * x[..., 1], np.array([3.0, 7.0]))
        np.testing.assert_allclose(H, [[0, 1], [1, 0]], atol=1e-5)

    def test_from_gradient_symmetric(self):
        p = get_problem("A.01")
        H = fd_hessian(p.objective, np.array([0.7, 0.2]), grad=p.analytic_gradient)
        np.testing.assert_array_equal(H, H.T)

    def test_beale_psd_at_minimizer(self):
        p = get_problem("A.01")
        H = fd_hessian(p.objective, p.x_star, grad=p.analytic_gradient)
        assert np.linalg.eigvalsh(H).min() >= -1e-6


class TestJacobian:
    def test_linear(self):
        J = fd_jacobian(lambda x: np.array([x[0] + x[1] - 8]), np.array([4.0, 4.0]))
        np.testing.assert_allclose(J, [[1.0, 1.0]], atol=1e-9)

    def test_b14_constraint(self):
        J = fd_jacobian(lambda x: np.array([x[0] ** 2 + x[1] - 3]), np.array([1.0, 2.0]))
        np.testing.assert_allclose(J, [[2.0, 1.0]], atol=1e-6)

    def test_empty(self):
        J = fd_jacobian(lambda x: np.zeros(0), np.ones(3), m=0)
        assert J.shape == (0, 3)


class TestCheckGradient:
    def test_sphere(self):
        p = get_problem("A.13")
        assert check_gradient(p, interior_points(p, 5)) <= 1e-10

    def test_booth(self):
        p = get_problem("A.21")
        assert check_gradient(p, interior_points(p, 20, seed=3)) <= 1e-6

    def test_detects_bug(self):
        p = get_problem("A.21")
        wrong = replace(p, analytic_gradient=lambda x: 1.01 * p.analytic_gradient(x))
        assert check_gradient(wrong, interior_points(p, 3)) > 1e-3

    def test_requires_gradient(self):
        p = get_problem("A.21")
        bare = replace(p, analytic_gradient=None)
        with pytest.raises(ValueError):
            check_gradient(bare, interior_points(p, 1))


class TestInteriorPoints:
    def test_seeded_and_inside(self):
        for p in list_problems():
            a = interior_points(p, 20, seed=1)
            b = interior_points(p, 20, seed=1)
            np.testing.assert_array_equal(a, b)
            assert a.shape == (20, p.dimension)
            assert np.all(a >= p.sampling_lower) and np.all(a <= p.sampling_upper)

    def test_skips_singularities(self):
        p = get_problem("A.29")
        pts = interior_points(p, 50)
        assert not any(near_singularity(p, x, 1e-3) for x in pts)

    def test_all_problems_fast(self):
        t0 = time.perf_counter()
        worst = {p.id: check_gradient(p, interior_points(p, 20))
                 for p in list_problems() if p.analytic_gradient is not None}
        assert len(worst) == 60
        assert max(worst.values()) <= 1e-5, worst
        assert time.perf_counter() - t0 < 30
