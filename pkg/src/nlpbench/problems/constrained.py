"""Thirty constrained test problems (ids B.01 to B.30).

Equalities are ``c_j(x) = 0`` and inequalities ``c_i(x) <= 0``.  Problems
with mixed ``(x, y)`` variables are flattened in printed order.  Infinite
entries in a domain are written as ``inf``; they are never enforced.
"""

from __future__ import annotations

import numpy as np

from .spec import Singularity

INF = np.inf


def _stack(*cols):
    return np.stack(np.broadcast_arrays(*cols), axis=-1)


def _x(x, n):
    return tuple(x[..., i] for i in range(n))


def _grad_from(n, entries):
    """Build a gradient array from ``{index: column}``; missing entries are 0."""
    def build(x):
        g = np.zeros(x.shape, dtype=float)
        for i, col in entries(x).items():
            g[..., i] = col
        return g
    return build


# B.01 ------------------------------------------------------------------

def b01_f(x):
    return (5 * np.sum(x[..., :4], axis=-1) - 5 * np.sum(x[..., :4] ** 2, axis=-1)
            - np.sum(x[..., 4:], axis=-1))


def b01_g(x):
    g = -np.ones_like(x)
    g[..., :4] = 5 - 10 * x[..., :4]
    return g


def b01_ineq(x):
    x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11, x12, _ = _x(x, 13)
    return _stack(
        2 * x1 + 2 * x2 + x10 + x11 - 10,
        2 * x1 + 2 * x3 + x10 + x12 - 10,
        2 * x2 + 2 * x3 + x11 + x12 - 10,
        -8 * x1 + x10,
        -8 * x2 + x11,
        -8 * x3 + x12,
        -2 * x4 - x5 + x10,
        -2 * x6 - x7 + x11,
        -2 * x8 - x9 + x12,
    )


# B.02 ------------------------------------------------------------------

def _b02_parts(x):
    n = x.shape[-1]
    i = np.arange(1, n + 1)
    c = np.cos(x)
    num = np.sum(c ** 4, axis=-1) - 2 * np.prod(c ** 2, axis=-1)
    den = np.sqrt(np.sum(i * x ** 2, axis=-1))
    return i, c, num, den


def b02_f(x):
    _, _, num, den = _b02_parts(x)
    return -np.abs(num / den)


def _prod_except(v):
    """Product of all entries of ``v`` except each one (no division)."""
    left = np.cumprod(np.concatenate([np.ones(v.shape[:-1] + (1,)), v[..., :-1]], axis=-1), axis=-1)
    right = np.cumprod(np.concatenate([np.ones(v.shape[:-1] + (1,)), v[..., :0:-1]], axis=-1), axis=-1)[..., ::-1]
    return left * right


def b02_g(x):
    i, c, num, den = _b02_parts(x)
    s = np.sin(x)
    c2 = c ** 2
    dnum = -4 * c ** 3 * s - 2 * (-2 * s * c) * _prod_except(c2)
    dden = i * x / den[..., None]
    ratio = num / den
    dratio = (dnum * den[..., None] - num[..., None] * dden) / den[..., None] ** 2
    return -np.sign(ratio)[..., None] * dratio


def b02_ineq(x):
    n = x.shape[-1]
    return _stack(-np.prod(x, axis=-1) + 0.75, np.sum(x, axis=-1) - 7.5 * n)


# B.03 ------------------------------------------------------------------

def b03_f(x):
    n = x.shape[-1]
    return -np.sqrt(n) ** n * np.prod(x, axis=-1)


def b03_g(x):
    n = x.shape[-1]
    return -np.sqrt(n) ** n * _prod_except(x)


def b03_eq(x):
    return _stack(np.sum(x ** 2, axis=-1) - 1)


# B.04 ------------------------------------------------------------------

def b04_f(x):
    x1, _, x3, _, x5 = _x(x, 5)
    return 5.3578547 * x3 ** 2 + 0.8356891 * x1 * x5 + 37.293239 * x1 - 40792.141


b04_g = _grad_from(5, lambda x: {
    0: 0.8356891 * x[..., 4] + 37.293239,
    2: 2 * 5.3578547 * x[..., 2],
    4: 0.8356891 * x[..., 0],
})


def b04_ineq(x):
    x1, x2, x3, x4, x5 = _x(x, 5)
    u = 85.334407 + 0.0056858 * x2 * x5 + 0.0006262 * x1 * x4 - 0.0022053 * x3 * x5
    v = 80.51249 + 0.0071317 * x2 * x5 + 0.0029955 * x1 * x2 + 0.0021813 * x3 ** 2
    w = 9.300961 + 0.0047026 * x3 * x5 + 0.0012547 * x1 * x3 + 0.0019085 * x3 * x4
    return _stack(-u, u - 92, -v + 90, v - 110, -w + 20, w - 25)


# B.05 ------------------------------------------------------------------

def b05_f(x):
    x1, x2, _, _ = _x(x, 4)
    return 3 * x1 + 1e-6 * x1 ** 3 + 2 * x2 + (2 / 3) * 1e-6 * x2 ** 3


b05_g = _grad_from(4, lambda x: {
    0: 3 + 3e-6 * x[..., 0] ** 2,
    1: 2 + 2e-6 * x[..., 1] ** 2,
})


def b05_ineq(x):
    _, _, x3, x4 = _x(x, 4)
    return _stack(x3 - x4 - 0.55, x4 - x3 - 0.55)


def b05_eq(x):
    x1, x2, x3, x4 = _x(x, 4)
    return _stack(
        1000 * (np.sin(-x3 - 0.25) + np.sin(-x4 - 0.25)) + 894.8 - x1,
        1000 * (np.sin(x3 - 0.25) + np.sin(x3 - x4 - 0.25)) + 894.8 - x2,
        1000 * (np.sin(x4 - 0.25) + np.sin(x4 - x3 - 0.25)) + 1294.8,
    )


# B.06 ------------------------------------------------------------------

def b06_f(x):
    return (x[..., 0] - 10) ** 3 + (x[..., 1] - 20) ** 3


def b06_g(x):
    return _stack(3 * (x[..., 0] - 10) ** 2, 3 * (x[..., 1] - 20) ** 2)


def b06_ineq(x):
    x1, x2 = _x(x, 2)
    return _stack(-(x1 - 5) ** 2 - (x2 - 5) ** 2 + 100,
                  (x1 - 6) ** 2 + (x2 - 5) ** 2 - 82.81)


# B.07 ------------------------------------------------------------------

def b07_f(x):
    x1, x2, x3, x4, x5, x6, x7, x8, x9, x10 = _x(x, 10)
    return (2 * (x6 - 1) ** 2 - 16 * x2 - 14 * x1 + (x5 - 3) ** 2
            + 4 * (x4 - 5) ** 2 + (x3 - 10) ** 2 + (x10 - 7) ** 2
            + 7 * (x8 - 11) ** 2 + 2 * (x9 - 10) ** 2 + x1 * x2 + x1 ** 2
            + x2 ** 2 + 5 * x7 ** 2 + 45)


def b07_g(x):
    x1, x2, x3, x4, x5, x6, x7, x8, x9, x10 = _x(x, 10)
    return _stack(-14 + x2 + 2 * x1, -16 + x1 + 2 * x2, 2 * (x3 - 10),
                  8 * (x4 - 5), 2 * (x5 - 3), 4 * (x6 - 1), 10 * x7,
                  14 * (x8 - 11), 4 * (x9 - 10), 2 * (x10 - 7))


def b07_ineq(x):
    x1, x2, x3, x4, x5, x6, x7, x8, x9, x10 = _x(x, 10)
    return _stack(
        4 * x1 + 5 * x2 - 3 * x7 + 9 * x8 - 105,
        10 * x1 - 8 * x2 - 17 * x7 + 2 * x8,
        -8 * x1 + 2 * x2 + 5 * x9 - 2 * x10 - 12,
        3 * (x1 - 2) ** 2 + 4 * (x2 - 3) ** 2 + 2 * x3 ** 2 - 7 * x4 - 120,
        5 * x1 ** 2 + 8 * x2 + (x3 - 6) ** 2 - 2 * x4 - 40,
        0.5 * (x1 - 8) ** 2 + 2 * (x2 - 4) ** 2 + 3 * x5 ** 2 - x6 - 30,
        x1 ** 2 + 2 * (x2 - 2) ** 2 - 2 * x1 * x2 + 14 * x5 - 6 * x6,
        -3 * x1 + 6 * x2 + 12 * (x9 - 8) ** 2 - 7 * x10,
    )


# B.08 ------------------------------------------------------------------

def b08_f(x):
    x1, x2 = _x(x, 2)
    return -np.sin(2 * np.pi * x1) ** 3 * np.sin(2 * np.pi * x2) / (x1 ** 3 * (x1 + x2))


def b08_g(x):
    x1, x2 = _x(x, 2)
    a = np.sin(2 * np.pi * x1)
    b = np.sin(2 * np.pi * x2)
    num = a ** 3 * b
    den = x1 ** 3 * (x1 + x2)
    dnum1 = 3 * a ** 2 * np.cos(2 * np.pi * x1) * 2 * np.pi * b
    dnum2 = a ** 3 * np.cos(2 * np.pi * x2) * 2 * np.pi
    dden1 = 3 * x1 ** 2 * (x1 + x2) + x1 ** 3
    dden2 = x1 ** 3
    return _stack(-(dnum1 * den - num * dden1) / den ** 2,
                  -(dnum2 * den - num * dden2) / den ** 2)


def b08_ineq(x):
    x1, x2 = _x(x, 2)
    return _stack(x1 ** 2 - x2 + 1, 1 - x1 + (x2 - 4) ** 2)


# B.09 ------------------------------------------------------------------

def b09_f(x):
    x1, x2, x3, x4, x5, x6, x7 = _x(x, 7)
    return ((x1 - 10) ** 2 - 8 * x7 - 10 * x6 + 5 * (x2 - 12) ** 2
            + 3 * (x4 - 11) ** 2 - 4 * x6 * x7 + x3 ** 4 + 7 * x6 ** 2
            + 10 * x5 ** 6 + x7 ** 4)


def b09_g(x):
    x1, x2, x3, x4, x5, x6, x7 = _x(x, 7)
    return _stack(2 * (x1 - 10), 10 * (x2 - 12), 4 * x3 ** 3, 6 * (x4 - 11),
                  60 * x5 ** 5, -10 - 4 * x7 + 14 * x6, -8 - 4 * x6 + 4 * x7 ** 3)


def b09_ineq(x):
    x1, x2, x3, x4, x5, x6, x7 = _x(x, 7)
    return _stack(
        2 * x1 ** 2 + 3 * x2 ** 4 + x3 + 4 * x4 ** 2 + 5 * x5 - 127,
        7 * x1 + 3 * x2 + 10 * x3 ** 2 + x4 - x5 - 282,
        23 * x1 + x2 ** 2 + 6 * x6 ** 2 - 8 * x7 - 196,
        4 * x1 ** 2 + x2 ** 2 - 3 * x1 * x2 + 2 * x3 ** 2 + 5 * x6 - 11 * x7,
    )


# B.10 ------------------------------------------------------------------

def b10_f(x):
    return x[..., 0] + x[..., 1] + x[..., 2]


b10_g = _grad_from(8, lambda x: {0: 1.0, 1: 1.0, 2: 1.0})


def b10_ineq(x):
    x1, x2, x3, x4, x5, x6, x7, x8 = _x(x, 8)
    return _stack(
        -1 + 0.0025 * (x4 + x6),
        -1 + 0.0025 * (-x4 + x5 + x7),
        -1 + 0.01 * (-x5 + x8),
        100 * x1 - x1 * x6 + 833.33252 * x4 - 83333.333,
        x2 * x4 - x2 * x7 - 1250 * x4 + 1250 * x5,
        x3 * x5 - x3 * x8 - 2500 * x5 + 1250000,
    )


# B.11 ------------------------------------------------------------------

def b11_f(x):
    return x[..., 0] ** 2 + (x[..., 1] - 1) ** 2


def b11_g(x):
    return _stack(2 * x[..., 0], 2 * (x[..., 1] - 1))


def b11_eq(x):
    return _stack(x[..., 1] - x[..., 0] ** 2)


# B.12 ------------------------------------------------------------------

def b12_f(x):
    return np.exp(np.prod(x, axis=-1))


def b12_g(x):
    return np.exp(np.prod(x, axis=-1))[..., None] * _prod_except(x)


def b12_eq(x):
    x1, x2, x3, x4, x5 = _x(x, 5)
    return _stack(x1 ** 2 + x2 ** 2 + x3 ** 2 + x4 ** 2 + x5 ** 2 - 10,
                  x2 * x3 - 5 * x4 * x5,
                  x1 ** 3 + x2 ** 3 + 1)


# B.13 - B.17 -----------------------------------------------------------

def b13_f(x):
    return x[..., 0] ** 3 + x[..., 1] ** 3


def b13_g(x):
    return 3 * x ** 2


def b13_eq(x):
    return _stack(x[..., 0] + x[..., 1] - 8)


def b14_f(x):
    x1, x2, x3 = _x(x, 3)
    return (x1 - 1) ** 2 + (x2 - 2) ** 2 + x3 ** 2 + 2


def b14_g(x):
    x1, x2, x3 = _x(x, 3)
    return _stack(2 * (x1 - 1), 2 * (x2 - 2), 2 * x3)


def b14_eq(x):
    return _stack(x[..., 0] ** 2 + x[..., 1] - 3)


def b15_f(x):
    x1, x2, x3 = _x(x, 3)
    return 2 * (x1 * x2 + x2 * x3 + x1 * x3)


def b15_g(x):
    x1, x2, x3 = _x(x, 3)
    return _stack(2 * (x2 + x3), 2 * (x1 + x3), 2 * (x2 + x1))


def b15_eq(x):
    x1, x2, x3 = _x(x, 3)
    return _stack(x1 * x2 * x3 - 72, x1 - 2 * x2)


def b16_f(x):
    return np.log(1 + x[..., 0] ** 2) - x[..., 1]


def b16_g(x):
    x1 = x[..., 0]
    return _stack(2 * x1 / (1 + x1 ** 2), -np.ones_like(x1))


def b16_eq(x):
    return _stack((1 + x[..., 0] ** 2) ** 2 + x[..., 1] ** 2 - 4)


def b17_f(x):
    x1, x2, _ = _x(x, 3)
    return 0.01 * (x1 - 1) ** 2 + (x2 - x1 ** 2) ** 2


def b17_g(x):
    x1, x2, x3 = _x(x, 3)
    return _stack(0.02 * (x1 - 1) - 4 * x1 * (x2 - x1 ** 2),
                  2 * (x2 - x1 ** 2), np.zeros_like(x3))


def b17_eq(x):
    return _stack(x[..., 0] + x[..., 2] ** 2 + 1)


# B.18 - B.20 -----------------------------------------------------------

_B18_C = np.array([42.0, 44.0, 45.0, 47.0, 47.5])


def b18_f(x):
    return x @ _B18_C - 50 * np.sum(x ** 2, axis=-1)


def b18_g(x):
    return _B18_C - 100 * x


def b18_ineq(x):
    x1, x2, x3, x4, x5 = _x(x, 5)
    return _stack(20 * x1 + 12 * x2 + 11 * x3 + 7 * x4 + 4 * x5 - 40)


_B19_C = np.array([-10.5, -7.5, -3.5, -2.5, -1.5])


def b19_f(x):
    xs, y = x[..., :5], x[..., 5]
    return xs @ _B19_C - 0.5 * np.sum(xs ** 2, axis=-1) - 10 * y


def b19_g(x):
    g = np.empty_like(x)
    g[..., :5] = _B19_C - x[..., :5]
    g[..., 5] = -10.0
    return g


def b19_ineq(x):
    x1, x2, x3, x4, x5, y = _x(x, 6)
    return _stack(6 * x1 + 3 * x2 + 3 * x3 + 2 * x4 + x5 - 6.5,
                  10 * x1 + 10 * x3 + y - 20)


def b20_f(x):
    xs, y = x[..., :4], x[..., 4:]
    return 5 * np.sum(xs, axis=-1) - 50 * np.sum(xs ** 2, axis=-1) - np.sum(y, axis=-1)


def b20_g(x):
    g = -np.ones_like(x)
    g[..., :4] = 5 - 100 * x[..., :4]
    return g


def b20_ineq(x):
    x1, x2, x3, x4 = _x(x, 4)
    y1, y2, y3, y4, y5, y6, y7, y8 = (x[..., 4 + i] for i in range(8))
    return _stack(
        2 * x1 + 2 * x2 + y6 + y7 - 10,
        2 * x1 + 2 * x3 + y6 + y8 - 10,
        2 * x2 + 2 * x3 + y7 + y8 - 10,
        -8 * x1 + y6,
        -8 * x2 + y7,
        -8 * x3 + y8,
        -2 * x4 - y1 + y6,
        -2 * y2 - y3 + y7,
        -2 * y4 - y5 + y8,
    )


# B.21 ------------------------------------------------------------------

_B21_PAIRS = ([(i, i + 1) for i in range(9)] + [(i, i + 2) for i in range(8)]
              + [(0, 8), (0, 9), (1, 9), (0, 4), (3, 6)])
_B21_W = np.zeros((10, 10))
for _i, _j in _B21_PAIRS:
    _B21_W[_i, _j] += 1.0
_B21_S = _B21_W + _B21_W.T


def b21_f(x):
    return -0.5 * np.einsum("...i,ij,...j->...", x, _B21_S, x)


def b21_g(x):
    return -(x @ _B21_S)


def b21_eq(x):
    return _stack(np.sum(x, axis=-1) - 1)


# B.22 ------------------------------------------------------------------

_B22_C = np.array([2.0, 2.0, 1.0, 4.0, 1.0, 4.0])
_B22_W = np.array([25.0, 1.0, 1.0, 1.0, 1.0, 1.0])


def b22_f(x):
    return -np.sum(_B22_W * (x - _B22_C) ** 2, axis=-1)


def b22_g(x):
    return -2 * _B22_W * (x - _B22_C)


def b22_ineq(x):
    x1, x2, x3, x4, x5, x6 = _x(x, 6)
    return _stack(4 - (x3 - 3) ** 2 - x4, 4 - (x5 - 3) ** 2 - x6,
                  x1 - 3 * x2 - 2, -x1 + x2 - 2, x1 + x2 - 6, 2 - x1 - x2)


# B.23 ------------------------------------------------------------------
# The printed constraint has 2 y^T A y (a constant), not 2 y^T A x.

_B23_A = np.array([[0.0, 0.0, 1.0], [0.0, -1.0, 0.0], [-2.0, 1.0, -1.0]])
_B23_B = np.array([3.0, 0.0, -4.0])
_B23_Y = np.array([1.5, -0.5, -5.0])
_B23_Z = np.array([0.0, -1.0, -6.0])
_B23_CONST = (2 * _B23_Y @ _B23_A @ _B23_Y - _B23_Y @ _B23_Y
              + 0.25 * np.sum((_B23_B - _B23_Z) ** 2))
_B23_ATA = _B23_A.T @ _B23_A


def b23_f(x):
    return -2 * x[..., 0] + x[..., 1] - x[..., 2]


b23_g = _grad_from(3, lambda x: {0: -2.0, 1: 1.0, 2: -1.0})


def b23_ineq(x):
    x1, x2, x3 = _x(x, 3)
    quad = np.einsum("...i,ij,...j->...", x, _B23_ATA, x)
    return _stack(-quad + _B23_CONST, x1 + x2 + x3 - 4, 3 * x2 + x3 - 6)


# B.24 - B.25 -----------------------------------------------------------

def b24_f(x):
    return -12 * x[..., 0] - 7 * x[..., 1] + x[..., 1] ** 2


def b24_g(x):
    return _stack(-12 * np.ones_like(x[..., 0]), -7 + 2 * x[..., 1])


def b24_eq(x):
    return _stack(-2 * x[..., 0] ** 4 + 2 - x[..., 1])


def b25_f(x):
    return -x[..., 0] - x[..., 1]


b25_g = _grad_from(2, lambda x: {0: -1.0, 1: -1.0})


def b25_ineq(x):
    x1, x2 = _x(x, 2)
    return _stack(x2 - 2 - 2 * x1 ** 4 + 8 * x1 ** 3 - 8 * x1 ** 2,
                  x2 - 4 * x1 ** 4 + 32 * x1 ** 3 - 88 * x1 ** 2 + 96 * x1 - 36)


# B.26 ------------------------------------------------------------------

def b26_f(x):
    x1, _, x3, _, x5 = _x(x, 5)
    return 5.3578 * x3 ** 2 + 0.8357 * x1 * x5 + 37.2392 * x1


b26_g = _grad_from(5, lambda x: {
    0: 0.8357 * x[..., 4] + 37.2392,
    2: 2 * 5.3578 * x[..., 2],
    4: 0.8357 * x[..., 0],
})


def b26_ineq(x):
    x1, x2, x3, x4, x5 = _x(x, 5)
    return _stack(
        0.00002584 * x3 * x5 - 0.00006663 * x2 * x5 - 0.0000734 * x1 * x4 - 1,
        0.000853007 * x2 * x5 + 0.00009395 * x1 * x4 - 0.00033085 * x3 * x5 - 1,
        1330.3294 / (x2 * x5) - 0.42 * x1 / x5 - 0.30586 * x3 ** 2 / (x2 * x5) - 1,
        0.00024186 * x2 * x5 + 0.00010159 * x1 * x2 + 0.00007379 * x3 ** 2 - 1,
        2275.1327 / (x3 * x5) - 0.2668 * x1 / x5 - 0.40584 * x4 / x5 - 1,
        0.00029955 * x3 * x5 + 0.00007992 * x1 * x3 + 0.00012157 * x3 * x4 - 1,
    )


# B.27 - B.29 -----------------------------------------------------------

def b27_f(x):
    x1, x2, _ = _x(x, 3)
    return 0.5 * x1 / x2 - x1 - 5 / x2


def b27_g(x):
    x1, x2, x3 = _x(x, 3)
    return _stack(0.5 / x2 - 1, -0.5 * x1 / x2 ** 2 + 5 / x2 ** 2, np.zeros_like(x3))


def b27_ineq(x):
    x1, x2, x3 = _x(x, 3)
    return _stack(0.01 * x2 / x3 + 0.01 * x1 + 0.0005 * x1 * x3 - 1)


def _pair_obj(a, c):
    return -a + 0.4 * a ** 0.67 * c ** -0.67


def _pair_obj_grad(a, c):
    return -1 + 0.4 * 0.67 * a ** -0.33 * c ** -0.67, -0.4 * 0.67 * a ** 0.67 * c ** -1.67


def _pair_con(b, c, d):
    return 4 * b / d + 2 * b ** -0.71 / d + 0.05882 * b ** -1.3 * c - 1


def b28_f(x):
    return _pair_obj(x[..., 0], x[..., 2])


def b28_g(x):
    ga, gc = _pair_obj_grad(x[..., 0], x[..., 2])
    g = np.zeros_like(x)
    g[..., 0] = ga
    g[..., 2] = gc
    return g


def b28_ineq(x):
    x1, x2, x3, x4 = _x(x, 4)
    return _stack(0.05882 * x3 * x4 + 0.1 * x1 - 1, _pair_con(x2, x3, x4))


def b29_f(x):
    return _pair_obj(x[..., 0], x[..., 2]) + _pair_obj(x[..., 4], x[..., 6])


def b29_g(x):
    g = np.zeros_like(x)
    g[..., 0], g[..., 2] = _pair_obj_grad(x[..., 0], x[..., 2])
    g[..., 4], g[..., 6] = _pair_obj_grad(x[..., 4], x[..., 6])
    return g


def b29_ineq(x):
    x1, x2, x3, x4, x5, x6, x7, x8 = _x(x, 8)
    return _stack(0.05882 * x3 * x4 + 0.1 * x1 - 1,
                  0.05882 * x7 * x8 + 0.1 * x1 + 0.1 * x5 - 1,
                  _pair_con(x2, x3, x4),
                  _pair_con(x6, x7, x8))


# B.30 ------------------------------------------------------------------
# Printed with a cubic (x2 - x3)^3 term.

def b30_f(x):
    x1, x2, x3, x4, x5 = _x(x, 5)
    return ((x1 - 1) ** 2 + (x1 - x2) ** 2 + (x2 - x3) ** 3 + (x3 - x4) ** 4
            + (x4 - x5) ** 4)


def b30_g(x):
    x1, x2, x3, x4, x5 = _x(x, 5)
    a, b, c, d = x1 - x2, x2 - x3, x3 - x4, x4 - x5
    return _stack(2 * (x1 - 1) + 2 * a, -2 * a + 3 * b ** 2, -3 * b ** 2 + 4 * c ** 3,
                  -4 * c ** 3 + 4 * d ** 3, -4 * d ** 3)


def b30_eq(x):
    x1, x2, x3, x4, x5 = _x(x, 5)
    return _stack(x1 + x2 ** 2 + x3 ** 3 - 3 * np.sqrt(2) - 2,
                  x2 - x3 ** 2 + x4 - 2 * np.sqrt(2) + 2,
                  x1 * x5 - 2)


# -- table ----------------------------------------------------------------

def _b(lo, hi):
    return np.array(lo, dtype=float), np.array(hi, dtype=float)


def _bn(n, lo, hi):
    return np.full(n, float(lo)), np.full(n, float(hi))


# Each entry: dict consumed by the registry.
TABLE = [
    dict(id="B.01", n=13, bounds=_b([0] * 13, [1] * 9 + [100] * 3 + [1]),
         f=b01_f, g=b01_g, ineq=(b01_ineq, 9), lin_ineq=range(9),
         claimed=[((1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1), -15.0)]),
    dict(id="B.02", n=20, bounds=_bn(20, 0, 10), f=b02_f, g=b02_g,
         ineq=(b02_ineq, 2), lin_ineq=[1], claimed=[(None, -0.803619)],
         best_known=True),
    dict(id="B.03", n=10, bounds=_bn(10, 0, 1), f=b03_f, g=b03_g,
         eq=(b03_eq, 1), claimed=[(np.full(10, 0.1 ** 0.5), -1.0)]),
    dict(id="B.04", n=5, bounds=_b([78, 33, 27, 27, 27], [102, 45, 45, 45, 45]),
         f=b04_f, g=b04_g, ineq=(b04_ineq, 6),
         claimed=[((78, 33, 29.995, 45, 36.7758), -30665.539)]),
    dict(id="B.05", n=4, bounds=_b([0, 0, -0.55, -0.55], [1200, 1200, 0.55, 0.55]),
         f=b05_f, g=b05_g, ineq=(b05_ineq, 2), lin_ineq=[0, 1], eq=(b05_eq, 3),
         claimed=[((679.9453, 1026, 0.118876, -0.3962336), 5126.4981)]),
    dict(id="B.06", n=2, bounds=_b([13, 0], [100, 100]), f=b06_f, g=b06_g,
         ineq=(b06_ineq, 2), claimed=[((14.095, 0.84296), -6961.81388)]),
    dict(id="B.07", n=10, bounds=_bn(10, -10, 10), f=b07_f, g=b07_g,
         ineq=(b07_ineq, 8), lin_ineq=[0, 1, 2],
         claimed=[((2.171996, 2.363683, 8.773926, 5.095984, 0.9906548,
                    1.430574, 1.321644, 9.828726, 8.280092, 8.375927),
                   24.3062091)]),
    dict(id="B.08", n=2, bounds=_bn(2, 0, 10), f=b08_f, g=b08_g,
         ineq=(b08_ineq, 2), claimed=[((1.2279713, 4.2453733), -0.095825)],
         singular=(Singularity(0, 0.0),)),
    dict(id="B.09", n=7, bounds=_bn(7, -10, 10), f=b09_f, g=b09_g,
         ineq=(b09_ineq, 4),
         claimed=[((2.330499, 1.951372, -0.4775414, 4.365726, -0.6244870,
                    1.038131, 1.594227), 680.6300573)]),
    dict(id="B.10", n=8,
         bounds=_b([100, 1000, 1000, 10, 10, 10, 10, 10],
                   [10000, 10000, 10000, 1000, 1000, 1000, 1000, 1000]),
         f=b10_f, g=b10_g, ineq=(b10_ineq, 6), lin_ineq=[0, 1, 2],
         claimed=[((579.3167, 1359.943, 5110.071, 182.0174, 295.5985,
                    217.9799, 286.4162, 395.5979), 7049.3307)]),
    dict(id="B.11", n=2, bounds=_bn(2, -1, 1), f=b11_f, g=b11_g, eq=(b11_eq, 1),
         claimed=[((0.5 ** 0.5, 0.5), 0.75), ((-(0.5 ** 0.5), 0.5), 0.75)]),
    dict(id="B.12", n=5, bounds=_b([-2.3, -2.3, -3.2, -3.2, -3.2], [2.3, 2.3, 3.2, 3.2, 3.2]),
         f=b12_f, g=b12_g, eq=(b12_eq, 3),
         claimed=[((-1.717143, 1.595709, 1.827247, -0.7636413, -0.763645), 0.0539498)]),
    dict(id="B.13", n=2, bounds=_bn(2, -10, 10), f=b13_f, g=b13_g,
         eq=(b13_eq, 1), lin_eq=[0], claimed=[((4, 4), 128.0)]),
    dict(id="B.14", n=3, bounds=_bn(3, -10, 10), f=b14_f, g=b14_g,
         eq=(b14_eq, 1), claimed=[((1, 2, 0), 2.0)]),
    dict(id="B.15", n=3, bounds=_bn(3, -10, 10), f=b15_f, g=b15_g,
         eq=(b15_eq, 2), lin_eq=[1], claimed=[((6, 3, 4), 108.0)]),
    dict(id="B.16", n=2, bounds=_bn(2, -10, 10), f=b16_f, g=b16_g,
         eq=(b16_eq, 1), claimed=[((0, np.sqrt(3)), -np.sqrt(3))]),
    dict(id="B.17", n=3, bounds=_bn(3, -10, 10), f=b17_f, g=b17_g,
         eq=(b17_eq, 1), claimed=[((-1, 1, 0), 0.04)]),
    dict(id="B.18", n=5, bounds=_bn(5, 0, 1), f=b18_f, g=b18_g,
         ineq=(b18_ineq, 1), lin_ineq=[0], claimed=[((1, 1, 0, 1, 0), -17.0)]),
    dict(id="B.19", n=6, bounds=_b([0] * 6, [1] * 5 + [INF]), f=b19_f, g=b19_g,
         ineq=(b19_ineq, 2), lin_ineq=[0, 1],
         claimed=[((0, 1, 0, 1, 1, 20), -213.0)]),
    dict(id="B.20", n=12, bounds=_b([0] * 12, [1] * 9 + [3] * 3), f=b20_f, g=b20_g,
         ineq=(b20_ineq, 9), lin_ineq=range(9),
         claimed=[((1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3), -194.0)]),
    dict(id="B.21", n=10, bounds=_b([0] * 10, [INF] * 10), f=b21_f, g=b21_g,
         eq=(b21_eq, 1), lin_eq=[0],
         claimed=[((0, 0, 0, 0.25, 0.25, 0.25, 0.25, 0, 0, 0), -0.375)]),
    dict(id="B.22", n=6, bounds=_b([0, 0, 1, 0, 1, 0], [INF, INF, 5, 6, 5, 10]),
         f=b22_f, g=b22_g, ineq=(b22_ineq, 6), lin_ineq=[2, 3, 4, 5],
         claimed=[((5, 1, 5, 0, 5, 10), -310.0)]),
    dict(id="B.23", n=3, bounds=_b([0, 0, 0], [2, INF, 3]), f=b23_f, g=b23_g,
         ineq=(b23_ineq, 3), lin_ineq=[1, 2], claimed=[((0.5, 0, 3), -4.0)]),
    dict(id="B.24", n=2, bounds=_b([0, 0], [2, 3]), f=b24_f, g=b24_g,
         eq=(b24_eq, 1), claimed=[((0.7175, 1.47), -16.73889)]),
    dict(id="B.25", n=2, bounds=_b([0, 0], [3, 4]), f=b25_f, g=b25_g,
         ineq=(b25_ineq, 2), claimed=[((2.3295, 3.17846), -5.50796)]),
    dict(id="B.26", n=5, bounds=_b([78, 33, 27, 27, 27], [102, 45, 45, 45, 45]),
         f=b26_f, g=b26_g, ineq=(b26_ineq, 6),
         claimed=[((78, 33, 29.998, 45, 36.7673), 10122.696)]),
    dict(id="B.27", n=3, bounds=_bn(3, 1, 100), f=b27_f, g=b27_g,
         ineq=(b27_ineq, 1), claimed=[((88.2890, 7.7737, 1.3120), -83.254)]),
    dict(id="B.28", n=4, bounds=_bn(4, 0.1, 10), f=b28_f, g=b28_g,
         ineq=(b28_ineq, 2), claimed=[((8.1267, 0.6154, 0.5650, 5.6368), -5.7398)]),
    dict(id="B.29", n=8, bounds=_bn(8, 0.01, 10), f=b29_f, g=b29_g,
         ineq=(b29_ineq, 4),
         claimed=[((6.4225, 0.6686, 1.0239, 5.9399, 2.2673, 0.5960, 0.4029,
                    5.5288), -6.0482)]),
    dict(id="B.30", n=5, bounds=_bn(5, -5, 5), f=b30_f, g=b30_g, eq=(b30_eq, 3),
         claimed=[((1.1166, 1.2204, 1.5378, 1.9728, 1.7911), 0.0293)]),
]
