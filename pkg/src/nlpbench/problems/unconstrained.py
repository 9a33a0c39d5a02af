"""Thirty unconstrained test functions (ids A.01 to A.30).

Formulas follow their published statements term by term.  Where a published
form is ill-typed a comment records the reading used; whether the published
optimum survives is decided by the validation oracle, not here.
"""

from __future__ import annotations

import numpy as np

from .spec import Singularity

PI = np.pi


def _stack(*cols):
    return np.stack(np.broadcast_arrays(*cols), axis=-1)


def _box(n, lo, hi):
    return np.full(n, float(lo)), np.full(n, float(hi))


# A.01 -------------------------------------------------------------------

def beale(x):
    x1, x2 = x[..., 0], x[..., 1]
    return ((1.5 - x1 + x1 * x2) ** 2 + (2.5 - x1 + x1 * x2 ** 2) ** 2
            + (2.625 - x1 + x1 * x2 ** 3) ** 2)


def beale_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    a = 1.5 - x1 + x1 * x2
    b = 2.5 - x1 + x1 * x2 ** 2
    c = 2.625 - x1 + x1 * x2 ** 3
    g1 = 2 * a * (x2 - 1) + 2 * b * (x2 ** 2 - 1) + 2 * c * (x2 ** 3 - 1)
    g2 = 2 * a * x1 + 4 * b * x1 * x2 + 6 * c * x1 * x2 ** 2
    return _stack(g1, g2)


# A.02 - A.04 ------------------------------------------------------------

def bohachevsky1(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (x1 ** 2 + 2 * x2 ** 2 - 0.3 * np.cos(3 * PI * x1)
            - 0.4 * np.cos(4 * PI * x2) + 0.7)


def bohachevsky1_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    return _stack(2 * x1 + 0.9 * PI * np.sin(3 * PI * x1),
                  4 * x2 + 1.6 * PI * np.sin(4 * PI * x2))


def bohachevsky2(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (x1 ** 2 + 2 * x2 ** 2
            - 0.3 * np.cos(3 * PI * x1) * np.cos(4 * PI * x2) + 0.3)


def bohachevsky2_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    return _stack(2 * x1 + 0.9 * PI * np.sin(3 * PI * x1) * np.cos(4 * PI * x2),
                  4 * x2 + 1.2 * PI * np.cos(3 * PI * x1) * np.sin(4 * PI * x2))


def bohachevsky3(x):
    x1, x2 = x[..., 0], x[..., 1]
    return x1 ** 2 + 2 * x2 ** 2 - 0.3 * np.cos(3 * PI * x1 + 4 * PI * x2) + 0.3


def bohachevsky3_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    s = np.sin(3 * PI * x1 + 4 * PI * x2)
    return _stack(2 * x1 + 0.9 * PI * s, 4 * x2 + 1.2 * PI * s)


# A.05, A.17 -------------------------------------------------------------
# Both Branin variants are printed with 40*pi^2 in the quadratic term.

_BRANIN_K = 10 * (1 - 1 / (8 * PI))


def _branin_t(x1, x2):
    t = -5.1 * x1 ** 2 / (40 * PI ** 2) + 5 * x1 / PI + x2 - 6
    dt = -10.2 * x1 / (40 * PI ** 2) + 5 / PI
    return t, dt


def branin(x):
    x1, x2 = x[..., 0], x[..., 1]
    t, _ = _branin_t(x1, x2)
    return t ** 2 + _BRANIN_K * np.cos(x1) + 10


def branin_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    t, dt = _branin_t(x1, x2)
    return _stack(2 * t * dt - _BRANIN_K * np.sin(x1), 2 * t)


def branin2(x):
    x1, x2 = x[..., 0], x[..., 1]
    t, _ = _branin_t(x1, x2)
    r = x1 ** 2 + x2 ** 2 + 1
    return t ** 2 + _BRANIN_K * np.cos(x1) * np.cos(x2) * np.log(r) + 10


def branin2_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    t, dt = _branin_t(x1, x2)
    r = x1 ** 2 + x2 ** 2 + 1
    L = np.log(r)
    c1, s1, c2, s2 = np.cos(x1), np.sin(x1), np.cos(x2), np.sin(x2)
    g1 = 2 * t * dt + _BRANIN_K * (-s1 * c2 * L + c1 * c2 * 2 * x1 / r)
    g2 = 2 * t + _BRANIN_K * (-c1 * s2 * L + c1 * c2 * 2 * x2 / r)
    return _stack(g1, g2)


# A.06 -------------------------------------------------------------------

def colville(x):
    x1, x2, x3, x4 = (x[..., i] for i in range(4))
    return (100 * (x1 ** 2 - x2) ** 2 + (x1 - 1) ** 2 + (x3 - 1) ** 2
            + 90 * (x3 ** 2 - x4) ** 2
            + 10.1 * ((x2 - 1) ** 2 + (x4 - 1) ** 2)
            + 19.8 * (x2 - 1) * (x4 - 1))


def colville_grad(x):
    x1, x2, x3, x4 = (x[..., i] for i in range(4))
    return _stack(
        400 * x1 * (x1 ** 2 - x2) + 2 * (x1 - 1),
        -200 * (x1 ** 2 - x2) + 20.2 * (x2 - 1) + 19.8 * (x4 - 1),
        2 * (x3 - 1) + 360 * x3 * (x3 ** 2 - x4),
        -180 * (x3 ** 2 - x4) + 20.2 * (x4 - 1) + 19.8 * (x2 - 1),
    )


# A.07 -------------------------------------------------------------------
# The printed sum starts at i=1 and references x_0; that term is dropped.

def dixon_price(x):
    i = np.arange(2, x.shape[-1] + 1)
    inner = 2 * x[..., 1:] ** 2 - x[..., :-1]
    return (x[..., 0] - 2) ** 2 + np.sum(i * inner ** 2, axis=-1)


def dixon_price_grad(x):
    i = np.arange(2, x.shape[-1] + 1)
    inner = 2 * x[..., 1:] ** 2 - x[..., :-1]
    g = np.zeros_like(x)
    g[..., 0] = 2 * (x[..., 0] - 2)
    g[..., 1:] += 8 * i * x[..., 1:] * inner
    g[..., :-1] += -2 * i * inner
    return g


# A.08 -------------------------------------------------------------------
# x^(4/3) is taken as the real power (cube root, then fourth power).

def hump(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (x1 ** 2 * (np.abs(x1) ** (4 / 3) - 2.1 * x1 ** 2 + 4) + x1 * x2
            + x2 ** 2 * (4 * x2 ** 2 - 4))


def hump_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    g1 = (10 / 3) * np.abs(x1) ** (7 / 3) * np.sign(x1) - 8.4 * x1 ** 3 + 8 * x1 + x2
    g2 = x1 + 16 * x2 ** 3 - 8 * x2
    return _stack(g1, g2)


# A.09 -------------------------------------------------------------------

def matyas(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 0.26 * (x1 ** 2 + x2 ** 2) - 0.48 * x1 * x2


def matyas_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    return _stack(0.52 * x1 - 0.48 * x2, 0.52 * x2 - 0.48 * x1)


def matyas_hess(x):
    return np.array([[0.52, -0.48], [-0.48, 0.52]])


# A.10 -------------------------------------------------------------------
# Read as sum_k (sum_i (i^k + beta) ((x_i / i)^k - 1))^2.

_PERM_BETA = 0.5


def _perm_terms(x):
    n = x.shape[-1]
    i = np.arange(1, n + 1, dtype=float)
    k = np.arange(1, n + 1, dtype=float)[:, None]
    coeff = i[None, :] ** k + _PERM_BETA                  # (k, i)
    ratio = x[..., None, :] / i                           # (..., 1, i)
    s = np.sum(coeff * (ratio ** k - 1), axis=-1)         # (..., k)
    return i, k, coeff, s


def perm(x):
    _, _, _, s = _perm_terms(x)
    return np.sum(s ** 2, axis=-1)


def perm_grad(x):
    i, k, coeff, s = _perm_terms(x)
    ds = coeff * k * x[..., None, :] ** (k - 1) / i ** k  # (..., k, i)
    return np.sum(2 * s[..., :, None] * ds, axis=-2)


# A.11 -------------------------------------------------------------------
# Printed with squared third/fourth terms (the classic form uses 4th powers).

def powell(x):
    a = x[..., 0::4] + 10 * x[..., 1::4]
    b = x[..., 2::4] - x[..., 3::4]
    c = x[..., 1::4] - x[..., 2::4]
    d = x[..., 0::4] - x[..., 3::4]
    return np.sum(a ** 2 + 5 * b ** 2 + c ** 2 + 10 * d ** 2, axis=-1)


def powell_grad(x):
    a = x[..., 0::4] + 10 * x[..., 1::4]
    b = x[..., 2::4] - x[..., 3::4]
    c = x[..., 1::4] - x[..., 2::4]
    d = x[..., 0::4] - x[..., 3::4]
    g = np.empty_like(x)
    g[..., 0::4] = 2 * a + 20 * d
    g[..., 1::4] = 20 * a + 2 * c
    g[..., 2::4] = 10 * b - 2 * c
    g[..., 3::4] = -10 * b - 20 * d
    return g


# A.12 -------------------------------------------------------------------

_POWER_B = np.array([8.0, 18.0, 44.0, 114.0])


def power_sum(x):
    k = np.arange(1, 5, dtype=float)[:, None]
    s = np.sum(x[..., None, :] ** k, axis=-1) - _POWER_B
    return np.sum(s ** 2, axis=-1)


def power_sum_grad(x):
    k = np.arange(1, 5, dtype=float)[:, None]
    s = np.sum(x[..., None, :] ** k, axis=-1) - _POWER_B
    ds = k * x[..., None, :] ** (k - 1)
    return np.sum(2 * s[..., :, None] * ds, axis=-2)


# A.13 - A.16 ------------------------------------------------------------

def sphere(x):
    return np.sum(x ** 2, axis=-1)


def sphere_grad(x):
    return 2 * x


def sphere_hess(x):
    return 2 * np.eye(x.shape[-1])


def sum_squares(x):
    i = np.arange(1, x.shape[-1] + 1)
    return np.sum(i * x ** 2, axis=-1)


def sum_squares_grad(x):
    return 2 * np.arange(1, x.shape[-1] + 1) * x


def sum_squares_hess(x):
    return np.diag(2.0 * np.arange(1, x.shape[-1] + 1))


def trid(x):
    return (np.sum((x - 1) ** 2, axis=-1)
            - np.sum(x[..., 1:] * x[..., :-1], axis=-1))


def trid_grad(x):
    g = 2 * (x - 1)
    g[..., 1:] -= x[..., :-1]
    g[..., :-1] -= x[..., 1:]
    return g


def trid_hess(x):
    n = x.shape[-1]
    return 2 * np.eye(n) - np.eye(n, k=1) - np.eye(n, k=-1)


def zakharov(x):
    i = np.arange(1, x.shape[-1] + 1)
    u = 0.5 * np.sum(i * x ** 2, axis=-1)
    return np.sum(x ** 2, axis=-1) + u ** 2 + u ** 4


def zakharov_grad(x):
    i = np.arange(1, x.shape[-1] + 1)
    u = 0.5 * np.sum(i * x ** 2, axis=-1)
    return 2 * x + (2 * u + 4 * u ** 3)[..., None] * i * x


# A.18, A.19 -------------------------------------------------------------
# Ackley 1 sums over i = 1..n (the printed lower limit 0 adds a phantom term).

def ackley1(x):
    n = x.shape[-1]
    r = np.sqrt(np.sum(x ** 2, axis=-1) / n)
    c = np.sum(np.cos(2 * PI * x), axis=-1) / n
    return -20 * np.exp(-0.2 * r) - np.exp(c) + 20 + np.e


def ackley1_grad(x):
    n = x.shape[-1]
    r = np.sqrt(np.sum(x ** 2, axis=-1) / n)
    c = np.sum(np.cos(2 * PI * x), axis=-1) / n
    with np.errstate(invalid="ignore", divide="ignore"):
        radial = np.where(r > 0, 4 * np.exp(-0.2 * r) / (n * r), 0.0)
    return radial[..., None] * x + (2 * PI / n) * np.exp(c)[..., None] * np.sin(2 * PI * x)


def ackley2(x):
    r = np.sqrt(x[..., 0] ** 2 + x[..., 1] ** 2)
    return -200 * np.exp(-0.02 * r)


def ackley2_grad(x):
    r = np.sqrt(x[..., 0] ** 2 + x[..., 1] ** 2)
    with np.errstate(invalid="ignore", divide="ignore"):
        radial = np.where(r > 0, 4 * np.exp(-0.02 * r) / r, 0.0)
    return radial[..., None] * x


# A.20 - A.23 ------------------------------------------------------------

def camel3(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 2 * x1 ** 2 - 1.05 * x1 ** 4 + x1 ** 6 / 6 + x1 * x2 + x2 ** 2


def camel3_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    return _stack(4 * x1 - 4.2 * x1 ** 3 + x1 ** 5 + x2, x1 + 2 * x2)


def booth(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (x1 + 2 * x2 - 7) ** 2 + (2 * x1 + x2 - 5) ** 2


def booth_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    a = x1 + 2 * x2 - 7
    b = 2 * x1 + x2 - 5
    return _stack(2 * a + 4 * b, 4 * a + 2 * b)


def booth_hess(x):
    return np.array([[10.0, 8.0], [8.0, 10.0]])


def brown(x):
    a = x[..., :-1] ** 2
    b = x[..., 1:] ** 2
    return np.sum(a ** (b + 1) + b ** (a + 1), axis=-1)


def _xlogx_pow(base, expo):
    # d/dt of base**expo w.r.t. expo is base**expo * log(base); zero at base == 0.
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(base > 0, base ** expo * np.log(np.where(base > 0, base, 1.0)), 0.0)


def brown_grad(x):
    xl, xr = x[..., :-1], x[..., 1:]
    a, b = xl ** 2, xr ** 2
    g = np.zeros_like(x)
    # term a^(b+1): d/dxl = (b+1) a^b 2 xl ; d/dxr = a^(b+1) ln a 2 xr
    g[..., :-1] += (b + 1) * a ** b * 2 * xl
    g[..., 1:] += _xlogx_pow(a, b + 1) * 2 * xr
    # term b^(a+1)
    g[..., 1:] += (a + 1) * b ** a * 2 * xr
    g[..., :-1] += _xlogx_pow(b, a + 1) * 2 * xl
    return g


def cube(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 100 * (x2 - x1 ** 3) ** 2 + (1 - x1) ** 2


def cube_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    return _stack(-600 * x1 ** 2 * (x2 - x1 ** 3) - 2 * (1 - x1),
                  200 * (x2 - x1 ** 3))


# A.24 - A.30 ------------------------------------------------------------

def exponential(x):
    return -np.exp(-0.5 * np.sum(x ** 2, axis=-1))


def exponential_grad(x):
    return x * np.exp(-0.5 * np.sum(x ** 2, axis=-1))[..., None]


def freudenstein_roth(x):
    x1, x2 = x[..., 0], x[..., 1]
    a = x1 - 13 + x2 * ((5 - x2) * x2 - 2)
    b = x1 - 29 + x2 * ((x2 + 1) * x2 - 14)
    return a ** 2 + b ** 2


def freudenstein_roth_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    a = x1 - 13 + x2 * ((5 - x2) * x2 - 2)
    b = x1 - 29 + x2 * ((x2 + 1) * x2 - 14)
    return _stack(2 * a + 2 * b,
                  2 * a * (10 * x2 - 3 * x2 ** 2 - 2)
                  + 2 * b * (3 * x2 ** 2 + 2 * x2 - 14))


def miele_cantrell(x):
    x1, x2, x3, x4 = (x[..., i] for i in range(4))
    return ((np.exp(-x1) - x2) ** 4 + 100 * (x2 - x3) ** 6
            + np.tan(x3 - x4) ** 4 + x1 ** 8)


def miele_cantrell_grad(x):
    x1, x2, x3, x4 = (x[..., i] for i in range(4))
    e = np.exp(-x1)
    a = e - x2
    t = np.tan(x3 - x4)
    tt = 4 * t ** 3 * (1 + t ** 2)
    return _stack(-4 * a ** 3 * e + 8 * x1 ** 7,
                  -4 * a ** 3 + 600 * (x2 - x3) ** 5,
                  -600 * (x2 - x3) ** 5 + tt,
                  -tt)


def quadratic(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (-3803.84 - 138.08 * x1 - 232.92 * x2 + 128.08 * x1 ** 2
            + 203.64 * x2 ** 2 + 182.25 * x1 * x2)


def quadratic_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    return _stack(-138.08 + 256.16 * x1 + 182.25 * x2,
                  -232.92 + 407.28 * x2 + 182.25 * x1)


def quadratic_hess(x):
    return np.array([[256.16, 182.25], [182.25, 407.28]])


_S3 = np.sqrt(3.0)


def rotated_ellipse(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 7 * x1 ** 2 - 6 * _S3 * x1 * x2 + 13 * x2 ** 2


def rotated_ellipse_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    return _stack(14 * x1 - 6 * _S3 * x2, 26 * x2 - 6 * _S3 * x1)


def rotated_ellipse_hess(x):
    return np.array([[14.0, -6 * _S3], [-6 * _S3, 26.0]])


def rump(x):
    x1, x2 = x[..., 0], x[..., 1]
    return ((333.75 - x1 ** 2) * x2 ** 6
            + x1 ** 2 * (11 * x1 ** 2 * x2 ** 2 - 121 * x2 ** 4 - 2)
            + 5.5 * x2 ** 8 + x1 / (2 + x2))


def rump_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    g1 = (-2 * x1 * x2 ** 6 + 44 * x1 ** 3 * x2 ** 2 - 242 * x1 * x2 ** 4
          - 4 * x1 + 1 / (2 + x2))
    g2 = (6 * (333.75 - x1 ** 2) * x2 ** 5 + 22 * x1 ** 4 * x2
          - 484 * x1 ** 2 * x2 ** 3 + 44 * x2 ** 7 - x1 / (2 + x2) ** 2)
    return _stack(g1, g2)


def wayburn_seader3(x):
    x1, x2 = x[..., 0], x[..., 1]
    q = (x1 - 4) ** 2 + (x2 - 5) ** 2 - 4
    return 2 * x1 ** 3 / 3 - 8 * x1 ** 2 + 33 * x1 - x1 * x2 + 5 + q ** 2


def wayburn_seader3_grad(x):
    x1, x2 = x[..., 0], x[..., 1]
    q = (x1 - 4) ** 2 + (x2 - 5) ** 2 - 4
    return _stack(2 * x1 ** 2 - 16 * x1 + 33 - x2 + 4 * q * (x1 - 4),
                  -x1 + 4 * q * (x2 - 5))


# -- table ----------------------------------------------------------------

def _dixon_claim(n):
    i = np.arange(1, n + 1)
    return 2.0 ** (-(2.0 ** i - 2) / 2.0 ** i)


# (id, name, n, (lower, upper), f, grad, hess, claimed [(x, f)], singularities)
TABLE = [
    ("A.01", "Beale", 2, _box(2, -4.5, 4.5), beale, beale_grad, None,
     [((3, 0.5), 0.0)], ()),
    ("A.02", "Bohachevsky 1", 2, _box(2, -100, 100), bohachevsky1,
     bohachevsky1_grad, None, [((0, 0), 0.0)], ()),
    ("A.03", "Bohachevsky 2", 2, _box(2, -100, 100), bohachevsky2,
     bohachevsky2_grad, None, [((0, 0), 0.0)], ()),
    ("A.04", "Bohachevsky 3", 2, _box(2, -100, 100), bohachevsky3,
     bohachevsky3_grad, None, [((0, 0), 0.0)], ()),
    ("A.05", "Branin RCOS", 2, (np.array([-5.0, 0.0]), np.array([10.0, 15.0])),
     branin, branin_grad, None,
     [((-PI, 12.275), 0.397887), ((PI, 2.275), 0.397887),
      ((9.42478, 2.475), 0.397887)], ()),
    ("A.06", "Colville", 4, _box(4, -10, 10), colville, colville_grad, None,
     [((1, 1, 1, 1), 0.0)], ()),
    ("A.07", "Dixon & Price", 25, _box(25, -10, 10), dixon_price,
     dixon_price_grad, None, [(_dixon_claim(25), 0.0)], ()),
    ("A.08", "Hump", 2, _box(2, -5, 5), hump, hump_grad, None,
     [((0.0898, -0.7126), 0.0), ((-0.0898, 0.7126), 0.0)], ()),
    ("A.09", "Matyas", 2, _box(2, -10, 10), matyas, matyas_grad, matyas_hess,
     [((0, 0), 0.0)], ()),
    ("A.10", "Perm", 10, _box(10, -10, 10), perm, perm_grad, None,
     [(np.arange(1, 11), 0.0)], ()),
    ("A.11", "Powell singular", 16, _box(16, -4, 5), powell, powell_grad, None,
     [(np.zeros(16), 0.0)], ()),
    ("A.12", "Power Sum", 4, _box(4, 0, 256), power_sum, power_sum_grad, None,
     [((1, 2, 3, 3), 0.0)], ()),
    ("A.13", "Sphere", 30, _box(30, -5.12, 5.12), sphere, sphere_grad,
     sphere_hess, [(np.zeros(30), 0.0)], ()),
    ("A.14", "Sum Squares", 30, _box(30, -10, 10), sum_squares,
     sum_squares_grad, sum_squares_hess, [(np.zeros(30), 0.0)], ()),
    ("A.15", "Trid", 10, _box(10, -100, 100), trid, trid_grad, trid_hess,
     [(np.array([i * (11 - i) for i in range(1, 11)]), -210.0)], ()),
    ("A.16", "Zakharov", 20, _box(20, -5, 10), zakharov, zakharov_grad, None,
     [(np.zeros(20), 0.0)], ()),
    ("A.17", "Branin RCOS 2", 2, _box(2, -5, 15), branin2, branin2_grad, None,
     [((-3.2, 12.53), 5.559037)], ()),
    ("A.18", "Ackley 1", 10, _box(10, -15, 30), ackley1, ackley1_grad, None,
     [(np.zeros(10), 0.0)], ()),
    ("A.19", "Ackley 2", 2, _box(2, -32, 32), ackley2, ackley2_grad, None,
     [((0, 0), -200.0)], ()),
    ("A.20", "Camel 3", 2, _box(2, -5, 5), camel3, camel3_grad, None,
     [((0, 0), 0.0)], ()),
    ("A.21", "Booth", 2, _box(2, -10, 10), booth, booth_grad, booth_hess,
     [((1, 3), 0.0)], ()),
    ("A.22", "Brown", 14, _box(14, -1, 4), brown, brown_grad, None,
     [(np.zeros(14), 0.0)], ()),
    ("A.23", "Cube", 2, _box(2, -10, 10), cube, cube_grad, None,
     [((-1, 1), 0.0)], ()),
    ("A.24", "Exponential", 18, _box(18, -1, 1), exponential, exponential_grad,
     None, [(np.zeros(18), 1.0)], ()),
    ("A.25", "Freudenstein Roth", 2, _box(2, -10, 10), freudenstein_roth,
     freudenstein_roth_grad, None, [((5, 4), 0.0)], ()),
    ("A.26", "Miele Cantrell", 4, _box(4, -1, 1), miele_cantrell,
     miele_cantrell_grad, None, [((0, 1, 1, 1), 0.0)], ()),
    ("A.27", "Quadratic", 2, _box(2, -10, 10), quadratic, quadratic_grad,
     quadratic_hess, [((0.19388, 0.48513), -3873.7243)], ()),
    ("A.28", "Rotated Ellipse", 2, _box(2, -500, 500), rotated_ellipse,
     rotated_ellipse_grad, rotated_ellipse_hess, [((0, 0), 0.0)], ()),
    ("A.29", "Rump", 2, _box(2, -500, 500), rump, rump_grad, None,
     [((0, 0), 0.0)], (Singularity(1, -2.0),)),
    ("A.30", "Wayburn Seader 3", 2, _box(2, -500, 500), wayburn_seader3,
     wayburn_seader3_grad, None, [((5.611, 6.187), 21.35)], ()),
]
