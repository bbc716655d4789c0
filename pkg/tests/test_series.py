import random
from fractions import Fraction
from math import comb, factorial

import pytest

from hooklength.exact import A, Z, RatFunc
from hooklength.series import (
    Series,
    exp_x,
    geometric,
    lagrange_coeff,
    series_arith,
    series_exp,
    series_inv,
    series_log,
    series_pow,
    series_scale_arg,
    solve_power_eq,
)

P = 30


def poly_coeff(rng):
    # a random polynomial of degree <= 2 in a and z
    return (Fraction(rng.randint(-4, 4), rng.randint(1, 3)) + rng.randint(-2, 2) * A + rng.randint(-2, 2) * Z
            + rng.randint(-1, 1) * Z * A + rng.randint(-1, 1) * A * A)


def rational_coeff(rng):
    # a random quotient of polynomials of degree <= 2
    return poly_coeff(rng) / (1 + rng.randint(0, 2) * Z + rng.randint(0, 1) * A * A)


def rand_series(seed, precision=P, coeff=poly_coeff):
    rng = random.Random(seed)
    return Series([1] + [coeff(rng) for _ in range(precision)])


def one(p):
    return Series.constant(1, p)


def test_arith_examples():
    x = Series.x(4)
    assert ((1 + x) * (1 - x)).coeffs == (1, 0, -1, 0, 0)
    f = exp_x(5)
    assert (f + 0).coeffs == f.coeffs
    assert (geometric(6) * geometric(6)).coeffs == tuple(range(1, 8))
    assert series_arith("mul", geometric(3), geometric(6)).precision == 3
    with pytest.raises(ValueError):
        series_arith("div", f, f)


def test_inv_examples():
    assert series_inv(Series.constant(1, 5)).coeffs == (1,) * 1 + (0,) * 5
    assert series_inv(1 - Series.x(8)).coeffs == geometric(8).coeffs
    shifted = Series.from_function(lambda n: Fraction(1, factorial(n + 1)), 4)
    assert series_inv(shifted)[2] * 2 == Fraction(1, 6)
    with pytest.raises(ZeroDivisionError):
        series_inv(Series.x(3))


def test_exp_log_examples():
    assert series_exp(Series.constant(0, 4)).coeffs == (1, 0, 0, 0, 0)
    x = Series.x(10)
    assert series_exp(x).coeffs == exp_x(10).coeffs
    assert series_exp(series_log(1 + x)).coeffs == (1 + x).coeffs
    assert series_log(Series.constant(1, 4)).coeffs == (0,) * 5
    assert series_log(geometric(10)).coeffs == (0,) + tuple(Fraction(1, n) for n in range(1, 11))
    assert series_log(1 + x).coeffs == (0,) + tuple(Fraction((-1) ** (n + 1), n) for n in range(1, 11))
    with pytest.raises(ValueError):
        series_exp(1 + x)
    with pytest.raises(ValueError):
        series_log(2 + x)


def test_pow_examples():
    x = Series.x(6)
    f = 1 + 3 * x + x * x
    assert series_pow(f, 0).coeffs == one(6).coeffs
    assert series_pow(f, 3).coeffs == (f * f * f).coeffs
    alpha = Z / (A - 2)
    assert series_pow(1 + x, alpha)[2] == alpha * (alpha - 1) / 2
    half = series_pow(1 + x, Fraction(1, 2))
    assert (half * half).coeffs == (1 + x).coeffs


def test_scale_arg():
    f = rand_series(1).truncate(6)
    assert series_scale_arg(f, 1).coeffs == f.coeffs
    assert series_scale_arg(1 + Series.x(3), -1).coeffs == (1, -1, 0, 0)
    tree = Series.from_function(lambda n: Fraction(n + 1) ** (n - 1) / factorial(n), 8)
    scaled = series_scale_arg(tree, 2)
    assert all(scaled[n] == Fraction(n + 1) ** (n - 1) * 2 ** n / factorial(n) for n in range(9))


def check_round_trips(f, alpha):
    p = f.precision
    assert (f * series_inv(f)).coeffs == one(p).coeffs
    assert series_exp(series_log(f)).coeffs == f.coeffs
    g = f - 1
    assert series_log(series_exp(g)).coeffs == g.coeffs
    assert (series_pow(f, alpha) * series_pow(f, -alpha)).coeffs == one(p).coeffs


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_round_trips_order_30(seed):
    check_round_trips(rand_series(seed), A - 2 * Z + 1)


@pytest.mark.parametrize("seed", [4, 5])
def test_round_trips_rational_coefficients(seed):
    # full rational-function coefficients swell quickly; order 12 keeps this fast
    check_round_trips(rand_series(seed, 12, rational_coeff), (A + 1) / (Z - 2))


def test_solve_power_eq_examples():
    assert solve_power_eq(1, 0, 6).coeffs == (0, 1, 0, 0, 0, 0, 0)
    assert solve_power_eq(1, 1, 6).coeffs == (0,) + (1,) * 6
    catalan = solve_power_eq(1, 2, 10)
    assert [catalan[n] for n in range(1, 11)] == [comb(2 * n, n - 1) // n for n in range(1, 11)]


def test_solve_power_eq_residual_symbolic():
    c, alpha = A - 2, 2 * (A - 1) / (A - 2)
    g = solve_power_eq(c, alpha, 8)
    x = Series.x(8)
    rhs = c * x * series_pow(1 + g, alpha)
    assert (g - rhs).coeffs == (0,) * 9


def test_lagrange_examples():
    x = Series.x(8)
    for n in range(1, 8):
        assert lagrange_coeff(x, exp_x(8), n) == Fraction(n ** (n - 1), factorial(n))
    assert lagrange_coeff(x, (1 + x) * (1 + x), 4) == 14
    assert lagrange_coeff(x, 7 + x, 1) == 7
    with pytest.raises(ValueError):
        lagrange_coeff(x, exp_x(8), 0)


@pytest.mark.parametrize("seed", range(4))
def test_lagrange_agrees_with_fixed_point(seed):
    rng = random.Random(seed)
    c = Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 4))
    alpha = rng.randint(0, 5)
    N = 20
    g = solve_power_eq(c, alpha, N)
    x = Series.x(N)
    phi = c * series_pow(1 + x, alpha)
    for n in range(1, N + 1):
        assert g[n] == lagrange_coeff(x, phi, n)


@pytest.mark.parametrize("Q", [0, 3, 7])
def test_precision_soundness(Q):
    f, g = rand_series(5, 12, rational_coeff), rand_series(6, 12, rational_coeff)
    ops = [
        lambda s, t: s * t,
        lambda s, t: s - t,
        lambda s, t: series_inv(s),
        lambda s, t: series_log(s),
        lambda s, t: series_exp(s - 1),
        lambda s, t: series_pow(s, A),
    ]
    for op in ops:
        early = op(f.truncate(Q), g.truncate(Q))
        late = op(f, g).truncate(Q)
        assert early.coeffs == late.coeffs


def test_truncation_guards():
    f = exp_x(3)
    with pytest.raises(ValueError):
        f.truncate(5)
    with pytest.raises(IndexError):
        f[4]
    assert f[-1] == 0
