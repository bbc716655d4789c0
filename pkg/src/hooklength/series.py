"""Truncated formal power series over an exact coefficient field.

Coefficients may be :class:`fractions.Fraction` or :class:`RatFunc`; the
engine only uses field operations, so the same code runs symbolically over
Q(a, z) or numerically at a rational point. A series of precision ``P``
holds ``P + 1`` coefficients, all known to be correct.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence, Tuple


def _field(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


@dataclass(frozen=True)
class Series:
    coeffs: Tuple

    def __init__(self, coeffs: Iterable):
        cs = tuple(_field(c) for c in coeffs)
        if not cs:
            raise ValueError("a series carries at least its constant term")
        object.__setattr__(self, "coeffs", cs)

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_function(cls, fn: Callable[[int], object], precision: int) -> "Series":
        return cls(fn(n) for n in range(precision + 1))

    @classmethod
    def constant(cls, c, precision: int) -> "Series":
        return cls([c] + [0] * precision)

    @classmethod
    def x(cls, precision: int) -> "Series":
        return cls.from_function(lambda n: 1 if n == 1 else 0, precision)

    def __getitem__(self, n: int):
        if n < 0:
            return Fraction(0)
        if n > self.precision:
            raise IndexError(f"coefficient {n} is beyond precision {self.precision}")
        return self.coeffs[n]

    def truncate(self, precision: int) -> "Series":
        if precision > self.precision:
            raise ValueError("cannot raise the precision of a truncated series")
        return Series(self.coeffs[: precision + 1])

    def __add__(self, other):
        return series_arith("add", self, _lift(other, self.precision))

    __radd__ = __add__

    def __sub__(self, other):
        return series_arith("sub", self, _lift(other, self.precision))

    def __rsub__(self, other):
        return series_arith("sub", _lift(other, self.precision), self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_arith("mul", self, other)
        return Series(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def __neg__(self):
        return Series(-c for c in self.coeffs)

    def __pow__(self, k: int):
        return series_int_pow(self, k)

    def derivative(self) -> "Series":
        """Formal derivative; precision drops by one."""
        if self.precision == 0:
            return Series([0])
        return Series(n * self.coeffs[n] for n in range(1, self.precision + 1))

    def __str__(self):
        parts = [f"({c})*x^{n}" for n, c in enumerate(self.coeffs) if c != 0]
        return (" + ".join(parts) or "0") + f" + O(x^{self.precision + 1})"


def _lift(other, precision: int) -> Series:
    if isinstance(other, Series):
        return other
    return Series.constant(other, precision)


def series_arith(op: str, f: Series, g: Series) -> Series:
    """Coefficientwise ``add``/``sub`` or Cauchy-product ``mul``, at the smaller precision."""
    p = min(f.precision, g.precision)
    fc, gc = f.coeffs, g.coeffs
    if op == "add":
        return Series(fc[i] + gc[i] for i in range(p + 1))
    if op == "sub":
        return Series(fc[i] - gc[i] for i in range(p + 1))
    if op == "mul":
        out = []
        for n in range(p + 1):
            acc = 0
            for i in range(n + 1):
                if fc[i] != 0 and gc[n - i] != 0:
                    acc = acc + fc[i] * gc[n - i]
            out.append(acc)
        return Series(out)
    raise ValueError(f"unknown series operation {op!r}")


def series_int_pow(f: Series, k: int) -> Series:
    """``f**k`` for a non-negative integer ``k`` by binary powering."""
    if k < 0:
        return series_int_pow(series_inv(f), -k)
    result = Series.constant(1, f.precision)
    base = f
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def series_inv(f: Series) -> Series:
    f0 = f[0]
    if f0 == 0:
        raise ZeroDivisionError("series with zero constant term has no inverse")
    inv0 = 1 / f0
    out = [inv0]
    for n in range(1, f.precision + 1):
        acc = 0
        for j in range(1, n + 1):
            if f.coeffs[j] != 0:
                acc = acc + f.coeffs[j] * out[n - j]
        out.append(-(acc * inv0))
    return Series(out)


def series_exp(f: Series) -> Series:
    if f[0] != 0:
        raise ValueError("exp needs a series with zero constant term")
    # E' = f' E  =>  n E_n = sum_j j f_j E_{n-j}
    out = [Fraction(1)]
    for n in range(1, f.precision + 1):
        acc = 0
        for j in range(1, n + 1):
            if f.coeffs[j] != 0:
                acc = acc + j * f.coeffs[j] * out[n - j]
        out.append(acc * Fraction(1, n))
    return Series(out)


def series_log(f: Series) -> Series:
    if f[0] != 1:
        raise ValueError("log needs a series with constant term 1")
    # f L' = f'  =>  n L_n = n f_n - sum_{j<n} j L_j f_{n-j}
    out = [Fraction(0)]
    for n in range(1, f.precision + 1):
        acc = n * f.coeffs[n]
        for j in range(1, n):
            if out[j] != 0 and f.coeffs[n - j] != 0:
                acc = acc - j * out[j] * f.coeffs[n - j]
        out.append(acc * Fraction(1, n))
    return Series(out)


def series_pow(f: Series, alpha) -> Series:
    """``f**alpha`` for ``f(0) = 1`` and any field element ``alpha``, as ``exp(alpha * log f)``."""
    if f[0] != 1:
        raise ValueError("pow needs a series with constant term 1")
    if alpha == 0:
        return Series.constant(1, f.precision)
    return series_exp(series_log(f) * alpha)


def series_scale_arg(f: Series, c) -> Series:
    """``f(c x)``."""
    out = []
    power = Fraction(1)
    for coeff in f.coeffs:
        out.append(coeff * power)
        power = power * c
    return Series(out)


def solve_power_eq(c, alpha, precision: int) -> Series:
    """The series ``g`` with ``g(0) = 0`` and ``g = c x (1 + g)**alpha`` through ``precision``.

    Fixed-point iteration: pass ``j`` makes ``g`` correct through order ``j``,
    so it is run at precision ``j`` and ``precision`` passes are made.
    """
    if precision < 0:
        raise ValueError("precision must be non-negative")
    g = Series.constant(0, precision)
    for j in range(1, precision + 1):
        inner = Series.constant(1, j - 1) + g.truncate(j - 1)
        body = series_pow(inner, alpha)
        coeffs = [0] + [c * body.coeffs[i] for i in range(j)]
        g = Series(coeffs + [0] * (precision - j))
    return g


def lagrange_coeff(H: Series, phi: Series, n: int):
    """``[x^n] H(g)`` for ``g = x phi(g)``, as ``(1/n) [x^(n-1)] H'(x) phi(x)**n``."""
    if n < 1:
        raise ValueError("lagrange_coeff needs n >= 1; use H[0] for the constant term")
    if phi[0] == 0:
        raise ValueError("phi must have a nonzero constant term")
    need = n - 1
    if H.precision < n or phi.precision < need:
        raise ValueError("series precision too small for the requested coefficient")
    dH = H.derivative().truncate(need)
    body = series_int_pow(phi.truncate(need), n) * dH
    return body[need] * Fraction(1, n)


# -- a few closed-form series used across the package -----------------------


def exp_x(precision: int, scale=1) -> Series:
    """``exp(scale * x)``."""
    return series_scale_arg(Series.from_function(lambda n: Fraction(1, factorial(n)), precision), scale)


def geometric(precision: int) -> Series:
    """``1 / (1 - x)``."""
    return Series.from_function(lambda n: 1, precision)


def from_coefficients(values: Sequence) -> Series:
    return Series(values)
