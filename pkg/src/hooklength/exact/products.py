"""Product conventions used by the closed-form weights.

``range_product`` extends the empty product below ``hi = lo - 1`` by
reflection, so that ``prod_{i=lo}^{hi} g(i) * prod_{i=hi+1}^{M} g(i)`` telescopes
for every ``hi >= lo - 2``. ``falling_factorial`` extends ``(x)_m`` to
``m = -1`` in the same spirit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .ratfunc import RatFunc, _coerce


def range_product(g: Callable[[int], object], lo: int, hi: int) -> RatFunc:
    """``prod_{i=lo}^{hi} g(i)`` with the reflected extension for ``hi < lo - 1``.

    >>> str(range_product(lambda i: 5 - i, 1, 3))
    '24'
    >>> str(range_product(lambda i: i + 1, 1, -1))
    '1'
    """
    result = RatFunc.const(1)
    if hi >= lo:
        for i in range(lo, hi + 1):
            result = result * g(i)
        return result
    if hi == lo - 1:
        return result
    denom = RatFunc.const(1)
    for i in range(hi + 1, lo):
        denom = denom * g(i)
    if _coerce(denom).is_zero():
        raise ZeroDivisionError(f"reflected product over [{hi + 1}, {lo - 1}] vanishes")
    return result / denom


def falling_factorial(x, m: int) -> RatFunc:
    """``x (x - 1) ... (x - m + 1)``, with ``(x)_0 = 1`` and ``(x)_{-1} = 1/(x + 1)``."""
    x = _coerce(x)
    if m < -1:
        raise ValueError("falling factorial is defined for m >= -1")
    if m == -1:
        if (x + 1).is_zero():
            raise ZeroDivisionError("(x)_{-1} with x = -1")
        return 1 / (x + 1)
    return range_product(lambda i: x - i, 0, m - 1)


def double_factorial(n: int) -> Fraction:
    """``n!!`` for odd ``n >= -1``."""
    if n < -1 or n % 2 == 0:
        raise ValueError(f"double factorial is taken over odd n >= -1, got {n}")
    out = 1
    for i in range(n, 0, -2):
        out *= i
    return Fraction(out)
