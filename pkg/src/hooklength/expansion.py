"""Hook length expansion for the five tree families.

For a weight function ``rho`` on hook lengths, each family has a generating
function ``f`` whose coefficients are the weighted hook sums

    sum over trees T of size n of prod_{h in H(T)} rho(h).

Ordered families (k-ary trees, plane trees, plane forests) use ``x^n``;
labeled families use ``x^n / n!`` and ``f`` stores the plain coefficient, so
a labeled hook sum is ``n! * [x^n] f``. k-ary trees and both forest families
include the empty object (``f(0) = 1``); plane and labeled trees do not
(``f(0) = 0``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Optional, Tuple

from .exact import RatFunc, ratfunc_eval
from .series import (
    Series,
    exp_x,
    geometric,
    series_exp,
    series_inv,
    series_log,
    series_pow,
    series_scale_arg,
)
from .trees import (
    KARY,
    LABELED_FOREST,
    LABELED_TREE,
    PLANE_FOREST,
    PLANE_TREE,
    TreeFamily,
    enumerate_family,
    hook_multiset,
)


class ExpansionError(ValueError):
    """The series does not define a hook length expansion for the family."""


class WeightFunction:
    """A memoized map ``h -> rho(h)`` on positive integers."""

    def __init__(self, rule: Callable[[int], object], name: str = "rho"):
        self._rule = rule
        self._memo: Dict[int, object] = {}
        self.name = name

    def __call__(self, h: int):
        if h < 1:
            raise ValueError(f"weights are defined for h >= 1, got {h}")
        try:
            return self._memo[h]
        except KeyError:
            value = self._rule(h)
            if isinstance(value, int):
                value = Fraction(value)
            self._memo[h] = value
            return value

    def at(self, a0, z0) -> "WeightFunction":
        """The numeric weight obtained by substituting ``a = a0, z = z0``."""

        def rule(h):
            value = self(h)
            if isinstance(value, RatFunc):
                return ratfunc_eval(value, a0, z0)
            return Fraction(value)

        return WeightFunction(rule, f"{self.name}@(a={a0},z={z0})")

    @classmethod
    def from_table(cls, values, name: str = "table") -> "WeightFunction":
        values = list(values)

        def rule(h):
            if h > len(values):
                raise IndexError(f"weight table has {len(values)} entries, asked for h={h}")
            return values[h - 1]

        return cls(rule, name)

    def __repr__(self):
        return f"WeightFunction({self.name})"


def _as_weight(rho) -> WeightFunction:
    return rho if isinstance(rho, WeightFunction) else WeightFunction(rho)


def _check_normalization(family: TreeFamily, f: Series):
    expected = 1 if family.min_size == 0 else 0
    if f[0] != expected:
        raise ExpansionError(f"{family} expansions need f(0) = {expected}, got {f[0]}")


def rho_from_series(family: TreeFamily, f: Series, n: int):
    """The weight ``rho(n)`` whose hook sums generate ``f``."""
    if not 1 <= n <= f.precision:
        raise ExpansionError(f"need 1 <= n <= precision ({f.precision}), got n={n}")
    _check_normalization(family, f)
    kind = family.kind
    if kind == KARY:
        num = f[n]
        den = (f.truncate(n - 1) ** family.k)[n - 1]
    elif kind == PLANE_TREE:
        num = f[n]
        den = series_inv(1 - f.truncate(n - 1))[n - 1]
    elif kind == PLANE_FOREST:
        num = -series_inv(f.truncate(n))[n]
        den = f[n - 1]
    elif kind == LABELED_TREE:
        num = f[n]
        den = series_exp(f.truncate(n - 1))[n - 1]
    else:
        num = series_log(f.truncate(n))[n]
        den = f[n - 1]
    if den == 0:
        raise ExpansionError(f"no expansion for {family}: denominator coefficient at n={n} vanishes")
    return num / den


def _plane_tree_coeffs(rho: WeightFunction, precision: int) -> list:
    # T_n = rho(n) [x^(n-1)] 1/(1 - T), with U = 1/(1 - T) built alongside
    t = [Fraction(0)]
    u = [Fraction(1)]
    for n in range(1, precision + 1):
        t.append(rho(n) * u[n - 1])
        acc = 0
        for j in range(1, n + 1):
            if t[j] != 0 and u[n - j] != 0:
                acc = acc + t[j] * u[n - j]
        u.append(acc)
    return t


def _labeled_tree_coeffs(rho: WeightFunction, precision: int) -> list:
    # F_n = rho(n) [x^(n-1)] exp(F), with E = exp(F) built alongside
    f = [Fraction(0)]
    e = [Fraction(1)]
    for n in range(1, precision + 1):
        f.append(rho(n) * e[n - 1])
        acc = 0
        for j in range(1, n + 1):
            if f[j] != 0 and e[n - j] != 0:
                acc = acc + j * f[j] * e[n - j]
        e.append(acc * Fraction(1, n))
    return f


def series_from_rho(family: TreeFamily, rho, precision: int) -> Series:
    """The generating function of the hook sums of ``rho`` over ``family``."""
    if precision < 0:
        raise ValueError("precision must be non-negative")
    rho = _as_weight(rho)
    kind = family.kind
    if kind == KARY:
        coeffs = [Fraction(1)]
        for n in range(1, precision + 1):
            power = Series(coeffs) ** family.k
            coeffs.append(rho(n) * power[n - 1])
        return Series(coeffs)
    if kind == PLANE_TREE:
        return Series(_plane_tree_coeffs(rho, precision))
    if kind == PLANE_FOREST:
        trees = Series(_plane_tree_coeffs(rho, precision))
        return series_inv(1 - trees)
    if kind == LABELED_TREE:
        return Series(_labeled_tree_coeffs(rho, precision))
    trees = Series(_labeled_tree_coeffs(rho, precision))
    return series_exp(trees)


def hook_sum_dp(family: TreeFamily, rho, n: int):
    """``sum_T prod_{h in H(T)} rho(h)`` over size-``n`` members, via the decomposition recursions."""
    if n < 1:
        raise ValueError("hook sums are taken for n >= 1")
    coeff = series_from_rho(family, rho, n)[n]
    if family.labeled:
        return coeff * factorial(n)
    return coeff


@lru_cache(maxsize=64)
def hook_tally(family: TreeFamily, n: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """Hook multisets of all size-``n`` members with their multiplicities, by enumeration."""
    tally = Counter(hook_multiset(t) for t in enumerate_family(family, n))
    return tuple(sorted(tally.items()))


def hook_sum_enum(family: TreeFamily, rho, n: int, ceiling: Optional[int] = None):
    """The same hook sum as :func:`hook_sum_dp`, by listing every tree.

    Trees sharing a hook multiset share a weight product, so products are
    taken once per distinct multiset and multiplied by its tree count.
    """
    limit = family.ceiling if ceiling is None else ceiling
    if n > limit:
        raise ValueError(f"n={n} exceeds the enumeration ceiling {limit} for {family}")
    rho = _as_weight(rho)
    total = Fraction(0)
    for hooks, count in hook_tally(family, n):
        term = Fraction(count)
        for h in hooks:
            term = term * rho(h)
        total = total + term
    return total


# -- named generating functions for the CLI and examples ----------------------


def _bernoulli_egf_inverse(precision: int) -> Series:
    # (e^x - 1)/x
    return Series.from_function(lambda n: Fraction(1, factorial(n + 1)), precision)


NAMED_SERIES: Dict[str, Tuple[str, Callable[[int], Series]]] = {
    "exp": ("e^x", lambda p: exp_x(p)),
    "exp-minus-one": ("e^x - 1", lambda p: exp_x(p) - 1),
    "geometric": ("1/(1-x)", geometric),
    "log-inverse": ("ln(1/(1-x))", lambda p: series_log(geometric(p))),
    "central-binomial": ("1/sqrt(1-4x)", lambda p: series_pow(1 - 4 * Series.x(p), Fraction(-1, 2))),
    "exp-shift": ("(e^x - 1)/x", _bernoulli_egf_inverse),
    "exp-shift-neg": ("(1 - e^-x)/x", lambda p: series_scale_arg(_bernoulli_egf_inverse(p), -1)),
    "sqrt-plane": ("1 - sqrt(1-2x)", lambda p: 1 - series_pow(1 - 2 * Series.x(p), Fraction(1, 2))),
}


@dataclass(frozen=True)
class ExpansionSpec:
    """A family together with a generating function to expand."""

    family: TreeFamily
    build: Callable[[int], Series]
    label: str = ""

    def series(self, precision: int) -> Series:
        return self.build(precision)

    def rho(self, n: int):
        return rho_from_series(self.family, self.series(n), n)

    def weights(self, n_max: int) -> list:
        f = self.series(n_max)
        return [rho_from_series(self.family, f, n) for n in range(1, n_max + 1)]
