"""Registry of hook length identities.

Each entry fixes a tree family, a closed-form weight ``rho(h)``, a closed-form
right-hand side, and how the raw hook sum is normalized before comparison:

    factor(n) * sum_{T in family(n)} prod_{h in H(T)} rho(h) == rhs(n)

Entries of kind ``"weight"`` instead assert that the closed-form weight is
the one extracted from a given generating function.

k-ary entries either fix ``k`` or leave it free (``k=None``), in which case
``k`` is supplied at evaluation time. ``a`` and ``z`` stay symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Tuple

from .exact import A, Z, RatFunc, double_factorial, falling_factorial, range_product
from .series import (
    Series,
    exp_x,
    geometric,
    lagrange_coeff,
    series_exp,
    series_int_pow,
    series_inv,
    series_log,
    series_pow,
    series_scale_arg,
    solve_power_eq,
)
from .trees import KARY, LABELED_FOREST, LABELED_TREE, PLANE_FOREST, PLANE_TREE, TreeFamily

DEFAULT_KS = (1, 2, 3, 4)


def _r(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc.const(x)


# -- special numbers -----------------------------------------------------------


@lru_cache(maxsize=None)
def _bernoulli_table(precision: int) -> Tuple[Fraction, ...]:
    shifted = Series.from_function(lambda n: Fraction(1, factorial(n + 1)), precision)
    inv = series_inv(shifted)
    return tuple(inv[n] * factorial(n) for n in range(precision + 1))


def bernoulli(n: int) -> Fraction:
    """Bernoulli number with ``B_1 = -1/2``: ``n! [x^n] x/(e^x - 1)``."""
    if n < 0:
        raise ValueError("Bernoulli numbers are indexed from 0")
    size = max(16, 1 << n.bit_length())
    return _bernoulli_table(size)[n]


@lru_cache(maxsize=None)
def _bell_table(precision: int) -> Tuple[int, ...]:
    e = series_exp(exp_x(precision) - 1)
    return tuple(int(e[n] * factorial(n)) for n in range(precision + 1))


def bell(n: int) -> int:
    """Number of set partitions of ``[n]``: ``n! [x^n] exp(e^x - 1)``."""
    if n < 0:
        raise ValueError("Bell numbers are indexed from 0")
    size = max(16, 1 << n.bit_length())
    return _bell_table(size)[n]


# -- generating-function builders -----------------------------------------------


def _power_eq_gf(c, alpha, beta):
    """``f = (1 + g)^beta`` with ``g = c x (1 + g)^alpha``; arguments map ``k`` to field elements."""

    def build(precision: int, k: Optional[int]) -> Series:
        g = solve_power_eq(c(k), alpha(k), precision)
        return series_pow(1 + g, beta(k))

    return build


def _abel_gf(slope):
    """``f = exp(z w)`` with ``w = x exp(slope * w)``, coefficients by Lagrange inversion."""

    def build(precision: int, k: Optional[int]) -> Series:
        H = exp_x(precision, Z)
        phi = exp_x(precision, slope(k))
        return Series([1] + [lagrange_coeff(H, phi, n) for n in range(1, precision + 1)])

    return build


def tree_function_series(precision: int) -> Series:
    """``g`` with ``g = exp(x g)``: coefficients ``(n+1)^(n-1)/n!``.

    ``x g`` solves ``w = x e^w``, so ``[x^n] g = [x^(n+1)] w`` by Lagrange inversion.
    """
    H = Series.x(precision + 1)
    phi = exp_x(precision + 1)
    return Series(lagrange_coeff(H, phi, n + 1) for n in range(precision + 1))


def _const_gf(fn):
    return lambda precision, k: fn(precision)


# -- entries ---------------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    id: str
    family_kind: str
    title: str
    weight_rule: Callable[[int, Optional[int]], object]
    rhs_rule: Callable[[int, Optional[int]], object]
    gf: Callable[[int, Optional[int]], Series]
    weight_text: str
    rhs_text: str
    normalization: str = "plain"
    factor_rule: Callable[[int], object] = lambda n: 1
    k: Optional[int] = None
    kind: str = "sum"
    master: Optional[str] = None
    note: str = ""

    @property
    def k_free(self) -> bool:
        return self.family_kind == KARY and self.k is None

    def ks(self, k: Optional[int] = None) -> Tuple[Optional[int], ...]:
        if self.family_kind != KARY:
            return (None,)
        if self.k is not None:
            if k not in (None, self.k):
                raise ValueError(f"{self.id} is fixed at k={self.k}")
            return (self.k,)
        return (k,) if k is not None else DEFAULT_KS

    def resolve_k(self, k: Optional[int]) -> Optional[int]:
        if self.family_kind != KARY:
            return None
        if self.k is not None:
            return self.k
        if k is None:
            raise ValueError(f"{self.id} needs a value for k")
        return k

    def family(self, k: Optional[int] = None) -> TreeFamily:
        if self.family_kind == KARY:
            return TreeFamily.kary(self.resolve_k(k))
        return TreeFamily(self.family_kind)


REGISTRY: Dict[str, Identity] = {}


def _add(entry: Identity) -> Identity:
    if entry.id in REGISTRY:
        raise ValueError(f"duplicate identity id {entry.id}")
    REGISTRY[entry.id] = entry
    return entry


def _fact(n):
    return factorial(n)


# k-ary trees: the master formula in a, z and its relatives


def _kary18_weight(h, k):
    num = range_product(lambda i: Z * A + k * (A - 1) * h - i * (A - k), 1, h - 1)
    den = k * h * range_product(lambda i: k * Z * A + k * (A - 1) * (h - 1) - i * (A - k), 1, h - 2)
    return num / den


def _kary18_rhs(n, k):
    return Z * A / _fact(n) * range_product(lambda i: Z * A + k * (A - 1) * n - i * (A - k), 1, n - 1)


_KARY18_GF = _power_eq_gf(
    lambda k: A - k,
    lambda k: k * (A - 1) / (A - k),
    lambda k: Z * A / (A - k),
)

_add(Identity(
    id="kary-18", family_kind=KARY, title="k-ary master formula in a and z",
    weight_rule=_kary18_weight, rhs_rule=_kary18_rhs, gf=_KARY18_GF,
    weight_text="prod_{i=1}^{h-1}(za+k(a-1)h-i(a-k)) / (kh prod_{i=1}^{h-2}(kza+k(a-1)(h-1)-i(a-k)))",
    rhs_text="za/n! prod_{i=1}^{n-1}(za+k(a-1)n-i(a-k))",
))
_add(Identity(
    id="kary-20", family_kind=KARY, title="k-ary master weight from (1+g)^(za/(a-k))",
    weight_rule=_kary18_weight, rhs_rule=_kary18_weight, gf=_KARY18_GF, kind="weight", master="kary-18",
    weight_text="prod_{i=1}^{h-1}(za+k(a-1)h-i(a-k)) / (kh prod_{i=1}^{h-2}(kza+k(a-1)(h-1)-i(a-k)))",
    rhs_text="rho(n) extracted from f = (1+g)^(za/(a-k)), g = (a-k)x(1+g)^(k(a-1)/(a-k))",
))
_add(Identity(
    id="kary-22", family_kind=KARY, title="k-ary Abel-polynomial formula",
    weight_rule=lambda h, k: (Z + (k - 1) * h) ** (h - 1) / (k * h * (k * Z + (k - 1) * (h - 1)) ** (h - 2)),
    rhs_rule=lambda n, k: Z * (Z + (k - 1) * n) ** (n - 1),
    factor_rule=_fact, normalization="n!",
    gf=_abel_gf(lambda k: k - 1),
    weight_text="(z+(k-1)h)^(h-1) / (kh (kz+(k-1)(h-1))^(h-2))",
    rhs_text="z(z+(k-1)n)^(n-1)",
))
_add(Identity(
    id="kary-inf", family_kind=KARY, title="k-ary formula, leading order in a",
    weight_rule=lambda h, k: range_product(lambda i: k * h + Z - i, 1, h - 1)
    / (k * h * range_product(lambda i: k * h + k * (Z - 1) - i, 1, h - 2)),
    rhs_rule=lambda n, k: Z / _fact(n) * range_product(lambda i: k * n + Z - i, 1, n - 1),
    gf=_power_eq_gf(lambda k: 1, lambda k: k, lambda k: Z),
    weight_text="prod_{i=1}^{h-1}(kh+z-i) / (kh prod_{i=1}^{h-2}(kh+k(z-1)-i))",
    rhs_text="z/n! prod_{i=1}^{n-1}(kn+z-i)",
))
_add(Identity(
    id="yang-7", family_kind=KARY, title="k-ary expansion of e^x",
    weight_rule=lambda h, k: RatFunc.const(Fraction(1, h * k ** (h - 1))),
    rhs_rule=lambda n, k: RatFunc.const(Fraction(1, _fact(n))),
    gf=_const_gf(exp_x),
    weight_text="1/(h k^(h-1))", rhs_text="1/n!",
))
_add(Identity(
    id="han-37", family_kind=KARY, k=2, title="binary formula in a and z",
    weight_rule=lambda h, k: range_product(lambda i: Z * A + Z + (2 * h - i) * A + i, 1, h - 1)
    / (2 * h * range_product(lambda i: 2 * Z * A + 2 * Z + (2 * h - 2 - i) * A + i, 1, h - 2)),
    rhs_rule=lambda n, k: Z * (A + 1) / _fact(n)
    * range_product(lambda i: Z * A + Z + (2 * n - i) * A + i, 1, n - 1),
    gf=_power_eq_gf(lambda k: A - 1, lambda k: 2 * A / (A - 1), lambda k: Z * (A + 1) / (A - 1)),
    weight_text="prod_{i=1}^{h-1}(za+z+(2h-i)a+i) / (2h prod_{i=1}^{h-2}(2za+2z+(2h-2-i)a+i))",
    rhs_text="z(a+1)/n! prod_{i=1}^{n-1}(za+z+(2n-i)a+i)",
))
_add(Identity(
    id="duliu-13", family_kind=KARY, title="k-ary formula with weight a + 1/h",
    weight_rule=lambda h, k: A + RatFunc.const(Fraction(1, h)),
    rhs_rule=lambda n, k: (A + 1) / _fact(n) * range_product(lambda i: k * A * n + A + 1 - i * (A - k + 1), 1, n - 1),
    gf=_power_eq_gf(lambda k: A + 1 - k, lambda k: k * A / (A + 1 - k), lambda k: (A + 1) / (A + 1 - k)),
    weight_text="a + 1/h", rhs_text="(a+1)/n! prod_{i=1}^{n-1}(kan+a+1-i(a-k+1))",
))
_add(Identity(
    id="postnikov-19", family_kind=KARY, k=2, title="Postnikov's binary tree formula",
    weight_rule=lambda h, k: RatFunc.const(1 + Fraction(1, h)),
    rhs_rule=lambda n, k: RatFunc.const((n + 1) ** (n - 1)),
    factor_rule=lambda n: Fraction(_fact(n), 2 ** n), normalization="n!/2^n",
    gf=_const_gf(lambda p: series_scale_arg(tree_function_series(p), 2)),
    weight_text="1 + 1/h", rhs_text="(n+1)^(n-1)",
))
_add(Identity(
    id="han-40", family_kind=KARY, k=2, title="binary Abel-polynomial formula",
    weight_rule=lambda h, k: (Z + h) ** (h - 1) / (2 * h * (2 * Z + h - 1) ** (h - 2)),
    rhs_rule=lambda n, k: Z * (n + Z) ** (n - 1),
    factor_rule=_fact, normalization="n!",
    gf=_abel_gf(lambda k: 1),
    weight_text="(z+h)^(h-1) / (2h (2z+h-1)^(h-2))", rhs_text="z(n+z)^(n-1)",
))

# plane trees


_add(Identity(
    id="pt-10", family_kind=PLANE_TREE, title="plane trees with weight 1/h",
    weight_rule=lambda h, k: RatFunc.const(Fraction(1, h)),
    rhs_rule=lambda n, k: RatFunc.const(double_factorial(2 * n - 3)),
    factor_rule=_fact, normalization="n!",
    gf=_const_gf(lambda p: 1 - series_pow(1 - 2 * Series.x(p), Fraction(1, 2))),
    weight_text="1/h", rhs_text="(2n-3)!!",
))
_add(Identity(
    id="pt-21", family_kind=PLANE_TREE, title="plane trees with weight (1-1/h)^(h-1)",
    weight_rule=lambda h, k: RatFunc.const((1 - Fraction(1, h)) ** (h - 1)),
    rhs_rule=lambda n, k: RatFunc.const((n - 1) ** (n - 1)),
    factor_rule=_fact, normalization="n!",
    gf=_const_gf(lambda p: 1 - series_inv(tree_function_series(p))),
    weight_text="(1-1/h)^(h-1)", rhs_text="(n-1)^(n-1)",
))

# plane forests


def _pf14_weight(h, k):
    num = range_product(lambda i: (2 * h - Z) * A - (A + 1) * i, 1, h - 1)
    den = h * range_product(lambda i: (2 * h - 2 + Z) * A - (A + 1) * i, 1, h - 2)
    return num / den


def _pf14_rhs(n, k):
    return Z * A / _fact(n) * range_product(lambda i: (2 * n + Z) * A - (A + 1) * i, 1, n - 1)


_PF14_GF = _power_eq_gf(lambda k: A + 1, lambda k: 2 * A / (A + 1), lambda k: Z * A / (A + 1))

_add(Identity(
    id="pf-11", family_kind=PLANE_FOREST, title="plane forests with alternating weight (-1)^(h+1)/h",
    weight_rule=lambda h, k: RatFunc.const(Fraction((-1) ** (h + 1), h)),
    rhs_rule=lambda n, k: RatFunc.const((-1) ** n),
    factor_rule=lambda n: (-1) ** n * _fact(n), normalization="(-1)^n n!",
    gf=_const_gf(exp_x),
    weight_text="(-1)^(h+1)/h", rhs_text="(-1)^n",
))
_add(Identity(
    id="pf-bernoulli", family_kind=PLANE_FOREST, title="plane forests weighted by Bernoulli numbers",
    weight_rule=lambda h, k: RatFunc.const(bernoulli(h)),
    rhs_rule=lambda n, k: RatFunc.const(Fraction((-1) ** n, _fact(n + 1))),
    gf=_const_gf(lambda p: series_scale_arg(
        Series.from_function(lambda n: Fraction(1, factorial(n + 1)), p), -1)),
    weight_text="B_h (Bernoulli, B_1 = -1/2)", rhs_text="(-1)^n/(n+1)!",
))
_add(Identity(
    id="pf-14", family_kind=PLANE_FOREST, title="plane forest master formula in a and z",
    weight_rule=_pf14_weight, rhs_rule=_pf14_rhs, gf=_PF14_GF,
    weight_text="prod_{i=1}^{h-1}((2h-z)a-(a+1)i) / (h prod_{i=1}^{h-2}((2h-2+z)a-(a+1)i))",
    rhs_text="za/n! prod_{i=1}^{n-1}((2n+z)a-(a+1)i)",
))
_add(Identity(
    id="pf-30", family_kind=PLANE_FOREST, title="plane forest master weight from (1+g)^(za/(a+1))",
    weight_rule=_pf14_weight, rhs_rule=_pf14_weight, gf=_PF14_GF, kind="weight", master="pf-14",
    weight_text="prod_{i=1}^{h-1}((2h-z)a-(a+1)i) / (h prod_{i=1}^{h-2}((2h-2+z)a-(a+1)i))",
    rhs_text="rho(n) extracted from f = (1+g)^(za/(a+1)), g = (a+1)x(1+g)^(2a/(a+1))",
))
_add(Identity(
    id="pf-32", family_kind=PLANE_FOREST, title="plane forest formula at a = 1",
    weight_rule=lambda h, k: range_product(lambda i: 2 * h - Z - 2 * i, 1, h - 1)
    / (h * range_product(lambda i: 2 * h + Z - 2 * i, 2, h - 1)),
    rhs_rule=lambda n, k: Z / _fact(n) * range_product(lambda i: 2 * n + Z - 2 * i, 1, n - 1),
    gf=_power_eq_gf(lambda k: 2, lambda k: 1, lambda k: Z / 2),
    weight_text="prod_{i=1}^{h-1}(2h-z-2i) / (h prod_{i=2}^{h-1}(2h+z-2i))",
    rhs_text="z/n! prod_{i=1}^{n-1}(2n+z-2i)",
))
_add(Identity(
    id="pf-23", family_kind=PLANE_FOREST, title="plane forest Abel-type formula",
    weight_rule=lambda h, k: (2 * h - Z) ** (h - 1) / (h * (2 * h - 2 + Z) ** (h - 2)),
    rhs_rule=lambda n, k: Z / _fact(n) * (2 * n + Z) ** (n - 1),
    gf=_abel_gf(lambda k: 2),
    weight_text="(2h-z)^(h-1) / (h (2h-2+z)^(h-2))", rhs_text="z/n! (2n+z)^(n-1)",
))
_add(Identity(
    id="pf-12", family_kind=PLANE_FOREST, title="plane forests with weight (1-1/h)^(h-1)",
    weight_rule=lambda h, k: RatFunc.const((1 - Fraction(1, h)) ** (h - 1)),
    rhs_rule=lambda n, k: RatFunc.const((n + 1) ** (n - 1)),
    factor_rule=_fact, normalization="n!",
    gf=_const_gf(tree_function_series),
    weight_text="(1-1/h)^(h-1)", rhs_text="(n+1)^(n-1)",
    note="open-interpretation: no combinatorial proof known; rhs counts labeled forests on n vertices",
))
_add(Identity(
    id="pf-inf", family_kind=PLANE_FOREST, title="plane forest formula, leading order in a",
    weight_rule=lambda h, k: falling_factorial(2 * h - Z - 1, h - 1) / (h * falling_factorial(2 * h + Z - 3, h - 2)),
    rhs_rule=lambda n, k: Z / _fact(n) * falling_factorial(2 * n + Z - 1, n - 1),
    gf=_power_eq_gf(lambda k: 1, lambda k: 2, lambda k: Z),
    weight_text="(2h-z-1)_{h-1} / (h (2h+z-3)_{h-2})", rhs_text="z/n! (2n+z-1)_{n-1}",
))
_add(Identity(
    id="duliu-26", family_kind=PLANE_FOREST, title="plane forests with weight a + 1/h",
    weight_rule=lambda h, k: A + RatFunc.const(Fraction(1, h)),
    rhs_rule=lambda n, k: (A + 1) / _fact(n)
    * range_product(lambda i: (2 * n + 1) * (A + 1) - (A + 2) * i, 1, n - 1),
    gf=_power_eq_gf(lambda k: A + 2, lambda k: 2 * (A + 1) / (A + 2), lambda k: (A + 1) / (A + 2)),
    weight_text="a + 1/h", rhs_text="(a+1)/n! prod_{i=1}^{n-1}((2n+1)(a+1)-(a+2)i)",
))

# labeled trees


_add(Identity(
    id="lt-bell", family_kind=LABELED_TREE, title="labeled trees weighted by Bell numbers",
    weight_rule=lambda h, k: RatFunc.const(Fraction(1, h * bell(h - 1))),
    rhs_rule=lambda n, k: RatFunc.const(1),
    gf=_const_gf(lambda p: exp_x(p) - 1),
    weight_text="1/(h Bell(h-1))", rhs_text="1",
))
_add(Identity(
    id="lt-16", family_kind=LABELED_TREE, title="labeled trees with weight 1/h",
    weight_rule=lambda h, k: RatFunc.const(Fraction(1, h)),
    rhs_rule=lambda n, k: RatFunc.const(_fact(n - 1)),
    gf=_const_gf(lambda p: series_log(geometric(p))),
    weight_text="1/h", rhs_text="(n-1)!",
))

# labeled forests


def _f25_weight(h, k):
    num = range_product(lambda i: A * h - (A - 1) * i, 1, h - 1)
    den = h * range_product(lambda i: A * (h - 1 + Z) - (A - 1) * i, 1, h - 2)
    return num / den


def _f25_rhs(n, k):
    return Z * A * range_product(lambda i: A * (n + Z) - (A - 1) * i, 1, n - 1)


_F25_GF = _power_eq_gf(lambda k: A - 1, lambda k: A / (A - 1), lambda k: Z * A / (A - 1))

_add(Identity(
    id="f-binom", family_kind=LABELED_FOREST, title="labeled forests and central binomial coefficients",
    # (2h-2)!! = 2^(h-1) (h-1)! for the even double factorial
    weight_rule=lambda h, k: RatFunc.const(
        Fraction(2 * 2 ** (h - 1) * _fact(h - 1)) / (h * double_factorial(2 * h - 3))),
    rhs_rule=lambda n, k: RatFunc.const(comb(2 * n, n)),
    factor_rule=lambda n: Fraction(1, _fact(n)), normalization="1/n!",
    gf=_const_gf(lambda p: series_pow(1 - 4 * Series.x(p), Fraction(-1, 2))),
    weight_text="2(2h-2)!! / (h (2h-3)!!)", rhs_text="binom(2n, n)",
))
_add(Identity(
    id="f-25", family_kind=LABELED_FOREST, title="labeled forest master formula in a and z",
    weight_rule=_f25_weight, rhs_rule=_f25_rhs, gf=_F25_GF,
    weight_text="prod_{i=1}^{h-1}(ah-(a-1)i) / (h prod_{i=1}^{h-2}(a(h-1+z)-(a-1)i))",
    rhs_text="za prod_{i=1}^{n-1}(a(n+z)-(a-1)i)",
))
_add(Identity(
    id="f-31", family_kind=LABELED_FOREST, title="labeled forest master weight from (1+g)^(za/(a-1))",
    weight_rule=_f25_weight, rhs_rule=_f25_weight, gf=_F25_GF, kind="weight", master="f-25",
    weight_text="prod_{i=1}^{h-1}(ah-(a-1)i) / (h prod_{i=1}^{h-2}(a(h-1+z)-(a-1)i))",
    rhs_text="rho(n) extracted from f = (1+g)^(za/(a-1)), g = (a-1)x(1+g)^(a/(a-1))",
))
_add(Identity(
    # the product form (a+1) prod((a+1)n - ai) is a sum over rooted labeled trees; the
    # forest version follows by adjoining a root (see the f-25 link)
    id="gesselseo-28", family_kind=LABELED_TREE, title="labeled trees with weight 1 + a/h",
    weight_rule=lambda h, k: 1 + A / h,
    rhs_rule=lambda n, k: (A + 1) * range_product(lambda i: (A + 1) * n - A * i, 1, n - 1),
    gf=_const_gf(lambda p: series_log(_power_eq_gf(
        lambda k: A, lambda k: (A + 1) / A, lambda k: (A + 1) / A)(p, None))),
    weight_text="1 + a/h", rhs_text="(a+1) prod_{i=1}^{n-1}((a+1)n-ai)",
    note="stated over labeled trees: over labeled forests the product form fails from n=2 on",
))
_add(Identity(
    id="f-34", family_kind=LABELED_FOREST, title="labeled forest Abel-polynomial formula",
    weight_rule=lambda h, k: (h / (h - 1 + Z)) ** (h - 2),
    rhs_rule=lambda n, k: Z * (n + Z) ** (n - 1),
    gf=_abel_gf(lambda k: 1),
    weight_text="(h/(h-1+z))^(h-2)", rhs_text="z(n+z)^(n-1)",
))
_add(Identity(
    id="f-35", family_kind=LABELED_FOREST, title="labeled forest formula, leading order in a",
    weight_rule=lambda h, k: _fact(h - 1) / (h * falling_factorial(h - 2 + Z, h - 2)),
    rhs_rule=lambda n, k: Z * falling_factorial(n + Z - 1, n - 1),
    gf=_power_eq_gf(lambda k: 1, lambda k: 1, lambda k: Z),
    weight_text="(h-1)! / (h (h-2+z)_{h-2})", rhs_text="z (n+z-1)_{n-1}",
))
_add(Identity(
    id="f-38", family_kind=LABELED_FOREST, title="labeled forests with weight 1/h",
    weight_rule=lambda h, k: RatFunc.const(Fraction(1, h)),
    rhs_rule=lambda n, k: RatFunc.const(_fact(n)),
    gf=_const_gf(geometric),
    weight_text="1/h", rhs_text="n!",
    note="open-interpretation: no combinatorial proof known",
))
_add(Identity(
    id="f-36", family_kind=LABELED_FOREST, title="labeled forests with weight 1/h^2",
    weight_rule=lambda h, k: RatFunc.const(Fraction(1, h * h)),
    rhs_rule=lambda n, k: RatFunc.const(Fraction(_fact(n + 1), 2 ** n)),
    gf=_const_gf(lambda p: series_scale_arg(series_int_pow(series_inv(1 - Series.x(p)), 2), Fraction(1, 2))),
    weight_text="1/h^2", rhs_text="(n+1)!/2^n",
    note="open-interpretation: no combinatorial proof known",
))


# -- lookups -------------------------------------------------------------------------


def get(identity_id: str) -> Identity:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity id {identity_id!r}") from None


@lru_cache(maxsize=None)
def weight(identity_id: str, h: int, k: Optional[int] = None) -> RatFunc:
    """Closed-form ``rho(h)`` of a registry entry."""
    entry = get(identity_id)
    if h < 1:
        raise ValueError("weights are defined for h >= 1")
    return _r(entry.weight_rule(h, entry.resolve_k(k)))


@lru_cache(maxsize=None)
def rhs(identity_id: str, n: int, k: Optional[int] = None) -> RatFunc:
    """Closed-form right-hand side of a registry entry (for weight entries: the weight)."""
    entry = get(identity_id)
    if n < 1:
        raise ValueError("right-hand sides are defined for n >= 1")
    return _r(entry.rhs_rule(n, entry.resolve_k(k)))


def factor(identity_id: str, n: int) -> RatFunc:
    """Normalization applied to the raw hook sum before comparing with :func:`rhs`."""
    return _r(get(identity_id).factor_rule(n))


@lru_cache(maxsize=None)
def coefficient(identity_id: str, n: int, k: Optional[int] = None) -> RatFunc:
    """Closed-form ``[x^n] f`` of the entry's generating function (plain coefficient)."""
    entry = get(identity_id)
    if entry.kind == "weight":
        return coefficient(entry.master, n, k)
    if n == 0:
        return RatFunc.const(0 if entry.family(k).min_size else 1)
    value = rhs(identity_id, n, k) / factor(identity_id, n)
    if entry.family_kind in (LABELED_TREE, LABELED_FOREST):
        value = value / _fact(n)
    return value


def generating_series(identity_id: str, precision: int, k: Optional[int] = None) -> Series:
    """The entry's generating function built from its defining equation."""
    entry = get(identity_id)
    return entry.gf(precision, entry.resolve_k(k))


def coefficient_series(identity_id: str, precision: int, k: Optional[int] = None) -> Series:
    """The generating function assembled from the closed-form coefficients."""
    return Series(coefficient(identity_id, n, k) for n in range(precision + 1))


def plane_tree_alternating_sum(n: int) -> Fraction:
    """``sum over plane trees T of size n of n! / prod_{h in H(T)} ((-1)^h h)``, by the recursion."""
    from .expansion import hook_sum_dp
    from .trees import PLANE_TREES

    return hook_sum_dp(PLANE_TREES, lambda h: Fraction((-1) ** h, h), n) * _fact(n)


# -- specialization links ----------------------------------------------------------


@dataclass(frozen=True)
class SpecializationLink:
    """``target`` is ``source`` after substituting for ``a``/``z`` (and fixing ``k``).

    ``scale`` relates the weights: ``source.weight(h)|subst = scale * target.weight(h)``,
    hence the raw hook sums differ by ``scale^n``.
    """

    source: str
    target: str
    subst: Callable[[Optional[int]], Dict[str, object]]
    scale: Callable[[Optional[int]], object] = lambda k: 1
    ks: Tuple[Optional[int], ...] = (None,)
    description: str = ""
    # target is over labeled trees, source over labeled forests: a tree on n+1
    # vertices is a root joined to a forest on n vertices
    adjoin_root: bool = False


LINKS: List[SpecializationLink] = [
    SpecializationLink("kary-18", "han-37", lambda k: {"a": A + 1}, ks=(2,),
                       description="k=2, a -> a+1"),
    SpecializationLink("kary-18", "duliu-13", lambda k: {"z": 1, "a": A + 1}, ks=DEFAULT_KS,
                       description="z=1, a -> a+1"),
    SpecializationLink("kary-18", "kary-22", lambda k: {"a": k}, scale=lambda k: k, ks=DEFAULT_KS,
                       description="a=k (weights scale by k)"),
    SpecializationLink("pf-14", "duliu-26", lambda k: {"z": 1, "a": A + 1}, description="z=1, a -> a+1"),
    SpecializationLink("pf-14", "pf-32", lambda k: {"a": 1}, description="a=1"),
    SpecializationLink("pf-14", "pf-23", lambda k: {"a": -1}, scale=lambda k: -1,
                       description="a=-1 (weights scale by -1)"),
    SpecializationLink("pf-23", "pf-12", lambda k: {"z": 2}, scale=lambda k: 2,
                       description="z=2 (weights scale by 2)"),
    SpecializationLink("f-25", "gesselseo-28", lambda k: {"z": 1, "a": A + 1}, adjoin_root=True,
                       description="z=1, a -> a+1, then adjoin a root"),
    SpecializationLink("f-25", "f-34", lambda k: {"a": 1}, description="a=1"),
    SpecializationLink("f-35", "f-38", lambda k: {"z": 1}, description="z=1"),
    SpecializationLink("f-35", "f-36", lambda k: {"z": 2}, scale=lambda k: 2,
                       description="z=2 (weights scale by 2)"),
]


def registry_json() -> List[dict]:
    """Serializable description of every entry, in registry order."""
    links: Dict[str, List[dict]] = {}
    for link in LINKS:
        links.setdefault(link.source, []).append({"target": link.target, "substitution": link.description})
    out = []
    for entry in REGISTRY.values():
        out.append({
            "id": entry.id,
            "family": entry.family_kind,
            "k": entry.k,
            "kind": entry.kind,
            "title": entry.title,
            "weight": entry.weight_text,
            "rhs": entry.rhs_text,
            "normalization": entry.normalization,
            "links": links.get(entry.id, []),
            "note": entry.note,
        })
    return out
