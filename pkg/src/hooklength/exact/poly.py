"""Sparse bivariate polynomials in the indeterminates ``a`` and ``z``.

Terms are stored as ``{(deg_a, deg_z): coefficient}`` with coefficients that
are Python ``int`` or :class:`fractions.Fraction`. Zero coefficients are
never stored. The canonical display order is graded lexicographic with
``z > a``, so ``z*a`` is printed rather than ``a*z``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, Mapping, Tuple, Union

from .kron import MUL_CUTOFF, kron_mul

Monomial = Tuple[int, int]
Coeff = Union[int, Fraction]


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(m: Monomial) -> Tuple[int, int, int]:
    """Sort key for descending graded-lex order with ``z > a``."""
    return (m[0] + m[1], m[1], m[0])


class BiPoly:
    __slots__ = ("_terms", "_hash", "_int")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean: Dict[Monomial, Coeff] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    if m[0] < 0 or m[1] < 0:
                        raise ValueError(f"negative exponent in monomial {m}")
                    clean[m] = _norm_coeff(c)
        self._terms = clean
        self._hash = None
        self._int = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coeff]) -> "BiPoly":
        # caller guarantees: no zero coefficients, normalized coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        p._int = None
        return p

    @classmethod
    def const(cls, c: Coeff) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def var(cls, name: str) -> "BiPoly":
        if name == "a":
            return cls._raw({(1, 0): 1})
        if name == "z":
            return cls._raw({(0, 1): 1})
        raise ValueError(f"unknown indeterminate {name!r}")

    @property
    def terms(self) -> Dict[Monomial, Coeff]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[Monomial, Coeff]]:
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    def constant_term(self) -> Coeff:
        return self._terms.get((0, 0), 0)

    def is_integral(self) -> bool:
        if self._int is None:
            self._int = all(isinstance(c, int) for c in self._terms.values())
        return self._int

    def degree_a(self) -> int:
        return max((m[0] for m in self._terms), default=-1)

    def degree_z(self) -> int:
        return max((m[1] for m in self._terms), default=-1)

    def total_degree(self) -> int:
        return max((m[0] + m[1] for m in self._terms), default=-1)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=grlex_key)

    def leading_coeff(self) -> Coeff:
        return self._terms[self.leading_monomial()]

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = _norm_coeff(v)
            else:
                out.pop(m, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return BiPoly._raw({})
        if len(self._terms) * len(other._terms) > MUL_CUTOFF and self.is_integral() and other.is_integral():
            return BiPoly._raw(kron_mul(self._terms, other._terms))
        out: Dict[Monomial, Coeff] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, 0) + c1 * c2
        return BiPoly({m: c for m, c in out.items()})

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "BiPoly":
        if not c:
            return BiPoly._raw({})
        return BiPoly({m: v * c for m, v in self._terms.items()})

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("BiPoly powers must be non-negative integers")
        result = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- integer helpers used by the fraction field --------------------------

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        num = 0
        den = 1
        for c in self._terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den) if num else Fraction(0)

    def denominator_lcm(self) -> int:
        den = 1
        for c in self._terms.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        return den

    # -- evaluation ------------------------------------------------------------

    def eval(self, a0, z0):
        """Exact value at ``(a0, z0)``; works for any ring elements supporting ``*`` and ``+``."""
        pa: Dict[int, object] = {0: 1}
        pz: Dict[int, object] = {0: 1}

        def pw(cache, base, e):
            if e not in cache:
                cache[e] = pw(cache, base, e - 1) * base
            return cache[e]

        total = 0
        for (i, j), c in self._terms.items():
            total = total + c * pw(pa, a0, i) * pw(pz, z0, j)
        return total

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for idx, ((i, j), c) in enumerate(self.sorted_terms()):
            mono = []
            if j:
                mono.append("z" if j == 1 else f"z^{j}")
            if i:
                mono.append("a" if i == 1 else f"a^{i}")
            neg = c < 0
            mag = -c if neg else c
            if mono:
                body = "*".join(mono)
                if mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = str(mag)
            if idx == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)


def _as_poly(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return BiPoly.const(x)
    return NotImplemented


A = BiPoly.var("a")
Z = BiPoly.var("z")
