"""Reduced rational functions in ``a`` and ``z`` over the rationals.

A :class:`RatFunc` is always stored in canonical form: numerator and
denominator have integer coefficients, share no common factor (the integer
content included), and the denominator's leading coefficient in graded-lex
order is positive. Structural equality is therefore value equality.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .gcd import poly_divexact, poly_gcd
from .poly import BiPoly


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated where its denominator vanishes."""


_ONE = BiPoly.const(1)
_ZERO = BiPoly()


def _integral(p: BiPoly, mult: int) -> BiPoly:
    return BiPoly._raw({m: int(c * mult) for m, c in p.items()})


def _int_content(p: BiPoly) -> int:
    return reduce(gcd, (c for _, c in p.items()), 0)


def ratfunc_reduce(num: BiPoly, den: BiPoly) -> "RatFunc":
    """Canonical representative of ``num / den``."""
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return RatFunc._make(_ZERO, _ONE)
    mult = lcm(num.denominator_lcm(), den.denominator_lcm())
    if mult != 1 or not (num.is_integral() and den.is_integral()):
        num, den = _integral(num, mult), _integral(den, mult)
    if den.is_constant():
        d = den.constant_term()
        g = gcd(_int_content(num), d)
        if d < 0:
            g = -g
        if g != 1:
            num = BiPoly._raw({m: c // g for m, c in num.items()})
        return RatFunc._make(num, BiPoly._raw({(0, 0): d // g}))
    g = poly_gcd(num, den)
    if not g.is_constant() or g.constant_term() != 1:
        num, den = poly_divexact(num, g), poly_divexact(den, g)
    if den.leading_coeff() < 0:
        num, den = -num, -den
    return RatFunc._make(num, den)


class RatFunc:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        r = ratfunc_reduce(_lift(num), _lift(den))
        self.num, self.den, self._hash = r.num, r.den, None

    @classmethod
    def _make(cls, num: BiPoly, den: BiPoly) -> "RatFunc":
        r = cls.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    @classmethod
    def var(cls, name: str) -> "RatFunc":
        return cls._make(BiPoly.var(name), _ONE)

    @classmethod
    def const(cls, c) -> "RatFunc":
        c = Fraction(c)
        return cls._make(BiPoly.const(c.numerator), BiPoly.const(c.denominator))

    @classmethod
    def parse(cls, text: str) -> "RatFunc":
        """Parse expressions such as ``"(z*a + 1)/(a^2 - 3/2)"``."""
        tree = ast.parse(text.replace("^", "**"), mode="eval")
        return _coerce(_eval_ast(tree.body))

    # -- predicates and accessors -------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self.num.constant_term(), self.den.constant_term())

    def degree_a(self) -> int:
        return max(self.num.degree_a(), self.den.degree_a())

    def degree_z(self) -> int:
        return max(self.num.degree_z(), self.den.degree_z())

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den.is_constant() and self.den.constant_term() == 1:
                return RatFunc._make(self.num + other.num, _ONE)
            return ratfunc_reduce(self.num + other.num, self.den)
        # Henrici: only the common part of the denominators can cancel
        b, d = self.den, other.den
        g = poly_gcd(b, d)
        if g == _ONE:
            return RatFunc._make(self.num * d + other.num * b, b * d)
        b1, d1 = poly_divexact(b, g), poly_divexact(d, g)
        t = self.num * d1 + other.num * b1
        if t.is_zero():
            return RatFunc._make(_ZERO, _ONE)
        g2 = poly_gcd(t, g)
        if g2 != _ONE:
            t, d = poly_divexact(t, g2), poly_divexact(d, g2)
        num, den = t, b1 * d
        if den.leading_coeff() < 0:
            num, den = -num, -den
        return RatFunc._make(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._make(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc._make(_ZERO, _ONE)
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d1.is_constant() and d2.is_constant():
            return ratfunc_reduce(n1 * n2, d1 * d2)
        # cross-cancel; inputs are already reduced
        g1 = poly_gcd(n1, d2)
        g2 = poly_gcd(n2, d1)
        if g1 != _ONE:
            n1, d2 = poly_divexact(n1, g1), poly_divexact(d2, g1)
        if g2 != _ONE:
            n2, d1 = poly_divexact(n2, g2), poly_divexact(d1, g2)
        num, den = n1 * n2, d1 * d2
        if den.leading_coeff() < 0:
            num, den = -num, -den
        return RatFunc._make(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        num, den = self.den, self.num
        if den.leading_coeff() < 0:
            num, den = -num, -den
        return RatFunc._make(num, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("RatFunc exponents must be integers")
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return RatFunc._make(_ONE, _ONE)
        return RatFunc._make(self.num ** e, self.den ** e)

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    # -- evaluation and substitution ----------------------------------------

    def eval(self, a0, z0) -> Fraction:
        return ratfunc_eval(self, a0, z0)

    def subs(self, a=None, z=None) -> "RatFunc":
        """Substitute rational functions (or numbers) for ``a`` and/or ``z``."""
        av = RatFunc.var("a") if a is None else _coerce(a)
        zv = RatFunc.var("z") if z is None else _coerce(z)
        return _poly_subs(self.num, av, zv) / _poly_subs(self.den, av, zv)

    # -- display ---------------------------------------------------------------

    def __str__(self):
        num = str(self.num)
        if self.den == _ONE:
            return num
        den = str(self.den)
        if len(self.num.terms) > 1:
            num = f"({num})"
        den_terms = self.den.terms
        # a constant or a bare power of one variable needs no parentheses
        simple_den = False
        if len(den_terms) == 1:
            ((i, j), c), = den_terms.items()
            simple_den = self.den.is_constant() or (c == 1 and (i == 0 or j == 0))
        if not simple_den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def ratfunc_eval(r: RatFunc, a0, z0) -> Fraction:
    """Exact value of ``r`` at ``a = a0, z = z0``; raises :class:`PoleError` at a pole."""
    a0, z0 = Fraction(a0), Fraction(z0)
    d = r.den.eval(a0, z0)
    if d == 0:
        raise PoleError(f"denominator of {r} vanishes at a={a0}, z={z0}")
    return Fraction(r.num.eval(a0, z0)) / d


def _poly_subs(p: BiPoly, av: RatFunc, zv: RatFunc) -> RatFunc:
    return p.eval(av, zv) + RatFunc.const(0)


def _lift(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return BiPoly.const(x)
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return RatFunc.const(x)
    if isinstance(x, BiPoly):
        return ratfunc_reduce(x, _ONE)
    return NotImplemented


_BINOPS = {
    ast.Add: lambda x, y: x + y,
    ast.Sub: lambda x, y: x - y,
    ast.Mult: lambda x, y: x * y,
    ast.Div: lambda x, y: _coerce(x) / y,
}


def _eval_ast(node):
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = _eval_ast(node.right)
            if isinstance(exp, RatFunc):
                exp = exp.to_fraction()
            if Fraction(exp).denominator != 1:
                raise ValueError("only integer powers are supported")
            return _coerce(_eval_ast(node.left)) ** int(exp)
        op = _BINOPS.get(type(node.op))
        if op is None:
            raise ValueError(f"unsupported operator {type(node.op).__name__}")
        return op(_eval_ast(node.left), _eval_ast(node.right))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_ast(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.Name) and node.id in ("a", "z"):
        return RatFunc.var(node.id)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    raise ValueError(f"cannot parse expression element {ast.dump(node)}")
