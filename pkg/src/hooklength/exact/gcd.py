"""GCD and exact division for integer bivariate polynomials.

Polynomials are converted to a recursive dense form: a list indexed by the
degree of the main variable whose entries are univariate integer
polynomials (lists, lowest degree first) in the other variable. The gcd is
tried first with the heuristic evaluation method (evaluate at a large
integer, take an integer gcd, read the result back in balanced base-xi
digits, confirm by trial division). When that gives up, the primitive
polynomial remainder sequence settles it: contents in ``Z[y]`` first, then
primitive parts in ``Z[y][x]``.
"""

from __future__ import annotations

from functools import reduce
from math import gcd, isqrt
from typing import Dict, List, Optional, Tuple

from .kron import NOT_DIVISIBLE, kron_divexact
from .poly import BiPoly, Monomial

UPoly = List[int]
RPoly = List[UPoly]


# -- univariate integer polynomials ---------------------------------------


def _trim(p: UPoly) -> UPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _ucontent(p: UPoly) -> int:
    return reduce(gcd, p, 0)


def _uprimitive(p: UPoly) -> UPoly:
    c = _ucontent(p)
    if c == 0:
        return []
    if p[-1] < 0:
        c = -c
    return [x // c for x in p] if c != 1 else list(p)


def _umul(p: UPoly, q: UPoly) -> UPoly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _usub(p: UPoly, q: UPoly) -> UPoly:
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]
    return _trim(out)


def _uprem(p: UPoly, q: UPoly) -> UPoly:
    r = list(p)
    dq = len(q) - 1
    lc = q[-1]
    while r and len(r) - 1 >= dq:
        lr = r[-1]
        shift = len(r) - 1 - dq
        r = [lc * x for x in r]
        for i, y in enumerate(q):
            r[i + shift] -= lr * y
        _trim(r)
    return r


def _udivexact(p: UPoly, q: UPoly) -> UPoly:
    if not p:
        return []
    r = list(p)
    dq = len(q) - 1
    lc = q[-1]
    out = [0] * (len(p) - dq)
    while r and len(r) - 1 >= dq:
        shift = len(r) - 1 - dq
        c, rem = divmod(r[-1], lc)
        if rem:
            raise ArithmeticError("inexact univariate division")
        out[shift] = c
        for i, y in enumerate(q):
            r[i + shift] -= c * y
        _trim(r)
    if r:
        raise ArithmeticError("inexact univariate division")
    return _trim(out)


def _ugcd(p: UPoly, q: UPoly) -> UPoly:
    if not p:
        return _signfix(list(q))
    if not q:
        return _signfix(list(p))
    if len(p) == 1 or len(q) == 1:
        return [gcd(_ucontent(p), _ucontent(q))]
    g = _uheu(p, q)
    return g if g is not None else _uprs(p, q)


def _uprs(p: UPoly, q: UPoly) -> UPoly:
    c = gcd(_ucontent(p), _ucontent(q))
    p, q = _uprimitive(p), _uprimitive(q)
    if len(p) < len(q):
        p, q = q, p
    while q:
        if len(q) == 1:
            return [c]
        r = _uprem(p, q)
        p, q = q, _uprimitive(r)
    return [c * x for x in p]


# -- heuristic gcd ------------------------------------------------------------

_HEU_TRIES = 6


def _next_xi(xi: int) -> int:
    return xi * 73794 * isqrt(isqrt(xi)) // 27011


def _first_xi(norm_p: int, norm_q: int, lc_p: int, lc_q: int) -> int:
    bound = 2 * min(norm_p, norm_q) + 29
    return max(min(bound, 99 * isqrt(bound)), 2 * min(norm_p // abs(lc_p), norm_q // abs(lc_q)) + 2)


def _balanced_digits(v: int, xi: int) -> List[int]:
    out = []
    half = xi // 2
    while v:
        d = v % xi
        if d > half:
            d -= xi
        out.append(d)
        v = (v - d) // xi
    return out


def _ueval(p: UPoly, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _udivides(q: UPoly, p: UPoly) -> bool:
    try:
        _udivexact(p, q)
    except ArithmeticError:
        return False
    return True


def _uheu(p: UPoly, q: UPoly) -> Optional[UPoly]:
    c = gcd(_ucontent(p), _ucontent(q))
    p, q = _uprimitive(p), _uprimitive(q)
    np_, nq = max(map(abs, p)), max(map(abs, q))
    xi = _first_xi(np_, nq, p[-1], q[-1])
    for _ in range(_HEU_TRIES):
        h = gcd(_ueval(p, xi), _ueval(q, xi))
        if h:
            g = _uprimitive(_balanced_digits(h, xi))
            if g and _udivides(g, p) and _udivides(g, q):
                return [c * x for x in g]
        xi = _next_xi(xi)
    return None


def _biheu(tp: Dict[Monomial, int], tq: Dict[Monomial, int]) -> Optional[BiPoly]:
    """Heuristic gcd in ``Z[a, z]``: evaluate ``a`` at xi, recurse on ``Z[z]``, lift back."""
    cp, cq = reduce(gcd, tp.values(), 0), reduce(gcd, tq.values(), 0)
    c = gcd(cp, cq)
    tp = {m: v // cp for m, v in tp.items()}
    tq = {m: v // cq for m, v in tq.items()}
    fp, fq = BiPoly._raw(tp), BiPoly._raw(tq)
    xi = _first_xi(max(map(abs, tp.values())), max(map(abs, tq.values())), tp[max(tp)], tq[max(tq)])
    for _ in range(_HEU_TRIES):
        up, uq = _eval_a(tp, xi), _eval_a(tq, xi)
        if up and uq:
            h = _ugcd(up, uq)
            lifted: Dict[Monomial, int] = {}
            for j, hj in enumerate(h):
                for i, d in enumerate(_balanced_digits(hj, xi)):
                    if d:
                        lifted[(i, j)] = d
            if lifted:
                cont = reduce(gcd, lifted.values(), 0)
                g = BiPoly._raw({m: v // cont for m, v in lifted.items()})
                try:
                    poly_divexact(fp, g)
                    poly_divexact(fq, g)
                except ArithmeticError:
                    pass
                else:
                    return g.scale(c) if c != 1 else g
        xi = _next_xi(xi)
    return None


def _eval_a(t: Dict[Monomial, int], x: int) -> UPoly:
    deg = max(m[1] for m in t)
    out = [0] * (deg + 1)
    for (i, j), v in t.items():
        out[j] += v * x ** i
    return _trim(out)


def _signfix(p: UPoly) -> UPoly:
    if p and p[-1] < 0:
        return [-x for x in p]
    return p


# -- recursive bivariate form ------------------------------------------------


def _to_rec(terms: Dict[Monomial, int], main: int) -> RPoly:
    other = 1 - main
    deg_main = max(m[main] for m in terms)
    deg_other = max(m[other] for m in terms)
    rec = [[0] * (deg_other + 1) for _ in range(deg_main + 1)]
    for m, c in terms.items():
        rec[m[main]][m[other]] = c
    return [_trim(c) for c in rec]


def _from_rec(rec: RPoly, main: int) -> Dict[Monomial, int]:
    out: Dict[Monomial, int] = {}
    for i, coeff in enumerate(rec):
        for j, c in enumerate(coeff):
            if c:
                out[(i, j) if main == 0 else (j, i)] = c
    return out


def _rtrim(p: RPoly) -> RPoly:
    while p and not p[-1]:
        p.pop()
    return p


def _rcontent(p: RPoly) -> UPoly:
    g: UPoly = []
    for c in p:
        if c:
            g = _ugcd(g, c)
            if len(g) == 1 and abs(g[0]) == 1:
                return [1]
    return g


def _rprimitive(p: RPoly) -> Tuple[UPoly, RPoly]:
    c = _rcontent(p)
    if c == [1]:
        return c, p
    return c, [_udivexact(x, c) if x else [] for x in p]


def _rprem(p: RPoly, q: RPoly) -> RPoly:
    r = [list(c) for c in p]
    dq = len(q) - 1
    lc = q[-1]
    while r and len(r) - 1 >= dq:
        lr = r[-1]
        shift = len(r) - 1 - dq
        r = [_umul(lc, c) for c in r]
        for i, y in enumerate(q):
            if y:
                r[i + shift] = _usub(r[i + shift], _umul(lr, y))
        _rtrim(r)
    return r


def _rgcd(p: RPoly, q: RPoly) -> RPoly:
    cp, pp = _rprimitive(p)
    cq, qq = _rprimitive(q)
    c = _ugcd(cp, cq)
    if len(pp) < len(qq):
        pp, qq = qq, pp
    while True:
        if len(qq) == 1:
            # primitive part of a degree-zero polynomial is a unit
            return [c]
        r = _rprem(pp, qq)
        if not r:
            break
        pp, qq = qq, _rprimitive(r)[1]
    _, g = _rprimitive(qq)
    return [_umul(c, x) for x in g]


# -- public entry points -------------------------------------------------------


def _int_terms(p: BiPoly) -> Dict[Monomial, int]:
    if not p.is_integral():
        raise TypeError("gcd is defined here for integer-coefficient polynomials")
    return dict(p.items())


def _monomial_gcd(t: Dict[Monomial, int], m: Monomial, c: int) -> BiPoly:
    ia = min(min(k[0] for k in t), m[0])
    iz = min(min(k[1] for k in t), m[1])
    g = reduce(gcd, t.values(), abs(c))
    return BiPoly._raw({(ia, iz): g})


def poly_gcd(p: BiPoly, q: BiPoly) -> BiPoly:
    """Greatest common divisor in ``Z[a, z]``, normalized to a positive leading coefficient."""
    tp, tq = _int_terms(p), _int_terms(q)
    if not tp:
        return _positive(q)
    if not tq:
        return _positive(p)
    if len(tq) == 1:
        (m, c), = tq.items()
        return _monomial_gcd(tp, m, c)
    if len(tp) == 1:
        (m, c), = tp.items()
        return _monomial_gcd(tq, m, c)
    da = max(max(k[0] for k in tp), max(k[0] for k in tq))
    dz = max(max(k[1] for k in tp), max(k[1] for k in tq))
    g = _biheu(tp, tq)
    if g is not None:
        return _positive(g)
    # recurse on the variable of lower degree: shorter remainder sequences
    main = 1 if dz <= da else 0
    g = _from_rec(_rgcd(_to_rec(tp, main), _to_rec(tq, main)), main)
    return _positive(BiPoly._raw(g))


def _positive(p: BiPoly) -> BiPoly:
    if p and p.leading_coeff() < 0:
        return -p
    return p


def poly_divexact(p: BiPoly, q: BiPoly) -> BiPoly:
    """Quotient ``p / q`` when ``q`` divides ``p``; raises ``ArithmeticError`` otherwise."""
    tq = dict(q.items())
    if not tq:
        raise ZeroDivisionError("division by the zero polynomial")
    r = dict(p.items())
    if len(tq) == 1:
        ((mq, cq),) = tq.items()
        out = {}
        for m, c in r.items():
            e = (m[0] - mq[0], m[1] - mq[1])
            if e[0] < 0 or e[1] < 0:
                raise ArithmeticError("inexact polynomial division")
            out[e] = _exact_coeff_div(c, cq)
        return BiPoly(out)
    if r and p.is_integral() and q.is_integral():
        s = kron_divexact(r, tq)
        if s == NOT_DIVISIBLE:
            raise ArithmeticError("inexact polynomial division")
        if s is not None:
            return BiPoly._raw(s)
    lm = max(tq)
    lc = tq[lm]
    out = {}
    while r:
        m = max(r)
        e = (m[0] - lm[0], m[1] - lm[1])
        if e[0] < 0 or e[1] < 0:
            raise ArithmeticError("inexact polynomial division")
        c = _exact_coeff_div(r[m], lc)
        out[e] = c
        for mb, cb in tq.items():
            key = (mb[0] + e[0], mb[1] + e[1])
            v = r.get(key, 0) - c * cb
            if v:
                r[key] = v
            else:
                r.pop(key, None)
    return BiPoly(out)


def _exact_coeff_div(c, d):
    if isinstance(c, int) and isinstance(d, int):
        qt, rem = divmod(c, d)
        if rem:
            raise ArithmeticError("inexact coefficient division")
        return qt
    from fractions import Fraction

    return Fraction(c) / Fraction(d)
