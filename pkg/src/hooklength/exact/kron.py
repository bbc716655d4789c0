"""Kronecker substitution for integer bivariate polynomials.

``a^i z^j`` is sent to ``X^(j*D + i)`` with ``D`` above every ``a``-degree
involved, and ``X`` is then set to ``2^k`` so that a whole polynomial becomes
one Python integer. Products and exact quotients are then single big-int
operations. Coefficients are stored in balanced base ``2^k`` digits: ``k`` is
chosen so every digit of the result fits strictly inside ``(-2^(k-1), 2^(k-1))``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Optional, Tuple

Terms = Dict[Tuple[int, int], int]

# below this many term pairs the dict product is faster
MUL_CUTOFF = 96


@lru_cache(maxsize=256)
def _offset(slots: int, nbytes: int) -> int:
    half = 1 << (8 * nbytes - 1)
    return int.from_bytes(half.to_bytes(nbytes, "little") * slots, "little")


def _pack(terms: Terms, D: int, slots: int, nbytes: int) -> int:
    # write the non-negative and negative parts separately, touching only nonzero slots
    pos = bytearray(slots * nbytes)
    neg = bytearray(slots * nbytes)
    for (i, j), c in terms.items():
        at = (j * D + i) * nbytes
        if c > 0:
            pos[at:at + nbytes] = c.to_bytes(nbytes, "little")
        else:
            neg[at:at + nbytes] = (-c).to_bytes(nbytes, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value: int, D: int, slots: int, nbytes: int) -> Optional[Terms]:
    shifted = value + _offset(slots, nbytes)
    if shifted < 0:
        return None
    try:
        raw = shifted.to_bytes(slots * nbytes, "little")
    except OverflowError:
        return None
    half = 1 << (8 * nbytes - 1)
    zero = half.to_bytes(nbytes, "little")
    out: Terms = {}
    for e in range(slots):
        chunk = raw[e * nbytes:(e + 1) * nbytes]
        if chunk != zero:
            out[(e % D, e // D)] = int.from_bytes(chunk, "little") - half
    return out


def _bytes_for(bits: int) -> int:
    return (bits + 2) // 8 + 1


def _span(terms: Terms, D: int) -> int:
    return max(j * D + i for i, j in terms) + 1


def kron_mul(p: Terms, q: Terms) -> Terms:
    """Product of two nonzero integer polynomials."""
    D = max(i for i, _ in p) + max(i for i, _ in q) + 1
    bound = max(map(abs, p.values())) * max(map(abs, q.values())) * min(len(p), len(q))
    nbytes = _bytes_for(bound.bit_length())
    sp, sq = _span(p, D), _span(q, D)
    slots = sp + sq - 1
    prod = _pack(p, D, sp, nbytes) * _pack(q, D, sq, nbytes)
    out = _unpack(prod, D, slots, nbytes)
    assert out is not None, "Kronecker product digit overflow"
    return out


NOT_DIVISIBLE = "not-divisible"


def kron_divexact(p: Terms, q: Terms):
    """``p / q`` as terms, :data:`NOT_DIVISIBLE`, or ``None`` when undecided.

    A nonzero big-int remainder proves ``q`` does not divide ``p``; a candidate
    quotient is accepted only after multiplying back.
    """
    D = max(i for i, _ in p) + 1
    if max(i for i, _ in q) >= D:
        return NOT_DIVISIBLE
    sp, sq = _span(p, D), _span(q, D)
    if sq > sp:
        return NOT_DIVISIBLE
    bits = max(max(map(abs, p.values())).bit_length(), max(map(abs, q.values())).bit_length()) + 16
    for _ in range(3):
        nbytes = _bytes_for(bits)
        quot, rem = divmod(_pack(p, D, sp, nbytes), _pack(q, D, sq, nbytes))
        if rem:
            return NOT_DIVISIBLE
        s = _unpack(quot, D, sp - sq + 1, nbytes)
        if s and kron_mul(s, q) == p:
            return s
        bits *= 2
    return None
