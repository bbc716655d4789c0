"""Mechanical verification of the catalog.

Four modes compare a left-hand side computed one way against the entry's
closed form:

* ``dp``     -- ``factor(n) * hook_sum_dp`` with the closed-form weight;
* ``enum``   -- the same sum by listing every tree (``hook_sum_enum``);
* ``series`` -- the generating function rebuilt from its functional equation;
  sum entries compare its normalized ``[x^n]``, weight entries compare the
  weight extracted by ``rho_from_series``;
* ``grid``   -- ``dp`` at the points of a rational grid big enough that
  agreement everywhere on it forces a polynomial identity.

Weight entries make no hook-sum claim of their own, so ``dp``, ``enum`` and
``grid`` check them through their master entry's right-hand side.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import catalog
from .catalog import LINKS, REGISTRY, Identity, SpecializationLink
from .exact import BiPoly, PoleError, RatFunc, ratfunc_eval
from .expansion import WeightFunction, hook_sum_enum, rho_from_series, series_from_rho

MODES = ("dp", "enum", "series", "grid")
LINK_MODES = ("link-weight", "link-rhs")
LINK_DEPTH = 10


class VerificationError(RuntimeError):
    """Raised for requests that cannot be carried out (not for failed identities)."""


def _r(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc.const(x)


@dataclass(frozen=True)
class VerificationReport:
    id: str
    n: int
    mode: str
    subst: Optional[Tuple[Fraction, Fraction]]
    lhs: RatFunc
    rhs: RatFunc
    passed: bool
    micros: int = 0

    def sort_key(self):
        subst = () if self.subst is None else self.subst
        return (self.id, self.mode, subst, self.n)

    def to_dict(self, timing: bool = True) -> dict:
        subst = None
        if self.subst is not None:
            subst = {"a": str(self.subst[0]), "z": str(self.subst[1])}
        return {
            "id": self.id,
            "n": self.n,
            "mode": self.mode,
            "subst": subst,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "pass": self.passed,
            "micros": self.micros if timing else 0,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        subst = d.get("subst")
        if subst is not None:
            subst = (Fraction(subst["a"]), Fraction(subst["z"]))
        return cls(
            id=d["id"], n=int(d["n"]), mode=d["mode"], subst=subst,
            lhs=RatFunc.parse(d["lhs"]), rhs=RatFunc.parse(d["rhs"]),
            passed=bool(d["pass"]), micros=int(d["micros"]),
        )

    @classmethod
    def from_json(cls, line: str) -> "VerificationReport":
        return cls.from_dict(json.loads(line))

    def describe(self) -> str:
        where = "" if self.subst is None else f" at a={self.subst[0]}, z={self.subst[1]}"
        status = "pass" if self.passed else "FAIL"
        return f"{status} {self.id} n={self.n} mode={self.mode}{where}: lhs={self.lhs} rhs={self.rhs}"


def _report(rid, n, mode, subst, lhs, rhs, started) -> VerificationReport:
    lhs, rhs = _r(lhs), _r(rhs)
    micros = int((time.perf_counter() - started) * 1e6)
    return VerificationReport(rid, n, mode, subst, lhs, rhs, (lhs - rhs).is_zero(), micros)


def report_id(entry: Identity, k: Optional[int]) -> str:
    return f"{entry.id}[k={k}]" if entry.k_free else entry.id


def parse_subst(text: str) -> Tuple[Fraction, Fraction]:
    """``"a=1/2,z=3"`` -> ``(1/2, 3)``; a missing variable defaults to 0."""
    values = {"a": Fraction(0), "z": Fraction(0)}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, value = part.partition("=")
        name = name.strip()
        if not sep or name not in values:
            raise ValueError(f"bad substitution {part!r}; expected a=Q or z=Q")
        values[name] = Fraction(value.strip())
    return values["a"], values["z"]


# -- pieces shared by the modes ----------------------------------------------------------


def _sum_source(entry: Identity) -> Identity:
    return REGISTRY[entry.master] if entry.kind == "weight" else entry


def _weights(entry: Identity, k, subst) -> WeightFunction:
    w = WeightFunction(lambda h: catalog.weight(entry.id, h, k), entry.id)
    return w if subst is None else w.at(*subst)


def _at(value, subst):
    value = _r(value)
    return value if subst is None else ratfunc_eval(value, *subst)


def _claimed_sum(entry: Identity, n: int, k, subst):
    """The claimed ``rhs(n)`` (of the entry or its master) and the factor applied to the raw sum."""
    source = _sum_source(entry)
    return _at(catalog.rhs(source.id, n, k), subst), catalog.factor(source.id, n).to_fraction()


def _check_ceiling(entry: Identity, k, n_max: int):
    family = entry.family(k)
    if n_max > family.ceiling:
        raise VerificationError(
            f"enum mode for {report_id(entry, k)} needs n <= {family.ceiling} ({family}), got {n_max}")


# -- modes -------------------------------------------------------------------------------------


def _verify_dp(entry, k, n_max, subst) -> List[VerificationReport]:
    family = entry.family(k)
    rho = _weights(entry, k, subst)
    out = []
    for n in range(1, n_max + 1):
        started = time.perf_counter()
        raw = series_from_rho(family, rho, n)[n]
        if family.labeled:
            raw = raw * factorial(n)
        claimed, fac = _claimed_sum(entry, n, k, subst)
        out.append(_report(report_id(entry, k), n, "dp", subst, fac * raw, claimed, started))
    return out


def _verify_enum(entry, k, n_max, subst) -> List[VerificationReport]:
    _check_ceiling(entry, k, n_max)
    family = entry.family(k)
    rho = _weights(entry, k, subst)
    out = []
    for n in range(1, n_max + 1):
        started = time.perf_counter()
        raw = hook_sum_enum(family, rho, n)
        claimed, fac = _claimed_sum(entry, n, k, subst)
        out.append(_report(report_id(entry, k), n, "enum", subst, fac * raw, claimed, started))
    return out


def _verify_series(entry, k, n_max, subst) -> List[VerificationReport]:
    family = entry.family(k)
    started = time.perf_counter()
    f = catalog.generating_series(entry.id, n_max, k)
    build = time.perf_counter() - started
    out = []
    for n in range(1, n_max + 1):
        started = time.perf_counter() - build / n_max
        if entry.kind == "weight":
            lhs = rho_from_series(family, f, n)
            rhs = catalog.weight(entry.id, n, k)
        else:
            lhs = f[n] * catalog.factor(entry.id, n)
            if family.labeled:
                lhs = lhs * factorial(n)
            rhs = catalog.rhs(entry.id, n, k)
        out.append(_report(report_id(entry, k), n, "series", subst, _at(lhs, subst), _at(rhs, subst), started))
    return out


# grid mode: a degree-bound certificate
#
# Write rho(h) = p_h / q_h and rhs = P / Q in lowest terms. Equal hook lengths in one
# tree belong to disjoint subtrees, so h occurs at most floor(n/h) times in a
# size-n hook multiset and every weight product has denominator dividing
#   D = prod_h q_h^floor(n/h).
# Then D * Q * (factor * sum - rhs) is a polynomial; per variable its degree is at
# most deg D + max(deg Q + excess, deg P), where excess bounds the sum over a
# multiset of max(0, deg p_h - deg q_h). A polynomial with degree <= d_a in a and
# <= d_z in z that vanishes on a (d_a + 1) x (d_z + 1) product grid is zero.


def _degree(p: BiPoly, var: str) -> int:
    if p.is_zero():
        return 0
    return p.degree_a() if var == "a" else p.degree_z()


def grid_bounds(entry: Identity, n: int, k=None) -> Tuple[Tuple[int, int], List[BiPoly]]:
    """Per-variable degree bounds and the polynomials that must not vanish on the grid."""
    source = _sum_source(entry)
    claimed = catalog.rhs(source.id, n, k)
    avoid = [claimed.den]
    bounds = []
    weights = [catalog.weight(entry.id, h, k) for h in range(1, n + 1)]
    for var in ("a", "z"):
        deg_den = 0
        gains = []
        for h, w in enumerate(weights, start=1):
            deg_den += (n // h) * _degree(w.den, var)
            gains.append((n // h, max(0, _degree(w.num, var) - _degree(w.den, var))))
        # multiplicities are capped by floor(n/h) and total n; spend them on the largest gains
        excess, left = 0, n
        for cap, gain in sorted(gains, key=lambda cg: -cg[1]):
            take = min(cap, left)
            excess += take * gain
            left -= take
        bounds.append(deg_den + max(_degree(claimed.den, var) + excess, _degree(claimed.num, var)))
    avoid.extend(w.den for w in weights if not w.den.is_constant())
    return (bounds[0], bounds[1]), avoid


def _z_polynomial_vanishes(p: BiPoly, a0: Fraction) -> bool:
    by_z: Dict[int, Fraction] = {}
    for (i, j), c in p.items():
        by_z[j] = by_z.get(j, 0) + c * a0 ** i
    return all(v == 0 for v in by_z.values())


def _draw(rng: random.Random, taken: set) -> Fraction:
    while True:
        q = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
        if q not in taken:
            taken.add(q)
            return q


def sample_grid(bounds: Tuple[int, int], avoid: Sequence[BiPoly], rng: random.Random,
                attempts: int = 1000) -> Tuple[List[Fraction], List[Fraction]]:
    """A product grid of sizes ``bounds + 1`` on which no polynomial in ``avoid`` vanishes."""
    da, dz = bounds
    avoid = [p for p in avoid if not p.is_constant()]
    a_vals: List[Fraction] = []
    taken: set = set()
    tries = 0
    while len(a_vals) < da + 1:
        tries += 1
        if tries > attempts:
            raise VerificationError("pole-saturated grid: could not place the a-coordinates")
        a0 = _draw(rng, taken)
        if not any(_z_polynomial_vanishes(p, a0) for p in avoid):
            a_vals.append(a0)
    z_vals: List[Fraction] = []
    taken = set()
    tries = 0
    while len(z_vals) < dz + 1:
        tries += 1
        if tries > attempts:
            raise VerificationError("pole-saturated grid: could not place the z-coordinates")
        z0 = _draw(rng, taken)
        if all(p.eval(a0, z0) != 0 for p in avoid for a0 in a_vals):
            z_vals.append(z0)
    return a_vals, z_vals


def _verify_grid(entry, k, n_max, seed) -> List[VerificationReport]:
    family = entry.family(k)
    source = _sum_source(entry)
    rng = random.Random(f"{seed}:{entry.id}:{k}")
    out = []
    for n in range(1, n_max + 1):
        started = time.perf_counter()
        bounds, avoid = grid_bounds(entry, n, k)
        a_vals, z_vals = sample_grid(bounds, avoid, rng)
        fac = catalog.factor(source.id, n).to_fraction()
        claimed = catalog.rhs(source.id, n, k)
        bad = None
        for a0 in a_vals:
            for z0 in z_vals:
                raw = series_from_rho(family, _weights(entry, k, (a0, z0)), n)[n]
                if family.labeled:
                    raw = raw * factorial(n)
                lhs, rhs = fac * raw, ratfunc_eval(claimed, a0, z0)
                if lhs != rhs:
                    bad = ((a0, z0), lhs, rhs)
                    break
            if bad:
                break
        if bad is None:
            # the whole grid agrees, so lhs = rhs identically
            out.append(_report(report_id(entry, k), n, "grid", None, claimed, claimed, started))
        else:
            out.append(_report(report_id(entry, k), n, "grid", bad[0], bad[1], bad[2], started))
    return out


# -- public entry points --------------------------------------------------------------------


def verify(identity_id: str, n_max: int, mode: str = "dp",
           subst: Optional[Tuple[Fraction, Fraction]] = None, k: Optional[int] = None,
           seed: int = 0) -> List[VerificationReport]:
    """Check an entry for ``n = 1..n_max``; free-``k`` entries run for each k in 1..4 unless ``k`` is given."""
    entry = catalog.get(identity_id)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {', '.join(MODES)}, not {mode!r}")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if subst is not None:
        subst = (Fraction(subst[0]), Fraction(subst[1]))
        if mode == "grid":
            raise ValueError("grid mode chooses its own sample points; drop the substitution")
    out: List[VerificationReport] = []
    for kk in entry.ks(k):
        if mode == "enum":
            _check_ceiling(entry, kk, n_max)
    for kk in entry.ks(k):
        if mode == "dp":
            out.extend(_verify_dp(entry, kk, n_max, subst))
        elif mode == "enum":
            out.extend(_verify_enum(entry, kk, n_max, subst))
        elif mode == "series":
            out.extend(_verify_series(entry, kk, n_max, subst))
        else:
            out.extend(_verify_grid(entry, kk, n_max, seed))
    return sort_reports(out)


def link_id(link: SpecializationLink, k: Optional[int]) -> str:
    base = f"{link.source}->{link.target}"
    return base if k is None else f"{base}[k={k}]"


def _check_link(link: SpecializationLink, k, depth: int) -> List[VerificationReport]:
    source, target = catalog.get(link.source), catalog.get(link.target)
    sigma = {name: value for name, value in link.subst(k).items()}
    scale = Fraction(link.scale(k))
    tk = k if target.family_kind == source.family_kind else None
    rid = link_id(link, k)
    out = []
    for h in range(1, depth + 1):
        started = time.perf_counter()
        lhs = catalog.weight(source.id, h, k).subs(**sigma)
        rhs = scale * catalog.weight(target.id, h, tk)
        out.append(_report(rid, h, "link-weight", None, lhs, rhs, started))
    for n in range(1, depth + 1):
        started = time.perf_counter()
        source_sum = catalog.rhs(source.id, n, k).subs(**sigma) / catalog.factor(source.id, n)
        if link.adjoin_root:
            # a tree on n+1 labels: a root (n+1 choices, weight rho(n+1)) over a forest on n
            lhs = (n + 1) * catalog.weight(target.id, n + 1, tk) * source_sum
            rhs = catalog.rhs(target.id, n + 1, tk) / catalog.factor(target.id, n + 1)
        else:
            lhs = source_sum / scale ** n
            rhs = catalog.rhs(target.id, n, tk) / catalog.factor(target.id, n)
        out.append(_report(rid, n, "link-rhs", None, lhs, rhs, started))
    return out


def check_specializations(depth: int = LINK_DEPTH) -> List[VerificationReport]:
    """Every specialization link, on weights (``h <= depth``) and hook sums (``n <= depth``)."""
    out: List[VerificationReport] = []
    for link in LINKS:
        for k in link.ks:
            out.extend(_check_link(link, k, depth))
    return sort_reports(out)


def sort_reports(reports: Iterable[VerificationReport]) -> List[VerificationReport]:
    return sorted(reports, key=VerificationReport.sort_key)


def failures(reports: Iterable[VerificationReport]) -> List[VerificationReport]:
    return [r for r in reports if not r.passed]


def random_substitutions(identity_id: str, n_max: int, count: int, seed: int = 0,
                         k: Optional[int] = None) -> List[Tuple[Fraction, Fraction]]:
    """``count`` rational points at which no weight or right-hand side up to ``n_max`` has a pole."""
    entry = catalog.get(identity_id)
    source = _sum_source(entry)
    rng = random.Random(f"{seed}:{identity_id}:{k}")
    values = []
    for kk in entry.ks(k):
        values += [catalog.weight(entry.id, h, kk) for h in range(1, n_max + 1)]
        values += [catalog.rhs(source.id, n, kk) for n in range(1, n_max + 1)]
    points: List[Tuple[Fraction, Fraction]] = []
    while len(points) < count:
        p = (Fraction(rng.randint(-40, 40), rng.randint(1, 9)), Fraction(rng.randint(-40, 40), rng.randint(1, 9)))
        if p in points:
            continue
        try:
            for v in values:
                ratfunc_eval(v, *p)
        except PoleError:
            continue
        points.append(p)
    return points
