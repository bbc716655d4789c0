import dataclasses
from fractions import Fraction

import pytest

from hooklength import catalog
from hooklength.exact import BiPoly, RatFunc
from hooklength.verify import (
    VerificationError,
    VerificationReport,
    check_specializations,
    failures,
    grid_bounds,
    parse_subst,
    random_substitutions,
    sort_reports,
    verify,
)

A, Z = RatFunc(BiPoly.var("a")), RatFunc(BiPoly.var("z"))


@pytest.fixture
def corrupted(monkeypatch):
    """postnikov-19 with a right-hand side that is wrong only from n = 4 on."""
    entry = catalog.get("postnikov-19")
    bad = dataclasses.replace(
        entry, rhs_rule=lambda n, k: entry.rhs_rule(n, k) + A * Z * (n - 1) * (n - 2) * (n - 3))
    monkeypatch.setitem(catalog.REGISTRY, "postnikov-19", bad)
    catalog.rhs.cache_clear()
    yield "postnikov-19"
    catalog.rhs.cache_clear()


def test_postnikov_dp():
    reports = verify("postnikov-19", 6)
    assert [r.n for r in reports] == [1, 2, 3, 4, 5, 6]
    assert all(r.passed and r.mode == "dp" for r in reports)
    assert reports[-1].rhs == 16807


def test_bernoulli_enum():
    reports = verify("pf-bernoulli", 5, "enum")
    assert all(r.passed for r in reports)
    assert reports[1].n == 2 and reports[1].lhs == RatFunc.const(Fraction(1, 6))


def test_kary18_single_vertex():
    (report,) = verify("kary-18", 1, k=3)
    assert report.id == "kary-18[k=3]"
    assert report.lhs == report.rhs == Z * A


def test_free_k_runs_every_k():
    ids = {r.id for r in verify("kary-18", 2)}
    assert ids == {f"kary-18[k={k}]" for k in (1, 2, 3, 4)}
    with pytest.raises(ValueError):
        verify("postnikov-19", 2, k=3)


@pytest.mark.parametrize("mode", ["dp", "enum", "series", "grid"])
def test_masters_in_every_mode(mode):
    for entry_id in ("kary-18", "pf-14", "f-25", "kary-20", "pf-30", "f-31"):
        n_max = 4 if mode in ("enum", "grid") else 6
        assert not failures(verify(entry_id, n_max, mode, k=2 if entry_id.startswith("kary") else None))


def test_substituted_dp():
    reports = verify("pf-14", 5, subst=(Fraction(1, 2), Fraction(3)))
    assert all(r.passed and r.subst == (Fraction(1, 2), 3) for r in reports)
    assert all(r.lhs.is_constant() for r in reports)


def test_corruption_detected(corrupted):
    for mode in ("dp", "grid", "series"):
        reports = verify(corrupted, 5, mode)
        assert [r.passed for r in reports] == [True, True, True, False, False], mode
    (bad,) = [r for r in verify(corrupted, 4, "grid") if not r.passed]
    assert bad.subst is not None and bad.lhs != bad.rhs


def test_grid_bounds_cover_degree():
    (da, dz), avoid = grid_bounds(catalog.get("f-25"), 4)
    # the plain rhs of f-25 at n=4 already has degree 4 in z
    assert da >= 4 and dz >= 4
    assert not failures(verify("f-25", 5, "grid", seed=3))


def test_errors():
    with pytest.raises(VerificationError):
        verify("lt-16", 8, "enum")
    with pytest.raises(ValueError):
        verify("lt-16", 3, "fast")
    with pytest.raises(ValueError):
        verify("lt-16", 0)
    with pytest.raises(ValueError):
        verify("f-25", 3, "grid", subst=(1, 2))
    with pytest.raises(KeyError):
        verify("eq-99", 3)


def test_parse_subst():
    assert parse_subst("a=1/2,z=3") == (Fraction(1, 2), 3)
    assert parse_subst("z=-2") == (0, -2)
    with pytest.raises(ValueError):
        parse_subst("b=1")
    with pytest.raises(ValueError):
        parse_subst("a")


def test_report_json_round_trip():
    reports = verify("kary-18", 3, k=2) + verify("f-25", 3, "enum", subst=(Fraction(-1, 3), Fraction(5, 2)))
    for r in reports:
        back = VerificationReport.from_json(r.to_json())
        assert back == r
        assert back.to_json() == r.to_json()
        assert set(r.to_dict()) == {"id", "n", "mode", "subst", "lhs", "rhs", "pass", "micros"}
    assert reports[-1].to_dict()["subst"] == {"a": "-1/3", "z": "5/2"}
    assert '"micros":0' in reports[0].to_json(timing=False)


def test_sorting_and_describe():
    reports = verify("lt-16", 3) + verify("f-38", 2) + verify("lt-16", 2, "enum")
    ordered = sort_reports(reversed(reports))
    assert [(r.id, r.mode, r.n) for r in ordered] == [
        ("f-38", "dp", 1), ("f-38", "dp", 2),
        ("lt-16", "dp", 1), ("lt-16", "dp", 2), ("lt-16", "dp", 3),
        ("lt-16", "enum", 1), ("lt-16", "enum", 2),
    ]
    assert ordered[0].describe() == "pass f-38 n=1 mode=dp: lhs=1 rhs=1"


def test_random_substitutions_avoid_poles():
    points = random_substitutions("pf-14", 6, 3, seed=1)
    assert len(set(points)) == 3
    for p in points:
        assert not failures(verify("pf-14", 6, "enum", subst=p))


def test_specializations():
    reports = check_specializations()
    assert not failures(reports)
    ids = {r.id.split("[")[0] for r in reports}
    assert len(ids) == 11
    assert "kary-18->han-37[k=2]" in {r.id for r in reports}
