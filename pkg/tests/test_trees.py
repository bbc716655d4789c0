from collections import Counter
from itertools import product

import pytest

from hooklength.trees import (
    BINARY,
    LABELED_FORESTS,
    LABELED_TREES,
    PLANE_FORESTS,
    PLANE_TREES,
    Tree,
    TreeFamily,
    enumerate_family,
    encode,
    expected_count,
    hook_multiset,
    increasing_labelings,
    parse_family,
    prufer_codec,
    prufer_decode,
    prufer_encode,
)
from hooklength.exact import double_factorial

FAMILIES = [TreeFamily.kary(k) for k in (1, 2, 3, 4)] + [PLANE_TREES, PLANE_FORESTS, LABELED_TREES, LABELED_FORESTS]

# the six-vertex example: a root over a 3-vertex chain and two leaves
FIGURE_TREE = Tree(PLANE_TREES, ((((),),), (), ()))


def sizes(family):
    top = 6 if family == LABELED_FORESTS else 7
    return range(family.min_size, top + 1)


@pytest.mark.parametrize("family", FAMILIES, ids=str)
def test_counts_and_no_duplicates(family):
    for n in sizes(family):
        codes = [encode(t) for t in enumerate_family(family, n)]
        assert len(codes) == expected_count(family, n)
        assert len(set(codes)) == len(codes)


def test_count_examples():
    assert sum(1 for _ in enumerate_family(BINARY, 3)) == 5
    assert sum(1 for _ in enumerate_family(TreeFamily.kary(3), 3)) == 12
    assert sum(1 for _ in enumerate_family(LABELED_TREES, 3)) == 9
    assert sum(1 for _ in enumerate_family(LABELED_FORESTS, 2)) == 3
    assert sum(1 for _ in enumerate_family(PLANE_FORESTS, 3)) == 5


def test_invalid_sizes_and_families():
    with pytest.raises(ValueError):
        list(enumerate_family(PLANE_TREES, 0))
    with pytest.raises(ValueError):
        TreeFamily.kary(0)
    with pytest.raises(ValueError):
        TreeFamily("plane-tree", 2)
    with pytest.raises(ValueError):
        parse_family("kary")
    assert parse_family("binary") == BINARY


@pytest.mark.parametrize("family", FAMILIES, ids=str)
def test_hook_multiset_structure(family):
    for n in sizes(family):
        if n == 0:
            continue
        for t in enumerate_family(family, n):
            hooks = hook_multiset(t)
            assert len(hooks) == n
            assert all(1 <= h <= n for h in hooks)
            if not family.is_forest:
                assert hooks.count(n) == 1


def test_forest_roots_carry_component_sizes():
    for t in enumerate_family(LABELED_FORESTS, 5):
        parents = t.data
        roots = [v for v, p in enumerate(parents, start=1) if p == 0]
        comp = Counter()
        for v in range(1, 6):
            u = v
            while parents[u - 1]:
                u = parents[u - 1]
            comp[u] += 1
        hooks = Counter(hook_multiset(t))
        for r in roots:
            assert hooks[comp[r]] >= 1
        assert sum(comp.values()) == 5


def test_hook_examples():
    assert hook_multiset(FIGURE_TREE) == (1, 1, 1, 2, 3, 6)
    assert increasing_labelings(FIGURE_TREE) == 20
    assert hook_multiset(Tree(PLANE_TREES, ())) == (1,)
    path = Tree(PLANE_TREES, (((),),))
    assert hook_multiset(path) == (1, 2, 3)
    assert increasing_labelings(path) == 1
    cherry = Tree(PLANE_TREES, ((), ()))
    assert increasing_labelings(cherry) == 2


def test_encodings():
    assert encode(Tree(BINARY, (None, (None, None)))) == "(_,(_,_))"
    assert encode(FIGURE_TREE) == "(((()))()())"
    assert encode(Tree(PLANE_FORESTS, ((), ((),)))) == "()(())"
    assert encode(Tree(LABELED_TREES, (0, 1, 1))) == "0,1,1"
    assert [encode(t) for t in enumerate_family(PLANE_TREES, 3)] == ["((()))", "(()())"]


@pytest.mark.parametrize("n", range(1, 8))
def test_increasing_plane_trees(n):
    total = sum(increasing_labelings(t) for t in enumerate_family(PLANE_TREES, n))
    assert total == double_factorial(2 * n - 3)


def test_prufer_examples():
    assert prufer_decode((), 2) == [(1, 2)]
    trees = {frozenset(frozenset(e) for e in prufer_decode(s, 4)) for s in product(range(1, 5), repeat=2)}
    assert len(trees) == 16


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_prufer_round_trip(n):
    for seq in product(range(1, n + 1), repeat=n - 2):
        edges = prufer_codec("decode", seq, n)
        assert len(edges) == n - 1
        assert prufer_codec("encode", edges, n) == seq


def test_prufer_errors():
    with pytest.raises(ValueError):
        prufer_decode((5,), 3)
    with pytest.raises(ValueError):
        prufer_decode((1, 1), 3)
    with pytest.raises(ValueError):
        prufer_codec("sideways", (), 2)


def test_enumeration_order_is_stable():
    first = [encode(t) for t in enumerate_family(LABELED_FORESTS, 3)]
    second = [encode(t) for t in enumerate_family(LABELED_FORESTS, 3)]
    assert first == second
