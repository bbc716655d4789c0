"""Brute-force enumeration of the five tree families and their hook lengths.

Ordered families are nested tuples: a k-ary node is a tuple of exactly k
slots (``None`` marks an empty slot), a plane-tree node is the tuple of its
children, and a plane forest is a tuple of plane trees. Labeled families
are parent arrays ``(p_1, ..., p_n)`` over vertices ``1..n`` with ``0``
marking a root. Labeled trees are rooted; labeled forests are forests of
rooted trees.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterator, List, Optional, Sequence, Tuple

KARY = "kary"
PLANE_TREE = "plane-tree"
PLANE_FOREST = "plane-forest"
LABELED_TREE = "labeled-tree"
LABELED_FOREST = "labeled-forest"

KINDS = (KARY, PLANE_TREE, PLANE_FOREST, LABELED_TREE, LABELED_FOREST)

# default enumeration ceilings (largest n) per family kind
CEILINGS = {KARY: 8, PLANE_TREE: 8, PLANE_FOREST: 8, LABELED_TREE: 7, LABELED_FOREST: 6}


@dataclass(frozen=True)
class TreeFamily:
    kind: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown tree family {self.kind!r}")
        if self.kind == KARY:
            if self.k is None or self.k < 1:
                raise ValueError("k-ary trees need k >= 1")
        elif self.k is not None:
            raise ValueError(f"{self.kind} takes no k parameter")

    @classmethod
    def kary(cls, k: int) -> "TreeFamily":
        return cls(KARY, k)

    @property
    def labeled(self) -> bool:
        return self.kind in (LABELED_TREE, LABELED_FOREST)

    @property
    def is_forest(self) -> bool:
        return self.kind in (PLANE_FOREST, LABELED_FOREST)

    @property
    def min_size(self) -> int:
        return 1 if self.kind in (PLANE_TREE, LABELED_TREE) else 0

    @property
    def ceiling(self) -> int:
        return CEILINGS[self.kind]

    def __str__(self):
        return f"kary(k={self.k})" if self.kind == KARY else self.kind


BINARY = TreeFamily.kary(2)
PLANE_TREES = TreeFamily(PLANE_TREE)
PLANE_FORESTS = TreeFamily(PLANE_FOREST)
LABELED_TREES = TreeFamily(LABELED_TREE)
LABELED_FORESTS = TreeFamily(LABELED_FOREST)


def parse_family(name: str, k: Optional[int] = None) -> TreeFamily:
    name = name.lower()
    if name == "binary":
        if k not in (None, 2):
            raise ValueError("binary trees have k = 2")
        return BINARY
    if name in ("kary", "k-ary"):
        if k is None:
            raise ValueError("k-ary family needs --k")
        return TreeFamily.kary(k)
    return TreeFamily(name)


@dataclass(frozen=True)
class Tree:
    """A member of a tree family; ``data`` is the nested-tuple or parent-array payload."""

    family: TreeFamily
    data: object

    @property
    def size(self) -> int:
        return len(hook_multiset(self))

    def encode(self) -> str:
        return encode(self)


# -- ordered families ------------------------------------------------------------


def _compositions(total: int, parts: int, positive: bool) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    lo = 1 if positive else 0
    for first in range(lo, total + 1):
        for rest in _compositions(total - first, parts - 1, positive):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _kary(k: int, n: int) -> Tuple:
    if n == 0:
        return (None,)
    out = []
    for sizes in _compositions(n - 1, k, positive=False):
        for kids in product(*(_kary(k, m) for m in sizes)):
            out.append(kids)
    return tuple(out)


@lru_cache(maxsize=None)
def _plane_trees(n: int) -> Tuple:
    return tuple(tuple(forest) for forest in _plane_forests(n - 1))


@lru_cache(maxsize=None)
def _plane_forests(n: int) -> Tuple:
    out = []
    for r in range(1 if n else 0, n + 1):
        for sizes in _compositions(n, r, positive=True):
            for trees in product(*(_plane_trees(m) for m in sizes)):
                out.append(trees)
    return tuple(out)


# -- labeled families ------------------------------------------------------------


def prufer_decode(seq: Sequence[int], n: int) -> List[Tuple[int, int]]:
    """Edges of the labeled tree on ``[n]`` with Prüfer sequence ``seq``."""
    if n < 2:
        raise ValueError("Prüfer sequences describe trees on n >= 2 vertices")
    if len(seq) != n - 2:
        raise ValueError(f"sequence for n={n} must have length {n - 2}")
    if any(not 1 <= v <= n for v in seq):
        raise ValueError(f"sequence entries must lie in 1..{n}")
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def prufer_encode(edges: Sequence[Tuple[int, int]], n: int) -> Tuple[int, ...]:
    """Prüfer sequence of a spanning tree on ``[n]`` given by its edges."""
    if len(edges) != n - 1:
        raise ValueError("a spanning tree on n vertices has n - 1 edges")
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u}, {v}) leaves 1..{n}")
        adj[u].add(v)
        adj[v].add(u)
    leaves = [v for v in adj if len(adj[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (nbr,) = adj[leaf]
        seq.append(nbr)
        adj[nbr].discard(leaf)
        adj[leaf].clear()
        if len(adj[nbr]) == 1:
            heapq.heappush(leaves, nbr)
    return tuple(seq)


def prufer_codec(direction: str, payload, n: int):
    """``decode``: sequence -> edge list; ``encode``: edge list -> sequence."""
    if direction == "decode":
        return prufer_decode(payload, n)
    if direction == "encode":
        return prufer_encode(payload, n)
    raise ValueError(f"direction must be 'encode' or 'decode', not {direction!r}")


def _root_at(edges: Sequence[Tuple[int, int]], n: int, root: int) -> Tuple[int, ...]:
    adj = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = [0] * (n + 1)
    seen = [False] * (n + 1)
    seen[root] = True
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                queue.append(v)
    return tuple(parent[1:])


def _cayley_trees(n: int) -> Iterator[List[Tuple[int, int]]]:
    if n == 2:
        yield [(1, 2)]
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(seq, n)


def _labeled_trees(n: int) -> Iterator[Tuple[int, ...]]:
    if n == 1:
        yield (0,)
        return
    for edges in _cayley_trees(n):
        for root in range(1, n + 1):
            yield _root_at(edges, n, root)


def _labeled_forests(n: int) -> Iterator[Tuple[int, ...]]:
    # forests on [n] <-> trees on [n+1] rooted at the extra vertex n+1
    if n == 0:
        yield ()
        return
    for edges in _cayley_trees(n + 1):
        parents = _root_at(edges, n + 1, n + 1)
        yield tuple(0 if p == n + 1 else p for p in parents[:n])


# -- public interface --------------------------------------------------------------


def enumerate_family(family: TreeFamily, n: int) -> Iterator[Tree]:
    """Every member of ``family`` with ``n`` vertices, each exactly once, in a fixed order."""
    if n < family.min_size:
        raise ValueError(f"{family} has no members with n={n}")
    if family.kind == KARY:
        source = _kary(family.k, n)
    elif family.kind == PLANE_TREE:
        source = _plane_trees(n)
    elif family.kind == PLANE_FOREST:
        source = _plane_forests(n)
    elif family.kind == LABELED_TREE:
        source = _labeled_trees(n)
    else:
        source = _labeled_forests(n)
    for data in source:
        yield Tree(family, data)


def _ordered_hooks(node, out: List[int]) -> int:
    size = 1
    for child in node:
        if child is not None:
            size += _ordered_hooks(child, out)
    out.append(size)
    return size


def _parent_hooks(parents: Sequence[int]) -> List[int]:
    n = len(parents)
    children = [[] for _ in range(n + 1)]
    roots = []
    for v, p in enumerate(parents, start=1):
        if p == 0:
            roots.append(v)
        else:
            children[p].append(v)
    size = [1] * (n + 1)
    order = []
    stack = list(roots)
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(children[u])
    if len(order) != n:
        raise ValueError("parent array contains a cycle")
    for u in reversed(order):
        p = parents[u - 1]
        if p:
            size[p] += size[u]
    return size[1:]


def hook_multiset(t: Tree) -> Tuple[int, ...]:
    """Sorted subtree sizes, one per vertex."""
    kind = t.family.kind
    hooks: List[int] = []
    if kind == KARY:
        if t.data is not None:
            _ordered_hooks(t.data, hooks)
    elif kind == PLANE_TREE:
        _ordered_hooks(t.data, hooks)
    elif kind == PLANE_FOREST:
        for tree in t.data:
            _ordered_hooks(tree, hooks)
    else:
        hooks = _parent_hooks(t.data)
    return tuple(sorted(hooks))


def increasing_labelings(t: Tree) -> int:
    """Number of labelings by ``1..n`` increasing away from the roots: ``n! / prod(hooks)``."""
    hooks = hook_multiset(t)
    count, rem = divmod(factorial(len(hooks)), prod(hooks))
    assert rem == 0, f"n!/prod(h) is not integral for {encode(t)}"
    return count


def _encode_kary(node) -> str:
    if node is None:
        return "_"
    return "(" + ",".join(_encode_kary(c) for c in node) + ")"


def _encode_plane(node) -> str:
    return "(" + "".join(_encode_plane(c) for c in node) + ")"


def encode(t: Tree) -> str:
    """Canonical text form (see README for the grammar of each family)."""
    kind = t.family.kind
    if kind == KARY:
        return _encode_kary(t.data)
    if kind == PLANE_TREE:
        return _encode_plane(t.data)
    if kind == PLANE_FOREST:
        return "".join(_encode_plane(c) for c in t.data)
    return ",".join(str(p) for p in t.data)


# -- closed-form counts, used as cross-checks ------------------------------------


def catalan(n: int) -> int:
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))


def expected_count(family: TreeFamily, n: int) -> int:
    kind = family.kind
    if kind == KARY:
        k = family.k
        return factorial(k * n + 1) // (factorial(n) * factorial(k * n + 1 - n)) // (k * n + 1)
    if kind == PLANE_TREE:
        return catalan(n - 1)
    if kind == PLANE_FOREST:
        return catalan(n)
    if kind == LABELED_TREE:
        return n ** (n - 1)
    return (n + 1) ** (n - 1) if n else 1
