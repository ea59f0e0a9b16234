"""Graphic and colour-partition matroids on E(G) and their intersection.

A heterochromatic forest is exactly a set independent in both matroids, so a
common independent set with ``num_vertices - 1`` elements is a
heterochromatic spanning tree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import BudgetExceededError, InvalidInputError
from .graph import (
    DisjointSet,
    EdgeColouredGraph,
    EdgeSet,
    check_edge_set,
    components_count,
    contained_classes_count,
    is_acyclic,
    is_heterochromatic,
)

EXHAUSTIVE_EDGE_LIMIT = 24


class GraphicMatroid:
    """Independent sets are the acyclic edge sets."""

    name = "graphic"

    def __init__(self, G: EdgeColouredGraph):
        self.G = G

    def is_independent(self, X: Iterable[int]) -> bool:
        return is_acyclic(self.G, X)

    def rank(self, X: Iterable[int]) -> int:
        return self.G.num_vertices - components_count(self.G, X)


class PartitionMatroid:
    """Independent sets hold at most one edge of each colour."""

    name = "partition"

    def __init__(self, G: EdgeColouredGraph):
        self.G = G

    def is_independent(self, X: Iterable[int]) -> bool:
        return is_heterochromatic(self.G, X)

    def rank(self, X: Iterable[int]) -> int:
        X = check_edge_set(self.G, X)
        return len({self.G.colour(e) for e in X})


def greedy_rank(matroid, X: Iterable[int]) -> int:
    """Rank by greedy augmentation, using only the independence oracle."""
    basis: list[int] = []
    for e in sorted(X):
        if matroid.is_independent(basis + [e]):
            basis.append(e)
    return len(basis)


def graphic_independent(G: EdgeColouredGraph, X: Iterable[int]) -> bool:
    return is_acyclic(G, X)


def partition_independent(G: EdgeColouredGraph, X: Iterable[int]) -> bool:
    return is_heterochromatic(G, X)


def graphic_rank(G: EdgeColouredGraph, X: Iterable[int]) -> int:
    """Rank of ``X`` in the graphic matroid: ``num_vertices - w(X)``."""
    return G.num_vertices - components_count(G, X)


def partition_corank(G: EdgeColouredGraph, X: Iterable[int]) -> int:
    """Partition-matroid rank of the complement ``E(G) - X``.

    Counted directly as the colours present outside ``X``; this always equals
    ``num_colours - c(X)``.
    """
    X = check_edge_set(G, X)
    return len({G.colour(e) for e in range(G.num_edges) if e not in X})


@dataclass(frozen=True)
class IntersectionResult:
    common_independent: EdgeSet
    certificate: EdgeSet | None = None

    @property
    def size(self) -> int:
        return len(self.common_independent)


def _augmenting_path(G: EdgeColouredGraph, current: set[int]) -> list[int] | None:
    """Shortest path in the exchange graph from the graphic-addable to the colour-addable edges."""
    n, m = G.num_vertices, G.num_edges
    inside = sorted(current)
    outside = [y for y in range(m) if y not in current]

    ds = DisjointSet(n)
    for x in inside:
        ds.union(*G.endpoints(x))
    used_colours = {G.colour(x) for x in inside}

    sources = [y for y in outside if ds.find(G.edges[y][0]) != ds.find(G.edges[y][1])]
    sinks = {y for y in outside if G.colour(y) not in used_colours}

    # arcs x -> y (x in I, y not in I) when I - x + y is acyclic
    adj: dict[int, list[int]] = {e: [] for e in range(m)}
    for x in inside:
        dx = DisjointSet(n)
        for x2 in inside:
            if x2 != x:
                dx.union(*G.endpoints(x2))
        for y in outside:
            u, v, _ = G.edges[y]
            if dx.find(u) != dx.find(v):
                adj[x].append(y)
    # arcs y -> x when I - x + y is heterochromatic
    for y in outside:
        cy = G.colour(y)
        for x in inside:
            if cy not in used_colours or G.colour(x) == cy:
                adj[y].append(x)

    parent: dict[int, int | None] = {}
    queue: deque[int] = deque()
    for s in sources:
        parent[s] = None
        queue.append(s)
    while queue:
        node = queue.popleft()
        if node in sinks:
            path = [node]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for nxt in adj[node]:
            if nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)
    return None


def max_common_independent(G: EdgeColouredGraph, certify: bool = False) -> IntersectionResult:
    """Maximum heterochromatic forest via augmenting paths in the exchange graph.

    Paths are shortest (BFS) with sources and neighbours visited in increasing
    edge index, so the result is a deterministic function of ``G``. With
    ``certify=True`` the brute-force minimiser from :func:`min_rank_cover` is
    attached and its value checked against the result size.
    """
    current: set[int] = set()
    while True:
        path = _augmenting_path(G, current)
        if path is None:
            break
        current.symmetric_difference_update(path)
    result = frozenset(current)
    if not certify:
        return IntersectionResult(result)
    X, value = min_rank_cover(G)
    if value != len(result):
        raise AssertionError(f"min-max mismatch: {len(result)} != {value}")
    return IntersectionResult(result, X)


def find_heterochromatic_spanning_tree(G: EdgeColouredGraph) -> EdgeSet | None:
    """A heterochromatic spanning tree of ``G``, or None if there is none."""
    common = max_common_independent(G).common_independent
    if len(common) == G.num_vertices - 1:
        return common
    return None


def _mask_edges(num_edges: int, limit: int) -> None:
    if num_edges > limit:
        raise BudgetExceededError(
            f"exhaustive check over 2^{num_edges} edge subsets exceeds the {limit}-edge limit",
            search_space=2**num_edges,
        )


def lemma1_condition_holds(
    G: EdgeColouredGraph, max_edges: int = EXHAUSTIVE_EDGE_LIMIT
) -> tuple[bool, EdgeSet | None]:
    """Check ``w(X) + c(X) <= num_vertices`` for every edge subset ``X``.

    Returns ``(True, None)`` or ``(False, X)`` with a violating ``X``.
    """
    n = G.num_vertices - 1
    if G.num_colours != n:
        raise InvalidInputError(f"need exactly {n} colours on {n + 1} vertices, got {G.num_colours}")
    _mask_edges(G.num_edges, max_edges)
    # Shrinking X to the union of the classes it contains keeps c(X) and can
    # only raise w(X), so unions of whole classes are the only candidates.
    classes = list(G.classes.values())
    for mask in range(1 << len(classes)):
        X = frozenset(e for i, cls in enumerate(classes) if mask >> i & 1 for e in cls)
        if components_count(G, X) + contained_classes_count(G, X) > n + 1:
            return False, X
    return True, None


def min_rank_cover(G: EdgeColouredGraph, max_edges: int = EXHAUSTIVE_EDGE_LIMIT) -> tuple[EdgeSet, int]:
    """Brute-force minimiser of ``r1(X) + r2(E - X)`` over all edge subsets ``X``."""
    m = G.num_edges
    _mask_edges(m, max_edges)
    n = G.num_vertices
    ends = [G.endpoints(e) for e in range(m)]
    colours = [G.colour(e) for e in range(m)]
    best_value, best_mask = None, 0
    for mask in range(1 << m):
        parent = list(range(n))
        r1 = 0
        outside_colours = set()
        for e in range(m):
            if mask >> e & 1:
                u, v = ends[e]
                while parent[u] != u:
                    u = parent[u]
                while parent[v] != v:
                    v = parent[v]
                if u != v:
                    parent[u] = v
                    r1 += 1
            else:
                outside_colours.add(colours[e])
        value = r1 + len(outside_colours)
        if best_value is None or value < best_value:
            best_value, best_mask = value, mask
    X = frozenset(e for e in range(m) if best_mask >> e & 1)
    return X, best_value
