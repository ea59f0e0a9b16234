"""Generators for the named colouring families and the beautiful-colouring verifier."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import InvalidInputError
from .graph import NICE, EdgeColouredGraph, classify_colouring, is_acyclic, two_colouring
from .trees import Tree


@dataclass(frozen=True)
class Bipartition:
    V1: frozenset[int]
    V2: frozenset[int]

    def side(self, v: int) -> int:
        return 1 if v in self.V1 else 2

    def to_json(self) -> dict:
        return {"V1": sorted(self.V1), "V2": sorted(self.V2)}


def complete_edges(num_vertices: int) -> list[tuple[int, int]]:
    return list(combinations(range(num_vertices), 2))


def _from_blocks(num_vertices: int, pairs: Sequence[tuple[int, int]], sizes: Sequence[int]) -> EdgeColouredGraph:
    # consecutive blocks of `pairs` get colours 1, 2, ... with the given sizes
    assert sum(sizes) == len(pairs)
    colours = {}
    start = 0
    for colour, size in enumerate(sizes, start=1):
        for p in pairs[start : start + size]:
            colours[p] = colour
        start += size
    return EdgeColouredGraph.from_colour_map(num_vertices, colours)


def graceful_colouring(n: int) -> EdgeColouredGraph:
    """K_{n+1} on ``0..n`` with edge ``st`` coloured ``|t - s|``."""
    if n < 0:
        raise InvalidInputError(f"n must be >= 0, got {n}")
    return EdgeColouredGraph(n + 1, tuple((s, t, t - s) for s, t in complete_edges(n + 1)))


def stellar_colouring(n: int) -> EdgeColouredGraph:
    """Vertex ``i`` joins with a monochromatic star of colour ``i`` to ``0..i-1``."""
    if n < 0:
        raise InvalidInputError(f"n must be >= 0, got {n}")
    return EdgeColouredGraph(n + 1, tuple((s, t, t) for s, t in complete_edges(n + 1)))


def random_nice_colouring(n: int, seed: int = 0) -> EdgeColouredGraph:
    """Seeded random partition of E(K_{n+1}) into classes with ``|C_i| = i``."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    rng = random.Random(seed)
    pairs = complete_edges(n + 1)
    rng.shuffle(pairs)
    return _from_blocks(n + 1, pairs, range(1, n + 1))


def random_cute_colouring(n: int, seed: int = 0) -> EdgeColouredGraph:
    """Seeded random graph with ``1 + C(n,2)`` edges on ``n+1`` vertices, class sizes ``1, 1, 2, ..., n-1``."""
    if n < 2:
        raise InvalidInputError(f"n must be >= 2, got {n}")
    rng = random.Random(seed)
    pairs = rng.sample(complete_edges(n + 1), 1 + n * (n - 1) // 2)
    return _from_blocks(n + 1, pairs, [1] + list(range(1, n)))


def bipartite_nice_colouring(m: int, seed: int = 0) -> EdgeColouredGraph:
    """K_{m,m} on parts ``0..m-1`` and ``m..2m-1``, class sizes ``1, 1, 2, 2, ..., m-1, m-1, m``."""
    if m < 2:
        raise InvalidInputError(f"m must be >= 2, got {m}")
    rng = random.Random(seed)
    pairs = [(a, b) for a in range(m) for b in range(m, 2 * m)]
    rng.shuffle(pairs)
    sizes = [i for i in range(1, m) for _ in range(2)] + [m]
    return _from_blocks(2 * m, pairs, sizes)


def unique_tree_graph(T: Tree) -> EdgeColouredGraph:
    """Cute supergraph of ``T`` in which ``T`` is the only heterochromatic spanning tree.

    Vertices are ordered by BFS from vertex 0 so every prefix spans a subtree;
    with that order ``v_1..v_{n+1}`` and ``p(v)`` the earlier neighbour, the
    edges are all pairs among ``v_1..v_n`` plus the tree edge of ``v_{n+1}``.
    Colour 1 is ``{v_1 v_2}``; colour ``k >= 2`` is the tree edge of ``v_{k+1}``
    together with every non-tree pair ``v_i v_k`` with ``i < k``.
    """
    if T.num_vertices < 3:
        raise InvalidInputError("unique_tree_graph needs a tree on at least 3 vertices")
    order, parent = T.bfs_order(0)
    count = T.num_vertices
    n = count - 1
    v = [None] + order  # 1-based
    colours: dict[tuple[int, int], int] = {(v[1], v[2]): 1}
    for k in range(2, n + 1):
        colours[(v[k + 1], parent[v[k + 1]])] = k
        for i in range(1, k):
            if v[i] != parent[v[k]]:
                colours[(v[i], v[k])] = k
    return EdgeColouredGraph.from_colour_map(count, colours)


def size_indexed_classes(G: EdgeColouredGraph) -> dict[int, tuple[int, ...]]:
    """For a nice colouring, map ``i`` to the class with exactly ``i`` edges."""
    if NICE not in classify_colouring(G):
        raise InvalidInputError("colouring is not nice")
    return {len(members): members for members in G.classes.values()}


def _class_vertices(G: EdgeColouredGraph, members) -> set[int]:
    return {x for e in members for x in G.endpoints(e)}


def _check_conditions(G: EdgeColouredGraph, by_size: dict[int, tuple[int, ...]], B: Bipartition) -> bool:
    n = G.num_vertices - 1
    for i, members in by_size.items():
        if i % 2 == n % 2:
            verts = _class_vertices(G, members)
            if len(verts & B.V1) != len(verts) // 2 or len(verts & B.V2) != (len(verts) + 1) // 2:
                return False
        else:
            in_v1 = sum(1 for e in members if all(x in B.V1 for x in G.endpoints(e)))
            in_v2 = sum(1 for e in members if all(x in B.V2 for x in G.endpoints(e)))
            if in_v1 != i // 2 or in_v2 != (i + 1) // 2:
                return False
    return True


def verify_beautiful(G: EdgeColouredGraph) -> Bipartition | None:
    """Witness bipartition ``(V1, V2)`` if the nice colouring ``G`` is beautiful, else None.

    The classes ``C_i`` with ``i`` of the same parity as ``n`` must together
    form a complete bipartite graph on all vertices, so the only candidate
    bipartition is that graph's 2-colouring. When both sides have equal size
    each orientation is tried, the one putting vertex 0 in ``V2`` first.
    """
    by_size = size_indexed_classes(G)
    n = G.num_vertices - 1
    if not all(is_acyclic(G, members) for members in by_size.values()):
        return None
    designated = [e for i, members in by_size.items() if i % 2 == n % 2 for e in members]
    side = two_colouring(G.num_vertices, (G.endpoints(e) for e in designated))
    if side is None:
        return None
    A = frozenset(x for x in range(G.num_vertices) if side[x] == 0)
    Bset = frozenset(x for x in range(G.num_vertices) if side[x] == 1)
    # bipartite, simple and |A||B| edges means complete bipartite (and hence connected)
    if len(designated) != len(A) * len(Bset):
        return None
    big, small = (n + 2) // 2, (n + 1) // 2
    if len(A) == big and len(Bset) == small:
        candidates = [Bipartition(Bset, A)]
        if big == small:
            candidates.append(Bipartition(A, Bset))
    elif len(Bset) == big and len(A) == small:
        candidates = [Bipartition(A, Bset)]
    else:
        return None
    for B in candidates:
        if _check_conditions(G, by_size, B):
            return B
    return None
