"""Edge-coloured simple graphs and the component / contained-class statistics."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InvalidEdgeSetError, InvalidInputError

Edge = tuple[int, int, int]
EdgeSet = frozenset[int]

NICE = "nice"
CUTE = "cute"
BIPARTITE_NICE = "bipartite_nice"
BIPARTITE_CUTE = "bipartite_cute"
OTHER = "other"


class DisjointSet:
    """Union-find over ``range(n)`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


@dataclass(frozen=True)
class EdgeColouredGraph:
    """A simple graph on vertices ``0..num_vertices-1`` with a colour per edge.

    Edges are ``(u, v, colour)`` with ``u < v``; an edge is identified by its
    position in ``edges``. Colours must be exactly ``1..k`` with none unused.
    """

    num_vertices: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if not isinstance(self.num_vertices, int) or self.num_vertices < 1:
            raise InvalidInputError(f"num_vertices must be a positive integer, got {self.num_vertices!r}")
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        seen = set()
        for e in edges:
            if len(e) != 3 or not all(isinstance(x, int) and not isinstance(x, bool) for x in e):
                raise InvalidInputError(f"edge must be three integers, got {e!r}")
            u, v, c = e
            if not 0 <= u < v < self.num_vertices:
                raise InvalidInputError(f"edge {e!r} violates 0 <= u < v < {self.num_vertices}")
            if c < 1:
                raise InvalidInputError(f"colour must be >= 1, got {c}")
            if (u, v) in seen:
                raise InvalidInputError(f"duplicate edge {u}-{v}")
            seen.add((u, v))
        used = {c for _, _, c in edges}
        if used != set(range(1, len(used) + 1)):
            raise InvalidInputError(f"colours must be contiguous 1..k, got {sorted(used)}")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_colours(self) -> int:
        return len(self.classes)

    @cached_property
    def classes(self) -> dict[int, tuple[int, ...]]:
        """Map colour -> increasing tuple of edge indices."""
        out: dict[int, list[int]] = {}
        for i, (_, _, c) in enumerate(self.edges):
            out.setdefault(c, []).append(i)
        return {c: tuple(out[c]) for c in sorted(out)}

    @cached_property
    def _index(self) -> dict[tuple[int, int], int]:
        return {(u, v): i for i, (u, v, _) in enumerate(self.edges)}

    def colour(self, e: int) -> int:
        return self.edges[e][2]

    def endpoints(self, e: int) -> tuple[int, int]:
        u, v, _ = self.edges[e]
        return u, v

    def edge_index(self, u: int, v: int) -> int | None:
        if u > v:
            u, v = v, u
        return self._index.get((u, v))

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.classes.values()))

    def is_complete(self) -> bool:
        n = self.num_vertices
        return self.num_edges == n * (n - 1) // 2

    def subgraph(self, indices: Iterable[int]) -> EdgeColouredGraph:
        """Spanning subgraph keeping ``indices``; its edge ``j`` is the ``j``-th smallest kept index."""
        keep = sorted(check_edge_set(self, indices))
        return EdgeColouredGraph(self.num_vertices, tuple(self.edges[i] for i in keep))

    @classmethod
    def from_colour_map(cls, num_vertices: int, colours: Mapping[tuple[int, int], int]) -> EdgeColouredGraph:
        """Build from ``{(u, v): colour}``; edges are stored in lexicographic order."""
        edges = []
        for (u, v), c in colours.items():
            if u > v:
                u, v = v, u
            edges.append((u, v, c))
        edges.sort()
        return cls(num_vertices, tuple(edges))

    def to_json(self) -> dict:
        return {"vertices": self.num_vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: Mapping) -> EdgeColouredGraph:
        if not isinstance(data, Mapping):
            raise InvalidInputError("graph JSON must be an object")
        extra = set(data) - {"vertices", "edges"}
        if extra:
            raise InvalidInputError(f"unknown keys in graph JSON: {sorted(extra)}")
        if "vertices" not in data or "edges" not in data:
            raise InvalidInputError("graph JSON needs 'vertices' and 'edges'")
        if not isinstance(data["edges"], list):
            raise InvalidInputError("'edges' must be a list")
        for e in data["edges"]:
            if not isinstance(e, list):
                raise InvalidInputError(f"edge must be a list [u, v, colour], got {e!r}")
        return cls(data["vertices"], tuple(tuple(e) for e in data["edges"]))


def check_edge_set(G: EdgeColouredGraph, X: Iterable[int]) -> EdgeSet:
    """Return ``X`` as a frozenset after checking every index is an edge of ``G``."""
    X = frozenset(X)
    m = G.num_edges
    for e in X:
        if not isinstance(e, int) or not 0 <= e < m:
            raise InvalidEdgeSetError(f"edge index {e!r} out of range for {m} edges")
    return X


def components_count(G: EdgeColouredGraph, X: Iterable[int]) -> int:
    """Number of connected components of the spanning subgraph with edge set ``X``."""
    X = check_edge_set(G, X)
    ds = DisjointSet(G.num_vertices)
    for e in X:
        u, v, _ = G.edges[e]
        ds.union(u, v)
    return ds.count


def contained_classes_count(G: EdgeColouredGraph, X: Iterable[int]) -> int:
    """Number of colours whose whole class lies inside ``X``."""
    X = check_edge_set(G, X)
    return sum(1 for members in G.classes.values() if X.issuperset(members))


def is_heterochromatic(G: EdgeColouredGraph, X: Iterable[int]) -> bool:
    X = check_edge_set(G, X)
    return len({G.edges[e][2] for e in X}) == len(X)


def is_spanning_tree(G: EdgeColouredGraph, X: Iterable[int]) -> bool:
    X = check_edge_set(G, X)
    return len(X) == G.num_vertices - 1 and components_count(G, X) == 1


def is_acyclic(G: EdgeColouredGraph, X: Iterable[int]) -> bool:
    X = check_edge_set(G, X)
    ds = DisjointSet(G.num_vertices)
    return all(ds.union(*G.endpoints(e)) for e in X)


def two_colouring(num_vertices: int, pairs: Iterable[tuple[int, int]]) -> list[int] | None:
    """Proper 2-colouring, 0/1 per vertex; the smallest vertex of each component gets 0.

    Returns None when the graph has an odd cycle.
    """
    adj: list[list[int]] = [[] for _ in range(num_vertices)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    side = [-1] * num_vertices
    for s in range(num_vertices):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return None
    return side


@dataclass(frozen=True)
class ColouringClass:
    """Which of the named colouring definitions a graph satisfies."""

    verdicts: frozenset[str]
    sizes: tuple[int, ...]

    @property
    def verdict(self) -> str:
        """Single label; joins several with '+' in a fixed order when more than one holds."""
        order = [NICE, CUTE, BIPARTITE_NICE, BIPARTITE_CUTE, OTHER]
        return "+".join(v for v in order if v in self.verdicts)

    def __contains__(self, item: str) -> bool:
        return item in self.verdicts


def nice_sizes(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def cute_sizes(n: int) -> tuple[int, ...]:
    return tuple(sorted([1] + list(range(1, n))))


def bipartite_nice_sizes(m: int) -> tuple[int, ...]:
    return tuple(sorted([m] + [i for i in range(1, m) for _ in range(2)]))


def bipartite_cute_sizes(m: int) -> tuple[int, ...]:
    return tuple(sorted([1] + [i for i in range(1, m) for _ in range(2)]))


def _balanced_bipartition_exists(G: EdgeColouredGraph) -> bool:
    """True if G's vertices split into two halves of equal size with every edge crossing."""
    side = two_colouring(G.num_vertices, (G.endpoints(e) for e in range(G.num_edges)))
    if side is None or G.num_vertices % 2:
        return False
    ds = DisjointSet(G.num_vertices)
    for u, v, _ in G.edges:
        ds.union(u, v)
    # each component can be flipped independently: subset-sum over its (side0, side1) counts
    counts: dict[int, list[int]] = {}
    for x in range(G.num_vertices):
        counts.setdefault(ds.find(x), [0, 0])[side[x]] += 1
    half = G.num_vertices // 2
    reachable = {0}
    for a, b in counts.values():
        reachable = {r + a for r in reachable} | {r + b for r in reachable}
    return half in reachable


def _is_balanced_complete_bipartite(G: EdgeColouredGraph) -> bool:
    if G.num_vertices % 2:
        return False
    m = G.num_vertices // 2
    if G.num_edges != m * m:
        return False
    side = two_colouring(G.num_vertices, (G.endpoints(e) for e in range(G.num_edges)))
    # with m*m edges and a bipartition, the graph is K_{m,m} iff the sides have size m
    return side is not None and side.count(0) == m


def classify_colouring(G: EdgeColouredGraph) -> ColouringClass:
    sizes = G.class_sizes()
    n = G.num_vertices - 1
    verdicts = set()
    if G.is_complete() and sizes == nice_sizes(n):
        verdicts.add(NICE)
    if n >= 1 and G.num_edges == 1 + n * (n - 1) // 2 and sizes == cute_sizes(n):
        verdicts.add(CUTE)
    if G.num_vertices % 2 == 0:
        m = G.num_vertices // 2
        if sizes == bipartite_nice_sizes(m) and _is_balanced_complete_bipartite(G):
            verdicts.add(BIPARTITE_NICE)
        if (
            m >= 2
            and G.num_edges == 1 + m * (m - 1)
            and sizes == bipartite_cute_sizes(m)
            and _balanced_bipartition_exists(G)
        ):
            verdicts.add(BIPARTITE_CUTE)
    if not verdicts:
        verdicts.add(OTHER)
    return ColouringClass(frozenset(verdicts), sizes)
