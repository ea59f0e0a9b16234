"""Labelled trees, Prüfer sequences and tree sampling."""

from __future__ import annotations

import heapq
import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .errors import InvalidInputError
from .graph import DisjointSet


@dataclass(frozen=True)
class Tree:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = self.num_vertices
        if not isinstance(n, int) or n < 1:
            raise InvalidInputError(f"a tree needs at least one vertex, got {n!r}")
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        object.__setattr__(self, "edges", edges)
        if len(edges) != n - 1:
            raise InvalidInputError(f"a tree on {n} vertices has {n - 1} edges, got {len(edges)}")
        ds = DisjointSet(n)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InvalidInputError(f"bad tree edge {u}-{v}")
            if not ds.union(u, v):
                raise InvalidInputError("tree edges contain a cycle")

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def bfs_order(self, root: int = 0) -> tuple[list[int], list[int | None]]:
        """Vertices in BFS order from ``root`` (neighbours ascending) and each one's parent."""
        adj = self.adjacency()
        parent: list[int | None] = [None] * self.num_vertices
        seen = [False] * self.num_vertices
        seen[root] = True
        order = []
        queue = deque([root])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    queue.append(y)
        return order, parent

    def to_prufer(self) -> list[int]:
        n = self.num_vertices
        if n <= 2:
            return []
        adj = [set(a) for a in self.adjacency()]
        leaves = [v for v in range(n) if len(adj[v]) == 1]
        heapq.heapify(leaves)
        seq = []
        for _ in range(n - 2):
            leaf = heapq.heappop(leaves)
            (nb,) = adj[leaf]
            seq.append(nb)
            adj[nb].discard(leaf)
            adj[leaf].clear()
            if len(adj[nb]) == 1:
                heapq.heappush(leaves, nb)
        return seq

    @classmethod
    def from_prufer(cls, seq: Sequence[int], num_vertices: int | None = None) -> Tree:
        n = len(seq) + 2 if num_vertices is None else num_vertices
        if n < 1 or (n >= 2 and len(seq) != n - 2) or (n == 1 and seq):
            raise InvalidInputError(f"Prüfer sequence of length {len(seq)} does not fit {n} vertices")
        if n == 1:
            return cls(1, ())
        if any(not isinstance(x, int) or not 0 <= x < n for x in seq):
            raise InvalidInputError(f"Prüfer entries must lie in 0..{n - 1}")
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        leaves = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(leaves)
        edges = []
        for x in seq:
            leaf = heapq.heappop(leaves)
            edges.append((leaf, x))
            degree[x] -= 1
            if degree[x] == 1:
                heapq.heappush(leaves, x)
        edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
        return cls(n, tuple(edges))

    def to_json(self) -> dict:
        return {"vertices": self.num_vertices, "tree_edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: Mapping) -> Tree:
        if not isinstance(data, Mapping):
            raise InvalidInputError("tree JSON must be an object")
        keys = set(data)
        if keys == {"prufer"} or keys == {"prufer", "vertices"}:
            if not isinstance(data["prufer"], list):
                raise InvalidInputError("'prufer' must be a list")
            return cls.from_prufer(data["prufer"], data.get("vertices"))
        if keys == {"vertices", "tree_edges"}:
            edges = data["tree_edges"]
            if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
                raise InvalidInputError("'tree_edges' must be a list of [u, v] pairs")
            return cls(data["vertices"], tuple(tuple(e) for e in edges))
        raise InvalidInputError(f"unrecognised tree JSON keys: {sorted(keys)}")


def random_tree(num_vertices: int, rng: random.Random) -> Tree:
    """Uniform labelled tree via a uniform Prüfer sequence."""
    if num_vertices <= 2:
        return Tree.from_prufer([], num_vertices)
    return Tree.from_prufer([rng.randrange(num_vertices) for _ in range(num_vertices - 2)])


def all_trees(num_vertices: int) -> Iterator[Tree]:
    """Every labelled tree on ``num_vertices`` vertices, one per Prüfer sequence."""
    if num_vertices <= 2:
        yield Tree.from_prufer([], num_vertices)
        return
    for seq in itertools.product(range(num_vertices), repeat=num_vertices - 2):
        yield Tree.from_prufer(seq)


def star(num_vertices: int, centre: int = 0) -> Tree:
    return Tree(num_vertices, tuple((centre, v) for v in range(num_vertices) if v != centre))


def path(num_vertices: int) -> Tree:
    return Tree(num_vertices, tuple((i, i + 1) for i in range(num_vertices - 1)))
