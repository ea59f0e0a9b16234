"""Brute-force ground truth for heterochromatic spanning trees.

Everything here is exhaustive and deliberately independent of the matroid
intersection engine: transversal enumeration, the colour-deletion and
vertex-partition characterisations, and heterochromatic tree embedding.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import BudgetExceededError, InvalidInputError
from .graph import DisjointSet, EdgeColouredGraph, EdgeSet
from .trees import Tree

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
MAX_SUZUKI_COLOURS = 22
MAX_PARTITION_VERTICES = 10
MAX_EMBED_VERTICES = 10


@dataclass(frozen=True)
class EnumerationReport:
    exact_count: int
    search_space: int
    trees: tuple[EdgeSet, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "exact_count": self.exact_count,
            "search_space": self.search_space,
            "trees": [sorted(t) for t in self.trees],
        }


def _elementary_symmetric(values: list[int], k: int) -> int:
    """Sum over all k-subsets of the product of their values."""
    e = [1] + [0] * k
    for x in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * x
    return e[k]


def transversal_space(G: EdgeColouredGraph) -> int:
    """Number of heterochromatic edge sets of size ``num_vertices - 1``."""
    sizes = [len(c) for c in G.classes.values()]
    need = G.num_vertices - 1
    if len(sizes) == need:
        return math.prod(sizes)
    return _elementary_symmetric(sizes, need) if need <= len(sizes) else 0


def enumerate_heterochromatic_spanning_trees(
    G: EdgeColouredGraph, cap: int = 0, budget: int = DEFAULT_BUDGET
) -> EnumerationReport:
    """Count heterochromatic spanning trees exactly; keep the first ``cap`` found.

    With exactly ``num_vertices - 1`` colours this walks every transversal
    (one edge per class, smallest classes first), abandoning a branch as soon
    as the chosen edges close a cycle. With more colours it also chooses which
    colours to skip.
    """
    space = transversal_space(G)
    if space > budget:
        raise BudgetExceededError(f"search space {space} exceeds budget {budget}", search_space=space)
    need = G.num_vertices - 1
    classes = sorted(G.classes.values(), key=len)
    if len(classes) > need:
        logger.warning(
            "%d colours on %d vertices: enumerating colour subsets too (%d candidates)",
            len(classes), G.num_vertices, space,
        )
    if len(classes) < need:
        return EnumerationReport(0, 0)
    if need == 0:
        return EnumerationReport(1, 1, (frozenset(),) if cap > 0 else ())

    edges = [[(e, *G.endpoints(e)) for e in members] for members in classes]
    kept: list[EdgeSet] = []
    chosen: list[int] = []
    total_classes = len(edges)

    def walk(level: int, picked: int, comp: list[int]) -> int:
        count = 0
        skippable = total_classes - level - (need - picked)
        if picked == need - 1:
            # last edge: it only has to join the two remaining components
            for j in range(level, total_classes):
                for e, u, v in edges[j]:
                    if comp[u] != comp[v]:
                        count += 1
                        if len(kept) < cap:
                            kept.append(frozenset(chosen + [e]))
            return count
        for e, u, v in edges[level]:
            a, b = comp[u], comp[v]
            if a == b:
                continue
            chosen.append(e)
            count += walk(level + 1, picked + 1, [a if c == b else c for c in comp])
            chosen.pop()
        if skippable > 0:
            count += walk(level + 1, picked, comp)
        return count

    total = walk(0, 0, list(range(G.num_vertices)))
    return EnumerationReport(total, space, tuple(kept))


def suzuki_check(G: EdgeColouredGraph, max_colours: int = MAX_SUZUKI_COLOURS) -> bool:
    """Colour-deletion test: removing any ``r`` colours leaves at most ``r + 1`` components.

    ``r`` runs over ``0..num_vertices-2``; ``r = 0`` asks for connectivity.
    """
    k = G.num_colours
    if k > max_colours:
        raise BudgetExceededError(f"{k} colours exceeds the limit of {max_colours}", search_space=2**k)
    n = G.num_vertices
    colours = list(G.classes)
    for r in range(0, min(k, n - 2) + 1):
        for removed in combinations(colours, r):
            removed = set(removed)
            ds = DisjointSet(n)
            for u, v, c in G.edges:
                if c not in removed:
                    ds.union(u, v)
            if ds.count > r + 1:
                return False
    return True


def restricted_growth_strings(length: int) -> Iterator[list[int]]:
    """All set partitions of ``range(length)`` as restricted growth strings, in lexicographic order."""
    if length == 0:
        yield []
        return
    a = [0] * length
    maxes = [0] * length  # maxes[i] = max(a[0..i-1])
    while True:
        yield list(a)
        i = length - 1
        while i > 0 and a[i] > maxes[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, length):
            a[j] = 0
            maxes[j] = max(maxes[j - 1], a[j - 1])


def akbari_alipour_check(G: EdgeColouredGraph, max_vertices: int = MAX_PARTITION_VERTICES) -> bool:
    """Every partition into ``t`` parts has cross edges of at least ``t - 1`` colours."""
    n = G.num_vertices
    if n > max_vertices:
        raise BudgetExceededError(f"{n} vertices exceeds the partition limit of {max_vertices}")
    for rgs in restricted_growth_strings(n):
        t = max(rgs) + 1
        if t == 1:
            continue
        cross = {c for u, v, c in G.edges if rgs[u] != rgs[v]}
        if len(cross) < t - 1:
            return False
    return True


def heterochromatic_embedding(
    G: EdgeColouredGraph, T: Tree, max_vertices: int = MAX_EMBED_VERTICES
) -> list[int] | None:
    """Injective map ``tree vertex -> graph vertex`` whose image edges have distinct colours.

    Backtracks over images in BFS order from a highest-degree tree vertex,
    trying the rarest colours first.
    """
    n = G.num_vertices
    if T.num_vertices != n:
        raise InvalidInputError(f"tree has {T.num_vertices} vertices, graph has {n}")
    if not G.is_complete():
        raise InvalidInputError("embedding needs a complete host graph")
    if n > max_vertices:
        raise BudgetExceededError(f"{n} vertices exceeds the embedding limit of {max_vertices}")
    if n == 1:
        return [0]
    colour = [[0] * n for _ in range(n)]
    for u, v, c in G.edges:
        colour[u][v] = colour[v][u] = c
    # every colour appears exactly once when there are n - 1 colours, so scarce colours go first
    scarcity = {c: len(members) for c, members in G.classes.items()}
    choices = []
    for x in range(n):
        options = [(y, colour[x][y]) for y in range(n) if y != x]
        options.sort(key=lambda p: (scarcity[p[1]], p[0]))
        choices.append(options)
    degrees = T.degrees()
    root = max(range(n), key=lambda x: (degrees[x], -x))
    order, parent = T.bfs_order(root)
    image = [-1] * n
    taken = [False] * n
    used: set[int] = set()

    def place(pos: int) -> bool:
        if pos == n:
            return True
        x = order[pos]
        for y, c in choices[image[parent[x]]]:
            if taken[y] or c in used:
                continue
            image[x] = y
            taken[y] = True
            used.add(c)
            if place(pos + 1):
                return True
            used.discard(c)
            taken[y] = False
        image[x] = -1
        return False

    for start in range(n):
        image[root] = start
        taken[start] = True
        if place(1):
            return image
        taken[start] = False
    return None
