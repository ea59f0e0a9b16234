"""Certified families of heterochromatic spanning trees for cute, nice and beautiful colourings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .colourings import Bipartition, size_indexed_classes, verify_beautiful
from .errors import ConsistencyError, InvalidInputError
from .graph import (
    CUTE,
    EdgeColouredGraph,
    EdgeSet,
    classify_colouring,
    is_heterochromatic,
    is_spanning_tree,
)
from .matroid import find_heterochromatic_spanning_tree

SIDES = ("V1", "V2")


@dataclass(frozen=True)
class TreeFamily:
    host: EdgeColouredGraph
    trees: tuple[EdgeSet, ...]
    provenance: tuple[dict, ...]

    def __len__(self) -> int:
        return len(self.trees)

    def to_json(self) -> dict:
        return {"trees": [sorted(t) for t in self.trees], "provenance": list(self.provenance)}


def _tree_in(G: EdgeColouredGraph, keep: list[int]) -> EdgeSet | None:
    """Heterochromatic spanning tree of the subgraph on ``keep``, as host edge indices."""
    keep = sorted(keep)
    sub = G.subgraph(keep)
    tree = find_heterochromatic_spanning_tree(sub)
    if tree is None:
        return None
    return frozenset(keep[j] for j in tree)


def _validate_family(G: EdgeColouredGraph, trees: list[EdgeSet]) -> None:
    for t in trees:
        if not (is_spanning_tree(G, t) and is_heterochromatic(G, t)):
            raise ConsistencyError(f"produced edge set {sorted(t)} is not a heterochromatic spanning tree")
    if len(set(trees)) != len(trees):
        raise ConsistencyError("family contains repeated trees")


def cute_tree(G: EdgeColouredGraph) -> EdgeSet:
    """A heterochromatic spanning tree of a cute colouring (one always exists)."""
    if CUTE not in classify_colouring(G):
        raise InvalidInputError("colouring is not cute")
    tree = find_heterochromatic_spanning_tree(G)
    if tree is None:
        raise ConsistencyError("cute colouring without a heterochromatic spanning tree")
    return tree


def nice_tree_family(G: EdgeColouredGraph) -> TreeFamily:
    """``ceil((n+1)/2) * floor((n+1)/2)`` distinct trees of a nice colouring.

    Let ``h = ceil((n+1)/2)``. For each edge ``e`` of the class of size ``h``
    we shrink that class to ``{e}`` and the largest class to an ``h``-subset
    ``W``, which leaves a cute colouring, and take its tree. Each new ``W`` is
    the lexicographically first ``h``-subset avoiding the largest-class edges
    of the trees already built for ``e``, so the trees differ.
    """
    by_size = size_indexed_classes(G)
    n = G.num_vertices - 1
    if n < 2:
        raise InvalidInputError("nice_tree_family needs n >= 2")
    h, per_edge = (n + 2) // 2, (n + 1) // 2
    pivot, largest = by_size[h], by_size[n]
    rest = [e for i, members in by_size.items() if i not in (h, n) for e in members]

    trees: list[EdgeSet] = []
    provenance: list[dict] = []
    for group, e in enumerate(pivot):
        avoided: list[int] = []
        for t in range(per_edge):
            if h == n:
                # n = 2: the pivot class is the largest one and {e} alone leaves a cute colouring
                W: list[int] = []
            else:
                W = [f for f in largest if f not in avoided][:h]
            order = sorted(rest + [e] + W)
            tree = frozenset(order[j] for j in cute_tree(G.subgraph(order)))
            f = None
            if W:
                (f,) = tree.intersection(W)
                avoided.append(f)
            trees.append(tree)
            provenance.append({"theorem": "nice", "group": group, "edge": e, "iteration": t, "largest_edge": f})
    _validate_family(G, trees)
    return TreeFamily(G, tuple(trees), tuple(provenance))


def free_classes(n: int) -> list[int]:
    """Class sizes whose edges are split between the two sides: ``i >= 2`` with ``i - n`` odd."""
    return [i for i in range(2, n + 1) if (i - n) % 2]


def _beautiful_selection(G: EdgeColouredGraph, B: Bipartition, choice) -> list[int]:
    by_size = size_indexed_classes(G)
    n = G.num_vertices - 1
    free = free_classes(n)
    if len(choice) != len(free):
        raise InvalidInputError(f"choice vector needs {len(free)} entries, got {len(choice)}")
    picks = dict(zip(free, choice))
    keep: list[int] = []
    for i, members in sorted(by_size.items()):
        if i not in picks:
            keep.extend(members)
            continue
        side = picks[i]
        if side not in SIDES:
            raise InvalidInputError(f"choice entries must be 'V1' or 'V2', got {side!r}")
        part = B.V1 if side == "V1" else B.V2
        inside = [e for e in members if all(x in part for x in G.endpoints(e))]
        if not inside:
            raise InvalidInputError(f"class of size {i} has no edge inside {side}; not a beautiful witness")
        keep.extend(inside)
    return keep


def beautiful_subgraph(G: EdgeColouredGraph, B: Bipartition, choice) -> EdgeColouredGraph:
    """Spanning subgraph keeping, for each free class, only its edges inside the chosen side."""
    if verify_beautiful(G) != B:
        raise InvalidInputError("bipartition is not the beautiful witness of this colouring")
    return G.subgraph(_beautiful_selection(G, B, choice))


def beautiful_tree_family(G: EdgeColouredGraph) -> TreeFamily:
    """One heterochromatic spanning tree per choice vector: ``2 ** floor((n-1)/2)`` in total."""
    B = verify_beautiful(G)
    if B is None:
        raise InvalidInputError("colouring is not beautiful")
    n = G.num_vertices - 1
    if n < 2:
        raise InvalidInputError("beautiful_tree_family needs n >= 2")
    trees: list[EdgeSet] = []
    provenance: list[dict] = []
    for choice in itertools.product(SIDES, repeat=len(free_classes(n))):
        tree = _tree_in(G, _beautiful_selection(G, B, choice))
        if tree is None:
            raise ConsistencyError(f"no heterochromatic spanning tree for choice {choice}")
        trees.append(tree)
        provenance.append({"theorem": "beautiful", "choice": list(choice)})
    _validate_family(G, trees)
    return TreeFamily(G, tuple(trees), tuple(provenance))
