"""Independent brute-force references and random instance builders for tests.

Nothing here calls the package's search code; the references use plain
combinations and DFS so they stay independent of the paths they check.
"""

import random
from itertools import combinations

from heterotree.graph import EdgeColouredGraph


def dfs_components(num_vertices, pairs):
    adj = {v: [] for v in range(num_vertices)}
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    seen, comps = set(), 0
    for s in range(num_vertices):
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return comps


def has_cycle(num_vertices, pairs):
    # a forest has exactly |V| - |E| components
    return dfs_components(num_vertices, pairs) != num_vertices - len(pairs)


def brute_rainbow_trees(G):
    """All heterochromatic spanning trees by checking every (|V|-1)-subset of edges."""
    n = G.num_vertices
    out = []
    for S in combinations(range(G.num_edges), n - 1):
        if len({G.edges[e][2] for e in S}) != n - 1:
            continue
        if dfs_components(n, [G.edges[e][:2] for e in S]) == 1:
            out.append(frozenset(S))
    return out


def brute_max_common(G):
    """Largest acyclic heterochromatic edge set, by decreasing-size search."""
    n = G.num_vertices
    for k in range(min(n - 1, G.num_colours), -1, -1):
        for S in combinations(range(G.num_edges), k):
            pairs = [G.edges[e][:2] for e in S]
            if len({G.edges[e][2] for e in S}) == k and not has_cycle(n, pairs):
                return k
    return 0


def recolour_contiguous(num_vertices, triples):
    used = sorted({c for _, _, c in triples})
    remap = {c: i + 1 for i, c in enumerate(used)}
    return EdgeColouredGraph(num_vertices, tuple(sorted((u, v, remap[c]) for u, v, c in triples)))


def random_coloured_graph(rng, max_vertices, max_colours, connected=True, max_edges=None, min_vertices=2):
    """Random simple graph with random colours remapped to 1..k."""
    n = rng.randint(min_vertices, max_vertices)
    all_pairs = list(combinations(range(n), 2))
    limit = len(all_pairs) if max_edges is None else min(max_edges, len(all_pairs))
    pairs = set()
    if connected:
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            a, b = order[i], order[rng.randrange(i)]
            pairs.add((min(a, b), max(a, b)))
    lo = len(pairs)
    target = rng.randint(max(lo, 1 if limit else 0), max(lo, limit))
    rest = [p for p in all_pairs if p not in pairs]
    rng.shuffle(rest)
    pairs.update(rest[: max(0, target - len(pairs))])
    k = rng.randint(1, max_colours)
    triples = [(u, v, rng.randint(1, k)) for u, v in sorted(pairs)]
    return recolour_contiguous(n, triples)


def random_n_colour_graph(rng, max_vertices, max_edges):
    """Random graph on n+1 vertices using exactly n colours (when it has >= n edges)."""
    while True:
        n1 = rng.randint(2, max_vertices)
        all_pairs = list(combinations(range(n1), 2))
        m = rng.randint(n1 - 1, min(max_edges, len(all_pairs)))
        pairs = rng.sample(all_pairs, m)
        colours = list(range(1, n1)) + [rng.randint(1, n1 - 1) for _ in range(m - (n1 - 1))]
        rng.shuffle(colours)
        return EdgeColouredGraph(n1, tuple(sorted((u, v, c) for (u, v), c in zip(pairs, colours))))


def rng_for(*key):
    return random.Random(repr(key))
