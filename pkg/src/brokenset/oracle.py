"""Brute-force ground truth, kept apart from the inclusion-exclusion code."""

from __future__ import annotations

from itertools import combinations, product

from brokenset.graph import Hypergraph
from brokenset.subsets import SizeLimitError

ORACLE_VERTEX_LIMIT = 10
SET_VERTEX_LIMIT = 20


def count_proper_colorings(h: Hypergraph, k: int, *, limit: int = ORACLE_VERTEX_LIMIT) -> int:
    """Colorings with ``k`` colors in which no edge is monochromatic."""
    if h.n > limit:
        raise SizeLimitError(h.n, limit, "vertex set")
    edges = [tuple(e) for e in h.edges]
    count = 0
    for colors in product(range(k), repeat=h.n):
        if all(len({colors[v] for v in e}) > 1 for e in edges):
            count += 1
    return count


def _plain_edges(g: Hypergraph, limit: int) -> list[tuple[int, int]]:
    if not g.is_graph:
        raise ValueError("set counts are defined here for ordinary graphs only")
    if g.n > limit:
        raise SizeLimitError(g.n, limit, "vertex set")
    return [tuple(sorted(e)) for e in g.edges]


def independent_set_counts(g: Hypergraph, *, limit: int = SET_VERTEX_LIMIT) -> list[int]:
    edges = _plain_edges(g, limit)
    counts = [0] * (g.n + 1)
    for size in range(g.n + 1):
        for w in combinations(range(g.n), size):
            s = set(w)
            if not any(u in s and v in s for u, v in edges):
                counts[size] += 1
    return counts


def dominating_set_counts(g: Hypergraph, *, limit: int = SET_VERTEX_LIMIT) -> list[int]:
    edges = _plain_edges(g, limit)
    nbrs = {v: {v} for v in range(g.n)}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    everything = set(range(g.n))
    counts = [0] * (g.n + 1)
    for size in range(g.n + 1):
        for w in combinations(range(g.n), size):
            dominated = set()
            for v in w:
                dominated |= nbrs[v]
            if dominated == everything:
                counts[size] += 1
    return counts
