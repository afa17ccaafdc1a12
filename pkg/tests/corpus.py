"""Seeded random instances shared by the property and acceptance tests."""

import random
from itertools import combinations

from brokenset.graph import Hypergraph


def random_hypergraph(rng: random.Random, max_n: int = 7, max_m: int = 8) -> Hypergraph:
    n = rng.randint(2, max_n)
    candidates = [
        frozenset(c)
        for k in range(2, min(4, n) + 1)
        for c in combinations(range(n), k)
    ]
    m = rng.randint(0, min(max_m, len(candidates)))
    return Hypergraph(n, tuple(rng.sample(candidates, m)))


def random_graph(rng: random.Random, max_n: int = 8, max_m: int = 10) -> Hypergraph:
    n = rng.randint(1, max_n)
    candidates = list(combinations(range(n), 2))
    m = rng.randint(0, min(max_m, len(candidates)))
    return Hypergraph.from_edges(n, rng.sample(candidates, m))


def corpus(seed: int, hypergraphs: int, graphs: int):
    rng = random.Random(seed)
    hs = [random_hypergraph(rng) for _ in range(hypergraphs)]
    gs = [random_graph(rng) for _ in range(graphs)]
    return hs, gs
