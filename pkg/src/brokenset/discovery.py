"""Finding broken pairs from the structure of a graph.

For each target element ``b`` a broken set is a minimal ``B`` (not containing
``b``) whose term already absorbs ``b``:

* chromatic: ``c(B) == c(B + b)``, i.e. the vertices of ``b`` lie in one
  component of ``(V, B)``;
* independence: the endpoints of ``b`` are covered by the edges of ``B``;
* domination (vertex universe): ``N[b]`` is inside ``N[B]``.

All three conditions are upward closed in ``B``, which is what makes each pair
``(B, {b})`` absorbing for every superset of ``B`` and lets the search prune
supersets of sets already found.  The ordering-based classes (broken cycles,
broken neighbourhoods, broken sets with respect to an order) live here too.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Literal, Sequence

from brokenset.engine import BrokenPair, CancellationFamily, OrderedFamily, excluded_sets
from brokenset.graph import Hypergraph, UnionFind, component_count
from brokenset.subsets import check_limit, indices, mask_of, popcount

PolynomialKind = Literal["chromatic", "independence", "domination"]
MethodTag = Literal[
    "chromatic", "independence", "domination", "broken_cycle", "broken_neighbourhood"
]


@dataclass(frozen=True)
class DiscoveryReport:
    pairs: CancellationFamily
    excluded_count: int
    method_tag: str
    class_sizes: tuple[int, ...]

    @classmethod
    def build(cls, fam: CancellationFamily, tag: str, limit: int | None = None) -> DiscoveryReport:
        sizes = tuple(len(s) for s in excluded_sets(fam, limit=limit))
        return cls(fam, sum(sizes), tag, sizes)


def pair_sort_key(p: BrokenPair) -> tuple:
    return (popcount(p.b_set), tuple(indices(p.b_set)), tuple(indices(p.b_star)))


def minimal_absorbers(
    m: int,
    b: int,
    absorbs: Callable[[int], bool],
    max_size: int | None = None,
) -> list[int]:
    """Inclusion-minimal ``B`` over ``{0..m-1} - {b}`` with ``absorbs(B)``.

    ``absorbs`` must be upward closed.
    """
    others = [i for i in range(m) if i != b]
    if not absorbs(mask_of(others)):
        return []
    found: list[int] = []
    top = len(others) if max_size is None else min(max_size, len(others))
    for k in range(top + 1):
        for combo in combinations(others, k):
            bits = mask_of(combo)
            if any(bits & f == f for f in found):
                continue
            if absorbs(bits):
                found.append(bits)
    return found


def _collect(m: int, absorbs_for: Callable[[int], Callable[[int], bool]], max_size: int | None):
    pairs = []
    for b in range(m):
        for bits in minimal_absorbers(m, b, absorbs_for(b), max_size):
            pairs.append(BrokenPair(bits, 1 << b))
    pairs.sort(key=pair_sort_key)
    return pairs


def chromatic_broken_pairs(
    h: Hypergraph, *, limit: int | None = None, max_size: int | None = None
) -> list[BrokenPair]:
    check_limit(h.m, limit, "edge set")

    def absorbs_for(b: int):
        target = sorted(h.edges[b])

        def absorbs(bits: int) -> bool:
            uf = UnionFind(h.n)
            for k in indices(bits):
                it = iter(h.edges[k])
                first = next(it)
                for v in it:
                    uf.union(first, v)
            root = uf.find(target[0])
            return all(uf.find(v) == root for v in target[1:])

        return absorbs

    return _collect(h.m, absorbs_for, max_size)


def independence_broken_pairs(
    g: Hypergraph, *, limit: int | None = None, max_size: int | None = None
) -> list[BrokenPair]:
    g.require_graph("independence discovery")
    check_limit(g.m, limit, "edge set")
    masks = g.edge_masks

    def absorbs_for(b: int):
        need = masks[b]

        def absorbs(bits: int) -> bool:
            cover = 0
            for k in indices(bits):
                cover |= masks[k]
            return cover & need == need

        return absorbs

    return _collect(g.m, absorbs_for, max_size)


def domination_broken_pairs(
    g: Hypergraph, *, limit: int | None = None, max_size: int | None = None
) -> list[BrokenPair]:
    g.require_graph("domination discovery")
    check_limit(g.n, limit, "vertex set")
    adj = g.adjacency()

    def absorbs_for(b: int):
        need = adj[b] | 1 << b

        def absorbs(bits: int) -> bool:
            cover = bits
            for v in indices(bits):
                cover |= adj[v]
            return cover & need == need

        return absorbs

    return _collect(g.n, absorbs_for, max_size)


DISCOVERERS = {
    "chromatic": chromatic_broken_pairs,
    "independence": independence_broken_pairs,
    "domination": domination_broken_pairs,
}


def universe_size(g: Hypergraph, kind: PolynomialKind) -> int:
    return g.n if kind == "domination" else g.m


def discover(
    g: Hypergraph,
    kind: PolynomialKind,
    *,
    limit: int | None = None,
    max_size: int | None = None,
) -> DiscoveryReport:
    pairs = DISCOVERERS[kind](g, limit=limit, max_size=max_size)
    fam = CancellationFamily(universe_size(g, kind), tuple(pairs))
    return DiscoveryReport.build(fam, kind, limit)


def _minimal_only(sets: Sequence[int]) -> list[int]:
    uniq = sorted(set(sets), key=lambda s: (popcount(s), indices(s)))
    out: list[int] = []
    for s in uniq:
        if not any(s & f == f for f in out):
            out.append(s)
    return out


def ordered_broken_sets(pairs: Sequence[BrokenPair], order: Sequence[int]) -> OrderedFamily:
    """Broken sets with respect to ``order``: those ``B`` whose absorbed element
    lies above all of ``B``.

    Only single-element ``B*`` pairs are considered.  The result keeps the
    inclusion-minimal sets.
    """
    of = OrderedFamily(tuple(order))
    rank = of.rank
    xs = []
    for p in pairs:
        if popcount(p.b_star) != 1:
            continue
        b = indices(p.b_star)[0]
        if all(rank[i] < rank[b] for i in indices(p.b_set)):
            xs.append(p.b_set)
    return OrderedFamily(of.order, tuple(_minimal_only(xs)))


def _delta_ok(h: Hypergraph, f: int) -> bool:
    c = component_count(h, f)
    return all(component_count(h, f & ~(1 << k)) == c for k in indices(f))


def delta_cycles(h: Hypergraph, *, limit: int | None = None) -> list[int]:
    """Minimal nonempty edge sets ``F`` with ``c(F - f) == c(F)`` for every ``f`` in ``F``."""
    check_limit(h.m, limit, "edge set")
    found: list[int] = []
    for k in range(1, h.m + 1):
        for combo in combinations(range(h.m), k):
            bits = mask_of(combo)
            if any(bits & f == f for f in found):
                continue
            if _delta_ok(h, bits):
                found.append(bits)
    return found


def broken_cycles(
    h: Hypergraph, order: Sequence[int], *, limit: int | None = None
) -> OrderedFamily:
    of = OrderedFamily(tuple(order))
    if of.universe_size != h.m:
        raise ValueError("edge order must cover every edge exactly once")
    rank = of.rank
    xs = []
    for d in delta_cycles(h, limit=limit):
        top = max(indices(d), key=lambda k: rank[k])
        xs.append(d & ~(1 << top))
    uniq = sorted(set(xs), key=lambda s: (popcount(s), indices(s)))
    return OrderedFamily(of.order, tuple(uniq))


def broken_neighbourhoods(g: Hypergraph, order: Sequence[int]) -> OrderedFamily:
    """``N(v)`` for every ``v`` that is the maximum of ``N[v]``.

    An isolated vertex would contribute the empty set, which does not satisfy
    the covering condition; it is left out with a warning.
    """
    adj = g.adjacency()
    of = OrderedFamily(tuple(order))
    if of.universe_size != g.n:
        raise ValueError("vertex order must cover every vertex exactly once")
    rank = of.rank
    xs = []
    for v in range(g.n):
        closed = adj[v] | 1 << v
        if max(indices(closed), key=lambda u: rank[u]) != v:
            continue
        if not adj[v]:
            warnings.warn(
                f"vertex {g.vertex_labels[v]} is isolated; its empty neighbourhood is skipped",
                stacklevel=2,
            )
            continue
        xs.append(adj[v])
    uniq = sorted(set(xs), key=lambda s: (popcount(s), indices(s)))
    return OrderedFamily(of.order, tuple(uniq))

