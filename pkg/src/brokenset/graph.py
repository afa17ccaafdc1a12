"""Simple hypergraphs and the structural counts the term functions need."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from brokenset.subsets import IndexUniverse, SubsetMask, coerce_bits, indices, mask_of


class NotAGraphError(ValueError):
    """An operation defined for ordinary graphs was given a proper hypergraph."""


class UnionFind:
    """Union by size with path compression; counts successful merges."""

    __slots__ = ("parent", "size", "merges")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.merges = 0

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.merges += 1
        return True


@dataclass(frozen=True)
class Hypergraph:
    """Vertices are ``0..n-1``; each edge is a frozenset of at least two vertices."""

    n: int
    edges: tuple[frozenset[int], ...]
    vertex_labels: tuple[str, ...] = ()
    edge_labels: tuple[str, ...] = ()

    def __post_init__(self):
        edges = tuple(frozenset(int(v) for v in e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for k, e in enumerate(edges):
            if len(e) < 2:
                raise ValueError(f"edge {k} has fewer than two vertices")
            if not all(0 <= v < self.n for v in e):
                raise ValueError(f"edge {k} references a vertex outside 0..{self.n - 1}")
            if e in seen:
                raise ValueError(f"edge {k} duplicates an earlier edge")
            seen.add(e)
        vl = tuple(str(s) for s in self.vertex_labels) or tuple(str(v + 1) for v in range(self.n))
        if len(vl) != self.n or len(set(vl)) != self.n:
            raise ValueError("vertex labels must be distinct, one per vertex")
        object.__setattr__(self, "vertex_labels", vl)
        el = tuple(str(s) for s in self.edge_labels) or tuple(
            default_edge_label([vl[v] for v in sorted(e)]) for e in edges
        )
        if len(el) != len(edges) or len(set(el)) != len(el):
            raise ValueError("edge labels must be distinct, one per edge")
        object.__setattr__(self, "edge_labels", el)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Sequence[Sequence[int]],
        vertex_labels: Sequence[str] = (),
        edge_labels: Sequence[str] = (),
    ) -> Hypergraph:
        return cls(n, tuple(frozenset(e) for e in edges), tuple(vertex_labels), tuple(edge_labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    @property
    def edge_universe(self) -> IndexUniverse:
        return IndexUniverse(self.edge_labels)

    @property
    def vertex_universe(self) -> IndexUniverse:
        return IndexUniverse(self.vertex_labels)

    @property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    def require_graph(self, what: str = "operation") -> None:
        if not self.is_graph:
            big = next(k for k, e in enumerate(self.edges) if len(e) != 2)
            raise NotAGraphError(
                f"{what} needs an ordinary graph; edge {self.edge_labels[big]} has "
                f"{len(self.edges[big])} vertices"
            )

    def adjacency(self) -> tuple[int, ...]:
        """Open neighbourhood of each vertex as a vertex mask."""
        self.require_graph("adjacency")
        adj = [0] * self.n
        for e in self.edges:
            u, v = tuple(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)


def default_edge_label(vertex_labels: Sequence[str]) -> str:
    if all(len(s) == 1 for s in vertex_labels):
        return "".join(vertex_labels)
    return "-".join(vertex_labels)


def _union_edges(h: Hypergraph, f: int) -> UnionFind:
    uf = UnionFind(h.n)
    for k in indices(f):
        it = iter(h.edges[k])
        first = next(it)
        for v in it:
            uf.union(first, v)
    return uf


def component_count(h: Hypergraph, f: int | SubsetMask) -> int:
    """Components of the spanning subgraph ``(V, F)``, isolated vertices included."""
    bits = coerce_bits(f, h.m)
    return h.n - _union_edges(h, bits).merges


def merge_count(h: Hypergraph, f: int | SubsetMask) -> int:
    return _union_edges(h, coerce_bits(f, h.m)).merges


def covered_vertices(h: Hypergraph, f: int | SubsetMask) -> int:
    """Vertex mask of the union of the edges in ``F``."""
    bits = coerce_bits(f, h.m)
    masks = h.edge_masks
    out = 0
    for k in indices(bits):
        out |= masks[k]
    return out


def induced_vertex_count(g: Hypergraph, f: int | SubsetMask) -> int:
    return bin(covered_vertices(g, f)).count("1")


def closed_neighborhood(g: Hypergraph, w: int | SubsetMask) -> int:
    bits = coerce_bits(w, g.n)
    adj = g.adjacency()
    out = bits
    for v in indices(bits):
        out |= adj[v]
    return out


# built-in instances ------------------------------------------------------

def path_graph(n: int, prefix: str = "v", edge_prefix: str = "e") -> Hypergraph:
    """Path on ``n`` vertices ``v1..vn`` with edges ``e1..e(n-1)``."""
    return Hypergraph.from_edges(
        n,
        [(i, i + 1) for i in range(n - 1)],
        [f"{prefix}{i + 1}" for i in range(n)],
        [f"{edge_prefix}{i + 1}" for i in range(n - 1)],
    )


def cycle_graph(n: int) -> Hypergraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Hypergraph.from_edges(
        n,
        [(i, (i + 1) % n) for i in range(n)],
        [f"v{i + 1}" for i in range(n)],
        [f"e{i + 1}" for i in range(n)],
    )


def star_graph(leaves: int) -> Hypergraph:
    """``K(1, leaves)``; the centre is vertex ``c``."""
    return Hypergraph.from_edges(
        leaves + 1,
        [(0, i) for i in range(1, leaves + 1)],
        ["c"] + [f"l{i}" for i in range(1, leaves + 1)],
        [f"c-l{i}" for i in range(1, leaves + 1)],
    )


def complete_graph(n: int) -> Hypergraph:
    return Hypergraph.from_edges(
        n,
        [(i, j) for i in range(n) for j in range(i + 1, n)],
        [f"v{i + 1}" for i in range(n)],
    )


def empty_graph(n: int) -> Hypergraph:
    return Hypergraph.from_edges(n, [], [f"v{i + 1}" for i in range(n)])


def example_hypergraph() -> Hypergraph:
    """Six vertices, edges 123, 345, 234, 126 (in that order)."""
    return Hypergraph.from_edges(
        6,
        [(0, 1, 2), (2, 3, 4), (1, 2, 3), (0, 1, 5)],
        [str(i) for i in range(1, 7)],
    )
