"""Chromatic, independence and domination polynomials as inclusion-exclusion sums."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence, Union

from brokenset import engine
from brokenset.discovery import (
    DISCOVERERS,
    DiscoveryReport,
    PolynomialKind,
    ordered_broken_sets,
    universe_size,
)
from brokenset.engine import BrokenPair, CancellationFamily, OrderedFamily, TermFunction
from brokenset.graph import Hypergraph, component_count, covered_vertices
from brokenset.polynomial import IntPolynomial, monomial_times_binomial
from brokenset.subsets import IndexUniverse, popcount

Method = Literal["full", "pairs", "ordered"]
Family = Union[CancellationFamily, DiscoveryReport, OrderedFamily, None]


@dataclass(frozen=True)
class ComputationResult:
    polynomial: IntPolynomial
    method: str
    terms_evaluated: int
    terms_total: int
    family_size: int

    def __post_init__(self):
        assert self.terms_evaluated <= self.terms_total
        assert self.method != "full" or self.terms_evaluated == self.terms_total


def chromatic_term(h: Hypergraph) -> TermFunction:
    cache: dict[int, IntPolynomial] = {}

    def t(bits: int) -> IntPolynomial:
        c = component_count(h, bits)
        p = cache.get(c)
        if p is None:
            p = cache[c] = IntPolynomial.monomial(c)
        return p

    return t


def independence_term(g: Hypergraph) -> TermFunction:
    g.require_graph("independence polynomial")
    cache: dict[int, IntPolynomial] = {}
    n = g.n

    def t(bits: int) -> IntPolynomial:
        k = popcount(covered_vertices(g, bits))
        p = cache.get(k)
        if p is None:
            p = cache[k] = monomial_times_binomial(k, n - k)
        return p

    return t


def domination_term(g: Hypergraph) -> TermFunction:
    g.require_graph("domination polynomial")
    adj = g.adjacency()
    cache: dict[int, IntPolynomial] = {}
    n = g.n

    def t(bits: int) -> IntPolynomial:
        cover = bits
        rest = bits
        v = 0
        while rest:
            if rest & 1:
                cover |= adj[v]
            rest >>= 1
            v += 1
        free = n - popcount(cover)
        p = cache.get(free)
        if p is None:
            p = cache[free] = monomial_times_binomial(0, free)
        return p

    return t


TERMS = {
    "chromatic": chromatic_term,
    "independence": independence_term,
    "domination": domination_term,
}


def index_universe(g: Hypergraph, kind: PolynomialKind) -> IndexUniverse:
    return g.vertex_universe if kind == "domination" else g.edge_universe


def describe_pair(u: IndexUniverse, p: BrokenPair) -> str:
    return f"({u.render(p.b_set)}, {u.render(p.b_star)})"


def compute(
    g: Hypergraph,
    kind: PolynomialKind,
    method: Method = "pairs",
    family: Family = None,
    *,
    order: Sequence[int] | None = None,
    verify: bool = False,
    limit: int | None = None,
    workers: int = 1,
) -> ComputationResult:
    """Evaluate one of the three polynomials by the requested method.

    ``family`` may be omitted: ``pairs`` then discovers broken pairs and
    ``ordered`` derives the broken sets with respect to ``order`` (declaration
    order if not given).  With ``verify`` every pair is checked for absorption
    first and :class:`engine.ValidationError` names the first bad one.
    """
    t = TERMS[kind](g)
    u = index_universe(g, kind)
    n = universe_size(g, kind)
    if method == "full":
        res = engine.full_sum(n, t, limit=limit, workers=workers)
        return ComputationResult(res.polynomial, method, res.terms_evaluated, res.terms_total, 0)

    if method == "pairs":
        if family is None:
            fam = CancellationFamily(n, tuple(DISCOVERERS[kind](g, limit=limit)))
        elif isinstance(family, DiscoveryReport):
            fam = family.pairs
        elif isinstance(family, CancellationFamily):
            fam = family
        else:
            raise engine.FamilyError("method 'pairs' needs a CancellationFamily")
        if verify:
            engine.validate_family(n, t, fam, limit=limit, describe=lambda p: describe_pair(u, p))
        res = engine.reduced_sum(n, t, fam, limit=limit, workers=workers)
        return ComputationResult(
            res.polynomial, method, res.terms_evaluated, res.terms_total, len(fam)
        )

    if method == "ordered":
        if family is None:
            of = ordered_broken_sets(
                DISCOVERERS[kind](g, limit=limit), tuple(order) if order else tuple(range(n))
            )
        elif isinstance(family, OrderedFamily):
            of = family
        else:
            raise engine.FamilyError("method 'ordered' needs an OrderedFamily")
        if verify:
            for b in of.x_class:
                p = BrokenPair(b, of.upper_bounds(b))
                if not engine.validate_pair(n, t, p, limit=limit):
                    raise engine.ValidationError(
                        f"class member {u.render(b)} is not covered by its upper bounds"
                    )
        res = engine.ordered_reduced_sum(n, t, of, limit=limit, workers=workers)
        return ComputationResult(
            res.polynomial, method, res.terms_evaluated, res.terms_total, len(of.x_class)
        )

    raise ValueError(f"unknown method {method!r}")


def chromatic_polynomial(h: Hypergraph, method: Method = "pairs", family: Family = None, **kw):
    return compute(h, "chromatic", method, family, **kw)


def independence_polynomial(g: Hypergraph, method: Method = "pairs", family: Family = None, **kw):
    return compute(g, "independence", method, family, **kw)


def domination_polynomial(g: Hypergraph, method: Method = "pairs", family: Family = None, **kw):
    return compute(g, "domination", method, family, **kw)
