"""Inclusion-exclusion sums with ordering-free broken-pair cancellation.

The value domain is exact integer polynomials (:mod:`brokenset.polynomial`);
the engine sums signed term functions over subsets of an index universe and
skips the subsets excluded by a family of broken pairs.  Three graph
polynomials are wired on top: the chromatic polynomial of hypergraphs, the
independence polynomial and the domination polynomial.
"""

from brokenset.polynomial import IntPolynomial
from brokenset.subsets import IndexUniverse, SubsetMask, SizeLimitError
from brokenset.engine import (
    BrokenPair,
    CancellationFamily,
    OrderedFamily,
    SumResult,
    classify,
    full_sum,
    reduced_sum,
    ordered_reduced_sum,
    ordered_family_to_pairs,
    validate_pair,
)
from brokenset.graph import Hypergraph
from brokenset.polys import (
    ComputationResult,
    chromatic_polynomial,
    independence_polynomial,
    domination_polynomial,
)

__all__ = [
    "IntPolynomial",
    "IndexUniverse",
    "SubsetMask",
    "SizeLimitError",
    "BrokenPair",
    "CancellationFamily",
    "OrderedFamily",
    "SumResult",
    "classify",
    "full_sum",
    "reduced_sum",
    "ordered_reduced_sum",
    "ordered_family_to_pairs",
    "validate_pair",
    "Hypergraph",
    "ComputationResult",
    "chromatic_polynomial",
    "independence_polynomial",
    "domination_polynomial",
]

__version__ = "0.1.0"
