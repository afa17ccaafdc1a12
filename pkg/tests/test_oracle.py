import pytest

from brokenset.graph import complete_graph, empty_graph
from brokenset.oracle import (
    count_proper_colorings,
    dominating_set_counts,
    independent_set_counts,
)
from brokenset.polys import independence_polynomial
from brokenset.subsets import SizeLimitError


def test_colorings(hyper_h):
    assert count_proper_colorings(hyper_h, 1) == 0
    assert count_proper_colorings(hyper_h, 2) == 26
    assert count_proper_colorings(empty_graph(3), 4) == 64
    assert count_proper_colorings(complete_graph(3), 3) == 6


def test_coloring_limit():
    with pytest.raises(SizeLimitError):
        count_proper_colorings(empty_graph(11), 2)


def test_independent_sets(path5):
    assert independent_set_counts(empty_graph(3)) == [1, 3, 3, 1]
    assert independent_set_counts(path5) == [1, 5, 6, 1, 0, 0]
    assert independent_set_counts(complete_graph(3)) == [1, 3, 0, 0]


def test_dominating_sets(p4):
    assert dominating_set_counts(empty_graph(1)) == [0, 1]
    counts = dominating_set_counts(p4)
    assert counts[0] == 0 and counts[4] == 1
    assert counts == [0, 0, 4, 4, 1]
    assert dominating_set_counts(complete_graph(3)) == [0, 3, 3, 1]


def test_total_independent_sets_is_value_at_one(path5):
    p = independence_polynomial(path5, "full").polynomial
    assert sum(independent_set_counts(path5)) == p(1) == 13


def test_hypergraph_rejected(hyper_h):
    with pytest.raises(ValueError):
        independent_set_counts(hyper_h)
