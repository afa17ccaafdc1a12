from collections import Counter
from math import comb

import pytest
from hypothesis import given, strategies as st

from brokenset.subsets import (
    IndexUniverse,
    SizeLimitError,
    SubsetMask,
    UniverseMismatchError,
    all_subsets,
    difference,
    is_superset,
    popcount,
    split_ranges,
    subsets_of,
)


def m(idx, n=4):
    return SubsetMask(sum(1 << i for i in idx), n)


def test_all_subsets_small():
    assert [s.bits for s in all_subsets(0)] == [0]
    assert [s.bits for s in all_subsets(2)] == [0, 1, 2, 3]
    assert len(list(all_subsets(IndexUniverse(("123", "345", "234", "126"))))) == 16


def test_all_subsets_limit():
    with pytest.raises(SizeLimitError, match="24"):
        next(all_subsets(25))
    assert len(list(all_subsets(3, limit=3))) == 8
    with pytest.raises(SizeLimitError):
        next(all_subsets(4, limit=3))


@pytest.mark.parametrize("n", range(0, 9))
def test_popcount_histogram(n):
    seen = [s.bits for s in all_subsets(n)]
    assert len(set(seen)) == 2 ** n
    hist = Counter(popcount(b) for b in seen)
    assert all(hist[k] == comb(n, k) for k in range(n + 1))


def test_is_superset():
    assert is_superset(m([0, 1, 2]), m([0, 2]))
    assert not is_superset(m([0, 1]), m([2]))
    assert is_superset(m([]), m([]))
    with pytest.raises(UniverseMismatchError):
        is_superset(m([0], 4), m([0], 5))


def test_difference():
    assert difference(m([0, 1, 2]), m([1])) == m([0, 2])
    u = IndexUniverse(("v1", "v2", "v3", "v4"))
    assert difference(u.mask(["v1", "v3"]), u.mask(["v3"])) == u.mask(["v1"])
    assert difference(m([]), m([0])) == m([])


def test_subsets_of():
    assert [s.bits for s in subsets_of(m([]))] == [0]
    assert [s.bits for s in subsets_of(m([2]))] == [0, 4]
    b = m([0, 3])
    brute = [s for s in all_subsets(4) if is_superset(b, s)]
    assert list(subsets_of(b)) == brute


masks6 = st.integers(0, 63).map(lambda b: SubsetMask(b, 6))


@given(masks6, masks6)
def test_superset_antisymmetry(a, b):
    assert (is_superset(a, b) and is_superset(b, a)) == (a == b)


@given(masks6, masks6)
def test_difference_and_intersection_rebuild(a, b):
    assert difference(a, b).union(a.intersect(b)) == a


def test_mask_invariant():
    with pytest.raises(ValueError):
        SubsetMask(0b10000, 4)


@given(st.integers(0, 300), st.integers(1, 9))
def test_split_ranges_partition(total, parts):
    rs = split_ranges(total, parts)
    flat = [x for r in rs for x in r]
    assert flat == list(range(total))


def test_universe_rendering():
    u = IndexUniverse(("123", "345", "234", "126"))
    assert u.render(u.mask(["345", "123"])) == "{123, 345}"
    with pytest.raises(ValueError):
        IndexUniverse(("a", "a"))
    with pytest.raises(ValueError):
        IndexUniverse.of_size(65)
