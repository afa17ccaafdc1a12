"""Inclusion-exclusion sums and their cancellation-based reductions.

``t`` below is a term function: a pure map from a subset (bit word) of the
index universe to an :class:`IntPolynomial`.  The full sum is

    sum over I of (-1)^|I| t(I)

and a family of broken pairs ``(B_i, B*_i)`` removes the subsets in
``Bcal_i = {I : I >= B_i and I not >= B_j - B*_i for j < i}``.  When every
pair is absorbing (see :func:`validate_pair`) the removed terms cancel class
by class, so the reduced sum equals the full one whatever the pair order.
The ordering-based variant removes the up-closure of a class ``X`` of sets
under a linear order of the universe instead.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from brokenset.polynomial import IntPolynomial
from brokenset.subsets import (
    IndexUniverse,
    SubsetMask,
    UniverseMismatchError,
    check_limit,
    coerce_bits,
    indices,
    popcount,
    split_ranges,
    submasks,
)

TermFunction = Callable[[int], IntPolynomial]
Universe = IndexUniverse | int


class FamilyError(ValueError):
    """A family of pairs or an ordered class that cannot be used as given."""


class ValidationError(FamilyError):
    """A broken pair fails the absorption check."""

    def __init__(self, message: str, pair_index: int | None = None):
        super().__init__(message)
        self.pair_index = pair_index


def _size(u: Universe) -> int:
    return u if isinstance(u, int) else u.size


@dataclass(frozen=True)
class BrokenPair:
    b_set: int
    b_star: int

    def __post_init__(self):
        object.__setattr__(self, "b_set", int(self.b_set))
        object.__setattr__(self, "b_star", int(self.b_star))
        if self.b_set & self.b_star:
            raise FamilyError("B and B* must be disjoint")
        if not self.b_star:
            raise FamilyError("B* must be nonempty")


@dataclass(frozen=True)
class CancellationFamily:
    universe_size: int
    pairs: tuple[BrokenPair, ...] = ()
    # remnants[i] = masks B_j - B*_i for j < i
    _remnants: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pairs = tuple(self.pairs)
        object.__setattr__(self, "pairs", pairs)
        n = self.universe_size
        for p in pairs:
            if (p.b_set | p.b_star) >> n:
                raise UniverseMismatchError(f"pair {p} does not fit a universe of {n}")
        rem = tuple(
            tuple(pairs[j].b_set & ~p.b_star for j in range(i)) for i, p in enumerate(pairs)
        )
        object.__setattr__(self, "_remnants", rem)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def permuted(self, perm: Sequence[int]) -> CancellationFamily:
        return CancellationFamily(self.universe_size, tuple(self.pairs[i] for i in perm))

    def classify_bits(self, bits: int) -> int | None:
        for i, p in enumerate(self.pairs):
            if bits & p.b_set != p.b_set:
                continue
            for r in self._remnants[i]:
                if bits & r == r:
                    break
            else:
                return i
        return None


@dataclass(frozen=True)
class OrderedFamily:
    """A linear order on the universe plus a class of generating sets.

    ``order`` lists the elements from smallest to largest.
    """

    order: tuple[int, ...]
    x_class: tuple[int, ...] = ()

    def __post_init__(self):
        order = tuple(int(v) for v in self.order)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "x_class", tuple(int(b) for b in self.x_class))
        if sorted(order) != list(range(len(order))):
            raise FamilyError("order must be a permutation of 0..n-1")
        for b in self.x_class:
            if b < 0 or b >> len(order):
                raise UniverseMismatchError(f"class member {b:#x} outside the universe")

    @property
    def universe_size(self) -> int:
        return len(self.order)

    @property
    def rank(self) -> list[int]:
        r = [0] * len(self.order)
        for pos, v in enumerate(self.order):
            r[v] = pos
        return r

    def upper_bounds(self, bits: int) -> int:
        """Elements strictly above every member of ``bits`` (all elements if empty)."""
        rank = self.rank
        top = max((rank[i] for i in indices(bits)), default=-1)
        out = 0
        for pos in range(top + 1, len(self.order)):
            out |= 1 << self.order[pos]
        return out


@dataclass(frozen=True)
class SumResult:
    polynomial: IntPolynomial
    terms_evaluated: int
    terms_total: int


def _accumulate(acc: list[int], p: IntPolynomial, sign: int) -> None:
    c = p.coeffs
    if len(c) > len(acc):
        acc.extend([0] * (len(c) - len(acc)))
    if sign > 0:
        for i, v in enumerate(c):
            acc[i] += v
    else:
        for i, v in enumerate(c):
            acc[i] -= v


def _sum_over(
    n: int,
    t: TermFunction,
    keep: Callable[[int], bool] | None,
    workers: int,
) -> SumResult:
    def run(block: range) -> tuple[list[int], int]:
        acc: list[int] = []
        count = 0
        for bits in block:
            if keep is not None and not keep(bits):
                continue
            count += 1
            _accumulate(acc, t(bits), -1 if popcount(bits) & 1 else 1)
        return acc, count

    total = 1 << n
    blocks = split_ranges(total, workers)
    if len(blocks) == 1:
        parts = [run(blocks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(blocks)) as pool:
            parts = list(pool.map(run, blocks))
    acc: list[int] = []
    count = 0
    for part, c in parts:
        _accumulate(acc, IntPolynomial(part), 1)
        count += c
    return SumResult(IntPolynomial(acc), count, total)


def full_sum(
    u: Universe, t: TermFunction, *, limit: int | None = None, workers: int = 1
) -> SumResult:
    n = _size(u)
    check_limit(n, limit)
    return _sum_over(n, t, None, workers)


def classify(I: int | SubsetMask, fam: CancellationFamily) -> int | None:
    """Index of the unique ``Bcal_i`` containing ``I`` (0-based), or ``None``."""
    return fam.classify_bits(coerce_bits(I, fam.universe_size))


def memberships(I: int | SubsetMask, fam: CancellationFamily) -> list[int]:
    """All ``i`` with ``I`` in ``Bcal_i``, straight from the definition."""
    bits = coerce_bits(I, fam.universe_size)
    out = []
    for i, p in enumerate(fam.pairs):
        if bits & p.b_set != p.b_set:
            continue
        if any(bits & (q.b_set & ~p.b_star) == q.b_set & ~p.b_star for q in fam.pairs[:i]):
            continue
        out.append(i)
    return out


def excluded_sets(fam: CancellationFamily, *, limit: int | None = None) -> list[list[int]]:
    """The members of each ``Bcal_i``, computed by classifying every subset."""
    check_limit(fam.universe_size, limit)
    out: list[list[int]] = [[] for _ in fam.pairs]
    for bits in range(1 << fam.universe_size):
        i = fam.classify_bits(bits)
        if i is not None:
            out[i].append(bits)
    return out


def _check_family(u: Universe, fam: CancellationFamily) -> int:
    n = _size(u)
    if fam.universe_size != n:
        raise UniverseMismatchError(
            f"family built for a universe of {fam.universe_size}, universe has {n}"
        )
    return n


def reduced_sum(
    u: Universe,
    t: TermFunction,
    fam: CancellationFamily,
    *,
    limit: int | None = None,
    workers: int = 1,
) -> SumResult:
    n = _check_family(u, fam)
    check_limit(n, limit)
    if not fam.pairs:
        return _sum_over(n, t, None, workers)
    return _sum_over(n, t, lambda bits: fam.classify_bits(bits) is None, workers)


def pair_violation(
    u: Universe, t: TermFunction, p: BrokenPair, *, limit: int | None = None
) -> int | None:
    """First ``I*`` where the alternating sum over ``B*`` is nonzero, else ``None``.

    ``I*`` ranges over supersets of ``B`` disjoint from ``B*``.
    """
    n = _size(u)
    check_limit(n, limit)
    if (p.b_set | p.b_star) >> n:
        raise UniverseMismatchError("pair does not fit the universe")
    free = ((1 << n) - 1) & ~p.b_set & ~p.b_star
    stars = list(submasks(p.b_star))
    for extra in submasks(free):
        base = p.b_set | extra
        acc: list[int] = []
        for d in stars:
            _accumulate(acc, t(base | d), -1 if popcount(d) & 1 else 1)
        if any(acc):
            return base
    return None


def validate_pair(
    u: Universe, t: TermFunction, p: BrokenPair, *, limit: int | None = None
) -> bool:
    return pair_violation(u, t, p, limit=limit) is None


def validate_family(
    u: Universe,
    t: TermFunction,
    fam: CancellationFamily,
    *,
    limit: int | None = None,
    describe: Callable[[BrokenPair], str] = repr,
) -> None:
    """Raise :class:`ValidationError` naming the first pair that is not absorbing."""
    for i, p in enumerate(fam.pairs):
        witness = pair_violation(u, t, p, limit=limit)
        if witness is not None:
            raise ValidationError(
                f"pair {i + 1} {describe(p)} is not absorbing (witness mask {witness:#x})",
                pair_index=i,
            )


def equivalence_class(I: int | SubsetMask, fam: CancellationFamily) -> frozenset[int]:
    bits = coerce_bits(I, fam.universe_size)
    i = fam.classify_bits(bits)
    if i is None:
        raise ValueError(f"subset {bits:#x} is not excluded by the family")
    star = fam.pairs[i].b_star
    core = bits & ~star
    return frozenset(core | d for d in submasks(star))


def class_sum(cls: Iterable[int], t: TermFunction) -> IntPolynomial:
    acc: list[int] = []
    for bits in cls:
        _accumulate(acc, t(bits), -1 if popcount(bits) & 1 else 1)
    return IntPolynomial(acc)


def ideal_membership(I: int | SubsetMask, of: OrderedFamily) -> bool:
    bits = coerce_bits(I, of.universe_size)
    return any(bits & b == b for b in of.x_class)


def ordered_reduced_sum(
    u: Universe,
    t: TermFunction,
    of: OrderedFamily,
    *,
    limit: int | None = None,
    workers: int = 1,
) -> SumResult:
    n = _size(u)
    if of.universe_size != n:
        raise UniverseMismatchError(
            f"order covers {of.universe_size} elements, universe has {n}"
        )
    check_limit(n, limit)
    xs = of.x_class
    if not xs:
        return _sum_over(n, t, None, workers)
    return _sum_over(n, t, lambda bits: not any(bits & b == b for b in xs), workers)


def ordered_family_to_pairs(of: OrderedFamily) -> CancellationFamily:
    """Turn ``X`` into pairs ``(B, B')`` sorted by the least upper bound of each ``B``.

    Excluded sets of the result coincide with the up-closure of ``X``.
    """
    rank = of.rank
    keyed = []
    for pos, b in enumerate(of.x_class):
        up = of.upper_bounds(b)
        if not up:
            raise FamilyError(
                f"class member {indices(b)} has no upper bound in the order"
            )
        least = min(rank[i] for i in indices(up))
        keyed.append((least, pos, BrokenPair(b, up)))
    keyed.sort(key=lambda k: (k[0], k[1]))
    return CancellationFamily(of.universe_size, tuple(k[2] for k in keyed))


def iter_excluded(fam: CancellationFamily) -> Iterator[tuple[int, int]]:
    """Yield ``(mask, i)`` for every excluded subset."""
    for bits in range(1 << fam.universe_size):
        i = fam.classify_bits(bits)
        if i is not None:
            yield bits, i
