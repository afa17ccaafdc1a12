"""Index universes and bit-encoded subsets.

A subset of an ``n``-element universe is an ``int`` whose bit ``i`` marks
element ``i``.  :class:`SubsetMask` wraps the word together with the
universe size so mixing universes is caught; the hot loops in the engine work
on bare ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_UNIVERSE = 64
DEFAULT_ENUMERATION_LIMIT = 24


class SizeLimitError(ValueError):
    """Raised when a universe is too large for exhaustive enumeration."""

    def __init__(self, size: int, limit: int, what: str = "universe"):
        self.size = size
        self.limit = limit
        super().__init__(
            f"{what} has {size} elements; exhaustive enumeration limit is {limit}"
            " (raise it with --max-universe)"
        )


class UniverseMismatchError(ValueError):
    pass


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def indices(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def mask_of(idx: Iterable[int]) -> int:
    bits = 0
    for i in idx:
        bits |= 1 << i
    return bits


def check_limit(size: int, limit: int | None, what: str = "universe") -> None:
    cap = DEFAULT_ENUMERATION_LIMIT if limit is None else limit
    if size > cap:
        raise SizeLimitError(size, cap, what)


@dataclass(frozen=True)
class IndexUniverse:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(s) for s in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) > MAX_UNIVERSE:
            raise ValueError(f"universe of {len(labels)} elements exceeds {MAX_UNIVERSE}")
        if len(set(labels)) != len(labels):
            raise ValueError("universe labels must be pairwise distinct")

    @classmethod
    def of_size(cls, n: int, prefix: str = "") -> IndexUniverse:
        return cls(tuple(f"{prefix}{i}" for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError(f"unknown element label {label!r}") from None

    def mask(self, labels: Iterable[str]) -> SubsetMask:
        return SubsetMask(mask_of(self.index(s) for s in labels), self.size)

    def label_list(self, bits: int | SubsetMask) -> list[str]:
        return [self.labels[i] for i in indices(int(bits))]

    def render(self, bits: int | SubsetMask) -> str:
        return "{" + ", ".join(self.label_list(bits)) + "}"


@dataclass(frozen=True)
class SubsetMask:
    bits: int
    universe_size: int

    def __post_init__(self):
        if self.universe_size < 0 or self.universe_size > MAX_UNIVERSE:
            raise ValueError(f"universe size {self.universe_size} out of range")
        if self.bits < 0 or self.bits >> self.universe_size:
            raise ValueError(
                f"mask {self.bits:#x} has bits outside a universe of {self.universe_size}"
            )

    def __int__(self):
        return self.bits

    def __index__(self):
        return self.bits

    def __len__(self):
        return popcount(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(indices(self.bits))

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def _same(self, other: SubsetMask) -> None:
        if self.universe_size != other.universe_size:
            raise UniverseMismatchError(
                f"universe sizes differ: {self.universe_size} vs {other.universe_size}"
            )

    def union(self, other: SubsetMask) -> SubsetMask:
        self._same(other)
        return SubsetMask(self.bits | other.bits, self.universe_size)

    def intersect(self, other: SubsetMask) -> SubsetMask:
        self._same(other)
        return SubsetMask(self.bits & other.bits, self.universe_size)

    __or__ = union
    __and__ = intersect

    def __sub__(self, other: SubsetMask) -> SubsetMask:
        return difference(self, other)


def all_subsets(u: IndexUniverse | int, limit: int | None = None) -> Iterator[SubsetMask]:
    """Yield every subset of ``u`` once, in increasing numeric order of the bit word."""
    n = u if isinstance(u, int) else u.size
    check_limit(n, limit)
    for bits in range(1 << n):
        yield SubsetMask(bits, n)


def is_superset(a: SubsetMask, b: SubsetMask) -> bool:
    a._same(b)
    return a.bits & b.bits == b.bits


def difference(a: SubsetMask, b: SubsetMask) -> SubsetMask:
    a._same(b)
    return SubsetMask(a.bits & ~b.bits, a.universe_size)


def submasks(bits: int) -> Iterator[int]:
    """Every submask of ``bits`` in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == bits:
            return
        sub = (sub - bits) & bits


def subsets_of(b: SubsetMask) -> Iterator[SubsetMask]:
    for bits in submasks(b.bits):
        yield SubsetMask(bits, b.universe_size)


def split_ranges(total: int, parts: int) -> list[range]:
    """Cut ``range(total)`` into at most ``parts`` disjoint, jointly exhaustive ranges."""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out = []
    start = 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        out.append(range(start, stop))
        start = stop
    return out


def coerce_bits(x: int | SubsetMask, n: int) -> int:
    """Accept a bare int or a SubsetMask and check it belongs to an ``n``-universe."""
    if isinstance(x, SubsetMask):
        if x.universe_size != n:
            raise UniverseMismatchError(
                f"mask from a universe of {x.universe_size}, expected {n}"
            )
        return x.bits
    bits = int(x)
    if bits < 0 or bits >> n:
        raise UniverseMismatchError(f"mask {bits:#x} does not fit a universe of {n}")
    return bits


def as_masks(seq: Sequence[int], n: int) -> list[SubsetMask]:
    return [SubsetMask(b, n) for b in seq]
