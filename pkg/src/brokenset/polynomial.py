"""Exact univariate polynomials with integer coefficients.

Coefficients are stored lowest degree first with trailing zeros stripped, so
the zero polynomial is the empty tuple.  Every coefficient is kept inside the
signed 64-bit range; leaving it raises :class:`OverflowError` instead of
silently growing (the bound is part of the contract, not a Python limit).
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def _check(value: int) -> int:
    if value < INT64_MIN or value > INT64_MAX:
        raise OverflowError(f"coefficient {value} outside signed 64-bit range")
    return value


def _normalize(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPolynomial:
    """Immutable polynomial in ``x``; ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [_check(int(c)) for c in coeffs]
        object.__setattr__(self, "coeffs", _normalize(values))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls(())

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPolynomial:
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coeffs == _normalize([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return add(self, scale_signed(other, -1))

    def __neg__(self) -> IntPolynomial:
        return scale_signed(self, -1)

    def __call__(self, k: int) -> int:
        return eval_at(self, k)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return render(self)


def add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    res = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        res[i] += c
    return IntPolynomial(res)


def scale_signed(a: IntPolynomial, sign: int) -> IntPolynomial:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if sign == 1:
        return a
    return IntPolynomial(-c for c in a.coeffs)


def monomial_times_binomial(a: int, b: int) -> IntPolynomial:
    """Return ``x**a * (1 + x)**b`` expanded with exact binomial coefficients."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be natural numbers")
    return IntPolynomial([0] * a + [comb(b, j) for j in range(b + 1)])


def eval_at(p: IntPolynomial, k: int) -> int:
    """Horner evaluation; every intermediate value must fit in 64 bits."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = _check(_check(acc * k) + c)
    return acc


def sum_polynomials(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    acc: list[int] = []
    for p in polys:
        if len(p.coeffs) > len(acc):
            acc.extend([0] * (len(p.coeffs) - len(acc)))
        for i, c in enumerate(p.coeffs):
            acc[i] += c
    return IntPolynomial(acc)


def _term(c: int, power: int) -> str:
    mag = abs(c)
    if power == 0:
        return str(mag)
    body = "x" if power == 1 else f"x^{power}"
    return body if mag == 1 else f"{mag}{body}"


def render(p: IntPolynomial) -> str:
    """Human form, highest degree first: ``x^6 - 4x^4 + 3x^3 + x^2 - x``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for power in range(p.degree, -1, -1):
        c = p.coeffs[power]
        if c == 0:
            continue
        term = _term(c, power)
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def render_coeffs(p: IntPolynomial) -> str:
    """Machine form, lowest degree first: ``[0, -1, 1, 3, -4, 0, 1]``."""
    return "[" + ", ".join(str(c) for c in p.coeffs) + "]"


def parse_coeffs(text: str) -> IntPolynomial:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"not a coefficient list: {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return IntPolynomial()
    return IntPolynomial(int(tok) for tok in inner.split(","))
