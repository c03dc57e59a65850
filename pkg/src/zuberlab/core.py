"""Exact evaluation of p, q, g over rational parameter points.

Every sign decision here is made with :class:`fractions.Fraction`; floats only
appear as advisory values next to the exact signs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError

Sign = int  # one of -1, 0, +1
SignVector = tuple[Sign, ...]

_ONE = Fraction(1)
_TWO = Fraction(2)
_HALF = Fraction(1, 2)
_THREE_HALVES = Fraction(3, 2)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact coordinates; pass a Fraction or 'a/b' string")
    return Fraction(x)


@dataclass(frozen=True)
class ParamPoint:
    """A point of the open simplex D, i.e. lambda' = (l_1, ..., l_{N-1}).

    Coordinates must be strictly positive and sum to strictly less than one.
    """

    n: int
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"N must be an integer >= 2, got {self.n!r}")
        coords = tuple(as_fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.n - 1:
            raise DomainError(f"expected {self.n - 1} coordinates for N={self.n}, got {len(coords)}")
        for i, c in enumerate(coords, start=1):
            if not 0 < c < 1:
                raise DomainError(f"coordinate {i} = {c} is not in the open interval (0, 1)")
        if sum(coords) >= 1:
            raise DomainError(f"coordinates sum to {sum(coords)}, must be < 1")

    @classmethod
    def of(cls, *coords) -> "ParamPoint":
        return cls(len(coords) + 1, tuple(as_fraction(c) for c in coords))

    @classmethod
    def parse(cls, text: str) -> "ParamPoint":
        """Parse a comma separated list such as ``"1/8,1/4"``."""
        parts = [s.strip() for s in text.split(",") if s.strip()]
        if not parts:
            raise DomainError("empty point")
        try:
            coords = tuple(Fraction(s) for s in parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse point {text!r}: {exc}") from None
        return cls(len(coords) + 1, coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class SignCounts:
    plus: int
    minus: int
    zero: int

    @property
    def a(self) -> int:
        return self.plus - self.minus

    @property
    def total(self) -> int:
        return self.plus + self.minus + self.zero

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.plus, self.minus, self.zero)

    def __mul__(self, k: int) -> "SignCounts":
        return SignCounts(self.plus * k, self.minus * k, self.zero * k)

    __rmul__ = __mul__


@dataclass(frozen=True)
class GSigns:
    """Exact signs of g_1..g_N together with float values for reports."""

    signs: SignVector
    values: tuple[float, ...]


@dataclass(frozen=True)
class Theorem1Record:
    point: ParamPoint
    q_counts: SignCounts
    g_counts: SignCounts

    @property
    def passed(self) -> bool:
        return self.q_counts == self.g_counts


def compute_p(point: ParamPoint) -> tuple[Fraction, ...]:
    """Return (p_1, ..., p_N); they sum to zero and strictly decrease."""
    n = point.n
    weighted = sum((j * c for j, c in enumerate(point.coords, start=1)), Fraction(0)) / n
    tail = Fraction(0)
    p_rev = [-weighted]
    for c in reversed(point.coords):
        tail += c
        p_rev.append(tail - weighted)
    return tuple(reversed(p_rev))


def compute_q(point: ParamPoint) -> tuple[Fraction, ...]:
    n = point.n
    shift = Fraction(n + 1, 2)
    return tuple(-n * p + shift - i for i, p in enumerate(compute_p(point), start=1))


def cos_sign(q) -> Sign:
    """Exact sign of cos(pi * q) for rational q."""
    t = as_fraction(q) % _TWO
    if t == _HALF or t == _THREE_HALVES:
        return 0
    if t < _HALF or t > _THREE_HALVES:
        return 1
    return -1


def g_signs(point: ParamPoint) -> GSigns:
    """Signs and float values of g_i = (-1)^i prod_r 2 cos(pi (p_r - i/N))."""
    n = point.n
    p = compute_p(point)
    p_float = [float(x) for x in p]
    signs = []
    values = []
    for i in range(1, n + 1):
        shift = Fraction(i, n)
        s = -1 if i % 2 else 1
        for pr in p:
            s *= cos_sign(pr - shift)
            if s == 0:
                break
        signs.append(s)
        v = math.prod(2.0 * math.cos(math.pi * (pr - i / n)) for pr in p_float)
        values.append(-v if i % 2 else v)
    return GSigns(tuple(signs), tuple(values))


def count_signs(signs: Sequence[Sign] | Iterable[Sign]) -> SignCounts:
    signs = tuple(signs)
    if not signs:
        raise ValueError("cannot count signs of an empty sequence")
    plus = minus = zero = 0
    for s in signs:
        if s == 1:
            plus += 1
        elif s == -1:
            minus += 1
        elif s == 0:
            zero += 1
        else:
            raise ValueError(f"not a sign: {s!r}")
    return SignCounts(plus, minus, zero)


def q_signs(point: ParamPoint) -> SignVector:
    return tuple(cos_sign(q) for q in compute_q(point))


def verify_theorem1_at(point: ParamPoint) -> Theorem1Record:
    """Compare the sign tallies of {cos(pi q_i)} and {g_i} at one point."""
    return Theorem1Record(point, count_signs(q_signs(point)), count_signs(g_signs(point).signs))
