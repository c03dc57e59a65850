"""Chamber decomposition of D and the signs it forces.

A point of D whose q_i are all off the half-integers lies in a unique open
chamber labelled by an integer vector gamma, with

    beta_i = N/2 - i + gamma_i  <  N p_i  <  beta_i + 1.

Inside a chamber every sign of cos(pi q_i) and of g_r is a function of gamma
alone; :func:`predicted_g_signs` and :func:`predicted_q_signs` compute those
signs without looking at the point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import ParamPoint, Sign, SignVector, compute_p, compute_q, g_signs
from .errors import DomainError

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GammaVector:
    n: int
    gamma: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.gamma) != self.n:
            raise DomainError(f"gamma must have {self.n} entries, got {len(self.gamma)}")
        beta = self.beta
        for i in range(self.n - 1):
            if beta[i] < beta[i + 1]:
                raise DomainError(f"beta increases between indices {i + 1} and {i + 2}: {self.gamma}")
        if beta[0] - beta[-1] > self.n:
            raise DomainError(f"beta_1 - beta_N = {beta[0] - beta[-1]} exceeds N={self.n}")

    @property
    def beta(self) -> tuple[Fraction, ...]:
        half_n = Fraction(self.n, 2)
        return tuple(half_n - i + g for i, g in enumerate(self.gamma, start=1))

    def blocks(self) -> tuple[int, ...]:
        """Block ends i_1 < ... < i_t = N grouping runs of equal beta."""
        beta = self.beta
        ends = [i for i in range(1, self.n) if beta[i - 1] != beta[i]]
        ends.append(self.n)
        return tuple(ends)


@dataclass(frozen=True)
class Interior:
    gamma: GammaVector


@dataclass(frozen=True)
class Boundary:
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.indices:
            raise DomainError("a boundary class needs at least one index")


ChamberClass = Interior | Boundary


def classify(point: ParamPoint) -> ChamberClass:
    n = point.n
    half_n = Fraction(n, 2)
    shifted = [n * p + i - half_n for i, p in enumerate(compute_p(point), start=1)]
    on_wall = tuple(i for i, x in enumerate(shifted, start=1) if x.denominator == 1)
    if on_wall:
        return Boundary(on_wall)
    return Interior(GammaVector(n, tuple(math.floor(x) for x in shifted)))


def lemma1_r(i: int, q, n: int) -> int:
    """Index r with g_r = 0 paired with a half-integer q_i.

    Writes q_i = j + 1/2 and returns the unique 0 < r < N+1 with
    (r + j + i)/N integral.
    """
    q = Fraction(q)
    j_frac = q - _HALF
    if j_frac.denominator != 1:
        raise DomainError(f"q_{i} = {q} is not a half-integer")
    j = int(j_frac)
    if not (1 <= i <= n):
        raise DomainError(f"index {i} out of range 1..{n}")
    s = i + j
    # i - N/2 < i + j < i + N/2 - 1, written without fractions
    if not (2 * i - n < 2 * s < 2 * i + n - 2):
        raise DomainError(f"j = {j} out of the admissible range for i={i}, N={n}")
    if s < 0:
        return -s
    if s < n:
        return n - s
    return 2 * n - s


def lemma1_inverse(r: int, point: ParamPoint) -> int:
    """The unique i with (q_i + i + r - 1/2)/N integral, given g_r(point) = 0."""
    n = point.n
    if g_signs(point).signs[r - 1] != 0:
        raise DomainError(f"g_{r} does not vanish at {point}")
    hits = [
        i
        for i, q in enumerate(compute_q(point), start=1)
        if ((q + i + r - _HALF) / n).denominator == 1
    ]
    if len(hits) != 1:
        raise DomainError(f"expected a unique preimage for r={r}, found {hits}")
    return hits[0]


def _parity_sign(e: int) -> Sign:
    return -1 if e % 2 else 1


def predicted_g_signs(gamma: GammaVector) -> SignVector:
    """Signs of g_1..g_N on the chamber, read off from beta and its blocks."""
    n = gamma.n
    beta = gamma.beta
    blocks = gamma.blocks()
    t = len(blocks)
    b1, bn = beta[0], beta[-1]
    signs = []
    for r in range(1, n + 1):
        # k with beta_N + 1 - r <= N(k + 1/2) <= beta_1 - r
        k = math.ceil((bn + 1 - r) / n - _HALF)
        if n * (k + _HALF) <= b1 - r:
            f = None
            for u in range(1, t):
                lo = beta[blocks[u] - 1] + 1 - r
                hi = beta[blocks[u - 1] - 1] - r
                if lo <= n * (k + _HALF) <= hi:
                    f = u
                    break
            if f is None:
                raise DomainError(f"no block brackets the crossing for r={r}, gamma={gamma.gamma}")
            signs.append(_parity_sign(r + n * k - blocks[f - 1]))
        else:
            k = math.floor((bn - r) / n + _HALF)
            if not (n * (k - _HALF) <= bn - r and b1 + 1 - r <= n * (k + _HALF)):
                raise DomainError(f"beta window for r={r} straddles two half-integers, gamma={gamma.gamma}")
            signs.append(_parity_sign(r + k * n))
    return tuple(signs)


def predicted_q_signs(gamma: GammaVector) -> SignVector:
    return tuple(_parity_sign(g) for g in gamma.gamma)
