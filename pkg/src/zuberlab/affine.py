"""Integrable weights of affine SL(N) and their link to the parameter simplex.

Weights use strictly positive (rho-shifted) Dynkin labels: lambda_i >= 1 and
sum(lambda) < h, where h = level + N. For N = 2 this gives h - 1 vertices, the
A_{h-1} Dynkin diagram.

Conventions fixed here after checking them against direct evaluation:

* ``q_R(sigma^{-j} lambda) == q_j(lambda')`` holds as an exact equality of
  rationals, not only modulo 2.
* ``g^{(sigma^j lambda)} == g_j(lambda')``; the opposite power fails.
* ``tau(sigma(lambda)) == tau(lambda) + h (mod N)``.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import ParamPoint, Sign, compute_p, compute_q, g_signs
from .errors import DomainError, VerificationError

IMAG_TOL = 1e-9
BRIDGE_TOL = 1e-10


@dataclass(frozen=True, order=True)
class Weight:
    n: int
    h: int
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2 or self.h <= self.n:
            raise DomainError(f"need h > N >= 2, got N={self.n}, h={self.h}")
        if len(self.labels) != self.n - 1:
            raise DomainError(f"weight needs {self.n - 1} labels, got {self.labels}")
        if any(x < 1 for x in self.labels) or sum(self.labels) >= self.h:
            raise DomainError(f"{self.labels} is not integrable at h={self.h}")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.labels)) + ")"


@dataclass(frozen=True)
class Orbit:
    members: tuple[Weight, ...]  # sigma^0(rep), sigma^1(rep), ...

    @property
    def representative(self) -> Weight:
        return self.members[0]

    @property
    def d(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class EigenvalueData:
    weight: Weight
    q_R: Fraction
    g_value: float
    g_sign: Sign


@dataclass(frozen=True)
class BridgeReport:
    weight: Weight
    q_exact: bool  # q_R(sigma^{-j}) == q_j for all j, unreduced
    q_mod2: bool
    g_max_error: float

    @property
    def passed(self) -> bool:
        return self.q_mod2 and self.g_max_error < BRIDGE_TOL


def enumerate_weights(n: int, h: int) -> list[Weight]:
    if n < 2 or h <= n:
        raise DomainError(f"need h > N >= 2, got N={n}, h={h}")
    out = []
    for labels in itertools.product(range(1, h - n + 2), repeat=n - 1):
        if sum(labels) < h:
            out.append(Weight(n, h, labels))
    return out


def sigma(w: Weight) -> Weight:
    return Weight(w.n, w.h, (w.h - sum(w.labels),) + w.labels[:-1])


def sigma_inverse(w: Weight) -> Weight:
    return Weight(w.n, w.h, w.labels[1:] + (w.h - sum(w.labels),))


def sigma_power(w: Weight, j: int) -> Weight:
    j %= w.n
    for _ in range(j):
        w = sigma(w)
    return w


def orbit_of(w: Weight) -> Orbit:
    members = [w]
    nxt = sigma(w)
    while nxt != w:
        members.append(nxt)
        nxt = sigma(nxt)
    # rotate so the lexicographically least member comes first
    start = min(range(len(members)), key=lambda i: members[i].labels)
    return Orbit(tuple(members[start:] + members[:start]))


def orbits(weights: list[Weight]) -> list[Orbit]:
    """Partition ``weights`` into sigma-orbits, ordered by representative."""
    seen: set[Weight] = set()
    out = []
    for w in sorted(weights):
        if w in seen:
            continue
        orb = orbit_of(w)
        seen.update(orb.members)
        out.append(orb)
    if seen != set(weights):
        raise DomainError("weight list is not closed under sigma")
    return out


def tau(w: Weight) -> int:
    return sum(j * x for j, x in enumerate(w.labels, start=1)) % w.n


def conjugate(w: Weight) -> Weight:
    return Weight(w.n, w.h, tuple(reversed(w.labels)))


def to_param(w: Weight) -> ParamPoint:
    return ParamPoint(w.n, tuple(Fraction(x, w.h) for x in w.labels))


def e_dot_fundamental(j: int, i: int, n: int) -> Fraction:
    """(e_j, Lambda_i) = [j <= i] - i/N."""
    return (1 if j <= i else 0) - Fraction(i, n)


def e_dot_weight(w: Weight) -> tuple[Fraction, ...]:
    """((e_1, lambda), ..., (e_N, lambda))."""
    n = w.n
    return tuple(
        sum((x * e_dot_fundamental(j, i, n) for i, x in enumerate(w.labels, start=1)), Fraction(0))
        for j in range(1, n + 1)
    )


def epsilons(w: Weight) -> list[complex]:
    return [cmath.exp(-2j * math.pi * float(s) / w.h) for s in e_dot_weight(w)]


def q_R(w: Weight) -> Fraction:
    n, h = w.n, w.h
    s = sum(j * (x - 1) for j, x in enumerate(w.labels, start=1))
    return Fraction(s, h) + Fraction((n - h) * (n - 1), 2 * h)


def eigenvalue_g(w: Weight) -> EigenvalueData:
    """g^{(lambda)} = prod_l (1 + eps_l(lambda)) with its exact sign.

    The exact sign comes from g^{(lambda)} = g^{(sigma^N lambda)} = g_N(lambda').
    """
    z = complex(1.0)
    for eps in epsilons(w):
        z *= 1 + eps
    if abs(z.imag) > IMAG_TOL:
        raise VerificationError(f"g at {w} has imaginary part {z.imag:.3e}")
    sign = g_signs(to_param(w)).signs[w.n - 1]
    return EigenvalueData(w, q_R(w), z.real, sign)


def bridge_identities(w: Weight) -> BridgeReport:
    """Check both identities tying the weight data to the Q and G sets at lambda'.

    For j = 1..N: q_R(sigma^{-j} lambda) against q_j(lambda') (mod 2 and
    unreduced) and g^{(sigma^j lambda)} against g_j(lambda') numerically.
    """
    point = to_param(w)
    q = compute_q(point)
    g_vals = g_signs(point).values
    exact = mod2 = True
    err = 0.0
    down = up = w
    for j in range(1, w.n + 1):
        down = sigma_inverse(down)
        up = sigma(up)
        diff = q_R(down) - q[j - 1]
        exact = exact and diff == 0
        mod2 = mod2 and diff % 2 == 0
        err = max(err, abs(eigenvalue_g(up).g_value - g_vals[j - 1]))
    return BridgeReport(w, exact, mod2, err)


def check_p_matches_scalar_products(w: Weight) -> bool:
    """p_i(to_param(lambda)) == (e_i, lambda)/h, exactly."""
    return compute_p(to_param(w)) == tuple(s / w.h for s in e_dot_weight(w))

