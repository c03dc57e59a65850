"""Seeded samplers for interior and boundary points of D.

All randomness comes from numpy's PCG64. Each trial derives its own generator
from ``SeedSequence([seed, N, trial])`` so a trial's point does not depend on
which worker runs it or in what order.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .core import ParamPoint
from .errors import ConfigError, DomainError
from .regions import Interior, classify

DEFAULT_BUDGET = 10_000


def trial_rng(seed: int, n: int, trial: int, stream: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, n, trial, stream])))


def _lattice_coords(n: int, bound: int, rng: np.random.Generator) -> tuple[Fraction, ...]:
    # uniform over points of the open simplex with common denominator b
    b = int(rng.integers(n, bound + 1))
    cuts = np.sort(rng.choice(np.arange(1, b), size=n - 1, replace=False))
    prev = 0
    coords = []
    for c in cuts.tolist():
        coords.append(Fraction(c - prev, b))
        prev = c
    return tuple(coords)


def sample_interior(n: int, denominator_bound: int, rng: np.random.Generator,
                    budget: int = DEFAULT_BUDGET) -> ParamPoint:
    """Random point of D off every wall; denominators never exceed the bound."""
    if denominator_bound < 2:
        raise ConfigError("denominator bound must be >= 2")
    if denominator_bound < n:
        raise ConfigError(f"denominator bound {denominator_bound} too small for N={n}")
    for _ in range(budget):
        point = ParamPoint(n, _lattice_coords(n, denominator_bound, rng))
        if isinstance(classify(point), Interior):
            return point
    raise DomainError(f"no interior point found for N={n} within {budget} draws")


def admissible_offsets(n: int, i: int) -> list[int]:
    """Integers j with i - N/2 < i + j < i + N/2 - 1, i.e. -N/2 < j < N/2 - 1."""
    return [j for j in range(-n, n) if -n < 2 * j < n - 2]


def wall_coefficients(n: int, i: int) -> tuple[int, ...]:
    """c_k with N p_i = sum_k c_k l_k."""
    return tuple(-k if k < i else n - k for k in range(1, n))


def sample_boundary(n: int, i: int, j: int, rng: np.random.Generator,
                    denominator_bound: int = 64, budget: int = DEFAULT_BUDGET) -> ParamPoint:
    """Random point of D with q_i = j + 1/2 exactly.

    Draws a full lattice point, scales it by a random power of two (walls near
    a corner of D are thin slices), then overwrites one coordinate with the
    solution of the linear equation q_i = j + 1/2.
    """
    if not 1 <= i <= n:
        raise DomainError(f"index {i} out of range 1..{n}")
    if j not in admissible_offsets(n, i):
        raise DomainError(f"j={j} is not admissible for N={n}")
    coeffs = wall_coefficients(n, i)
    target = Fraction(n, 2) - i - j  # the value of N p_i on the wall
    for _ in range(budget):
        shrink = Fraction(1, 2 ** int(rng.integers(0, 7)))
        coords = [shrink * c for c in _lattice_coords(n, max(denominator_bound, n), rng)]
        m = int(rng.integers(0, n - 1))
        rest = sum((c * x for k, (c, x) in enumerate(zip(coeffs, coords)) if k != m), Fraction(0))
        coords[m] = (target - rest) / coeffs[m]
        if coords[m] <= 0 or coords[m] >= 1 or sum(coords) >= 1:
            continue
        return ParamPoint(n, tuple(coords))
    raise DomainError(f"no boundary point with q_{i} = {j} + 1/2 found for N={n} within {budget} draws")
