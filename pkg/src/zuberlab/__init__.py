"""Exact sign counting for the intersection forms of affine SL(N) fusion graphs.

The package checks, with rational arithmetic, that the sign tallies of
{cos(pi q_i)} and {g_i} agree on the parameter simplex, and that the signature
of 2I + sum_p G_p for the regular fusion graphs equals the interval counts of
the q_R values.
"""
from .core import (
    ParamPoint,
    SignCounts,
    compute_p,
    compute_q,
    cos_sign,
    count_signs,
    g_signs,
    verify_theorem1_at,
)
from .errors import CapExceededError, ConfigError, DomainError, VerificationError

__all__ = [
    "ParamPoint",
    "SignCounts",
    "compute_p",
    "compute_q",
    "cos_sign",
    "count_signs",
    "g_signs",
    "verify_theorem1_at",
    "CapExceededError",
    "ConfigError",
    "DomainError",
    "VerificationError",
]

__version__ = "0.1.0"
