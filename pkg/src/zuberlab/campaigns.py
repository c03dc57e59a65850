"""Verification campaigns and the report they produce.

Work items are independent and are gathered in index order, so a report is
the same whether it was computed serially or on a process pool.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterable

from .core import ParamPoint, SignCounts, compute_p, compute_q, g_signs, q_signs, verify_theorem1_at
from .errors import ConfigError
from .fusion import MAX_VERTICES, ZuberReport, vertex_count, verify_zuber
from .regions import (
    Boundary,
    Interior,
    classify,
    lemma1_inverse,
    lemma1_r,
    predicted_g_signs,
    predicted_q_signs,
)
from .sampling import admissible_offsets, sample_boundary, sample_interior, trial_rng

SCHEMA_VERSION = 1
MAX_SEED = 2**64


@dataclass
class CampaignConfig:
    n_values: list[int] = field(default_factory=lambda: [2, 3, 4])
    trials: int = 100
    denominator_bound: int = 64
    seed: int = 0
    boundary_fraction: Fraction = Fraction(0)
    level_range: list[int] = field(default_factory=lambda: [1, 2, 3])
    output_path: Path | None = None
    tolerance: float = 1e-8
    jobs: int = 1

    def validate(self) -> None:
        if not self.n_values:
            raise ConfigError("n_values must not be empty")
        if any(n < 2 for n in self.n_values):
            raise ConfigError(f"every N must be >= 2, got {self.n_values}")
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.denominator_bound < 2:
            raise ConfigError("denominator bound must be >= 2")
        if not 0 <= self.seed < MAX_SEED:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        if not 0 <= self.boundary_fraction <= 1:
            raise ConfigError("boundary fraction must lie in [0, 1]")
        if self.tolerance <= 0:
            raise ConfigError("tolerance must be positive")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")

    def echo(self) -> dict[str, Any]:
        # jobs and output path are left out so they cannot change the report bytes
        return {
            "n_values": list(self.n_values),
            "trials": self.trials,
            "denominator_bound": self.denominator_bound,
            "seed": self.seed,
            "boundary_fraction": str(self.boundary_fraction),
            "level_range": list(self.level_range),
            "tolerance": self.tolerance,
        }


@dataclass
class Report:
    command: str
    config: dict[str, Any]
    cases: list[dict[str, Any]]
    conventions: dict[str, Any] = field(default_factory=dict)
    elapsed: float | None = None  # seconds; only serialized when requested

    @property
    def failures(self) -> list[dict[str, Any]]:
        out = []
        for case in self.cases:
            if not case["pass"]:
                key = {k: case[k] for k in ("N", "trial", "level") if k in case}
                out.append({**key, "reasons": case.get("reasons", [])})
        return out

    @property
    def passed(self) -> bool:
        return not self.failures

    def totals(self) -> dict[str, Any]:
        failed = len(self.failures)
        out: dict[str, Any] = {"cases": len(self.cases), "passed": len(self.cases) - failed, "failed": failed}
        kinds: dict[str, int] = {}
        for case in self.cases:
            if "kind" in case:
                kinds[case["kind"]] = kinds.get(case["kind"], 0) + 1
        if kinds:
            out["by_kind"] = dict(sorted(kinds.items()))
        return out

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        d: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "config": self.config,
            "pass": self.passed,
            "totals": self.totals(),
            "failures": self.failures,
        }
        if self.conventions:
            d["conventions"] = self.conventions
        d["cases"] = self.cases
        if include_timing and self.elapsed is not None:
            d["timing"] = {"wall_clock_seconds": round(self.elapsed, 3)}
        return d


def _ordered_map(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    chunk = max(1, math.ceil(len(items) / (jobs * 8)))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _counts(c: SignCounts) -> dict[str, int]:
    return {"plus": c.plus, "minus": c.minus, "zero": c.zero, "a": c.a}


def _chamber(c) -> dict[str, Any]:
    if isinstance(c, Interior):
        return {"type": "interior", "gamma": list(c.gamma.gamma)}
    return {"type": "boundary", "indices": list(c.indices)}


def is_boundary_trial(trial: int, fraction: Fraction) -> bool:
    """Spread boundary trials evenly: trial t is boundary when floor((t+1)f) > floor(t f)."""
    return math.floor((trial + 1) * fraction) > math.floor(trial * fraction)


def lemma1_roundtrip(point: ParamPoint) -> bool:
    """Both directions of the pairing between half-integer q_i and vanishing g_r."""
    q = compute_q(point)
    g = g_signs(point).signs
    half = [i for i, x in enumerate(q, start=1) if (x - Fraction(1, 2)).denominator == 1]
    zeros = [r for r, s in enumerate(g, start=1) if s == 0]
    images = [lemma1_r(i, q[i - 1], point.n) for i in half]
    if sorted(images) != zeros:
        return False
    if any(lemma1_inverse(r, point) != i for i, r in zip(half, images)):
        return False
    return all(lemma1_r(lemma1_inverse(r, point), q[lemma1_inverse(r, point) - 1], point.n) == r for r in zeros)


def float_crosscheck(point: ParamPoint, tolerance: float) -> list[str]:
    gs = g_signs(point)
    bad = []
    for r, (s, v) in enumerate(zip(gs.signs, gs.values), start=1):
        if abs(v) > tolerance and (v > 0) != (s > 0):
            bad.append(f"g_{r}: exact sign {s} vs float {v:.3e}")
        elif s == 0 and abs(v) > tolerance:
            bad.append(f"g_{r}: exact zero vs float {v:.3e}")
    return bad


def theorem1_case(item: tuple[int, int, bool, int, int, float]) -> dict[str, Any]:
    n, trial, boundary, seed, bound, tolerance = item
    rng = trial_rng(seed, n, trial)
    target = None
    pairs = [(i, j) for i in range(1, n + 1) for j in admissible_offsets(n, i)]
    if boundary and pairs:
        i, j = pairs[int(rng.integers(0, len(pairs)))]
        point = sample_boundary(n, i, j, rng, denominator_bound=bound)
        target = {"i": i, "j": j}
    else:
        # N = 2 has no walls inside D, so boundary trials fall back to interior
        boundary = False
        point = sample_interior(n, bound, rng)
    rec = verify_theorem1_at(point)
    chamber = classify(point)
    reasons = []
    if not rec.passed:
        reasons.append("Q and G sign counts differ")
    case: dict[str, Any] = {
        "N": n,
        "trial": trial,
        "kind": "boundary" if boundary else "interior",
        "point": [str(c) for c in point.coords],
        "chamber": _chamber(chamber),
        "q_counts": _counts(rec.q_counts),
        "g_counts": _counts(rec.g_counts),
    }
    if isinstance(chamber, Interior):
        if boundary:
            reasons.append("boundary sample classified as interior")
        match = (
            predicted_g_signs(chamber.gamma) == g_signs(point).signs
            and predicted_q_signs(chamber.gamma) == q_signs(point)
        )
        case["predicted_signs_match"] = match
        if not match:
            reasons.append("chamber prediction differs from direct signs")
    else:
        if not boundary:
            reasons.append("interior sample classified as boundary")
        if target is not None:
            case["target"] = target
            if target["i"] not in chamber.indices:
                reasons.append("target wall missing from boundary indices")
        ok = lemma1_roundtrip(point)
        case["lemma1_roundtrip"] = ok
        if not ok:
            reasons.append("half-integer q / vanishing g pairing failed")
        if rec.q_counts.zero < 1 or rec.g_counts.zero < 1:
            reasons.append("boundary point without zeros")
    reasons.extend(float_crosscheck(point, tolerance))
    case["pass"] = not reasons
    if reasons:
        case["reasons"] = reasons
    return case


def run_theorem1_campaign(config: CampaignConfig) -> Report:
    config.validate()
    start = time.perf_counter()
    items = [
        (n, t, is_boundary_trial(t, config.boundary_fraction), config.seed,
         config.denominator_bound, config.tolerance)
        for n in config.n_values
        for t in range(config.trials)
    ]
    cases = _ordered_map(theorem1_case, items, config.jobs)
    return Report("theorem1", config.echo(), cases, elapsed=time.perf_counter() - start)


def _sci(x: float) -> float:
    return float(f"{x:.1e}")


def _triple(t) -> list[int]:
    return list(t.as_tuple())


def zuber_case(item: tuple[int, int]) -> dict[str, Any]:
    n, level = item
    r: ZuberReport = verify_zuber(n, level + n)
    case: dict[str, Any] = {
        "N": n,
        "level": level,
        "h": r.h,
        "vertices": r.vertices,
        "signature_exact": _triple(r.exact),
        "signature_numeric": _triple(r.numeric),
        "zuber_counts": _triple(r.zuber),
        "axioms": r.axioms,
        "spectral": {
            "max_error": {str(p): _sci(e) for p, e in r.spectral.max_error.items()},
            "joint_error": _sci(r.spectral.joint_error),
            "multiplicity_free": r.spectral.multiplicity_free,
            "pass": r.spectral.passed,
        },
        "bridge": {
            "pass": r.bridge_pass,
            "q_unreduced_equality": r.bridge_q_exact,
            "max_g_error": _sci(r.bridge_max_error),
        },
        "orbits": [
            {
                "representative": str(o.orbit.representative),
                "d": o.orbit.d,
                "g_counts": [o.g_counts.plus, o.g_counts.minus, o.g_counts.zero],
                "q_counts": [o.q_counts.plus, o.q_counts.minus, o.q_counts.zero],
                "scaling_ok": o.scaling_ok,
                "pass": o.passed,
            }
            for o in r.orbits
        ],
        "warnings": [_sci(w) for w in r.warnings],
        "pass": r.passed,
    }
    if not r.passed:
        case["reasons"] = r.failures
    return case


ZUBER_CONVENTIONS = {
    "weights": "rho-shifted Dynkin labels, lambda_i >= 1, sum < h",
    "g_identity": "g^(sigma^j lambda) = g_j(lambda')",
    "q_identity": "q_R(sigma^-j lambda) = q_j(lambda')",
    "tau_sigma_offset": "tau(sigma(lambda)) = tau(lambda) + h mod N",
}


def run_zuber_campaign(config: CampaignConfig) -> Report:
    config.validate()
    if not config.level_range or any(k < 1 for k in config.level_range):
        raise ConfigError(f"levels must be >= 1, got {config.level_range}")
    items = [(n, k) for n in config.n_values for k in config.level_range]
    for n, k in items:
        if vertex_count(n, n + k) > MAX_VERTICES:
            raise ConfigError(f"N={n}, level={k} exceeds the {MAX_VERTICES}-vertex cap")
    start = time.perf_counter()
    cases = _ordered_map(zuber_case, items, config.jobs)
    return Report("zuber", config.echo(), cases, dict(ZUBER_CONVENTIONS), elapsed=time.perf_counter() - start)


def inspect_point(point: ParamPoint) -> Report:
    """Full breakdown of every quantity at one point."""
    rec = verify_theorem1_at(point)
    gs = g_signs(point)
    chamber = classify(point)
    case: dict[str, Any] = {
        "N": point.n,
        "point": [str(c) for c in point.coords],
        "p": [str(x) for x in compute_p(point)],
        "q": [str(x) for x in compute_q(point)],
        "cos_signs": list(q_signs(point)),
        "g_signs": list(gs.signs),
        "g_values": [round(v, 12) for v in gs.values],
        "chamber": _chamber(chamber),
        "q_counts": _counts(rec.q_counts),
        "g_counts": _counts(rec.g_counts),
    }
    reasons = [] if rec.passed else ["Q and G sign counts differ"]
    if isinstance(chamber, Interior):
        case["predicted_g_signs"] = list(predicted_g_signs(chamber.gamma))
        case["predicted_q_signs"] = list(predicted_q_signs(chamber.gamma))
        case["blocks"] = list(chamber.gamma.blocks())
        if case["predicted_g_signs"] != case["g_signs"] or case["predicted_q_signs"] != case["cos_signs"]:
            reasons.append("chamber prediction differs from direct signs")
    elif isinstance(chamber, Boundary):
        q = compute_q(point)
        case["lemma1_pairs"] = [[i, lemma1_r(i, q[i - 1], point.n)] for i in chamber.indices]
        if not lemma1_roundtrip(point):
            reasons.append("half-integer q / vanishing g pairing failed")
    case["pass"] = not reasons
    if reasons:
        case["reasons"] = reasons
    return Report("point", {"point": case["point"]}, [case])

