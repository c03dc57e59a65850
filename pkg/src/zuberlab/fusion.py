"""Regular fusion graphs of affine SL(N) and the signature of their intersection form.

The Verlinde matrices G_p are built combinatorially: from a vertex lambda add
every weight e_{j_1} + ... + e_{j_p} (distinct j's) of the p-th fundamental
representation and drop candidates that leave the alcove. The result is then
checked against the graph axioms and against the predicted spectrum, so a
wrong truncation rule surfaces as a :class:`VerificationError`.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

import numpy as np
from scipy import sparse
from scipy.optimize import linear_sum_assignment
from scipy.sparse.csgraph import connected_components

from .affine import (
    Orbit,
    Weight,
    bridge_identities,
    conjugate,
    enumerate_weights,
    epsilons,
    eigenvalue_g,
    orbits,
    q_R,
    tau,
    to_param,
)
from .core import SignCounts, count_signs, cos_sign, g_signs, verify_theorem1_at
from .errors import CapExceededError, DomainError, VerificationError

log = logging.getLogger(__name__)

MAX_VERTICES = 20_000
SPECTRAL_TOL = 1e-8
ZERO_TOL = 1e-8
WARN_BAND = (1e-12, 1e-6)

# fixed, generic coefficients for the joint-spectrum probe sum_p c_p G_p
_JOINT_COEFFS = (1.0, 0.7071067811865476, 0.5773502691896258, 0.4472135954999579,
                 0.3779644730092272, 0.3015113445777636, 0.2773500981126146)


def vertex_count(n: int, h: int) -> int:
    return 0 if h <= n else comb(h - 1, n - 1)


def fundamental_shifts(n: int, p: int) -> list[tuple[int, ...]]:
    """Dynkin-label shifts e_{j_1} + ... + e_{j_p} for j_1 < ... < j_p."""
    basis = []
    for j in range(1, n + 1):
        v = [0] * (n - 1)
        if j <= n - 1:
            v[j - 1] += 1
        if j >= 2:
            v[j - 2] -= 1
        basis.append(v)
    shifts = []
    for js in itertools.combinations(range(n), p):
        shifts.append(tuple(sum(basis[j][i] for j in js) for i in range(n - 1)))
    return shifts


@dataclass(frozen=True)
class FusionGraph:
    n: int
    h: int
    vertices: tuple[Weight, ...]
    matrices: tuple[sparse.csr_matrix, ...]  # G_1 .. G_{N-1}

    @cached_property
    def index(self) -> dict[Weight, int]:
        return {w: k for k, w in enumerate(self.vertices)}

    def G(self, p: int) -> sparse.csr_matrix:
        return self.matrices[p - 1]

    def edges(self, p: int) -> list[tuple[Weight, Weight]]:
        m = self.G(p).tocoo()
        pairs = sorted(zip(m.row.tolist(), m.col.tolist()))
        return [(self.vertices[a], self.vertices[b]) for a, b in pairs]


@dataclass(frozen=True)
class SignatureTriple:
    plus: int
    minus: int
    zero: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.plus, self.minus, self.zero)

    @classmethod
    def from_counts(cls, c: SignCounts) -> "SignatureTriple":
        return cls(c.plus, c.minus, c.zero)


@dataclass(frozen=True)
class SpectralReport:
    max_error: dict[int, float]  # per p
    joint_error: float
    multiplicity_free: bool

    @property
    def passed(self) -> bool:
        return (
            all(e < SPECTRAL_TOL for e in self.max_error.values())
            and self.joint_error < SPECTRAL_TOL
            and self.multiplicity_free
        )


def _build(n: int, h: int) -> FusionGraph:
    if h <= n or n < 2:
        raise DomainError(f"need h > N >= 2, got N={n}, h={h}")
    nv = vertex_count(n, h)
    if nv > MAX_VERTICES:
        raise CapExceededError(f"N={n}, h={h} gives {nv} vertices, cap is {MAX_VERTICES}")
    vertices = tuple(enumerate_weights(n, h))
    index = {w.labels: k for k, w in enumerate(vertices)}
    mats = []
    for p in range(1, n):
        rows, cols = [], []
        shifts = fundamental_shifts(n, p)
        for a, w in enumerate(vertices):
            for s in shifts:
                b = index.get(tuple(x + y for x, y in zip(w.labels, s)))
                if b is not None:
                    rows.append(a)
                    cols.append(b)
        data = np.ones(len(rows), dtype=np.int64)
        mats.append(sparse.csr_matrix((data, (rows, cols)), shape=(nv, nv), dtype=np.int64))
    return FusionGraph(n, h, vertices, tuple(mats))


def check_axioms(graph: FusionGraph) -> dict[str, bool]:
    """Structural axioms; the spectral one lives in :func:`spectral_check`."""
    n = graph.n
    mats = graph.matrices
    nv = len(graph.vertices)
    index = graph.index
    conj = np.array([index[conjugate(w)] for w in graph.vertices])
    taus = np.array([tau(w) for w in graph.vertices])

    involution = bool(np.all(conj[conj] == np.arange(nv))) and bool(
        np.all((taus[conj] + taus) % n == 0)
    )
    zero_one = all(m.nnz == 0 or (m.data.min() >= 0 and m.data.max() <= 1) for m in mats)
    commute = all(
        (mats[a] @ mats[b] - mats[b] @ mats[a]).count_nonzero() == 0
        for a, b in itertools.combinations(range(len(mats)), 2)
    )
    transpose = all((mats[p - 1].T - mats[n - p - 1]).count_nonzero() == 0 for p in range(1, n))
    conj_sym = True
    grading = True
    for p, m in enumerate(mats, start=1):
        coo = m.tocoo()
        if np.any((taus[coo.col] - taus[coo.row] - p) % n != 0):
            grading = False
        flipped = m[conj][:, conj].T
        if (flipped - m).count_nonzero():
            conj_sym = False
    n_comp, _ = connected_components(mats[0], directed=True, connection="weak")
    return {
        "involution": involution,
        "nonnegative_integer": zero_one,
        "commuting": commute,
        "connected": n_comp == 1,
        "tau_grading": grading,
        "transpose_pairing": transpose,
        "conjugation_symmetry": conj_sym,
    }


def predicted_eigenvalues(graph: FusionGraph) -> np.ndarray:
    """Row k holds (e_1, ..., e_{N-1}) of eps(lambda_k): the joint spectrum."""
    n = graph.n
    out = np.empty((len(graph.vertices), n - 1), dtype=complex)
    for k, w in enumerate(graph.vertices):
        # elementary symmetric polynomials from prod (1 + eps t)
        coeffs = np.array([1.0 + 0j])
        for eps in epsilons(w):
            coeffs = np.convolve(coeffs, np.array([1.0, eps]))
        out[k] = coeffs[1:n]
    return out


def _match_error(a: np.ndarray, b: np.ndarray) -> float:
    cost = np.abs(a[:, None] - b[None, :])
    r, c = linear_sum_assignment(cost)
    return float(cost[r, c].max())


def spectral_check(graph: FusionGraph) -> SpectralReport:
    n = graph.n
    pred = predicted_eigenvalues(graph)
    errors = {}
    for p in range(1, n):
        numeric = np.linalg.eigvals(graph.G(p).toarray().astype(float))
        errors[p] = _match_error(numeric, pred[:, p - 1])
    coeffs = np.array(_JOINT_COEFFS[: n - 1])
    combo = sum(c * graph.G(p).toarray().astype(float) for p, c in enumerate(coeffs, start=1))
    joint = _match_error(np.linalg.eigvals(combo), pred @ coeffs)
    multiplicity_free = True
    if len(pred) > 1:
        gaps = np.abs(pred[:, None, :] - pred[None, :, :]).max(axis=2)
        np.fill_diagonal(gaps, np.inf)
        multiplicity_free = bool(gaps.min() > 1e-6)
    return SpectralReport(errors, joint, multiplicity_free)


def build_regular_graph(n: int, h: int) -> FusionGraph:
    """Fusion graph of affine SL(N) at level h - N, verified before return."""
    graph = _build(n, h)
    axioms = check_axioms(graph)
    failed = [name for name, ok in axioms.items() if not ok]
    if failed:
        raise VerificationError(f"N={n}, h={h}: axioms failed: {', '.join(failed)}")
    spectral = spectral_check(graph)
    if not spectral.passed:
        raise VerificationError(f"N={n}, h={h}: spectral check failed: {spectral}")
    return graph


def intersection_form(graph: FusionGraph) -> np.ndarray:
    """g = 2 I + sum_p G_p as a dense integer matrix."""
    nv = len(graph.vertices)
    total = sum(graph.matrices[1:], graph.matrices[0]).toarray()
    g = 2 * np.eye(nv, dtype=np.int64) + total
    if not np.array_equal(g, g.T):
        raise VerificationError("intersection form is not symmetric")
    return g


@dataclass(frozen=True)
class OrbitRecord:
    orbit: Orbit
    g_counts: SignCounts  # over g^{(sigma^j rep)}, j = 1..d
    q_counts: SignCounts  # over cos(pi q_R(sigma^j rep)), j = 1..d
    scaling_ok: bool  # Q and G counts over all N indices at rep' equal N/d times the orbit counts

    @property
    def passed(self) -> bool:
        return self.g_counts == self.q_counts and self.scaling_ok


def orbit_records(n: int, h: int) -> list[OrbitRecord]:
    out = []
    for orb in orbits(enumerate_weights(n, h)):
        rep = orb.representative
        point = to_param(rep)
        gs = g_signs(point).signs
        d = orb.d
        # members[j % d] == sigma^j(rep)
        g_counts = count_signs(gs[j - 1] for j in range(1, d + 1))
        q_counts = count_signs(cos_sign(q_R(orb.members[j % d])) for j in range(1, d + 1))
        full = verify_theorem1_at(point)
        d1 = n // d
        scaling_ok = full.g_counts == d1 * g_counts and full.q_counts == d1 * q_counts
        out.append(OrbitRecord(orb, g_counts, q_counts, scaling_ok))
    return out


def signature_exact(graph: FusionGraph) -> SignatureTriple:
    """Signature from the exact signs g_j(lambda'), aggregated orbit by orbit."""
    plus = minus = zero = 0
    for rec in orbit_records(graph.n, graph.h):
        plus += rec.g_counts.plus
        minus += rec.g_counts.minus
        zero += rec.g_counts.zero
    return SignatureTriple(plus, minus, zero)


@dataclass(frozen=True)
class NumericSignature:
    triple: SignatureTriple
    warnings: tuple[float, ...] = field(default=())  # eigenvalues inside WARN_BAND


def signature_numeric(form: np.ndarray, tol: float = ZERO_TOL) -> NumericSignature:
    form = np.asarray(form)
    if form.ndim != 2 or form.shape[0] != form.shape[1] or not np.array_equal(form, form.T):
        raise DomainError("signature_numeric needs a square symmetric matrix")
    try:
        ev = np.linalg.eigvalsh(form.astype(float))
    except np.linalg.LinAlgError as exc:
        raise VerificationError(f"eigensolver failed: {exc}") from exc
    plus = int(np.sum(ev > tol))
    minus = int(np.sum(ev < -tol))
    lo, hi = WARN_BAND
    warns = tuple(float(x) for x in ev if lo <= abs(x) < hi)
    for x in warns:
        log.warning("eigenvalue %.3e lies in the ambiguous band", x)
    return NumericSignature(SignatureTriple(plus, minus, len(ev) - plus - minus), warns)


def zuber_counts(n: int, h: int) -> SignatureTriple:
    counts = count_signs(cos_sign(q_R(w)) for w in enumerate_weights(n, h))
    return SignatureTriple.from_counts(counts)


@dataclass(frozen=True)
class ZuberReport:
    n: int
    h: int
    vertices: int
    axioms: dict[str, bool]
    spectral: SpectralReport
    exact: SignatureTriple
    numeric: SignatureTriple
    zuber: SignatureTriple
    orbits: tuple[OrbitRecord, ...]
    bridge_pass: bool
    bridge_q_exact: bool
    bridge_max_error: float
    eigen_sign_consistent: bool
    warnings: tuple[float, ...]

    @property
    def level(self) -> int:
        return self.h - self.n

    @property
    def failures(self) -> list[str]:
        out = [f"axiom {k}" for k, ok in self.axioms.items() if not ok]
        if not self.spectral.passed:
            out.append("spectral")
        if not (self.exact == self.numeric == self.zuber):
            out.append("signature mismatch")
        if not all(o.g_counts == o.q_counts for o in self.orbits):
            out.append("orbit counts")
        if not all(o.scaling_ok for o in self.orbits):
            out.append("orbit scaling")
        if not self.bridge_pass:
            out.append("bridge identities")
        if not self.eigen_sign_consistent:
            out.append("eigenvalue sign")
        return out

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_zuber(n: int, h: int) -> ZuberReport:
    """Run every check of the signature statement for one (N, h)."""
    if vertex_count(n, h) > MAX_VERTICES:
        raise CapExceededError(f"N={n}, h={h} exceeds the {MAX_VERTICES}-vertex cap")
    graph = _build(n, h)
    axioms = check_axioms(graph)
    spectral = spectral_check(graph)
    records = tuple(orbit_records(n, h))
    exact = SignatureTriple(
        sum(r.g_counts.plus for r in records),
        sum(r.g_counts.minus for r in records),
        sum(r.g_counts.zero for r in records),
    )
    numeric = signature_numeric(intersection_form(graph))
    bridges = [bridge_identities(w) for w in graph.vertices]
    consistent = True
    for w in graph.vertices:
        ev = eigenvalue_g(w)
        if abs(ev.g_value) > 1e-9 and (ev.g_value > 0) != (ev.g_sign > 0):
            consistent = False
    return ZuberReport(
        n=n,
        h=h,
        vertices=len(graph.vertices),
        axioms=axioms,
        spectral=spectral,
        exact=exact,
        numeric=numeric.triple,
        zuber=zuber_counts(n, h),
        orbits=records,
        bridge_pass=all(b.passed for b in bridges),
        bridge_q_exact=all(b.q_exact for b in bridges),
        bridge_max_error=max(b.g_max_error for b in bridges),
        eigen_sign_consistent=consistent,
        warnings=numeric.warnings,
    )


def dump_text(graph: FusionGraph) -> str:
    lines = [f"# regular fusion graph N={graph.n} h={graph.h} level={graph.h - graph.n}"]
    for p in range(1, graph.n):
        for a, b in graph.edges(p):
            lines.append(f"{p}: {a} → {b}")
    return "\n".join(lines) + "\n"


def dump_dot(graph: FusionGraph) -> str:
    lines = [f'digraph "SU{graph.n}_level{graph.h - graph.n}" {{']
    for w in graph.vertices:
        lines.append(f'  "{w}" [label="{w}\\ntau={tau(w)}"];')
    for p in range(1, graph.n):
        for a, b in graph.edges(p):
            lines.append(f'  "{a}" -> "{b}" [label="{p}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
