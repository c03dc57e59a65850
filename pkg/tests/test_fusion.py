from fractions import Fraction
from math import comb, cos, pi

import numpy as np
import pytest

import oracles
from zuberlab.affine import enumerate_weights, q_R
from zuberlab.errors import CapExceededError, DomainError, VerificationError
from zuberlab import fusion
from zuberlab.fusion import (
    SignatureTriple,
    build_regular_graph,
    check_axioms,
    dump_dot,
    dump_text,
    intersection_form,
    orbit_records,
    signature_exact,
    signature_numeric,
    spectral_check,
    verify_zuber,
    zuber_counts,
)


def dense(graph, p):
    return graph.G(p).toarray()


def test_n2_is_path_graph():
    g = build_regular_graph(2, 4)
    assert [w.labels for w in g.vertices] == [(1,), (2,), (3,)]
    assert dense(g, 1).tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]


def test_n3_level1_is_directed_three_cycle():
    g = build_regular_graph(3, 4)
    assert [(a.labels, b.labels) for a, b in g.edges(1)] == [((1, 1), (2, 1)), ((1, 2), (1, 1)), ((2, 1), (1, 2))]
    assert np.array_equal(dense(g, 2), dense(g, 1).T)


@pytest.mark.parametrize("h", range(3, 12))
def test_n2_graphs_are_a_series(h):
    g = build_regular_graph(2, h)
    a = dense(g, 1)
    expected = np.diag(np.ones(h - 2, dtype=int), 1) + np.diag(np.ones(h - 2, dtype=int), -1)
    assert np.array_equal(a, expected)


@pytest.mark.parametrize("n,h", [(2, 6), (3, 4), (3, 6), (3, 8), (4, 6), (4, 8), (5, 7), (5, 8), (6, 8)])
def test_graph_matches_verlinde_formula(n, h):
    ws, mats = oracles.verlinde_matrices(n, h)
    g = build_regular_graph(n, h)
    assert [w.labels for w in g.vertices] == ws
    for p, m in enumerate(mats, start=1):
        assert np.array_equal(dense(g, p), m)


@pytest.mark.parametrize("n,h", [(2, 5), (3, 7), (4, 9), (5, 8)])
def test_axioms_and_row_column_sums(n, h):
    g = build_regular_graph(n, h)
    assert all(check_axioms(g).values())
    assert len(g.vertices) == comb(h - 1, n - 1)
    for p in range(1, n):
        rows = np.asarray(g.G(p).sum(axis=1)).ravel()
        cols = np.asarray(g.G(n - p).sum(axis=0)).ravel()
        assert np.array_equal(rows, cols)


def test_axiom_check_catches_a_broken_graph():
    g = fusion._build(3, 6)
    broken = fusion.FusionGraph(g.n, g.h, g.vertices, (g.matrices[0], g.matrices[0]))
    axioms = check_axioms(broken)
    assert not axioms["transpose_pairing"]


def test_spectral_examples():
    rep = spectral_check(build_regular_graph(2, 4))
    assert rep.passed
    ev = np.sort(np.linalg.eigvalsh(dense(build_regular_graph(2, 4), 1).astype(float)))
    assert ev == pytest.approx([-np.sqrt(2), 0, np.sqrt(2)], abs=1e-12)
    ev3 = np.linalg.eigvals(dense(build_regular_graph(3, 4), 1).astype(float))
    roots = np.exp(2j * np.pi * np.arange(3) / 3)
    assert np.sort_complex(np.round(ev3, 10)) == pytest.approx(np.sort_complex(np.round(roots, 10)))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_level_one_graphs_are_permutations(n):
    g = build_regular_graph(n, n + 1)
    for p in range(1, n):
        m = dense(g, p)
        assert np.all(m.sum(axis=0) == 1) and np.all(m.sum(axis=1) == 1)
        assert np.allclose(np.abs(np.linalg.eigvals(m.astype(float))), 1.0)
    assert spectral_check(g).passed


def test_spectral_check_rejects_wrong_spectrum():
    g = fusion._build(3, 6)
    shuffled = fusion.FusionGraph(g.n, g.h, g.vertices, (g.matrices[0] + g.matrices[1], g.matrices[1]))
    assert not spectral_check(shuffled).passed


def test_intersection_form_examples():
    g2 = intersection_form(build_regular_graph(2, 4))
    assert g2.tolist() == [[2, 1, 0], [1, 2, 1], [0, 1, 2]]
    g3 = intersection_form(build_regular_graph(3, 4))
    c = dense(build_regular_graph(3, 4), 1)
    assert np.array_equal(g3, 2 * np.eye(3, dtype=int) + c + c.T)
    assert np.array_equal(g3, g3.T)


def test_signature_examples():
    g2 = build_regular_graph(2, 4)
    assert signature_exact(g2) == SignatureTriple(3, 0, 0)
    assert signature_numeric(intersection_form(g2)).triple == SignatureTriple(3, 0, 0)
    assert signature_exact(build_regular_graph(3, 4)) == SignatureTriple(3, 0, 0)
    assert signature_numeric(2 * np.eye(7, dtype=int)).triple == SignatureTriple(7, 0, 0)
    with pytest.raises(DomainError):
        signature_numeric(np.array([[1, 2], [0, 1]]))


def test_signature_numeric_counts_zero_eigenvalues():
    m = np.array([[1, 1], [1, 1]])
    assert signature_numeric(m).triple == SignatureTriple(1, 0, 1)
    assert signature_numeric(np.diag([3, -1, 0])).triple == SignatureTriple(1, 1, 1)


@pytest.mark.parametrize("h", range(3, 15))
def test_n2_closed_forms(h):
    g = build_regular_graph(2, h)
    ev = np.sort(np.linalg.eigvalsh(intersection_form(g).astype(float)))
    closed = np.sort([2 + 2 * cos(m * pi / h) for m in range(1, h)])
    assert ev == pytest.approx(closed, abs=1e-10)
    assert zuber_counts(2, h) == SignatureTriple(h - 1, 0, 0)


def test_zuber_counts_examples():
    assert zuber_counts(2, 4) == SignatureTriple(3, 0, 0)
    for n, h in [(3, 6), (4, 8), (5, 9)]:
        qs = [q_R(w) for w in enumerate_weights(n, h)]
        assert zuber_counts(n, h).as_tuple() == oracles.intervals_count(qs)


def test_zeros_are_half_integer_q_R():
    # N=3, h=6 has two vanishing eigenvalues
    zs = [w for w in enumerate_weights(3, 6) if (q_R(w) - Fraction(1, 2)).denominator == 1]
    assert zuber_counts(3, 6).zero == len(zs) == 2


@pytest.mark.parametrize("n,h", [(2, 4), (3, 4), (3, 6), (4, 7), (5, 7)])
def test_verify_zuber_small(n, h):
    rep = verify_zuber(n, h)
    assert rep.passed, rep.failures
    assert rep.exact == rep.numeric == rep.zuber
    assert sum(rep.exact.as_tuple()) == comb(h - 1, n - 1)
    assert rep.bridge_q_exact


def test_orbit_records_partition_vertices():
    recs = orbit_records(4, 8)
    assert sum(r.orbit.d for r in recs) == comb(7, 3)
    assert all(r.passed for r in recs)


def test_vertex_cap():
    with pytest.raises(CapExceededError):
        verify_zuber(3, 202)  # C(201, 2) = 20100 vertices
    with pytest.raises(CapExceededError):
        build_regular_graph(3, 202)


def test_build_rejects_bad_parameters():
    with pytest.raises(DomainError):
        build_regular_graph(3, 3)


def test_build_surfaces_axiom_failure(monkeypatch):
    monkeypatch.setattr(fusion, "fundamental_shifts", lambda n, p: [(1,) * (n - 1)])
    with pytest.raises(VerificationError):
        build_regular_graph(3, 6)


def test_dumps():
    g = build_regular_graph(3, 4)
    text = dump_text(g)
    assert "1: (1,1) → (2,1)" in text.splitlines()
    assert "2: (1,1) → (1,2)" in text.splitlines()
    dot = dump_dot(g)
    assert dot.startswith("digraph") and '"(1,1)" -> "(2,1)" [label="1"];' in dot
