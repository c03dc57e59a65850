from fractions import Fraction as F

import pytest
from hypothesis import given, settings

import oracles
from conftest import simplex_coords
from zuberlab.core import ParamPoint, compute_p, compute_q, count_signs, g_signs, q_signs
from zuberlab.errors import DomainError
from zuberlab.regions import (
    Boundary,
    GammaVector,
    Interior,
    classify,
    lemma1_inverse,
    lemma1_r,
    predicted_g_signs,
    predicted_q_signs,
)


def test_classify_examples():
    assert classify(ParamPoint.of(F(1, 2))) == Interior(GammaVector(2, (0, 0)))
    assert classify(ParamPoint.of(F(1, 8), F(1, 4))) == Boundary((1,))
    assert classify(ParamPoint.of(F(1, 3), F(1, 3))) == Interior(GammaVector(3, (0, 0, 0)))


def test_gamma_vector_validation():
    GammaVector(3, (1, 0, 0))
    with pytest.raises(DomainError):
        GammaVector(3, (0, 2, 0))  # beta increases
    with pytest.raises(DomainError):
        GammaVector(2, (2, 0))  # beta_1 - beta_N = 3 > 2
    with pytest.raises(DomainError):
        GammaVector(3, (0, 0))
    with pytest.raises(DomainError):
        Boundary(())


def test_beta_is_exact_for_odd_n():
    g = GammaVector(3, (0, 0, 0))
    assert g.beta == (F(1, 2), F(-1, 2), F(-3, 2))
    assert g.blocks() == (1, 2, 3)
    assert GammaVector(3, (0, 1, 0)).beta == (F(1, 2), F(1, 2), F(-3, 2))
    assert GammaVector(3, (0, 1, 0)).blocks() == (2, 3)


def test_blocks_group_equal_beta():
    # beta = (1, 1, 0, -1) for N=4, gamma = (0, 1, 1, 1)
    g = GammaVector(4, (0, 1, 1, 1))
    assert g.beta == (1, 1, 0, -1)
    assert g.blocks() == (2, 3, 4)


@pytest.mark.parametrize(
    "i, q, n, r",
    [(1, F(1, 2), 3, 2), (1, F(-1, 2), 3, 3), (2, F(1, 2), 3, 1)],
)
def test_lemma1_r_examples(i, q, n, r):
    assert lemma1_r(i, q, n) == r


@pytest.mark.parametrize(
    "coords, r, i",
    [((F(1, 8), F(1, 4)), 2, 1), ((F(5, 8), F(1, 4)), 3, 1), ((F(5, 8), F(1, 8)), 1, 2)],
)
def test_lemma1_inverse_examples(coords, r, i):
    pt = ParamPoint.of(*coords)
    assert lemma1_inverse(r, pt) == i
    assert lemma1_r(i, compute_q(pt)[i - 1], 3) == r


def test_lemma1_errors():
    with pytest.raises(DomainError):
        lemma1_r(1, F(1, 3), 3)
    with pytest.raises(DomainError):
        lemma1_r(1, F(7, 2), 3)  # j = 3 out of range
    with pytest.raises(DomainError):
        lemma1_inverse(1, ParamPoint.of(F(1, 3), F(1, 3)))


def test_lemma1_r_agrees_with_defining_congruence():
    # r is the unique 1..N with (r + j + i)/N integral, found by brute force
    for n in range(2, 9):
        for i in range(1, n + 1):
            for j in range(-n, n):
                if not (2 * i - n < 2 * (i + j) < 2 * i + n - 2):
                    continue
                brute = [r for r in range(1, n + 1) if (r + j + i) % n == 0]
                assert [lemma1_r(i, j + F(1, 2), n)] == brute


def test_predicted_sign_examples():
    assert predicted_g_signs(GammaVector(2, (0, 0))) == (1, 1)
    assert predicted_g_signs(GammaVector(3, (0, 0, 0))) == (1, 1, 1)
    assert predicted_q_signs(GammaVector(2, (0, 0))) == (1, 1)
    assert predicted_q_signs(GammaVector(3, (1, 0, 0))) == (-1, 1, 1)


@settings(max_examples=400, deadline=None)
@given(simplex_coords(max_n=8))
def test_classification_and_prediction(nc):
    n, coords = nc
    pt = ParamPoint(n, coords)
    c = classify(pt)
    q = compute_q(pt)
    half = tuple(i for i, x in enumerate(q, start=1) if (x - F(1, 2)).denominator == 1)
    zero_q = tuple(i for i, s in enumerate(q_signs(pt), start=1) if s == 0)
    assert half == zero_q
    g = g_signs(pt).signs
    if isinstance(c, Boundary):
        assert c.indices == half
        images = sorted(lemma1_r(i, q[i - 1], n) for i in half)
        assert images == [r for r, s in enumerate(g, start=1) if s == 0]
        for i in half:
            assert lemma1_inverse(lemma1_r(i, q[i - 1], n), pt) == i
    else:
        assert not half
        gamma = c.gamma
        beta = gamma.beta
        p = compute_p(pt)
        for i in range(n):
            assert beta[i] < n * p[i] < beta[i] + 1
            assert -gamma.gamma[i] - F(1, 2) < q[i] < -gamma.gamma[i] + F(1, 2)
        assert predicted_g_signs(gamma) == g
        assert predicted_q_signs(gamma) == q_signs(pt)
        pg, pq = count_signs(predicted_g_signs(gamma)), count_signs(predicted_q_signs(gamma))
        assert pg.plus == pq.plus and pg.minus == pq.minus and pq.zero == 0


def test_prediction_exhaustive_on_lattices():
    chambers = set()
    for n, b in [(3, 30), (4, 20), (5, 14), (6, 11)]:
        for coords in oracles.lattice_points(n, b):
            pt = ParamPoint(n, coords)
            c = classify(pt)
            if isinstance(c, Interior):
                chambers.add(c.gamma)
                assert predicted_g_signs(c.gamma) == g_signs(pt).signs
    assert len(chambers) > 50
