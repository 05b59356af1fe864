import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from morikit.picard import (
    BlowupModel,
    CurveClass,
    DivisorClass,
    anticanonical,
    contracted_rnc_classes,
    cremona_pushforward,
    exceptional,
    hyperplane,
    pair,
    picard_rank_stage,
    sigma_polarization,
    span_rank,
    transport,
)
from morikit.exact import dot


def test_model_validation():
    with pytest.raises(ValueError):
        BlowupModel(1, 3)
    with pytest.raises(ValueError):
        BlowupModel(3, 0)
    assert BlowupModel(3, 5).rank == 6


def test_basic_pairings():
    M = BlowupModel(3, 4)
    line = CurveClass(M, 1, (0, 0, 0, 0))
    e2 = CurveClass(M, 0, (0, 1, 0, 0))
    assert pair(hyperplane(M), line) == 1
    assert pair(exceptional(M, 2), e2) == -1
    assert pair(exceptional(M, 1), e2) == 0
    assert pair(hyperplane(M), e2) == 0


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=5, max_size=5), st.lists(st.integers(-9, 9), min_size=5, max_size=5))
def test_transport_realizes_pairing(dv, cv):
    M = BlowupModel(2, 4)
    D = DivisorClass.from_vector(M, dv)
    C = CurveClass.from_vector(M, cv)
    assert pair(D, C) == dot(D.vector, transport(C.vector))
    assert transport(transport(dv)) == tuple(dv)


def test_mults_are_negated_coefficients():
    M = BlowupModel(3, 5)
    D = DivisorClass.from_degree_mults(M, 4, (2, 2, 2, 2, 2))
    assert D == anticanonical(M)
    assert D.mults == (2,) * 5


def test_arithmetic_and_json():
    M = BlowupModel(2, 3)
    D = DivisorClass(M, 1, (-1, 0, Fraction(1, 2)))
    assert (D + D) == 2 * D
    assert DivisorClass.from_json(D.to_json()) == D
    C = CurveClass(M, 2, (1, 1, 0))
    assert CurveClass.from_json(C.to_json()) == C
    with pytest.raises(ValueError):
        D + DivisorClass(BlowupModel(2, 4), 0, (0, 0, 0, 0))
    with pytest.raises(ValueError):
        DivisorClass(M, 1, (0, 0))


def test_cremona_of_hyperplane():
    M = BlowupModel(3, 4)
    E = cremona_pushforward(hyperplane(M), (1, 2, 3, 4))
    assert E.degree == 3 and E.mults == (2, 2, 2, 2)


def test_cremona_exceptional_to_hyperplane_through_others():
    M = BlowupModel(2, 4)
    E = cremona_pushforward(exceptional(M, 1))
    # the exceptional curve over a base point maps to the line through the other two
    assert E.degree == 1 and E.mults == (0, 1, 1, 0)


@pytest.mark.parametrize("m,s", [(2, 4), (3, 5), (4, 6), (5, 7)])
def test_cremona_is_an_involution(m, s):
    M = BlowupModel(m, s)
    rng = random.Random(m * 100 + s)
    for _ in range(200):
        D = DivisorClass(M, rng.randint(-20, 20), tuple(rng.randint(-20, 20) for _ in range(s)))
        base = tuple(sorted(rng.sample(range(1, s + 1), m + 1)))
        assert cremona_pushforward(cremona_pushforward(D, base), base) == D


@pytest.mark.parametrize("m,s", [(2, 4), (3, 5), (4, 6)])
def test_cremona_preserves_anticanonical_class(m, s):
    M = BlowupModel(m, s)
    assert cremona_pushforward(anticanonical(M)) == anticanonical(M)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_sigma_polarization_is_fixed(g):
    L = sigma_polarization(g)
    s = L.model.s
    rng = random.Random(g)
    for _ in range(10):
        base = tuple(sorted(rng.sample(range(1, s + 1), L.model.m + 1)))
        assert cremona_pushforward(L, base) == L


def test_cremona_base_validation():
    M = BlowupModel(3, 5)
    with pytest.raises(ValueError):
        cremona_pushforward(hyperplane(M), (1, 2, 3))
    with pytest.raises(ValueError):
        cremona_pushforward(hyperplane(M), (1, 2, 3, 9))


@pytest.mark.parametrize("g", [2, 3, 4])
def test_contracted_curves(g):
    cs = contracted_rnc_classes(g)
    from math import comb

    assert len(cs) == comb(2 * g + 1, g)
    L = sigma_polarization(g)
    assert all(pair(L, c) == 0 for c in cs)
    # the classes span a hyperplane of N_1, namely the orthogonal of L
    assert span_rank(cs) == L.model.rank - 1


def test_picard_rank_stage():
    assert picard_rank_stage(5, 0) == 6
    assert picard_rank_stage(5, 1) == 16
    assert picard_rank_stage(6, 1) == 22
    with pytest.raises(ValueError):
        picard_rank_stage(5, -1)
