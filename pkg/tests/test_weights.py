from fractions import Fraction
from itertools import combinations
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from morikit.chambers import eff_generators, walls
from morikit.picard import BlowupModel, DivisorClass, hyperplane
from morikit.weights import (
    Polarization,
    WeightVector,
    phi,
    polarization_from_weights,
    reduction_admissible,
    weight_wall_sides,
    weights_from_polarization,
)

F = Fraction


def test_phi_examples():
    M = BlowupModel(3, 5)
    assert phi(DivisorClass(M, 4, (-2,) * 5)).a == (F(1, 3),) * 6
    assert phi(DivisorClass(M, 3, (-1,) * 5)).a == (F(2, 7),) * 5 + (F(4, 7),)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_phi_of_hyperplane(m):
    a = phi(hyperplane(BlowupModel(m, m + 2))).a
    assert a == (F(1, m + 1),) * (m + 2) + (F(m, m + 1),)


def test_phi_errors():
    M = BlowupModel(2, 4)
    with pytest.raises(ZeroDivisionError):
        phi(DivisorClass(M, 1, (-3, 0, 0, 0)))
    with pytest.raises(ValueError):
        phi(hyperplane(BlowupModel(2, 3)))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_phi_of_effective_generators_are_cube_vertices(m):
    model = BlowupModel(m, m + 2)
    for r in eff_generators(m).rays:
        a = phi(DivisorClass.from_vector(model, r)).a
        assert set(a) <= {0, 1}


@pytest.mark.parametrize("m", [3, 4])
def test_walls_become_weight_walls(m):
    model = BlowupModel(m, m + 2)
    rng = random.Random(m)
    from morikit.exact import kernel_basis

    for w in walls(m):
        basis = kernel_basis([w.normal])
        for _ in range(5):
            coef = [rng.randint(-5, 5) for _ in basis]
            v = [sum(c * b[i] for c, b in zip(coef, basis)) for i in range(m + 3)]
            D = DivisorClass.from_vector(model, v)
            if (m + 1) * D.y + sum(D.x) == 0:
                continue
            a = phi(D).a
            idx = [i - 1 for i in w.I] + ([m + 2] if w.kind == "A" else [])
            assert sum(a[i] for i in idx) == 1


def test_weights_from_polarization():
    assert weights_from_polarization(Polarization((1,) * 6)).a == (F(1, 3),) * 6
    assert weights_from_polarization(Polarization((1,) * 7)).a == (F(2, 7),) * 7
    assert weights_from_polarization(Polarization((2, 1, 1, 1, 1, 1, 1))).a == (F(1, 2),) + (F(1, 4),) * 6


def test_polarization_from_weights():
    assert polarization_from_weights(WeightVector((F(1, 3),) * 6)).b == (1,) * 6
    assert polarization_from_weights(WeightVector((F(2, 7),) * 7)).b == (2,) * 7
    assert polarization_from_weights(WeightVector((F(1, 2),) + (F(1, 4),) * 6)).b == (2, 1, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        polarization_from_weights(WeightVector((F(1, 3),) * 5))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=3, max_size=9))
def test_round_trip(b):
    a = weights_from_polarization(Polarization(tuple(b)))
    assert weights_from_polarization(polarization_from_weights(a)) == a


def test_polarization_validation():
    with pytest.raises(ValueError):
        Polarization((1, 1))
    with pytest.raises(ValueError):
        Polarization((1, 0, 1))


def test_wall_sides():
    sides = weight_wall_sides(WeightVector((F(1, 3),) * 6))
    assert all(s == 0 for I, s in sides if len(I) == 3)
    assert all(s == -1 for I, s in sides if len(I) == 2)
    assert len(sides) == 15 + 20
    assert all(s != 0 for _, s in weight_wall_sides(WeightVector((F(2, 7),) * 7)))
    a = WeightVector((1,) + (F(1, 5),) * 5)
    assert all(s >= 0 for I, s in weight_wall_sides(a) if 1 in I and len(I) == 2)


def test_wall_sides_grouped():
    g = weight_wall_sides(WeightVector((F(1, 3),) * 6), grouped=True)
    assert [(len(v), s, c) for v, s, c in g] == [(2, -1, 15), (3, 0, 20)]


def test_reduction_admissible():
    third = WeightVector((F(1, 3),) * 6)
    assert reduction_admissible(third, third)
    kap = WeightVector((F(1, 2),) * 5 + (1,))
    assert reduction_admissible(kap, third)
    assert not reduction_admissible(WeightVector((F(1, 4),) * 6), third)
    with pytest.raises(ValueError):
        reduction_admissible(third, WeightVector((1,)))


def test_flags():
    assert WeightVector((F(1, 3),) * 6).is_democratic_sum
    assert not WeightVector((0, 1, 1)).is_admissible
    assert WeightVector((F(1, 2),) * 3).is_admissible
    assert not WeightVector((F(1, 2),) * 3).is_democratic_sum
