from math import comb, factorial

import pytest

from morikit.facts import facts


def test_segre_cubic_sheet():
    f = facts(3)
    assert (f.singular_count, f.sing_multiplicity, f.aut_order) == (10, 2, 720)
    assert (f.canonical_multiple, f.degree, f.N, f.pic_rank) == (-2, 3, 4, 1)


def test_quintic_del_pezzo_sheet():
    f = facts(2)
    assert (f.degree, f.N, f.aut_order, f.pic_rank, f.singular_count) == (5, 5, 120, 5, 0)
    assert f.canonical_multiple == -1
    assert f.class_group_rank is None and f.sing_multiplicity is None


def test_m5_sheet():
    f = facts(5)
    assert (f.singular_count, f.sing_multiplicity, f.class_group_rank) == (35, 6, 8)
    assert f.aut_order == factorial(8)


@pytest.mark.parametrize("g", range(2, 9))
def test_multiplicity_is_segre_degree(g):
    assert facts(2 * g - 1).sing_multiplicity == comb(2 * g - 2, g - 1)


@pytest.mark.parametrize("g", range(1, 9))
def test_distinguished_points_identity(g):
    f = facts(2 * g)
    assert 2 * f.distinguished_points == f.gplane_counts["C"] * (2 * (g + 2) - 1)
    assert f.singular_count == 0


@pytest.mark.parametrize("m", range(2, 13))
def test_aut_order(m):
    assert facts(m).aut_order == factorial(m + 3)


def test_json_uses_strings():
    j = facts(4).to_json()
    assert j["degree"] == "154" and j["gplane_counts"] == {"C": "20", "D": "15"}
    with pytest.raises(ValueError):
        facts(1)
