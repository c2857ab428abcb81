from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stronggenus.bounds import bounds_report, euler_girth_bound, max_genus_ub, moore_bound_cubic, thm1_bound
from stronggenus.errors import InvalidParameter, OddGirthUnsupported
from stronggenus.families import cube, heawood, k33
from stronggenus.graph import girth


def test_thm1_examples():
    assert thm1_bound(3) == 1
    assert thm1_bound(6) == 2
    assert thm1_bound(1) == 0
    with pytest.raises(InvalidParameter):
        thm1_bound(0)


@given(st.integers(1, 10**6))
def test_thm1_step(q):
    assert thm1_bound(q + 3) == thm1_bound(q) + 1
    assert thm1_bound(q + 1) >= thm1_bound(q)


def test_moore_examples():
    assert moore_bound_cubic(12) == 126
    assert moore_bound_cubic(6) == 14 == heawood().n and girth(heawood()) == 6
    assert moore_bound_cubic(4) == 6 == k33().n
    with pytest.raises(OddGirthUnsupported):
        moore_bound_cubic(5)


def test_moore_level_count():
    # vertices within distance 5 of an edge in a cubic graph of girth 12
    assert 1 + 3 + 6 + 12 + 24 + 48 + 32 == moore_bound_cubic(12)


def test_euler_girth_examples():
    assert euler_girth_bound(126, 189, 12) == (17, 34)
    assert euler_girth_bound(6, 9, 4) == (1, 1)
    assert euler_girth_bound(4, 6, 3) == (0, 0)
    # the excluded thresholds are one below
    ori, non = euler_girth_bound(moore_bound_cubic(12), 3 * moore_bound_cubic(12) // 2, 12)
    assert (ori - 1, non - 1) == (16, 33)


def test_max_genus_examples():
    assert max_genus_ub(4, 6) == 1
    assert max_genus_ub(6, 9) == 2
    assert max_genus_ub(5, 4) == 0
    with pytest.raises(InvalidParameter):
        max_genus_ub(5, 3)


def test_max_genus_attained_by_enumeration(k33_all):
    from stronggenus.embedding import surface_of

    assert max(surface_of(e).genus for e in k33_all) == max_genus_ub(6, 9)
    assert min(surface_of(e).genus for e in k33_all) == euler_girth_bound(6, 9, 4)[0]


def test_report():
    g = cube()
    rep = bounds_report(g.n, g.m, 4, q=4).as_dict()
    assert rep == {
        "q": 4,
        "thm1_bound": 1,
        "orientable_lb": 0,
        "nonorientable_lb": 0,
        "moore_order": 6,
        "max_genus_ub": 2,
    }
    assert bounds_report(10, 15, 5).moore_order is None
