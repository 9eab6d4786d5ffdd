import pytest
from hypothesis import given
from hypothesis import strategies as st

from puregaps import (
    KummerCurve,
    MaximalFamily,
    compositions,
    family_cardinality,
    glb,
    lambda_star,
    lub,
    permutation_closed,
    pure_gap_box_scan,
    pure_gaps,
    pure_gaps_from_relative_maximals,
    relative_family,
    translate_box,
    w_vector,
)

C34 = KummerCurve(3, 4)
C59 = KummerCurve(5, 9)


def test_glb_lub_examples():
    assert glb([(3, 1), (2, 5)]) == (2, 1)
    assert glb([(1, 4), (4, 1)]) == (1, 1)
    assert glb([(7, -2)]) == (7, -2)
    assert lub([(3, 1), (2, 5)]) == (3, 5)
    assert lub([(5, 5)]) == (5, 5)
    assert lub([(0, 0), (-1, 1)]) == (0, 1)


def test_glb_lub_errors():
    with pytest.raises(ValueError):
        glb([])
    with pytest.raises(ValueError):
        lub([(1, 2), (1, 2, 3)])


tuples3 = st.lists(
    st.tuples(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20)),
    min_size=1,
    max_size=5,
)


@given(tuples3)
def test_glb_below_lub_above(ts):
    lo, hi = glb(ts), lub(ts)
    for t in ts:
        assert all(a <= b for a, b in zip(lo, t))
        assert all(a >= b for a, b in zip(t, lo))  # lo <= t
        assert all(a <= b for a, b in zip(t, hi))
    assert glb([lo, hi]) == lo and lub([lo, hi]) == hi


def test_w_vector():
    assert w_vector((1, 0), 5) == (-5, 5, 0)
    assert w_vector((2, 3), 4) == (-20, 8, 12)
    assert sum(w_vector((3, 1, 4), 7)) == 0
    with pytest.raises(ValueError):
        w_vector((-1,), 5)
    with pytest.raises(ValueError):
        w_vector((1,), 0)


def test_compositions():
    from math import comb

    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions(0, 3)) == [(0, 0, 0)]
    for total in range(5):
        for parts in range(1, 4):
            comps = list(compositions(total, parts))
            assert len(comps) == comb(total + parts - 1, parts - 1)
            assert all(sum(c) == total for c in comps)
            assert len(set(comps)) == len(comps)


def test_family_validation():
    with pytest.raises(ValueError):
        MaximalFamily(5, 3, "other", {})
    with pytest.raises(ValueError):
        MaximalFamily(5, 1, "relative", {})
    with pytest.raises(ValueError):
        MaximalFamily(5, 2, "relative", {-1: ((1, 1),)})
    with pytest.raises(ValueError):
        MaximalFamily(5, 2, "relative", {0: ((7, 1),)})  # first axis outside [0, 5)
    with pytest.raises(ValueError):
        MaximalFamily(5, 2, "relative", {0: ((1, 6),)})  # trailing axis outside [0, 5)
    fam = MaximalFamily(5, 2, "relative", {1: ((6, 1), (6, 1)), 2: ()})
    assert fam.box(1) == ((6, 1),)
    assert fam.levels == (1,) and fam.max_level == 1
    assert fam.box(2) == () and fam.box(99) == ()


def test_relative_family_boxes():
    fam = relative_family(C59, 3)
    assert fam.period == 5 and fam.kind == "relative"
    assert {k: fam.box(k) for k in fam.levels} == {
        0: (((4, 4, 4)),),
        2: (((13, 3, 3)),),
        4: (((22, 2, 2)),),
        6: (((31, 1, 1)),),
    }


def test_translate_box_is_a_shift_of_the_level_box():
    fam = relative_family(C59, 3)
    # level 2 box shifted into the (0, 2, 0) cell
    assert translate_box(fam, (0, 2, 0)) == [(3, 13, 3)]
    # zero shift leaves level boxes alone
    assert translate_box(fam, (0, 0, 0)) == list(fam.box(0))
    assert translate_box(fam, (4, 0, 0)) == list(fam.box(4))
    # empty level stays empty after shifting
    assert translate_box(fam, (0, 1, 0)) == []
    with pytest.raises(ValueError):
        translate_box(fam, (1, 0))
    with pytest.raises(ValueError):
        translate_box(fam, (1, -1, 0))


def test_translate_box_window(corpus):
    for curve in corpus[::6]:
        m, r = curve.m, curve.r
        if 3 > r - r // m:
            continue
        fam = relative_family(curve, 3)
        for ks in [(0, 1, 1), (2, 0, 1), (1, 1, 1)]:
            for t in translate_box(fam, ks):
                for k, c in zip(ks, t):
                    assert k * m <= c < (k + 1) * m


def test_family_cardinality():
    assert family_cardinality(relative_family(C59, 3), C59.genus) == 50
    assert family_cardinality(MaximalFamily(5, 3, "relative", {}), 16) == 0
    assert family_cardinality(relative_family(C34, 2), C34.genus) == 3


def test_family_cardinality_equals_exhaustive_union(corpus):
    for curve in corpus[::5]:
        m, r, g = curve.m, curve.r, curve.genus
        for n in (2, 3):
            if n > r - r // m:
                continue
            fam = relative_family(curve, n)
            bound = -(-(2 * g - 1) // m)
            seen = set()
            for k in range(bound):
                for comp in compositions(k, n):
                    cell = translate_box(fam, comp)
                    assert not (set(cell) & seen), "cells must be disjoint"
                    seen.update(cell)
            assert len(seen) == family_cardinality(fam, g)
            assert sorted(seen) == lambda_star(curve, n)


def test_family_cardinality_rejects_too_deep_levels():
    fam = MaximalFamily(3, 2, "relative", {40: ((120, 1),)})
    with pytest.raises(ValueError):
        family_cardinality(fam, 2)


def test_pure_gaps_from_relative_maximals():
    assert pure_gaps_from_relative_maximals([(4, 1), (1, 4), (2, 2)], 2) == [
        (1, 1),
        (1, 2),
        (2, 1),
    ]
    assert pure_gaps_from_relative_maximals([], 2) == []
    # a single incomparable-free set yields nothing
    assert pure_gaps_from_relative_maximals([(1, 1)], 2) == []
    with pytest.raises(ValueError):
        pure_gaps_from_relative_maximals([(1, 2, 3)], 2)


def test_glb_route_matches_oracle_on_small_curves():
    for m, r in [(3, 4), (3, 5), (4, 3), (2, 7), (5, 4)]:
        curve = KummerCurve(m, r)
        for n in (2, 3):
            if n > curve.r - curve.r // curve.m:
                continue
            via_glb = pure_gaps_from_relative_maximals(lambda_star(curve, n), n)
            assert via_glb == pure_gap_box_scan(curve, n)
            assert via_glb == sorted(pure_gaps(curve, n))


def test_permutation_closed():
    assert permutation_closed({(1, 1), (1, 2), (2, 1)})
    assert not permutation_closed({(1, 2)})
    assert permutation_closed(pure_gaps(C59, 3))
    assert permutation_closed([])
