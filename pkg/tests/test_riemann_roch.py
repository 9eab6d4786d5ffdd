import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from puregaps import (
    INFINITY,
    Divisor,
    KummerCurve,
    PeriodSearchError,
    divisor_from_tuple,
    ell,
    h_one_place,
    in_generalized_semigroup,
    is_absolute_maximal,
    is_discrepancy,
    is_pure_gap,
    is_relative_maximal,
    verify_period,
)

C34 = KummerCurve(3, 4)
C59 = KummerCurve(5, 9)


def tuple_divisor(curve, alpha):
    return divisor_from_tuple(alpha, curve.ramified_places(len(alpha)))


# --- the dimension formula itself -----------------------------------------


def test_ell_of_zero_divisor():
    res = ell(C34, Divisor())
    assert res.dim == 1
    assert res.per_residue == (1, -1, -2)


def test_ell_of_canonical_is_genus():
    assert ell(C34, C34.canonical_divisor()).dim == C34.genus == 3


def test_ell_drop_by_one_place():
    # hand-evaluated per-residue values for m=3, r=4
    both = ell(C34, tuple_divisor(C34, (1, 1)))
    assert both.dim == 1 and both.per_residue == (1, -1, 0)
    one = ell(C34, tuple_divisor(C34, (1,)))
    assert one.dim == 1 and one.per_residue == (1, -1, -1)


def test_ell_rejects_unsupported_place():
    from puregaps import Place

    with pytest.raises(ValueError):
        ell(C34, Divisor({Place(5): 1}))


def test_per_residue_sums_to_dim(corpus):
    rng = random.Random(7)
    for curve in corpus[::5]:
        places = list(curve.ramified_places()) + [INFINITY]
        for _ in range(20):
            D = Divisor({p: rng.randint(-5, 8) for p in places})
            res = ell(curve, D)
            assert res.dim == sum(v for v in res.per_residue if v > 0)


small_curve = st.sampled_from(
    [(2, 3), (2, 5), (3, 2), (3, 4), (3, 5), (4, 3), (5, 2), (5, 4), (4, 7), (5, 9)]
)


@settings(max_examples=200)
@given(small_curve, st.data())
def test_riemann_roch_identity(mr, data):
    curve = KummerCurve(*mr)
    g = curve.genus
    places = list(curve.ramified_places()) + [INFINITY]
    coeffs = data.draw(
        st.lists(st.integers(-g - 2, g + 2), min_size=len(places), max_size=len(places))
    )
    D = Divisor(dict(zip(places, coeffs)))
    W = curve.canonical_divisor()
    assert ell(curve, D).dim - ell(curve, W - D).dim == D.degree + 1 - g


def test_negative_degree_gives_zero(corpus):
    for curve in corpus[::4]:
        assert ell(curve, Divisor({INFINITY: -1})).dim == 0
        assert ell(curve, Divisor({curve.place(1): -3, INFINITY: 2})).dim == 0


def test_large_degree_is_exact(corpus):
    for curve in corpus[::4]:
        g = curve.genus
        for extra in range(3):
            D = Divisor({curve.place(1): 2 * g - 1 + extra})
            assert ell(curve, D).dim == D.degree + 1 - g


def test_monotone_under_adding_a_place(corpus):
    rng = random.Random(11)
    for curve in corpus[::5]:
        places = list(curve.ramified_places()) + [INFINITY]
        for _ in range(25):
            D = Divisor({p: rng.randint(-4, 6) for p in rng.sample(places, 2)})
            base = ell(curve, D).dim
            for p in places[:3]:
                up = ell(curve, D + Divisor({p: 1})).dim
                assert base <= up <= base + 1


def test_degree_2g_tuples_are_in_the_semigroup(corpus):
    # a coordinate sum of at least 2g always lies in the semigroup
    for curve in corpus[::6]:
        g = curve.genus
        for alpha in [(2 * g, 0), (g, g), (0, 2 * g), (2 * g + 3, 1)]:
            assert in_generalized_semigroup(curve, alpha)


def test_one_place_gap_count_is_genus(corpus):
    # oracle route: alpha is a gap at P iff ell stays flat when alpha*P drops to (alpha-1)*P
    for curve in corpus[::4]:
        g = curve.genus
        p = curve.place(1)
        gaps = [
            a
            for a in range(1, 2 * g + 1)
            if ell(curve, Divisor({p: a})).dim == ell(curve, Divisor({p: a - 1})).dim
        ]
        assert len(gaps) == g
        assert tuple(gaps) == h_one_place(curve).gaps


# --- membership predicates -------------------------------------------------


@pytest.mark.parametrize(
    "curve, alpha, expected",
    [
        (C34, (0, 0), True),
        (C34, (1, 1), False),
        (C34, (4, 1), True),
    ],
)
def test_in_generalized_semigroup(curve, alpha, expected):
    assert in_generalized_semigroup(curve, alpha) is expected


@pytest.mark.parametrize(
    "curve, alpha, expected",
    [
        (C34, (1, 1), True),
        (C34, (0, 0), False),
        (C59, (21, 2, 1), True),
    ],
)
def test_is_pure_gap(curve, alpha, expected):
    assert is_pure_gap(curve, alpha) is expected


def test_pure_gap_rejects_negative_coordinates():
    assert is_pure_gap(C34, (-1, 1)) is False


@pytest.mark.parametrize(
    "alpha, expected",
    [
        ((26, 1, 1), True),
        ((0, 0, 0), True),
        ((31, 1, 1), False),  # relative but not absolute
    ],
)
def test_is_absolute_maximal(alpha, expected):
    assert is_absolute_maximal(C59, alpha) is expected


@pytest.mark.parametrize(
    "alpha, expected",
    [
        ((31, 1, 1), True),
        ((5, 0, 0), True),
        ((26, 1, 1), False),  # absolute and relative classes are disjoint for n >= 3
    ],
)
def test_is_relative_maximal(alpha, expected):
    assert is_relative_maximal(C59, alpha) is expected


def test_maximality_notions_coincide_for_two_places():
    assert is_relative_maximal(C34, (4, 1)) and is_absolute_maximal(C34, (4, 1))


def test_predicates_validate_places():
    with pytest.raises(ValueError):
        is_pure_gap(C34, (1, 1), (C34.place(1), C34.place(1)))
    with pytest.raises(ValueError):
        in_generalized_semigroup(C34, (1, 1), (C34.place(1), INFINITY))


# --- discrepancies and periods ---------------------------------------------


def test_discrepancy_examples():
    p = C59.ramified_places(3)
    A = divisor_from_tuple((26, 1, 1), p)
    assert is_discrepancy(C59, A, p[0], p[1])
    assert is_discrepancy(C59, A, p[1], p[2])
    # the zero divisor is a discrepancy; -P_2 is not (both spaces vanish)
    assert is_discrepancy(C59, Divisor(), p[0], p[1])
    assert not is_discrepancy(C59, Divisor({p[1]: -1}), p[0], p[1])


def test_discrepancy_two_place_case():
    p1, p2 = C34.ramified_places(2)
    # ell(P_1+P_2) = ell(P_1) = 1, so the first condition already fails
    assert not is_discrepancy(C34, divisor_from_tuple((1, 1), (p1, p2)), p1, p2)


def test_discrepancy_rejects_equal_places():
    p1 = C34.place(1)
    with pytest.raises(ValueError):
        is_discrepancy(C34, Divisor(), p1, p1)


@pytest.mark.parametrize(
    "m, r, i, j, expected",
    [
        (5, 9, 1, 2, 5),
        (3, 2, 1, 2, 3),
        (4, 7, 2, 5, 4),
    ],
)
def test_verify_period(m, r, i, j, expected):
    curve = KummerCurve(m, r)
    assert verify_period(curve, curve.place(i), curve.place(j)) == expected


def test_verify_period_matches_curve_period(corpus):
    for curve in corpus:
        assert verify_period(curve, curve.place(1), curve.place(2)) == curve.period


def test_verify_period_validation():
    with pytest.raises(ValueError):
        verify_period(C34, C34.place(1), C34.place(1))
    with pytest.raises(ValueError):
        verify_period(C34, C34.place(1), INFINITY)
    with pytest.raises(PeriodSearchError):
        verify_period(C34, C34.place(1), C34.place(2), bound=2)


def test_ell_result_json():
    res = ell(C34, Divisor())
    assert res.to_json() == {"dim": 1, "per_residue": [1, -1, -2]}
