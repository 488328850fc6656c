import pytest
from hypothesis import assume, given, settings, strategies as st

from chebmax import curve
from chebmax.chebyshev import IntPoly, cheb_poly
from chebmax.curve import (CurveError, InseparableError, character_sum, count_points,
                           count_series, make_curve)
from chebmax.ff import BudgetExceeded, enumerate_elements, make_field, quadratic_character

from oracle import naive_count

E_PLUS = IntPoly([0, 1, 0, 1])

# brute force (x, y) enumeration, frozen
PHI9_MOD5 = [2, 20, 182, 640]
PHI5_MOD13 = [14, 170]

SMALL = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (7, 2), (3, 3), (11, 2), (3, 4)]


def test_make_curve_genus():
    assert make_curve(E_PLUS, 3).genus == 1
    assert make_curve(cheb_poly(5), 13).genus == 2
    assert make_curve(IntPoly([1, 1]), 5).genus == 0
    assert make_curve(IntPoly([0, 1, 1]), 5).genus == 0
    assert make_curve(IntPoly([1, 0, 0, 0, 0, 0, 1]), 5).genus == 2


@pytest.mark.parametrize("f,p,exc", [
    (cheb_poly(3), 3, InseparableError),
    (E_PLUS, 2, CurveError),
    (E_PLUS, 9, CurveError),
    (IntPoly([1, 0, 0, 3]), 3, CurveError),          # leading coefficient vanishes
    (IntPoly([4]), 5, CurveError),
    (IntPoly([0, 0, 1, 1]), 7, InseparableError),    # x^2 (x + 1)
])
def test_make_curve_rejects(f, p, exc):
    with pytest.raises(exc):
        make_curve(f, p)


def test_count_examples():
    r = count_points(make_curve(E_PLUS, 3), make_field(3))
    assert (r.N, r.affine, r.infinity, r.Q) == (4, 3, 1, 3)
    assert count_points(make_curve(cheb_poly(3), 5), make_field(5)).N == 2
    assert count_points(make_curve(E_PLUS, 3), make_field(3, 2)).N == 16 == 9 + 1 + 2 * 3


def test_count_errors():
    C = make_curve(E_PLUS, 3)
    with pytest.raises(ValueError):
        count_points(C, make_field(5))
    with pytest.raises(BudgetExceeded):
        count_points(C, make_field(3, 10), budget=1000)


def test_count_series():
    C = make_curve(E_PLUS, 3)
    assert count_series(C, 1, 2) == [4, 16]
    assert count_series(C, 1, 0) == []
    C9 = make_curve(cheb_poly(9), 5)
    assert count_series(C9, 1, 4, budget=10**4) == PHI9_MOD5
    # 5^5 fits a 10^4 budget; 5^6 does not
    assert len(count_series(C9, 1, 7, budget=10**4)) == 5
    assert count_series(make_curve(cheb_poly(5), 13), 1, 2) == PHI5_MOD13


def test_even_degree_infinity():
    # leading coefficient 2 is a non-square mod 5 and a square in F_25
    C = make_curve(IntPoly([1, 0, 0, 0, 2]), 5)
    assert count_points(C, make_field(5)).infinity == 0
    assert count_points(C, make_field(5, 2)).infinity == 2
    assert count_points(make_curve(IntPoly([1, 0, 1]), 7), make_field(7)).infinity == 2


@pytest.mark.parametrize("p,m", SMALL)
@pytest.mark.parametrize("coeffs", [[0, 1, 0, 1], [0, -3, 0, 1], [1, 0, 0, 0, 1],
                                    [0, 5, 0, -5, 0, 1], [1, 0, 0, 0, 0, 0, 1],
                                    [0, 1, 0, 0, 0, 1], [3, 1, 4, 1, 5]])
def test_matches_naive_enumeration(coeffs, p, m):
    try:
        C = make_curve(IntPoly(coeffs), p)
    except CurveError:
        return
    assert count_points(C, make_field(p, m)).N == naive_count(coeffs, p, m)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=8), st.sampled_from(SMALL))
def test_random_curves_match_naive(coeffs, field):
    p, m = field
    assume(p**m <= 49)
    try:
        C = make_curve(IntPoly(coeffs), p)
    except CurveError:
        assume(False)
    assert count_points(C, make_field(p, m)).N == naive_count(coeffs, p, m)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=2, max_size=10),
       st.sampled_from([(3, 5), (5, 3), (7, 3), (11, 2), (17, 2), (101, 1), (3, 7), (23, 2)]))
def test_hasse_weil(coeffs, field):
    p, m = field
    try:
        C = make_curve(IntPoly(coeffs), p)
    except CurveError:
        assume(False)
    r = count_points(C, make_field(p, m))
    assert r.N == r.affine + r.infinity and r.infinity in (0, 1, 2)
    assert (r.N - r.Q - 1) ** 2 <= 4 * C.genus**2 * r.Q


@pytest.mark.parametrize("p,m", [(5, 1), (13, 1), (3, 2), (7, 2), (5, 2), (3, 4)])
def test_odd_polynomial_pairs_x_with_minus_x(p, m):
    # f odd and Q = 1 mod 4: chi(f(-x)) = chi(-1) chi(f(x)) = chi(f(x))
    F = make_field(p, m)
    if F.order % 4 != 1:
        pytest.skip("needs Q = 1 mod 4")
    f = IntPoly([0, 1, 0, 0, 0, 1])
    C = make_curve(f, p)
    seen, total = set(), 0
    for x in enumerate_elements(F):
        if x.index() in seen:
            continue
        seen |= {x.index(), (-x).index()}
        v = sum((F(c) * x**k for k, c in enumerate(f.coeffs)), F.zero())
        total += quadratic_character(v) * (1 if x == -x else 2)
    assert count_points(C, F).affine == F.order + total


def test_partitioning_is_deterministic(monkeypatch):
    C = make_curve(cheb_poly(7), 3)
    F = make_field(3, 9)
    whole = character_sum(C, F)
    cuts = [0, 1, 100, 5000, 5001, F.order]
    assert sum(character_sum(C, F, a, b) for a, b in zip(cuts, cuts[1:])) == whole
    base = count_points(C, F)
    monkeypatch.setattr(curve, "CHUNK", 997)
    assert count_points(C, F, workers=4) == base
    assert count_points(C, F, workers=4) == count_points(C, F, workers=1)


def test_partition_across_orbits_ext():
    # ranges cut through Frobenius orbits; each element counts only within its own range
    C = make_curve(cheb_poly(5), 7)
    F = make_field(7, 4)
    cuts = list(range(0, F.order, 311)) + [F.order]
    assert sum(character_sum(C, F, a, b) for a, b in zip(cuts, cuts[1:])) == character_sum(C, F)
