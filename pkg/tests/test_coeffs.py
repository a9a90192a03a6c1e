import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qkpieri import coeffs
from qkpieri.coeffs import (
    coeff_A, coeff_B, coeff_C, coeff_H, coeff_Hq, coeff_N, coeff_Nhat, coeff_Nq, h,
    lower_ideals_between,
)
from qkpieri.errors import DomainError
from qkpieri.strip_poset import (
    Family, SkewShape, count_n_prime, count_n_prime_q, is_rim_boxes, parse_shape, skew,
)
from qkpieri.verify import lg_skew_sweep

LG7 = Family.lg(7)
THETA = skew(parse_shape(LG7, "7,5,3,2@d1"), parse_shape(LG7, "7,5,4,2"))
SWEEP = lg_skew_sweep(max_n=5, max_size=7)
RIMS = [t for t in SWEEP if is_rim_boxes(t.boxes)]


def h_oracle(a, b):
    """Euler characteristic of (2H - H^2)^a in K(P^{a+b}); each H^k with k <= a+b has chi 1."""
    if b < 0:
        return 0
    H = sympy.Symbol("H")
    poly = sympy.Poly(sympy.expand((2 * H - H ** 2) ** a), H)
    return sum(int(c) for (k,), c in poly.terms() if k <= a + b)


def test_h_examples():
    assert h(0, 3) == 1 and h(2, 5) == 1
    assert h(1, 0) == 2 and h(2, 1) == 0
    with pytest.raises(DomainError):
        h(-1, 0)


@pytest.mark.parametrize("a", range(0, 9))
def test_h_matches_euler_characteristic(a):
    for b in range(-2, 12):
        assert h(a, b) == h_oracle(a, b)


@settings(max_examples=300)
@given(st.integers(0, 10), st.integers(-2, 12))
def test_h_binomial_identity(a, b):
    assert h(a + 1, b) + h(a, b - 1) == 2 * h(a, b)


def test_coeff_A_examples():
    g = Family.gr(3, 7)
    row = skew(parse_shape(g, "3,2"), parse_shape(g, "2"))
    assert coeff_A(skew(parse_shape(g, "3"), parse_shape(g, "0")), 3) == 1
    assert coeff_A(row, 3) == 1 and coeff_A(row, 2) == -1 and coeff_A(row, 1) == 0
    col = skew(parse_shape(g, "1,1"), parse_shape(g, "0"))
    assert coeff_A(col, 2) == 0
    lam = parse_shape(g, "3,3,1")
    assert coeff_A(skew(parse_shape(g, "4,3,3"), lam), 3) == 1
    assert coeff_A(skew(parse_shape(g, "2,1@d1"), lam), 3) == 1
    assert coeff_A(skew(parse_shape(g, "2,2@d1"), lam), 3) == -1


def test_coeff_B_examples():
    og = Family.og(5)
    lam = parse_shape(og, "4,2")
    want = {"4,3,1": 2, "4,3,2": -1, "0@d1": 1, "1@d1": -2, "2@d1": 1}
    for nu, c in want.items():
        assert coeff_B(skew(parse_shape(og, nu), lam), 2) == c
    square = SkewShape.from_boxes(og, [(2, 4), (2, 5), (3, 4), (3, 5)])
    assert coeff_B(square, 4) == 0


def test_lg_example_coefficients():
    for route in coeffs.ROUTES["C"]:
        assert coeff_C(THETA, 6, route) == -9
    for route in coeffs.ROUTES["N"]:
        assert coeff_N(THETA, 6, route) == -4
    assert coeff_Nq(THETA, 6) == coeff_Hq(THETA, 6) == coeff_H(THETA, 6) == -4
    assert coeff_Nhat(THETA, 6) == -4


def test_unknown_route():
    with pytest.raises(DomainError):
        coeff_C(THETA, 6, "dispatch")


def test_empty_shape_values():
    empty = SkewShape(LG7, frozenset())
    assert [coeff_C(empty, p) for p in (-1, 0, 1)] == [1, 1, 0]
    with pytest.raises(DomainError):
        coeff_Hq(empty, 1)


def test_two_ne_boxes_give_zero():
    for th in lg_skew_sweep(max_n=3, max_size=7):
        f = th.family
        if sum(1 for i, j in th.boxes if j - i == f.ne_offset) >= 2:
            assert all(coeff_Nhat(th, p) == 0 == coeff_N(th, p) for p in range(-1, len(th) + 2))


def test_row_values():
    for k in range(1, 6):
        row = SkewShape.from_boxes(LG7, [(2, 3 + c) for c in range(k)])
        for p in range(-2, k + 3):
            assert coeff_Hq(row, p) == (1 if p <= k else 0)


def test_lower_ideals():
    hi = frozenset({(0, 1), (0, 2), (1, 1)})
    got = set(lower_ideals_between(frozenset(), hi))
    assert got == {frozenset(), frozenset({(0, 1)}), frozenset({(0, 1), (0, 2)}),
                   frozenset({(0, 1), (1, 1)}), hi}


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(SWEEP), st.integers(-2, 10))
def test_vanishing_and_top_values(theta, p):
    f, boxes = theta.family, theta.boxes
    size = len(boxes)
    if not is_rim_boxes(boxes):
        assert coeff_C(theta, p) == 0 == coeff_Hq(theta, p) == coeff_N(theta, p)
        return
    if p > size or p <= 0:
        assert coeff_C(theta, p) == 0
    if p == size:
        assert coeff_C(theta, p) == 2 ** count_n_prime(f, boxes)
        assert coeff_Hq(theta, p) == 2 ** count_n_prime_q(f, boxes)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(RIMS), st.integers(-2, 10))
def test_signs_alternate(theta, p):
    sign = (-1) ** ((len(theta) - p) % 2)
    assert sign * coeff_C(theta, p) >= 0
    assert sign * coeff_N(theta, p) >= 0
