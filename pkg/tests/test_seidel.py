import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qkpieri.errors import DomainError, ParseError
from qkpieri.qk_ring import QKClass
from qkpieri.seidel import (
    SeidelElement, act_on_box, act_on_shape, seidel_class, seidel_degree, seidel_multiply,
)
from qkpieri.strip_poset import Family, QuantumShape, all_classical, classical, shift

FAMILIES = ([Family.gr(m, n) for n in range(2, 7) for m in range(1, n)]
            + [Family.og(n) for n in range(2, 7)] + [Family.lg(n) for n in range(1, 7)])
GENS = {"GrA": ["sigma", "tau", "point", "q"], "OG": ["row", "point", "q"], "LG": ["point", "q"]}


def test_og_point_moves_corner():
    n = 5
    f = Family.og(n)
    assert act_on_box(SeidelElement.generator(f, "point"), (0, n - 1)) == (n - 1, n)


def test_lg_q_translates_boxes():
    f = Family.lg(4)
    q = SeidelElement.generator(f, "q")
    for i, j in [(0, 0), (2, 3), (-1, 2), (3, 7)]:
        assert act_on_box(q, (i, j)) == (i + 1, j + 1)


def test_grassmannian_example():
    g = Family.gr(2, 4)
    s = SeidelElement.generator(g, "sigma")
    u = classical(g, (2, 1))
    assert seidel_multiply(s, QKClass.basis(u)) == QKClass.basis(QuantumShape(g, 1, (1,)))
    assert seidel_degree(s, u) == 1
    assert seidel_class(s) == classical(g, (2,))


def test_identity_acts_trivially():
    for f in FAMILIES:
        e = SeidelElement.identity(f)
        for u in all_classical(f):
            assert act_on_shape(e, u) == u
            assert seidel_degree(e, u) == 0


def test_og_row_squared_is_q():
    f = Family.og(5)
    s = SeidelElement.generator(f, "row", 2)
    for u in all_classical(f):
        assert seidel_multiply(s, QKClass.basis(u)) == QKClass.basis(shift(u, 1))


def test_lg_point_degrees():
    for n in range(1, 7):
        f = Family.lg(n)
        pt = SeidelElement.generator(f, "point")
        assert seidel_degree(pt, classical(f)) == 0
        point_class = seidel_class(pt)
        assert seidel_degree(pt, point_class) == n
        assert act_on_shape(pt, point_class) == QuantumShape(f, n, ())


def test_parse_words():
    g = Family.gr(3, 7)
    s = SeidelElement.parse(g, "sigma^2*q")
    assert s == SeidelElement.from_word(g, [("sigma", 2), ("q", 1)])
    with pytest.raises(ParseError):
        SeidelElement.parse(g, "sigma^x")
    with pytest.raises(DomainError):
        SeidelElement.parse(Family.lg(3), "sigma")


def _boxes(f, rows=range(-2, 6)):
    return [(i, j) for i in rows for j in range(i - 2 * f.n, i + 3 * f.n) if f.in_strip((i, j))]


@pytest.mark.parametrize("f", [f for f in FAMILIES if f.kind != "GrA"], ids=str)
def test_action_is_order_automorphism(f):
    boxes = _boxes(f)
    for name in GENS[f.kind]:
        g = SeidelElement.generator(f, name)
        inv = g.inverse()
        for a in boxes:
            assert act_on_box(inv, act_on_box(g, a)) == a
        for a, b in itertools.product(boxes[:60], repeat=2):
            le = a[0] <= b[0] and a[1] <= b[1]
            ga, gb = act_on_box(g, a), act_on_box(g, b)
            assert le == (ga[0] <= gb[0] and ga[1] <= gb[1])


@pytest.mark.parametrize("f", FAMILIES, ids=str)
def test_single_term_and_degree(f):
    for name in GENS[f.kind]:
        for power in (1, 2, 3):
            s = SeidelElement.generator(f, name, power)
            for u in all_classical(f):
                prod = seidel_multiply(s, QKClass.basis(u))
                (shape, coeff), = prod.items()
                assert coeff == 1
                assert seidel_degree(s, u) == shape.d


def _element(f):
    names = GENS[f.kind]
    word = st.lists(st.tuples(st.sampled_from(names), st.integers(-4, 4)), max_size=5)
    return word.map(lambda w: SeidelElement.from_word(f, w))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FAMILIES).flatmap(lambda f: st.tuples(_element(f), _element(f),
                                                             st.sampled_from(all_classical(f)))))
def test_action_is_a_group_action(data):
    s, t, u = data
    assert act_on_shape(s * t, u) == act_on_shape(s, act_on_shape(t, u))
    assert act_on_shape(s.inverse(), act_on_shape(s, u)) == u
    assert s * t == t * s


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FAMILIES).flatmap(lambda f: st.tuples(_element(f), st.sampled_from(all_classical(f)))))
def test_q_is_central(data):
    s, u = data
    q = SeidelElement.generator(s.family, "q")
    assert act_on_shape(s * q, u) == shift(act_on_shape(s, u), 1)


def test_relations_as_shape_maps():
    for f in FAMILIES:
        def el(word):
            return SeidelElement.from_word(f, word)
        if f.kind == "GrA":
            rels = [([("sigma", f.n)], [("q", f.n - f.m)]), ([("tau", f.n)], [("q", f.m)]),
                    ([("sigma", 1), ("tau", 1)], [("q", 1)]), ([("sigma", f.m)], [("point", 1)]),
                    ([("tau", f.n - f.m)], [("point", 1)])]
        elif f.kind == "OG":
            rels = [([("row", 2)], [("q", 1)]), ([("point", 2)], [("row", f.n)])]
        else:
            rels = [([("point", 2)], [("q", f.n)])]
        for lhs, rhs in rels:
            for u in all_classical(f):
                assert act_on_shape(el(lhs), u) == act_on_shape(el(rhs), u)
