from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hecke_cell_lab.root_data import (
    SUPPORTED_TYPES,
    UnsupportedType,
    build_root_datum,
    evaluate_poincare,
    poincare_polynomial,
    poincare_product_identity,
)


def root_closure(R):
    """All roots, by closing the simple roots under s_i(b) = b - b_i alpha_i."""
    roots = set(R.simple_roots)
    frontier = list(roots)
    while frontier:
        nxt = []
        for b in frontier:
            for i, a in enumerate(R.simple_roots):
                c = tuple(x - b[i] * y for x, y in zip(b, a))
                if c not in roots:
                    roots.add(c)
                    nxt.append(c)
        frontier = nxt
    return roots


@pytest.mark.parametrize("label,order,nu", [
    ("A1", 2, 1), ("A2", 6, 3), ("B2", 8, 4), ("G2", 12, 6), ("A3", 24, 6),
])
def test_sizes(label, order, nu):
    R = build_root_datum(label)
    assert len(R.W0) == order
    assert R.nu == nu == R.w0.length == len(R.positive_roots)
    assert len(R.roots) == 2 * nu


def test_a1_data():
    R = build_root_datum("A1")
    assert R.rho == (1,)
    assert R.simple_roots == ((2,),)


def test_a2_positive_roots():
    R = build_root_datum("A2")
    assert set(R.positive_roots) == {(2, -1), (-1, 2), (1, 1)}


@pytest.mark.parametrize("label", SUPPORTED_TYPES)
def test_roots_match_closure(label):
    R = build_root_datum(label)
    assert set(R.roots) == root_closure(R)


@pytest.mark.parametrize("label", SUPPORTED_TYPES)
def test_sum_positive_roots_is_two_rho(label):
    R = build_root_datum(label)
    total = tuple(sum(c) for c in zip(*R.positive_roots))
    assert total == tuple(2 * r for r in R.rho)


@pytest.mark.parametrize("label", SUPPORTED_TYPES)
def test_w0_negates_positive_roots(label):
    R = build_root_datum(label)
    neg = {tuple(-c for c in a) for a in R.positive_roots}
    assert {R.w0(a) for a in R.positive_roots} == neg
    for w in R.W0:
        assert {w(a) for a in R.roots} == set(R.roots)


@pytest.mark.parametrize("label", SUPPORTED_TYPES)
def test_length_is_inversion_count(label):
    R = build_root_datum(label)
    for w in R.W0:
        assert w.length == R.inversion_count(w)
        assert R.element_from_word(w.word) == w


def test_act_examples():
    A1 = build_root_datum("A1")
    s = A1.simple_reflections[0]
    assert A1.act(s, (1,)) == (-1,)
    A2 = build_root_datum("A2")
    assert A2.act(A2.simple_reflections[0], (1, 0)) == (-1, 1)
    assert A2.act(A2.identity, (3, -2)) == (3, -2)


@pytest.mark.parametrize("label", SUPPORTED_TYPES)
def test_w0_sends_dominant_to_antidominant(label):
    R = build_root_datum(label)
    for x in R.weight_box(2):
        if R.is_dominant(x):
            orbit = {w(x) for w in R.W0}
            anti = [y for y in orbit if R.is_antidominant(y)]
            assert anti == [R.w0(x)]


def test_poincare_examples():
    assert poincare_polynomial(build_root_datum("A1")) == [1, 1]
    assert poincare_polynomial(build_root_datum("A2")) == [1, 2, 2, 1]
    assert evaluate_poincare(build_root_datum("A2"), -1) == 0
    assert evaluate_poincare(build_root_datum("B2"), 9) == Fraction(8200)


@pytest.mark.parametrize("label", SUPPORTED_TYPES)
def test_poincare_product_identity(label):
    ok, lhs, rhs = poincare_product_identity(build_root_datum(label))
    assert ok and lhs == rhs


def test_unsupported_type():
    with pytest.raises(UnsupportedType):
        build_root_datum("E8")


@given(st.sampled_from(SUPPORTED_TYPES), st.data())
def test_length_subadditive(label, data):
    R = build_root_datum(label)
    w = data.draw(st.sampled_from(R.W0))
    u = data.draw(st.sampled_from(R.W0))
    assert (w * u).length <= w.length + u.length
    assert w.inverse().length == w.length
    assert (w * u).matrix == tuple(
        tuple(sum(w.matrix[i][k] * u.matrix[k][j] for k in range(R.rank)) for j in range(R.rank))
        for i in range(R.rank))
