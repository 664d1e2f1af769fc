from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hecke_cell_lab.laurent import QuadNumber
from hecke_cell_lab.linalg import (
    EchelonSpace,
    in_span,
    inverse,
    matmul,
    matvec,
    nullspace,
    rank,
    same_span,
    solve,
)

entries = st.integers(-3, 3).map(Fraction)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(entries, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


@settings(max_examples=80)
@given(matrices())
def test_rank_and_nullspace_against_sympy(m):
    oracle = sympy.Matrix(m)
    assert rank(m) == oracle.rank()
    ker = nullspace(m)
    assert len(ker) == len(oracle.nullspace())
    for v in ker:
        assert not any(matvec(m, v))


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse_against_sympy(m):
    oracle = sympy.Matrix(m)
    if oracle.det() == 0:
        with pytest.raises(ZeroDivisionError):
            inverse(m)
        return
    inv = inverse(m)
    assert sympy.Matrix(inv) == oracle.inv()
    n = len(m)
    assert matmul(m, inv) == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def test_solve_and_spans():
    a = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    assert solve(a, [Fraction(3), Fraction(4)]) == [1, 1]
    assert same_span([[1, 2], [2, 4]], [[Fraction(1, 2), 1]])
    assert in_span([[Fraction(1), Fraction(0)]], [Fraction(5), Fraction(0)])
    assert not in_span([[Fraction(1), Fraction(0)]], [Fraction(0), Fraction(1)])


def test_quadratic_entries():
    i = QuadNumber(0, 1, -1)
    one = QuadNumber(1, 0, -1)
    m = [[one, i], [i, -one]]  # rows proportional: row2 = i * row1
    assert rank(m) == 1
    ker = nullspace(m)
    assert len(ker) == 1 and not any(matvec(m, ker[0]))


def test_echelon_space():
    sp = EchelonSpace(3)
    assert sp.add([Fraction(1), Fraction(1), Fraction(0)])
    assert sp.add([Fraction(0), Fraction(1), Fraction(1)])
    assert not sp.add([Fraction(1), Fraction(2), Fraction(1)])
    assert len(sp) == 2
    v = [Fraction(2), Fraction(3), Fraction(1)]
    assert sp.contains(v)
    coords = sp.coordinates(v)
    rebuilt = [sum(c * row[j] for c, row in zip(coords, sp.basis())) for j in range(3)]
    assert rebuilt == v
    with pytest.raises(ValueError):
        sp.coordinates([Fraction(0), Fraction(0), Fraction(1)])
