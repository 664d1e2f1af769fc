from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hecke_cell_lab import _kernels_py as P
from hecke_cell_lab import kernels as K
from hecke_cell_lab.laurent import MASK, OFF, layout

try:
    from hecke_cell_lab import _kernels as C
except ImportError:  # pragma: no cover - extension not built
    C = None

needs_ext = pytest.mark.skipif(C is None, reason="compiled extension not built")

N = 2
LAY = layout(N)
coeffs = st.one_of(st.integers(-5, 5), st.integers(-2**70, 2**70),
                   st.fractions(max_denominator=7))


def terms(max_size=6, exp=4):
    key = st.tuples(st.integers(-exp, exp), st.integers(-exp, exp),
                    st.integers(-2, 2)).map(lambda t: LAY.pack(t[1:], t[0]))
    return st.dictionaries(key, coeffs.filter(bool), max_size=max_size)


def norm(d):
    return {k: Fraction(c) for k, c in d.items()}


def test_backend_selected():
    assert K.BACKEND in ("cython", "python")
    if C is not None:
        assert K.BACKEND == "cython"


@needs_ext
@settings(max_examples=100)
@given(terms(), terms())
def test_mul_add_agree(a, b):
    assert norm(C.poly_mul(a, b, LAY.zero)) == norm(P.poly_mul(a, b, LAY.zero))
    assert norm(C.poly_add(a, b, 3)) == norm(P.poly_add(a, b, 3))
    assert norm(C.poly_iadd(dict(a), b, -1)) == norm(P.poly_iadd(dict(a), b, -1))


@needs_ext
@settings(max_examples=60)
@given(terms(), st.sampled_from([(1, 0), (-1, 2), (0, -1)]))
def test_act_and_demazure_agree(a, img):
    deltas = (LAY.delta((img[0] - 1, img[1])), LAY.delta((0, 0)))
    assert norm(C.poly_act(a, LAY.x_shifts, MASK, OFF, deltas)) == \
        norm(P.poly_act(a, LAY.x_shifts, MASK, OFF, deltas))
    alpha = LAY.delta((2, -1))
    for eps in (1, -1):
        assert norm(C.poly_demazure(a, LAY.x_shifts[0], MASK, OFF, alpha, eps)) == \
            norm(P.poly_demazure(a, LAY.x_shifts[0], MASK, OFF, alpha, eps))


@pytest.mark.parametrize("impl", [P] + ([C] if C is not None else []),
                         ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=60)
@given(a=terms(), b=terms().filter(bool))
def test_divexact_inverts_mul(impl, a, b):
    prod = impl.poly_mul(a, b, LAY.zero)
    q = impl.poly_divexact(prod, b, LAY.zero, LAY.all_shifts, MASK, OFF)
    assert norm(q) == norm(a)


@pytest.mark.parametrize("impl", [P] + ([C] if C is not None else []),
                         ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_divexact_rejects_remainder(impl):
    one = {LAY.zero: 1}
    x = {LAY.pack((1, 0)): 1}
    f = P.poly_add(one, P.poly_mul(x, x, LAY.zero))
    g = P.poly_add(one, x, -1)
    with pytest.raises(K.InexactDivision):
        impl.poly_divexact(f, g, LAY.zero, LAY.all_shifts, MASK, OFF)
