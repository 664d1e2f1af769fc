from fractions import Fraction

import pytest

from hecke_cell_lab.laurent import LaurentPoly as L, Specialization, TorusPoint
from hecke_cell_lab.quotient_ht import (
    NotRegular,
    Lt_construct,
    build_ht,
    burnside_irreducible,
    ideal_dims,
    lie_criterion_typeA,
    m_t0_kernel,
    pairing_sign_relation,
    principal_point,
    rho_sign_relation,
    sample_points,
    submodule_span,
    theta_reduce,
    theta_t_report,
    thm34_criteria,
    thm35_report,
)
from hecke_cell_lab.root_data import build_root_datum

A1 = build_root_datum("A1")
Q4 = Specialization(q0=4)


@pytest.mark.parametrize("label,q0,coords", [
    ("A1", 4, ["2"]), ("A1", -1, ["0 + 1v"]), ("A2", 9, ["9", "9"]), ("B2", 4, ["16", "8"]),
])
def test_principal_point(label, q0, coords):
    R = build_root_datum(label)
    t = principal_point(R, Specialization(q0=q0))
    assert t.to_json() == coords
    for a in R.simple_roots:
        assert t.weight_value(a) == q0


def test_theta_reduce_a1_regular_point():
    # at t = (3): theta_1 = a + b theta_{-1} with a, b central; evaluating at
    # t and s(t) = (1/3) gives 3 = a + b/3 and 1/3 = a + 3b
    t = TorusPoint(Q4, [3])
    for method in ("regular", "generic"):
        assert theta_reduce(A1, L.monomial((1,)), t, method) == [Fraction(10, 3), -1]
        assert theta_reduce(A1, L.monomial((2,)), t, method) == [Fraction(91, 9), Fraction(-10, 3)]
        z = L.monomial((1,)) + L.monomial((-1,))
        assert theta_reduce(A1, z, t, method) == [Fraction(10, 3), 0]


def test_theta_reduce_a1_fixed_point():
    # t = (-1) is fixed by s; theta_1 = (theta_1 + theta_-1) - theta_-1 exactly
    t = TorusPoint(Q4, [-1])
    assert not t.is_regular(A1)
    with pytest.raises(NotRegular):
        theta_reduce(A1, L.monomial((1,)), t, "regular")
    assert theta_reduce(A1, L.monomial((1,)), t) == [-2, -1]
    with pytest.raises(ValueError):
        theta_reduce(A1, L.monomial((1,)), t, "bogus")


@pytest.mark.parametrize("label,coords", [("A1", [3]), ("A1", [-1]), ("A2", [2, 1]), ("A2", [1, 1])])
def test_model_invariants(label, coords):
    R = build_root_datum(label)
    model = build_ht(R, TorusPoint(Q4, coords))
    rep = model.check_invariants()
    assert rep["holds"], rep
    assert model.dim == len(R.W0) ** 2


@pytest.mark.parametrize("label,coords", [("A1", [3]), ("A1", [-1]), ("A2", [1, 1]), ("B2", [2, 3])])
def test_theta_t_report(label, coords):
    rep = theta_t_report(build_root_datum(label), TorusPoint(Q4, coords))
    assert rep["holds"], rep
    assert rep["dim_theta_t"] == rep["expected"]


def test_submodule_span_of_unit_is_everything():
    model = build_ht(A1, TorusPoint(Q4, [3]))
    one = model.vector(model.B.one())
    assert submodule_span(model, [one], "left").dim == model.dim
    C = model.vector(model.B.C())
    assert submodule_span(model, [C], "right").dim == 2
    with pytest.raises(ValueError):
        submodule_span(model, [one], "sideways")


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_ideal_dims_at_principal_points(label):
    R = build_root_datum(label)
    for q0, expected in ((4, 1), (9, 1), (-1, 0)):
        dims, extra = ideal_dims(R, principal_point(R, Specialization(q0=q0)))
        assert set(dims.values()) == {expected}
        assert extra["routes_agree"]


@pytest.mark.parametrize("label,coords", [("A1", [3]), ("A1", [-1]), ("A2", [2, 1]), ("A2", [1, -1])])
def test_vanishing_criteria(label, coords):
    crit = thm34_criteria(build_root_datum(label), TorusPoint(Q4, coords))
    assert crit["holds"], crit


def test_vanishing_criteria_quadratic_point():
    R = build_root_datum("A1")
    crit = thm34_criteria(R, principal_point(R, Specialization(q0=-1)))
    assert crit["holds"] and crit["criterion_i_zero"]
    assert set(crit["dims"].values()) == {0}


@pytest.mark.parametrize("label,q0,dim", [("A1", 4, 1), ("A1", -1, 0), ("A2", -1, 0), ("B2", 9, 1)])
def test_principal_ideal_report(label, q0, dim):
    rep = thm35_report(build_root_datum(label), q0=q0)
    assert rep["holds"], rep
    assert rep["CHC'"]["dim"] == rep["C'HC"]["dim"] == dim
    if dim:
        assert rep["CHC'"]["eigenvalues"] == [str(q0), "-1"]
        assert rep["C'HC"]["eigenvalues"] == ["-1", str(q0)]


def test_principal_ideal_report_sqrt_q():
    rep = thm35_report(A1, sqrt_q=-3)
    assert rep["holds"] and rep["q0"] == "9"


@pytest.mark.parametrize("label,coords,q0,dim", [
    ("A1", [3], 4, 2),
    ("A1", [1], 4, 2),
    ("A1", ["2"], 4, 1),
    ("A2", [2, 1], 4, 3),
    ("A2", [1, 1], 4, 6),
])
def test_irreducible_module_dimensions(label, coords, q0, dim):
    R = build_root_datum(label)
    spec = Specialization(q0=q0)
    _, rep = Lt_construct(R, TorusPoint(spec, coords))
    assert rep["holds"], rep
    assert rep["dim"] == dim
    _, rep_dual = Lt_construct(R, TorusPoint(spec, coords), dual=True)
    assert rep_dual["holds"], rep_dual


def test_irreducible_module_vanishes_when_generator_does():
    t = principal_point(A1, Specialization(q0=-1))
    sub, rep = Lt_construct(A1, t)
    assert rep["dim"] == 0 and not rep["generator_nonzero"] and sub.dim == 0


def test_m_t0_at_quadratic_point():
    # the generator vanishes, so M_t0 is all of H_t C (dimension 2)
    t = principal_point(A1, Specialization(q0=-1))
    M, rep = m_t0_kernel(A1, t)
    assert rep["kernels_agree"]
    assert rep["H_tX_dim"] == 2 == M.dim
    assert rep["scalar_condition_kernel_dim"] == 2


def test_m_t0_at_regular_point():
    M, rep = m_t0_kernel(A1, TorusPoint(Q4, [3]))
    assert rep["kernels_agree"] and M.dim == 0


def test_burnside_examples():
    one, zero = Fraction(1), Fraction(0)
    e12 = [[zero, one], [zero, zero]]
    e21 = [[zero, zero], [one, zero]]
    assert burnside_irreducible([e12, e21], 2) == (True, 4)
    assert burnside_irreducible([e12], 2) == (False, 2)
    assert burnside_irreducible([], 0) == (False, 0)


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_sign_relations(label):
    R = build_root_datum(label)
    assert pairing_sign_relation(R) == 1
    assert rho_sign_relation(R) == (-1) ** R.nu


def test_lie_criterion_examples():
    A2 = build_root_datum("A2")
    rep = lie_criterion_typeA(A2, TorusPoint(Q4, [2, 1]))
    assert rep["root_spaces"] == ["E12"] and rep["charpoly"] == "lam**3"
    assert rep["agree"] and rep["direct_dim"] == 3
    rep = lie_criterion_typeA(A1, TorusPoint(Q4, [3]))
    assert rep["root_spaces"] == [] and rep["agree"]
    rep = lie_criterion_typeA(A1, principal_point(A1, Q4))
    assert rep["root_spaces"] == ["E12"] and rep["agree"]
    with pytest.raises(ValueError):
        lie_criterion_typeA(build_root_datum("B2"), TorusPoint(Q4, [2, 3]))


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_sample_points(label):
    R = build_root_datum(label)
    pts = sample_points(R)
    assert len(pts) >= 20
    assert sum(1 for _, t in pts if not t.is_regular(R)) >= 2
    assert pts == sample_points(R)
    assert len({lab for lab, _ in pts}) == len(pts)
