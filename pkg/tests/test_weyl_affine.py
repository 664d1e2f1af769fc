from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hecke_cell_lab.root_data import build_root_datum
from hecke_cell_lab.weyl_affine import affine_group

TYPES = ["A1", "A2", "B2", "G2", "A3"]


def group(label):
    return affine_group(build_root_datum(label))


def bfs_lengths(G, max_len):
    """Word length oracle: breadth-first search from Omega by the generators s_0..s_n."""
    dist = {u: 0 for u in G.omega_group()}
    frontier = list(dist)
    for k in range(1, max_len + 1):
        nxt = []
        for u in frontier:
            for s in G.S:
                v = s * u
                if v not in dist:
                    dist[v] = k
                    nxt.append(v)
        frontier = nxt
    return dist


@pytest.mark.parametrize("label,max_len", [("A1", 8), ("A2", 6), ("B2", 6), ("G2", 5)])
def test_length_matches_word_length(label, max_len):
    G = group(label)
    dist = bfs_lengths(G, max_len)
    for u, d in dist.items():
        assert G.length(u) == d
    assert set(G.ball(max_len)) == set(dist)


@pytest.mark.parametrize("label", TYPES)
def test_s0_is_an_involution_of_length_one(label):
    G = group(label)
    assert G.s0 * G.s0 == G.identity
    assert G.length(G.s0) == 1
    for s in G.S:
        assert G.length(s) == 1


@pytest.mark.parametrize("label,omega_size", [("A1", 2), ("A2", 3), ("B2", 2), ("G2", 1), ("A3", 4)])
def test_omega_group(label, omega_size):
    G = group(label)
    om = G.omega_group()
    assert len(om) == omega_size
    for a in om:
        for b in om:
            assert G.length(a * b) == 0


@pytest.mark.parametrize("label", TYPES)
def test_translation_length_and_w0(label):
    G = group(label)
    R = G.datum
    two_rho_vee = R.two_rho_vee
    for x in product(range(0, 3), repeat=R.rank):
        tx = G.translation(x)
        assert G.length(tx) == sum(a * b for a, b in zip(x, two_rho_vee))
        assert G.length(G.w0 * tx) == R.nu + G.length(tx)
        neg = G.translation(tuple(-a for a in x))
        assert G.length(neg * G.w0) == R.nu + G.length(neg)


def test_a1_examples():
    G = group("A1")
    assert G.length(G.translation((1,))) == 1
    t2 = G.translation((2,))
    assert G.length(t2) == 2
    rw = G.reduced_word(t2)
    assert rw.word == (0, 1)
    assert rw.omega == G.identity
    assert G.s0 * G.S[1] == t2
    assert rw.evaluate(G) == t2


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_reduced_word_round_trip(label):
    G = group(label)
    for u in G.ball(5):
        rw = G.reduced_word(u)
        assert len(rw) == G.length(u)
        assert rw.evaluate(G) == u
        assert G.length(rw.omega) == 0


def test_descents_a1():
    G = group("A1")
    t1 = G.translation((1,))
    # t_{x1} = s0 omega with omega the nontrivial length-zero element
    assert G.left_descents(t1) == {0}
    assert G.left_descents(G.w0) == {1} == G.right_descents(G.w0)
    assert G.right_descents(G.identity) == frozenset()


def subword_below(G, v):
    """Bruhat oracle: products of subwords of a reduced word of v."""
    rw = G.reduced_word(v)
    out = set()
    for mask in product((0, 1), repeat=len(rw.word)):
        u = G.identity
        for keep, i in zip(mask, rw.word):
            if keep:
                u = u * G.S[i]
        out.add(u * rw.omega)
    return out


@pytest.mark.parametrize("label,max_len", [("A1", 6), ("A2", 4), ("B2", 4)])
def test_bruhat_matches_subword_oracle(label, max_len):
    G = group(label)
    ball = G.ball(max_len)
    for v in ball:
        below = subword_below(G, v)
        assert G.lower_interval(v) == frozenset(below)
        for u in ball:
            assert G.bruhat_leq(u, v) == (u in below)


def test_bruhat_a1_examples():
    G = group("A1")
    s0, s1 = G.S
    assert G.bruhat_leq(G.identity, s0 * s1)
    assert G.bruhat_leq(s1, s0 * s1)
    assert G.bruhat_leq(s0, s0 * s1)
    assert not G.bruhat_leq(s0 * s1, s1 * s0)
    assert not G.bruhat_leq(s1, s0)
    om = [u for u in G.omega_group() if u != G.identity][0]
    assert not G.bruhat_leq(G.identity, om)


@pytest.mark.parametrize("label", TYPES)
def test_y0_at_length_zero_is_omega(label):
    G = group(label)
    assert G.enumerate_Y0(0) == set(G.omega_group())


@pytest.mark.parametrize("label,max_len", [("A1", 8), ("A2", 5), ("B2", 5), ("G2", 5)])
def test_y0_descent_and_factored_agree(label, max_len):
    G = group(label)
    assert G.enumerate_Y0(max_len) == G.factored_Y0_set(max_len)


@pytest.mark.parametrize("label,max_len", [("A1", 6), ("A2", 4), ("B2", 4)])
def test_factor_canonical(label, max_len):
    G = group(label)
    for u in G.ball(max_len):
        w, x, v = G.factor_canonical(u)
        assert G.datum.is_antidominant(x)
        assert G.finite(w) * G.translation(x) * G.finite(v) == u
        assert G.in_Y0(u) == (v.length == 0)


def test_factor_canonical_examples_a1():
    G = group("A1")
    s0, s1 = G.S
    w, x, v = G.factor_canonical(G.identity)
    assert x == (0,) and w.length == 0 and v.length == 0
    w, x, v = G.factor_canonical(s1)
    assert x == (0,) and w.length == 0 and v.length == 1
    w, x, v = G.factor_canonical(G.translation((-1,)))
    assert x == (-1,) and w.length == 0 and v.length == 0


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_special_elements(label):
    G = group(label)
    R = G.datum
    n0, m0, n0w0 = G.special_elements((0,) * R.rank)
    assert n0 == G.identity and m0 == G.identity and n0w0 == G.w0
    for x in product(range(-2, 3), repeat=R.rank):
        n_x, m_x, nw = G.special_elements(x)
        assert G.in_Y0(n_x)
        assert G.length(nw) == G.length(n_x) + R.nu
        assert G.right_descents(nw) >= G.S0_labels
        assert G.length(m_x) <= G.length(n_x)


@pytest.mark.parametrize("label", TYPES)
def test_c0_membership_examples(label):
    G = group(label)
    assert G.c0_membership(G.w0)
    assert not G.c0_membership(G.identity)
    for s in G.S:
        assert not G.c0_membership(s) or G.datum.nu == 1


@pytest.mark.parametrize("label,max_len", [("A1", 8), ("A2", 6), ("B2", 6)])
def test_canonical_cell_is_y0_in_c0(label, max_len):
    G = group(label)
    Y = G.enumerate_Y0(max_len)
    assert G.canonical_cell_c0(max_len) == {u for u in Y if G.c0_membership(u)}


@pytest.mark.parametrize("label,max_len", [("A1", 8), ("A2", 5)])
def test_nx_w0_in_gamma0(label, max_len):
    G = group(label)
    R = G.datum
    for x in product(range(-2, 3), repeat=R.rank):
        n_x, _, nw = G.special_elements(x)
        assert G.in_Gamma0(nw)
        assert G.c0_membership(nw)


def elements(label, max_len=4):
    return st.sampled_from(group(label).ball(max_len))


@settings(max_examples=80)
@given(st.data())
def test_group_laws(data):
    label = data.draw(st.sampled_from(["A1", "A2", "B2", "G2"]))
    G = group(label)
    u, v, w = (data.draw(elements(label)) for _ in range(3))
    assert (u * v) * w == u * (v * w)
    assert u * u.inverse() == G.identity
    assert G.length(u.inverse()) == G.length(u)
    assert G.length(u * v) <= G.length(u) + G.length(v)
    for s in G.S:
        assert abs(G.length(s * u) - G.length(u)) == 1
