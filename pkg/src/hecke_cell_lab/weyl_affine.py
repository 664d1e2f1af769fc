"""The extended affine Weyl group W = W_0 x| P.

An element ``ExtAffineElt(x, w)`` is the product ``t_x w`` of a translation
and a finite Weyl group element; it acts on P (x) R by ``v -> w(v) + x``.

Simple reflections of the affine Weyl group are labelled ``0..n``: label 0
is ``s_0 = t_phi s_phi`` where ``phi^vee`` is the highest coroot, and label
``i >= 1`` is the finite simple reflection ``s_i``.

Length is the number of affine hyperplanes separating the fundamental
alcove ``{0 < <v, a^vee> < 1}`` from its image:

    l(t_x w) = sum_{a>0, w^-1 a > 0} |<x, a^vee>|
             + sum_{a>0, w^-1 a < 0} |<x, a^vee> - 1|

so that ``l(t_x) = <x, 2 rho^vee>`` and ``l(w_0 t_x) = l(w_0) + l(t_x)`` for
dominant x, and ``l(t_x w_0) = l(w_0) + l(t_x)`` for anti-dominant x.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class ExtAffineElt:
    __slots__ = ("x", "w", "_hash")

    def __init__(self, x, w):
        self.x = tuple(x)
        self.w = w
        self._hash = hash((self.x, w.index))

    def __mul__(self, other):
        return ExtAffineElt(
            tuple(a + b for a, b in zip(self.x, self.w(other.x))), self.w * other.w
        )

    def inverse(self):
        wi = self.w.inverse()
        return ExtAffineElt(tuple(-a for a in wi(self.x)), wi)

    def __eq__(self, other):
        return isinstance(other, ExtAffineElt) and self.x == other.x and self.w == other.w

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.x, self.w.index)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def is_finite(self):
        return not any(self.x)

    def __repr__(self):
        if not any(self.x):
            return "(%r)" % (self.w,)
        return "t%s.%r" % (list(self.x), self.w)


@dataclass(frozen=True)
class AffineWord:
    """``s_{i_1} ... s_{i_k} * omega`` with omega of length zero."""

    word: tuple
    omega: ExtAffineElt

    def __len__(self):
        return len(self.word)

    def evaluate(self, group):
        u = group.identity
        for i in self.word:
            u = u * group.S[i]
        return u * self.omega

    def __str__(self):
        letters = " ".join("s%d" % i for i in self.word) or "1"
        return "%s . %r" % (letters, self.omega)


class ExtendedAffineWeylGroup:
    """Length, descents, reduced words and Bruhat order on W = W_0 x| P."""

    def __init__(self, datum):
        self.datum = datum
        R = datum
        n = self.rank = R.rank
        self.zero = (0,) * n
        self.identity = ExtAffineElt(self.zero, R.identity)
        phi = R.affine_root
        self.s0 = ExtAffineElt(phi, R.element_from_matrix(R.reflection_matrix(phi)))
        self.S = [self.s0] + [ExtAffineElt(self.zero, s) for s in R.simple_reflections]
        self.S0_labels = frozenset(range(1, n + 1))
        # for each w: flags [w^-1 a < 0] over positive roots
        self._neg = []
        for w in R.W0:
            wi = w.inverse()
            self._neg.append(tuple(int(not R.is_positive_root(wi(a))) for a in R.positive_roots))
        self._coroots = R.positive_coroots
        self._len = {}
        self._leq = {}
        self._below = {}
        self._omega = None
        self._balls = {}
        self.w0 = ExtAffineElt(self.zero, R.w0)

    # -- basic operations --------------------------------------------------

    def elt(self, x, w=None):
        return ExtAffineElt(x, self.datum.identity if w is None else w)

    def translation(self, x):
        return ExtAffineElt(x, self.datum.identity)

    def finite(self, w):
        return ExtAffineElt(self.zero, w)

    def mul(self, u, v):
        return u * v

    def length(self, u):
        l = self._len.get(u)
        if l is None:
            x = u.x
            neg = self._neg[u.w.index]
            l = 0
            for c, f in zip(self._coroots, neg):
                m = sum(a * b for a, b in zip(x, c)) - f
                l += m if m >= 0 else -m
            self._len[u] = l
        return l

    def left_descents(self, u):
        l = self.length(u)
        return frozenset(i for i, s in enumerate(self.S) if self.length(s * u) < l)

    def right_descents(self, u):
        l = self.length(u)
        return frozenset(i for i, s in enumerate(self.S) if self.length(u * s) < l)

    def descent_sets(self, u):
        return self.left_descents(u), self.right_descents(u)

    def reduced_word(self, u):
        word = []
        while True:
            l = self.length(u)
            if l == 0:
                return AffineWord(tuple(word), u)
            for i, s in enumerate(self.S):
                su = s * u
                if self.length(su) < l:
                    word.append(i)
                    u = su
                    break
            else:  # pragma: no cover - length formula guarantees a descent
                raise AssertionError("no left descent for element of positive length")

    def omega_part(self, u):
        return self.reduced_word(u).omega

    # -- length-zero elements and balls ------------------------------------

    def omega_group(self):
        """All length-zero elements (isomorphic to P / ZR)."""
        if self._omega is None:
            R = self.datum
            out = []
            for x in product(range(-1, 2), repeat=self.rank):
                for w in R.W0:
                    u = ExtAffineElt(x, w)
                    if self.length(u) == 0:
                        out.append(u)
            self._omega = sorted(out)
        return self._omega

    def ball(self, max_len):
        """All elements of length <= max_len, grouped in shells by length."""
        shells = self._balls.get("shells")
        if shells is None:
            shells = self._balls["shells"] = [list(self.omega_group())]
        while len(shells) <= max_len:
            seen = set(shells[-1])
            if len(shells) >= 2:
                seen.update(shells[-2])
            nxt = set()
            target = len(shells)
            for u in shells[-1]:
                for s in self.S:
                    su = s * u
                    if su not in nxt and self.length(su) == target:
                        nxt.add(su)
            shells.append(sorted(nxt))
        return [u for sh in shells[: max_len + 1] for u in sh]

    def shell(self, k):
        self.ball(k)
        return list(self._balls["shells"][k])

    # -- Bruhat order ------------------------------------------------------

    def bruhat_leq(self, u, v):
        """u <= v in the Bruhat order (elements of different Omega-cosets are incomparable)."""
        if self.omega_part(u) != self.omega_part(v):
            return False
        return self._leq_rec(u, v)

    def _leq_rec(self, u, v):
        key = (u, v)
        r = self._leq.get(key)
        if r is not None:
            return r
        lu, lv = self.length(u), self.length(v)
        if lu > lv:
            r = False
        elif lv == 0 or lu == lv:
            r = u == v
        else:
            for s in self.S:
                sv = s * v
                if self.length(sv) < lv:
                    su = s * u
                    r = self._leq_rec(su, sv) if self.length(su) < lu else self._leq_rec(u, sv)
                    break
        self._leq[key] = r
        return r

    def lower_interval(self, v):
        """{y : y <= v}, via below(v) = below(sv) u s.below(sv) for a left descent s."""
        r = self._below.get(v)
        if r is not None:
            return r
        lv = self.length(v)
        if lv == 0:
            r = frozenset([v])
        else:
            for s in self.S:
                sv = s * v
                if self.length(sv) < lv:
                    b = self.lower_interval(sv)
                    r = frozenset(b | {s * y for y in b})
                    break
        self._below[v] = r
        return r

    # -- Y_0, Gamma_0, factorization ---------------------------------------

    def in_Y0(self, u):
        return self.right_descents(u) <= {0}

    def enumerate_Y0(self, max_len):
        """All u with l(u) <= max_len and R(u) contained in {s_0}."""
        return {u for u in self.ball(max_len) if self.in_Y0(u)}

    def in_Gamma0(self, u):
        return self.right_descents(u) == self.S0_labels

    def finite_right_descents(self, w):
        """R(w) for w in W_0, as affine labels."""
        return frozenset(i + 1 for i in self.datum.right_descents(w))

    def antidominant_weights(self, max_len):
        """x in P^- with l(t_x) <= max_len."""
        R = self.datum
        out = []
        bound = max_len
        for x in product(range(-bound, 1), repeat=self.rank):
            if self.length(self.translation(x)) <= max_len:
                out.append(x)
        return out

    def factored_Y0_set(self, max_len):
        """{w t_x : w in W_0, x in P^-, R(w) in L(t_x)} cut at length max_len."""
        R = self.datum
        out = set()
        for x in self.antidominant_weights(max_len + R.nu):
            tx = self.translation(x)
            lx = self.left_descents(tx)
            for w in R.W0:
                if self.finite_right_descents(w) <= lx:
                    u = self.finite(w) * tx
                    if self.length(u) <= max_len:
                        out.add(u)
        return out

    def factor_candidates(self, u):
        """All (w, x, v) with u = w t_x v, x in P^-, R(w) in L(t_x)."""
        R = self.datum
        out = []
        for w in R.W0:
            wi = w.inverse()
            x = wi(u.x)
            if not R.is_antidominant(x):
                continue
            if self.finite_right_descents(w) <= self.left_descents(self.translation(x)):
                out.append((w, x, wi * u.w))
        return out

    def factor_canonical(self, u):
        """The unique (w, x, v) with u = w t_x v, x in P^-, R(w) in L(t_x).

        Uniqueness is checked by exhaustive search over W_0, and the length
        identity l(u) = l(t_x) + l(v) - l(w) is asserted.
        """
        cands = self.factor_candidates(u)
        if len(cands) != 1:
            raise AssertionError("factorization of %r not unique: %r" % (u, cands))
        w, x, v = cands[0]
        if self.finite(w) * self.translation(x) * self.finite(v) != u:
            raise AssertionError("factorization does not multiply back")
        if self.length(u) != self.length(self.translation(x)) + v.length - w.length:
            raise AssertionError("length identity fails for %r" % (u,))
        return w, x, v

    def special_elements(self, x):
        """(n_x, m_x, n_x w_0): shortest elements of t_x W_0 and W_0 t_x W_0."""
        R = self.datum
        tx = self.translation(x)
        coset = [tx * self.finite(w) for w in R.W0]
        n_x = _unique_min(coset, self.length)
        double = {self.finite(a) * tx * self.finite(b) for a in R.W0 for b in R.W0}
        m_x = _unique_min(double, self.length)
        return n_x, m_x, n_x * self.w0

    # -- lowest two-sided cell ---------------------------------------------

    def c0_membership(self, u):
        """u = z1 w_0 z2 with l(u) = l(z1) + l(w_0) + l(z2)?"""
        memo = self._balls.setdefault("c0", {})
        return self._c0(u, memo)

    def _c0(self, u, memo):
        r = memo.get(u)
        if r is not None:
            return r
        l = self.length(u)
        nu = self.datum.nu
        if l < nu:
            r = False
        elif l == nu:
            r = u in self._c0_base()
        else:
            r = False
            for s in self.S:
                su = s * u
                if self.length(su) < l and self._c0(su, memo):
                    r = True
                    break
                us = u * s
                if self.length(us) < l and self._c0(us, memo):
                    r = True
                    break
        memo[u] = r
        return r

    def _c0_base(self):
        base = self._balls.get("c0base")
        if base is None:
            om = self.omega_group()
            base = self._balls["c0base"] = {a * self.w0 * b for a in om for b in om}
        return base

    def canonical_cell_c0(self, max_len):
        """{w t_x t_{-rho} : w in W_0, x in P^-, R(w) in L(t_x)} with length <= max_len."""
        R = self.datum
        trho = self.translation(tuple(-r for r in R.rho))
        out = set()
        for x in self.antidominant_weights(max_len + R.nu):
            tx = self.translation(x)
            lx = self.left_descents(tx)
            for w in R.W0:
                if self.finite_right_descents(w) <= lx:
                    u = self.finite(w) * tx * trho
                    if self.length(u) <= max_len:
                        out.add(u)
        return out


def _unique_min(elts, key):
    elts = list(elts)
    m = min(key(u) for u in elts)
    best = [u for u in elts if key(u) == m]
    if len(best) != 1:
        raise AssertionError("minimal-length element not unique")
    return best[0]


_GROUPS = {}


def affine_group(datum):
    g = _GROUPS.get(datum.type_label)
    if g is None:
        g = _GROUPS[datum.type_label] = ExtendedAffineWeylGroup(datum)
    return g
