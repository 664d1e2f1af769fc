"""The affine Hecke algebra H in Bernstein normal form ``sum_w T_w f_w``.

Coefficients ``f_w`` lie in Theta (on the RIGHT of ``T_w``).  Moving a
Theta element past a finite generator uses

    f T_s = T_s s(f) + (q - 1) (f - s(f)) / (1 - theta_{-alpha_s})

which, for the length and ``s_0`` conventions of :mod:`.weyl_affine`, is the
relation compatible with ``theta_x = q^{-l(t_x)/2} T_{t_x}`` for dominant x
(cross-checked against the Iwahori-Matsumoto side in :mod:`.hecke_im`).

The elements ``C = C_{w_0}`` and ``C' = C'_{w_0}`` follow the naming used
here throughout: ``T_s C = q C`` and ``T_s C' = -C'``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import kernels as K
from .laurent import (
    MASK,
    OFF,
    LaurentPoly,
    ScalarQ,
    layout,
    numerator_product,
    pairing_ab,
    weyl_ratio_sum,
)
from .root_data import build_root_datum


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class BernsteinAlgebra:
    """Multiplication tables and distinguished elements for one root datum."""

    def __init__(self, datum, eps=-1):
        self.datum = datum
        self.n = n = datum.rank
        self.eps = eps
        self.lay = lay = layout(n)
        self.zero_key = lay.zero
        W = datum.W0
        self.size = len(W)
        self.q_terms = {lay.pack((0,) * n, 2): 1}
        self.qm1 = {lay.pack((0,) * n, 2): 1, lay.zero: -1}
        self.one_terms = {lay.zero: 1}
        self.alpha_delta = [lay.delta(a) for a in datum.simple_roots]
        self.s_index = [s.index for s in datum.simple_reflections]
        # right multiplication T_u T_s
        self.ws = [[datum.mul_table[u.index][s] for s in self.s_index] for u in W]
        self.up = [[W[self.ws[u.index][i]].length > u.length for i in range(n)] for u in W]
        self._build_finite_table()
        self._star_T = None
        self._C = self._Cp = None

    # -- finite Hecke algebra ---------------------------------------------

    def _build_finite_table(self):
        """Structure constants T_w T_u = sum_z c[w][u][z] T_z (c in Z[q], as key dicts)."""
        R = self.datum
        W = R.W0
        size = self.size
        table = [[None] * size for _ in range(size)]
        for u in W:
            table[0][u.index] = {u.index: self.one_terms}
        order = sorted(W, key=lambda w: w.length)
        for w in order[1:]:
            # w = s w' with l(w') = l(w) - 1
            s = w.word[0]
            wp = R.simple_reflections[s] * w
            for u in W:
                prev = table[wp.index][u.index]
                out = {}
                for z, c in prev.items():
                    for z2, c2 in self._left_Ts_T(s, z).items():
                        out.setdefault(z2, {})
                        K.poly_iadd(out[z2], K.poly_mul(c, c2, self.zero_key))
                table[w.index][u.index] = {z: c for z, c in out.items() if c}
        self.ftable = table

    def _left_Ts_T(self, i, z):
        R = self.datum
        sz = R.mul_table[self.s_index[i]][z]
        if R.W0[sz].length > R.W0[z].length:
            return {sz: self.one_terms}
        return {z: self.qm1, sz: self.q_terms}

    # -- constructors -----------------------------------------------------

    def element(self, coeffs):
        return HeckeElt(self, {w: t for w, t in coeffs.items() if t})

    def zero(self):
        return HeckeElt(self, {})

    def one(self):
        return HeckeElt(self, {0: dict(self.one_terms)})

    def T(self, w):
        idx = w if isinstance(w, int) else w.index
        return HeckeElt(self, {idx: dict(self.one_terms)})

    def Ts(self, i):
        """T_{s_i} for the finite simple reflection with 0-based index i."""
        return self.T(self.s_index[i])

    def theta(self, x, coeff=1, vexp=0):
        return HeckeElt(self, {0: {self.lay.pack(tuple(x), vexp): coeff}})

    def from_theta(self, f):
        return HeckeElt(self, {0: dict(f.terms)} if f.terms else {})

    def scalar(self, s):
        return self.from_theta(LaurentPoly.from_scalar(self.n, s))

    # -- core products ----------------------------------------------------

    def _act_terms(self, terms, i):
        s = self.datum.simple_reflections[i]
        from .laurent import _act_deltas
        return K.poly_act(terms, self.lay.x_shifts, MASK, OFF, _act_deltas(s))

    def _D(self, terms, i):
        d = K.poly_demazure(terms, self.lay.x_shifts[i], MASK, OFF, self.alpha_delta[i], self.eps)
        if not d:
            return d
        return K.poly_mul(d, self.qm1, self.zero_key)

    def right_mul_Ts(self, coeffs, i):
        """(sum_u T_u h_u) T_{s_i} in normal form (coefficient dicts)."""
        out = {}
        zk = self.zero_key
        for u, h in coeffs.items():
            sh = self._act_terms(h, i)
            us = self.ws[u][i]
            if self.up[u][i]:
                _acc(out, us, sh)
            else:
                _acc(out, u, K.poly_mul(sh, self.qm1, zk))
                _acc(out, us, K.poly_mul(sh, self.q_terms, zk))
            d = self._D(h, i)
            if d:
                _acc(out, u, d)
        return {u: h for u, h in out.items() if h}

    def theta_times_T_all(self, f):
        """{w: f T_w in normal form} for all w in W_0."""
        R = self.datum
        res = {0: {0: dict(f)}}
        for w in sorted(R.W0, key=lambda w: w.length)[1:]:
            i = w.word[-1]
            prev = R.mul_table[w.index][self.s_index[i]]
            res[w.index] = self.right_mul_Ts(res[prev], i)
        return res

    def left_theta_mul(self, f, coeffs):
        """f * (sum_w T_w g_w) for f in Theta (terms dict)."""
        if len(coeffs) == 1 and 0 in coeffs:
            return {0: K.poly_mul(f, coeffs[0], self.zero_key)}
        ft = self.theta_times_T_all(f)
        out = {}
        zk = self.zero_key
        for w, g in coeffs.items():
            for u, h in ft[w].items():
                _acc(out, u, K.poly_mul(h, g, zk))
        return {u: h for u, h in out.items() if h}

    def left_T_mul(self, w, coeffs):
        """T_w * (sum_u T_u h_u)."""
        out = {}
        zk = self.zero_key
        row = self.ftable[w]
        for u, h in coeffs.items():
            for z, c in row[u].items():
                _acc(out, z, K.poly_mul(c, h, zk) if c is not self.one_terms else h)
        return {z: h for z, h in out.items() if h}

    def mul(self, a, b):
        out = {}
        for w, f in a.items():
            x = self.left_theta_mul(f, b)
            if w:
                x = self.left_T_mul(w, x)
            for u, h in x.items():
                _acc(out, u, h)
        return {u: h for u, h in out.items() if h}

    # -- distinguished elements -------------------------------------------

    def C(self):
        if self._C is None:
            nu = self.datum.nu
            self._C = HeckeElt(self, {
                w.index: {self.lay.pack((0,) * self.n, -nu): 1} for w in self.datum.W0
            })
        return self._C

    def Cprime(self):
        if self._Cp is None:
            nu = self.datum.nu
            self._Cp = HeckeElt(self, {
                w.index: {self.lay.pack((0,) * self.n, nu - 2 * w.length):
                          -1 if (nu - w.length) % 2 else 1}
                for w in self.datum.W0
            })
        return self._Cp

    def A_subset_form(self):
        """q^{nu/2} sum_{I subset R+} (-q)^{-|I|} theta_rho theta_{-alpha_I}."""
        R = self.datum
        out = {}
        for k in range(R.nu + 1):
            for I in combinations(R.positive_roots, k):
                s = [sum(c) for c in zip(*I)] if I else [0] * self.n
                x = tuple(r - a for r, a in zip(R.rho, s))
                key = self.lay.pack(x, R.nu - 2 * k)
                out[key] = out.get(key, 0) + (-1) ** k
        return LaurentPoly(self.n, {k: c for k, c in out.items() if c})

    def A_product_form(self):
        """(-1)^nu q^{-nu/2} theta_rho^{-1} prod (1 - q theta_alpha)."""
        R = self.datum
        f = numerator_product(R).shift(tuple(-r for r in R.rho), -R.nu)
        return -f if R.nu % 2 else f

    def A_element(self):
        a = self.A_subset_form()
        b = self.A_product_form()
        if a != b:
            raise AssertionError("the two expressions for A disagree")
        return self.from_theta(a)

    def subset_sum(self, sign):
        """sum_I (-q)^{sign |I|} theta_{sign alpha_I} by direct enumeration."""
        R = self.datum
        out = {}
        for k in range(R.nu + 1):
            for I in combinations(R.positive_roots, k):
                s = [sign * sum(c) for c in zip(*I)] if I else [0] * self.n
                key = self.lay.pack(tuple(s), 2 * sign * k)
                out[key] = out.get(key, 0) + (-1) ** k
        return LaurentPoly(self.n, {k: c for k, c in out.items() if c})

    # -- involutions ------------------------------------------------------

    def tilde(self, h):
        """Anti-automorphism: T_r -> T_r, theta_x -> theta_x."""
        R = self.datum
        out = {}
        for w, f in h.coeffs.items():
            wi = R.inv_table[w]
            for u, g in self.left_theta_mul(f, {wi: dict(self.one_terms)}).items():
                _acc(out, u, g)
        return HeckeElt(self, {u: g for u, g in out.items() if g})

    def _star_table(self):
        if self._star_T is None:
            R = self.datum
            tab = {}
            for w in R.W0:
                x = self.one().coeffs
                for i in w.word:
                    gi = {0: dict(self.qm1), self.s_index[i]: {self.zero_key: -1}}
                    x = self.mul(x, gi)
                tab[w.index] = x
            self._star_T = tab
        return self._star_T

    def star(self, h):
        """Automorphism: T_r -> -q T_r^{-1} = q - 1 - T_r, theta_x -> theta_{-x}."""
        tab = self._star_table()
        out = {}
        zk = self.zero_key
        n = self.n
        for w, f in h.coeffs.items():
            fi = LaurentPoly(n, f).invert_lattice().terms
            for z, c in tab[w].items():
                _acc(out, z, K.poly_mul(c, fi, zk))
        return HeckeElt(self, {u: g for u, g in out.items() if g})

    # -- center, Steinberg basis ------------------------------------------

    def is_central(self, h):
        gens = [self.Ts(i) for i in range(self.n)]
        gens += [self.theta(x) for x in self.datum.fundamental_weights]
        return all(g * h == h * g for g in gens)

    def steinberg_e(self, w):
        R = self.datum
        neg = [i for i, a in enumerate(R.simple_roots) if not R.is_positive_root(w(a))]
        x = tuple(sum(R.fundamental_weights[i][j] for i in neg) for j in range(self.n))
        return w(x)

    def steinberg_basis(self):
        return [self.steinberg_e(w) for w in self.datum.W0]

    # -- formulas ---------------------------------------------------------

    def formula_sides(self, k, x=None):
        """Both sides of formula k in {1..5} (for k = 1, x is the weight)."""
        R = self.datum
        C, Cp = self.C(), self.Cprime()
        rho = R.rho
        mrho = tuple(-r for r in rho)
        nu = R.nu
        if k == 1:
            x = tuple(x)
            lhs = C * self.theta(x) * C
            rhs = self.from_theta(weyl_ratio_sum(R, LaurentPoly.monomial(x)).shift((0,) * self.n, -nu)) * C
        elif k == 2:
            lhs = Cp * self.theta(mrho) * C
            rhs = Cp * self.from_theta(self.subset_sum(+1).shift(mrho, -nu))
        elif k == 3:
            lhs = Cp * self.theta(rho) * C
            rhs = Cp * self.from_theta(self.subset_sum(-1).shift(rho, nu))
        elif k == 4:
            lhs = C * self.theta(mrho) * Cp
            rhs = self.from_theta(self.subset_sum(+1).shift(mrho, -nu)) * Cp
        elif k == 5:
            lhs = C * self.theta(rho) * Cp
            rhs = self.from_theta(self.subset_sum(-1).shift(rho, nu)) * Cp
        else:
            raise ValueError("formula index must be 1..5")
        return lhs, rhs

    def verify_formula(self, k, x=None):
        """Compute both sides exactly; returns a dict with 'holds' and a witness."""
        lhs, rhs = self.formula_sides(k, x)
        diff = lhs - rhs
        rec = {"formula": k, "holds": not diff}
        if x is not None:
            rec["x"] = list(x)
        if diff:
            w = min(diff.coeffs)
            f = LaurentPoly(self.n, diff.coeffs[w])
            x0, m, c = f.items()[0]
            rec["witness"] = {"T": repr(self.datum.W0[w]), "theta": list(x0), "v": m,
                              "coefficient": str(c)}
        return rec

    def pairing(self, A, B):
        return pairing_ab(self.datum, A, B)


def _acc(out, key, terms):
    cur = out.get(key)
    if cur is None:
        out[key] = dict(terms)
    else:
        K.poly_iadd(cur, terms)


class HeckeElt:
    """``sum_w T_w f_w``; ``coeffs`` maps W_0 indices to packed Theta terms."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg, coeffs):
        self.alg = alg
        self.coeffs = coeffs

    def _c(self, other):
        if isinstance(other, HeckeElt):
            return other
        if isinstance(other, LaurentPoly):
            return self.alg.from_theta(other)
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._c(other)
        out = {w: dict(f) for w, f in self.coeffs.items()}
        for w, f in other.coeffs.items():
            _acc(out, w, f)
        return HeckeElt(self.alg, {w: f for w, f in out.items() if f})

    __radd__ = __add__

    def __neg__(self):
        return HeckeElt(self.alg, {w: {k: -c for k, c in f.items()} for w, f in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._c(other))

    def __rsub__(self, other):
        return self._c(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.alg.zero()
            return HeckeElt(self.alg, {w: {k: _norm(c * other) for k, c in f.items()}
                                       for w, f in self.coeffs.items()})
        other = self._c(other)
        return HeckeElt(self.alg, self.alg.mul(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return self._c(other) * self

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            other = self._c(other)
        return self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        return hash(frozenset((w, frozenset(f.items())) for w, f in self.coeffs.items()))

    def coefficient(self, w):
        idx = w if isinstance(w, int) else w.index
        return LaurentPoly(self.alg.n, dict(self.coeffs.get(idx, {})))

    def items(self):
        W = self.alg.datum.W0
        return [(W[w], LaurentPoly(self.alg.n, f)) for w, f in sorted(self.coeffs.items())]

    def nterms(self):
        return sum(len(f) for f in self.coeffs.values())

    def to_text(self):
        """Canonical serialization: one 'T[w] * (poly)' summand per W_0 element."""
        if not self.coeffs:
            return "0"
        return " + ".join("T[%r]*(%s)" % (w, f.to_text()) for w, f in self.items())

    def __repr__(self):
        return "HeckeElt(%s)" % self.to_text()


_ALGEBRAS = {}


def bernstein_algebra(datum_or_label, eps=-1):
    label = datum_or_label if isinstance(datum_or_label, str) else datum_or_label.type_label
    key = (label, eps)
    alg = _ALGEBRAS.get(key)
    if alg is None:
        alg = _ALGEBRAS[key] = BernsteinAlgebra(build_root_datum(label), eps)
    return alg
