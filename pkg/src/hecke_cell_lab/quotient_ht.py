"""Central-character quotients ``H_t = H / Z_t`` and the modules built inside them.

An :class:`HtModel` realizes ``H_t`` on the basis ``T_w theta_{e_u}``
(``w, u`` in ``W_0``), where ``theta_{e_u}`` is the Steinberg basis of
Theta over the center.  Coordinates of an element of Theta are found by
:class:`ThetaReducer`:

* ``regular``: solve ``sum_u c_u e_u(w t) = f(w t)`` over the orbit of t;
  needs the orbit matrix to be invertible, i.e. t regular.
* ``generic``: move t along the curve ``s -> t * (2 rho^vee)(s)`` (regular
  for all but finitely many s), solve over ``K[s]`` with a fraction-free
  adjugate, divide exactly and evaluate at ``s = 1``.  Works at every t.

Everything is exact over Q or Q(sqrt q0).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
import random

from .hecke_bernstein import bernstein_algebra
from .laurent import (
    RATIONALS,
    LaurentPoly,
    Specialization,
    TorusPoint,
    fmt_scalar,
    numerator_product,
    pairing_ab,
    symmetrize,
    weyl_ratio_sum,
)
from .linalg import EchelonSpace, inverse, matvec, nullspace, rank
from .root_data import evaluate_poincare


class NotRegular(ValueError):
    """The orbit matrix is singular: t has a nontrivial stabilizer in W_0."""


class NonPolynomialCoefficient(ArithmeticError):
    """The generic reduction produced a non-polynomial coefficient."""


# ---------------------------------------------------------------------------
# torus points


def principal_point(datum, spec):
    """The point with alpha(t) = q0 for every simple root: x_i(t) = v^{<x_i, 2 rho^vee>}."""
    R = datum
    coords = [spec.vpow(R.pair(x, R.two_rho_vee)) for x in R.fundamental_weights]
    t = TorusPoint(spec, coords)
    q0 = spec.coerce(spec.q0)
    for a in R.simple_roots:
        if t.weight_value(a) != q0:
            raise AssertionError("principal point check failed for root %r" % (a,))
    return t


def _orthogonal_point(datum, spec, base=2):
    """A non-regular point with alpha_1(t) = 1 (rank >= 2) or t = (-1) (rank 1)."""
    a = datum.simple_roots[0]
    n = datum.rank
    if n == 1:
        return TorusPoint(spec, [-1])
    k = [0] * n
    k[0], k[1] = -a[1], a[0]
    g = gcd(k[0], k[1]) or 1
    k = [c // g for c in k]
    return TorusPoint(spec, [Fraction(base) ** c for c in k])


def sample_points(datum, seed=0, count=22):
    """Deterministic grid of (label, t): principal points, W_0-conjugates,
    non-regular points and random regular points."""
    rng = random.Random("%s:%d" % (datum.type_label, seed))
    pts = []
    for q0 in (4, 9, -1, 1):
        pts.append(("principal q0=%s" % q0, principal_point(datum, Specialization(q0=q0))))
    w1 = datum.simple_reflections[0]
    for q0 in (4, -1):
        t = principal_point(datum, Specialization(q0=q0))
        pts.append(("s1*principal q0=%s" % q0, t.act(w1)))
    one = [1] * datum.rank
    pts.append(("identity q0=4", TorusPoint(Specialization(q0=4), one)))
    pts.append(("identity q0=-1", TorusPoint(Specialization(q0=-1), one)))
    pts.append(("alpha1-trivial q0=9", _orthogonal_point(datum, Specialization(q0=9))))
    pts.append(("alpha1-trivial q0=-1", _orthogonal_point(datum, Specialization(q0=-1), 3)))
    qs = [4, 9, Fraction(1, 4), Fraction(16, 9), 2, -1, 3]
    vals = [2, 3, -2, -3, 5, Fraction(1, 2), Fraction(-1, 3), Fraction(3, 2), Fraction(2, 5), 7]
    i = 0
    while len(pts) < count:
        spec = Specialization(q0=rng.choice(qs))
        t = TorusPoint(spec, [rng.choice(vals) for _ in range(datum.rank)])
        if t.is_regular(datum):
            i += 1
            pts.append(("random #%d" % i, t))
    return pts


# ---------------------------------------------------------------------------
# univariate polynomials over K (coefficient lists, low degree first)


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return _trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    z = (a or b or [0])[0] * 0
    out = [(a[i] if i < len(a) else z) - (b[i] if i < len(b) else z) for i in range(n)]
    return _trim(out)


def _padd(a, b):
    n = max(len(a), len(b))
    z = (a or b or [0])[0] * 0
    out = [(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n)]
    return _trim(out)


def _pdivexact(a, b):
    """a / b, requiring zero remainder."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a)
    if not a:
        return []
    db = len(b) - 1
    lead = b[-1]
    q = [a[0] * 0] * max(len(a) - db, 1)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        if c:
            c = c / lead if not isinstance(c, int) or not isinstance(lead, int) else _idiv(c, lead)
            q[k] = c
            for j, y in enumerate(b):
                a[k + j] = a[k + j] - c * y
    if any(a):
        raise NonPolynomialCoefficient("nonzero remainder in exact division")
    return _trim(q)


def _idiv(a, b):
    if a % b:
        return Fraction(a, b)
    return a // b


def _strip_low(p):
    k = 0
    while k < len(p) and not p[k]:
        k += 1
    return k, p[k:]


def bareiss_adjugate(M):
    """Fraction-free Gauss-Jordan over K[s]: returns (d, A) with M A = d I."""
    n = len(M)
    one = [1]
    aug = [list(row) + [one if i == j else [] for j in range(n)] for i, row in enumerate(M)]
    prev = one
    for k in range(n):
        p = next((i for i in range(k, n) if aug[i][k]), None)
        if p is None:
            return [], None
        aug[k], aug[p] = aug[p], aug[k]
        piv = aug[k][k]
        rowk = aug[k]
        for i in range(n):
            if i == k:
                continue
            rowi = aug[i]
            f = rowi[k]
            new = []
            for j in range(2 * n):
                x = _pmul(piv, rowi[j])
                if f and rowk[j]:
                    x = _psub(x, _pmul(f, rowk[j]))
                new.append(_pdivexact(x, prev) if prev != one else x)
            aug[i] = new
        prev = piv
    d = aug[0][0]
    for i in range(1, n):
        if aug[i][i] != d:
            raise AssertionError("fraction-free elimination lost the common diagonal")
    A = [row[n:] for row in aug]
    return d, A


# ---------------------------------------------------------------------------
# reduction of Theta modulo the kernel of phi_t


class ThetaReducer:
    """Coordinates of Theta elements on the Steinberg basis, specialized at t."""

    def __init__(self, datum, t, method="auto"):
        self.datum = datum
        self.t = t
        self.spec = t.spec
        self.B = bernstein_algebra(datum)
        self.e = self.B.steinberg_basis()
        self.n0 = len(self.e)
        self.regular = t.is_regular(datum)
        if method == "auto":
            method = "regular" if self.regular else "generic"
        if method not in ("regular", "generic"):
            raise ValueError("method must be 'regular', 'generic' or 'auto'")
        self.method = method
        self._memo = {}
        if method == "regular":
            self._setup_regular()
        else:
            self._setup_generic()

    # regular: orbit evaluation
    def _setup_regular(self):
        W = self.datum.W0
        self.orbit = [self.t.act(w) for w in W]
        M = [[tw.weight_value(e) for e in self.e] for tw in self.orbit]
        try:
            self.Minv = inverse(M)
        except ZeroDivisionError:
            raise NotRegular("t = %r is not regular" % (self.t,))

    def _reduce_regular(self, x):
        return matvec(self.Minv, [tw.weight_value(x) for tw in self.orbit])

    # generic: one-parameter deformation
    def _setup_generic(self):
        R = self.datum
        tr = R.two_rho_vee
        g = 0
        for xi in R.fundamental_weights:
            g = gcd(g, R.pair(xi, tr))
        self._g = g
        self._winv = [w.inverse() for w in R.W0]
        rows = []
        self._rowmin = []
        rational = not self.spec.quadratic
        self._rowscale = []
        for wi in self._winv:
            ents = []
            for e in self.e:
                y = wi(e)
                ents.append((R.pair(y, tr) // g, self.t.weight_value(y)))
            m = min(k for k, _ in ents)
            self._rowmin.append(m)
            scale = 1
            if rational:
                for _, c in ents:
                    den = int(c.denominator)
                    scale = scale * den // gcd(scale, den)
            self._rowscale.append(scale)
            row = []
            for k, c in ents:
                p = [0] * (k - m + 1)
                p[-1] = int(c * scale) if rational else c
                row.append(p)
            rows.append(row)
        self._M = rows
        d, A = bareiss_adjugate(rows)
        if A is None:
            raise AssertionError("deformed orbit matrix is singular; curve is not generic")
        # M A = d I, verified
        n = self.n0
        for i in range(n):
            for j in range(n):
                acc = []
                for k in range(n):
                    acc = _padd(acc, _pmul(rows[i][k], A[k][j]))
                if acc != (d if i == j else []):
                    raise AssertionError("adjugate verification failed")
        self._d = d
        self._A = A
        self._dlow, self._d0 = _strip_low(d)

    def _reduce_generic(self, x):
        R = self.datum
        tr = R.two_rho_vee
        g = self._g
        rhs = []
        for wi, m, sc in zip(self._winv, self._rowmin, self._rowscale):
            y = wi(x)
            rhs.append((R.pair(y, tr) // g - m, self.t.weight_value(y) * sc))
        shift = max(0, -min(k for k, _ in rhs))
        out = []
        for u in range(self.n0):
            N = []
            for w, (k, c) in enumerate(rhs):
                a = self._A[u][w]
                if a and c:
                    N = _padd(N, [0] * (k + shift) + [c * z for z in a])
            if not N:
                out.append(self.spec.zero)
                continue
            _, N0 = _strip_low(N)
            Q = _pdivexact(N0, self._d0)
            out.append(sum(Q[1:], Q[0]) if Q else 0)
        return out

    # public
    def reduce_monomial(self, x):
        x = tuple(x)
        r = self._memo.get(x)
        if r is None:
            if self.method == "regular":
                r = self._reduce_regular(x)
            else:
                r = self._reduce_generic(x)
            r = [self.spec.coerce(c) if isinstance(c, RATIONALS) else c for c in r]
            self._memo[x] = r
        return r

    def reduce_terms(self, terms):
        lay = self.B.lay
        acc = [self.spec.zero] * self.n0
        for k, c in terms.items():
            m, x = lay.unpack(k)
            s = self.spec.coerce(c) * self.spec.vpow(m)
            r = self.reduce_monomial(x)
            acc = [a + s * b for a, b in zip(acc, r)]
        return acc

    def reduce(self, f):
        """theta_reduce: coordinates of f (a LaurentPoly) against {theta_{e_u}}."""
        return self.reduce_terms(f.terms)


def theta_reduce(datum, f, t, method="auto"):
    return ThetaReducer(datum, t, method).reduce(f)


# ---------------------------------------------------------------------------
# the model of H_t


class HtSubspace:
    """Echelonized subspace of an HtModel (rows are coordinate vectors)."""

    def __init__(self, basis, left_stable=None, right_stable=None):
        self.basis = basis
        self.left_stable = left_stable
        self.right_stable = right_stable

    @property
    def dim(self):
        return len(self.basis)

    def __repr__(self):
        return "HtSubspace(dim=%d)" % self.dim


class HtModel:
    """H_t on the basis T_w theta_{e_u}; index w.index * |W_0| + u.index."""

    def __init__(self, datum, t, method="auto"):
        self.datum = datum
        self.t = t
        self.spec = t.spec
        self.B = B = bernstein_algebra(datum)
        self.red = ThetaReducer(datum, t, method)
        self.e = self.red.e
        self.n0 = n0 = len(self.e)
        self.dim = n0 * n0
        lay = B.lay
        self.basis_elts = [
            B.element({w: {lay.pack(self.e[u]): 1}}) for w in range(n0) for u in range(n0)
        ]
        self._lgen = None
        self._rgen = None
        self._wrs = {}

    # coordinates
    def vector(self, h):
        n0 = self.n0
        out = [self.spec.zero] * self.dim
        for w, terms in h.coeffs.items():
            out[w * n0:(w + 1) * n0] = self.red.reduce_terms(terms)
        return out

    def left_matrix(self, h):
        cols = [self.vector(h * b) for b in self.basis_elts]
        return [list(r) for r in zip(*cols)]

    def right_matrix(self, h):
        cols = [self.vector(b * h) for b in self.basis_elts]
        return [list(r) for r in zip(*cols)]

    def generator_elements(self):
        B = self.B
        R = self.datum
        gens = [("T%d" % (i + 1), B.Ts(i)) for i in range(R.rank)]
        for i, x in enumerate(R.fundamental_weights):
            gens.append(("theta_x%d" % (i + 1), B.theta(x)))
            gens.append(("theta_-x%d" % (i + 1), B.theta(tuple(-c for c in x))))
        return gens

    def left_generators(self):
        if self._lgen is None:
            self._lgen = [(k, self.left_matrix(g)) for k, g in self.generator_elements()]
        return self._lgen

    def right_generators(self):
        if self._rgen is None:
            self._rgen = [(k, self.right_matrix(g)) for k, g in self.generator_elements()]
        return self._rgen

    def phi(self, f):
        """phi_t on Theta (meaningful on the center)."""
        return self.t.evaluate(f)

    def wrs_value(self, x):
        """phi_t(weyl_ratio_sum(theta_x))."""
        x = tuple(x)
        r = self._wrs.get(x)
        if r is None:
            r = self._wrs[x] = self.phi(_wrs_monomial(self.datum.type_label, x))
        return r

    def check_invariants(self):
        """dim, commuting actions, quadratic relation and central characters."""
        R = self.datum
        q0 = self.spec.coerce(self.spec.q0)
        one = self.spec.one
        zero = self.spec.zero
        rep = {"dim": self.dim, "dim_expected": self.n0 ** 2}
        L = dict(self.left_generators())
        Rt = dict(self.right_generators())
        rep["commute"] = all(_mm(a, b) == _mm(b, a) for a in L.values() for b in Rt.values())
        quad = True
        for i in range(R.rank):
            T = L["T%d" % (i + 1)]
            T2 = _mm(T, T)
            rhs = [[(q0 - one) * T[r][c] + (q0 if r == c else zero) for c in range(self.dim)]
                   for r in range(self.dim)]
            quad &= T2 == rhs
        rep["quadratic"] = quad
        central = True
        for x in R.fundamental_weights:
            z = symmetrize(R, LaurentPoly.monomial(x))
            Lz = self.left_matrix(self.B.from_theta(z))
            c = self.phi(z)
            central &= Lz == [[c if r == k else zero for k in range(self.dim)] for r in range(self.dim)]
        rep["central_scalar"] = central
        rep["holds"] = rep["dim"] == rep["dim_expected"] and rep["commute"] and quad and central
        return rep


def _mm(a, b):
    bt = list(zip(*b))
    z = a[0][0] * 0
    return [[sum((x * y for x, y in zip(row, col) if x and y), z) for col in bt] for row in a]


def _apply(M, v):
    z = v[0] * 0
    return [sum((a * b for a, b in zip(row, v) if a and b), z) for row in M]


_WRS = {}


def _wrs_monomial(label, x):
    key = (label, x)
    r = _WRS.get(key)
    if r is None:
        from .root_data import build_root_datum
        r = _WRS[key] = weyl_ratio_sum(build_root_datum(label), LaurentPoly.monomial(x))
    return r


_MODELS = {}


def build_ht(datum, t, method="auto"):
    """Cached HtModel for (type, t, method)."""
    key = (datum.type_label, t, method)
    m = _MODELS.get(key)
    if m is None:
        if len(_MODELS) > 64:
            _MODELS.clear()
        m = _MODELS[key] = HtModel(datum, t, method)
    return m


# ---------------------------------------------------------------------------
# subspaces and modules


def submodule_span(model, generators, side="left"):
    """Smallest subspace containing ``generators`` and stable under the chosen side(s)."""
    ops = []
    if side in ("left", "two-sided"):
        ops += [m for _, m in model.left_generators()]
    if side in ("right", "two-sided"):
        ops += [m for _, m in model.right_generators()]
    if side not in ("left", "right", "two-sided"):
        raise ValueError("side must be left, right or two-sided")
    space = EchelonSpace(model.dim)
    queue = []
    for g in generators:
        if space.add(g):
            queue.append(g)
    while queue:
        v = queue.pop()
        for M in ops:
            w = _apply(M, v)
            if space.add(w):
                queue.append(w)
    return HtSubspace(space.basis(), side in ("left", "two-sided"), side in ("right", "two-sided"))


def _span(vectors, dim):
    sp = EchelonSpace(dim)
    for v in vectors:
        sp.add(v)
    return sp


def is_stable(model, space, side):
    sp = _span(space.basis, model.dim)
    gens = model.left_generators() if side == "left" else model.right_generators()
    return all(sp.contains(_apply(M, v)) for _, M in gens for v in space.basis)


def burnside_irreducible(operators, d):
    """(verdict, span dimension): operators (d x d) span M_d(k) iff absolutely irreducible."""
    if d == 0:
        return False, 0
    one = operators[0][0][0] * 0 + 1 if operators else 1
    zero = one * 0
    ident = [[one if i == j else zero for j in range(d)] for i in range(d)]
    space = EchelonSpace(d * d)
    space.add([c for row in ident for c in row])
    queue = [ident]
    while queue and len(space) < d * d:
        X = queue.pop()
        for G in operators:
            Y = _mm(X, G)
            if space.add([c for row in Y for c in row]):
                queue.append(Y)
    return len(space) == d * d, len(space)


def restrict_operator(M, space):
    """Matrix of M on an invariant subspace, in the coordinates of space.basis()."""
    cols = [space.coordinates(_apply(M, b)) for b in space.basis()]
    return [list(r) for r in zip(*cols)] if cols else []


# ---------------------------------------------------------------------------
# the four ideals and the vanishing criteria

_PAIRS = {"CHC": ("C", "C"), "CHC'": ("C", "C'"), "C'HC": ("C'", "C"), "C'H_{t^-1}C'": ("C'", "C'")}


def _elt(B, name):
    return B.C() if name == "C" else B.Cprime()


def ideal_dims(datum, t, method="auto"):
    """Dimensions of C H_t C, C H_t C', C' H_t C and C' H_{t^-1} C'.

    Each is computed twice: as the span of X b Y over the whole basis, and
    from generators (C theta_x C over a spanning set of x; the single element
    X theta_rho Y for the mixed pairs).  The two routes must agree.
    """
    out = {}
    routes = {}
    for key, (xn, yn) in _PAIRS.items():
        model = build_ht(datum, t.inverse() if key.startswith("C'H_") else t, method)
        B = model.B
        X, Y = _elt(B, xn), _elt(B, yn)
        XB = [X * b for b in model.basis_elts]
        full = rank_of([model.vector(h * Y) for h in XB])
        if xn == yn:
            xs = list(model.e) + [x for x in _box(datum.rank, 1)]
            gen = rank_of([model.vector(X * B.theta(x) * Y) for x in xs])
        else:
            gen = rank_of([model.vector(X * B.theta(datum.rho) * Y)])
        out[key] = full
        routes[key] = gen
    consistent = out == routes
    return out, {"generator_route": routes, "routes_agree": consistent}


def rank_of(vectors):
    vs = [v for v in vectors if any(v)]
    return rank(vs) if vs else 0


def _box(n, r):
    from itertools import product
    return [x for x in product(range(-r, r + 1), repeat=n)]


def A_element(datum):
    """A = (-1)^nu q^{-nu/2} theta_{-rho} prod_{alpha>0} (1 - q theta_alpha)."""
    nu = datum.nu
    f = numerator_product(datum).shift(tuple(-r for r in datum.rho), -nu)
    return -f if nu % 2 else f


def thm34_criteria(datum, t, method="auto"):
    """Criteria (i)-(iii) next to the direct dimensions."""
    model = build_ht(datum, t, method)
    R = datum
    e = model.e
    vals_i = {x: model.wrs_value(x) for x in list(e) + _box(R.rank, 1)}
    rho = R.rho
    vals_ii = [model.wrs_value(tuple(a + b for a, b in zip(rho, eu))) for eu in e]
    A = A_element(R)
    vals_iii = [model.phi(pairing_ab(R, A, LaurentPoly.monomial(eu))) for eu in e]
    dims, extra = ideal_dims(datum, t, method)
    zero_i = not any(vals_i.values())
    zero_ii = not any(vals_ii)
    zero_iii = not any(vals_iii)
    dzero = [d == 0 for d in dims.values()]
    simultaneous = all(dzero) or not any(dzero)
    consistent = simultaneous and zero_i == zero_ii == zero_iii == dzero[0] and extra["routes_agree"]
    return {
        "t": t.to_json(),
        "q0": fmt_scalar(model.spec.q0),
        "regular": model.red.regular,
        "dims": dims,
        "routes_agree": extra["routes_agree"],
        "criterion_i_zero": zero_i,
        "criterion_ii_values": [fmt_scalar(c) for c in vals_ii],
        "criterion_iii_values": [fmt_scalar(c) for c in vals_iii],
        "simultaneous": simultaneous,
        "holds": consistent,
    }


def pairing_sign_relation(datum):
    """Sign c with (A, theta_{e_u}) = c q^{-nu/2} weyl_ratio_sum(theta_{rho+e_u}) for all u.

    Returns +1, -1 or None (no uniform sign).  Computed, not assumed.
    """
    R = datum
    A = A_element(R)
    B = bernstein_algebra(R)
    signs = set()
    for eu in B.steinberg_basis():
        lhs = pairing_ab(R, A, LaurentPoly.monomial(eu))
        rhs = weyl_ratio_sum(R, LaurentPoly.monomial(tuple(a + b for a, b in zip(R.rho, eu))))
        rhs = rhs.shift((0,) * R.rank, -R.nu)
        if lhs == rhs:
            signs.add(1)
        elif lhs == -rhs:
            signs.add(-1)
        else:
            return None
    return signs.pop() if len(signs) == 1 else None


def principal_pairing_check(datum, spec, xs=None):
    """(A theta_x, theta_{e_u})(t) at the principal point against the closed form.

    The closed form q^{-nu/2} rho(t) x(t) e_u(t) sum_w q^{l(w)} is checked,
    and separately whether the variant carrying an extra (-1)^nu also holds
    (it does only when nu is even or the sum vanishes).
    """
    R = datum
    t = principal_point(R, spec)
    B = bernstein_algebra(R)
    P = spec.coerce(evaluate_poincare(R, spec.q0))
    sign = -1 if R.nu % 2 else 1
    A = A_element(R)
    ok = signed_ok = True
    xs = xs if xs is not None else [(0,) * R.rank] + list(R.fundamental_weights)
    for x in xs:
        for eu in B.steinberg_basis():
            lhs = t.evaluate(pairing_ab(R, A * LaurentPoly.monomial(x), LaurentPoly.monomial(eu)))
            rhs = spec.vpow(-R.nu) * t.weight_value(R.rho) * t.weight_value(x) * t.weight_value(eu) * P
            ok &= lhs == rhs
            signed_ok &= lhs == rhs * sign
    return {"holds": ok, "with_extra_sign_holds": signed_ok}


def thm35_report(datum, q0=None, sqrt_q=None, method="auto"):
    """Principal point: dimension, two-sidedness and eigenvalues of C H_t C' and C' H_t C."""
    spec = Specialization(q0=q0, sqrt_q=sqrt_q)
    t = principal_point(datum, spec)
    model = build_ht(datum, t, method)
    B = model.B
    q0v = spec.coerce(spec.q0)
    P = spec.coerce(evaluate_poincare(datum, spec.q0))
    expected = 1 if P else 0
    rep = {"type": datum.type_label, "q0": fmt_scalar(spec.q0), "t": t.to_json(),
           "poincare_value": fmt_scalar(P), "expected_dim": expected}
    ok = True
    for key, (xn, yn) in (("CHC'", ("C", "C'")), ("C'HC", ("C'", "C"))):
        X, Y = _elt(B, xn), _elt(B, yn)
        vecs = [model.vector(X * b * Y) for b in model.basis_elts]
        sp = _span(vecs, model.dim)
        d = len(sp)
        entry = {"dim": d}
        good = d == expected
        if d:
            sub = HtSubspace(sp.basis())
            entry["two_sided"] = is_stable(model, sub, "left") and is_stable(model, sub, "right")
            xi = sp.basis()[0]
            lam_left = q0v if xn == "C" else -spec.one
            lam_right = -spec.one if yn == "C'" else q0v
            eig_ok = True
            for i in range(datum.rank):
                TL = dict(model.left_generators())["T%d" % (i + 1)]
                TR = dict(model.right_generators())["T%d" % (i + 1)]
                eig_ok &= _apply(TL, xi) == [lam_left * c for c in xi]
                eig_ok &= _apply(TR, xi) == [lam_right * c for c in xi]
            entry["eigenvalues"] = [fmt_scalar(lam_left), fmt_scalar(lam_right)]
            entry["eigen_ok"] = eig_ok
            good = good and entry["two_sided"] and eig_ok
        entry["holds"] = good
        ok &= good
        rep[key] = entry
    rep["principal_pairing"] = principal_pairing_check(datum, spec)
    rep["holds"] = ok and rep["principal_pairing"]["holds"]
    return rep


# ---------------------------------------------------------------------------
# the module generated by C theta_rho C'


def _module_data(model, dual):
    """Vectors of theta_{e_v} X and of theta_{e_v} X theta_rho Y (X, Y = C, C' or swapped)."""
    B = model.B
    X, Y = (B.Cprime(), B.C()) if dual else (B.C(), B.Cprime())
    trho = B.theta(model.datum.rho)
    base, image = [], []
    for ev in model.e:
        h = B.theta(ev) * X
        base.append(model.vector(h))
        image.append(model.vector(h * trho * Y))
    return X, Y, base, image


def m_t0_kernel(datum, t, method="auto", dual=False):
    """M_{t,0} inside H_t X (X = C, or C' when dual) in theta_{e_v}X-coordinates.

    Returns (HtSubspace in model coordinates, report).  Three descriptions are
    compared: the scalar conditions phi_t(sum_w w(theta_{e_u+e_v} prod (1 - q theta_a)/(1 - theta_a))) = 0
    (primary case only), the
    defining condition X theta_{e_u} h = 0, and the kernel of h -> h theta_rho Y.
    """
    model = build_ht(datum, t, method)
    B = model.B
    X, Y, base, image = _module_data(model, dual)
    n0 = model.n0
    zero = model.spec.zero
    rep = {"H_tX_dim": rank_of(base)}
    # kernel of the map h -> h theta_rho Y, coefficients c_v
    map_ker = nullspace([list(r) for r in zip(*image)], n0) if any(any(v) for v in image) \
        else _identity_basis(n0, model.spec)
    # defining condition
    cond = []
    for eu in model.e:
        Xu = X * B.theta(eu)
        cols = [model.vector(Xu * B.theta(ev) * X) for ev in model.e]
        cond.extend([list(r) for r in zip(*cols)])
    cond = [r for r in cond if any(r)]
    def_ker = nullspace(cond, n0) if cond else _identity_basis(n0, model.spec)
    rep["map_kernel_dim"] = len(map_ker)
    rep["definition_kernel_dim"] = len(def_ker)
    agree = _same(map_ker, def_ker, n0)
    if not dual:
        E = [[model.wrs_value(tuple(a + b for a, b in zip(eu, ev))) for ev in model.e] for eu in model.e]
        E = [r for r in E if any(r)]
        scalar_ker = nullspace(E, n0) if E else _identity_basis(n0, model.spec)
        rep["scalar_condition_kernel_dim"] = len(scalar_ker)
        agree = agree and _same(scalar_ker, map_ker, n0)
    rep["kernels_agree"] = agree
    vecs = []
    for c in map_ker:
        v = [zero] * model.dim
        for cv, b in zip(c, base):
            if cv:
                v = [a + cv * y for a, y in zip(v, b)]
        vecs.append(v)
    sp = _span(vecs, model.dim)
    return HtSubspace(sp.basis()), rep


def rho_sign_relation(datum):
    """Scalar c with C' theta_{-rho} C = c C' theta_rho C in H, found by computation.

    Returns +1, -1 or None when neither sign works.  Expected: (-1)^nu.
    """
    B = bernstein_algebra(datum)
    C, Cp = B.C(), B.Cprime()
    a = Cp * B.theta(tuple(-r for r in datum.rho)) * C
    b = Cp * B.theta(datum.rho) * C
    if a == b:
        return 1
    if a == b * B.scalar(-1):
        return -1
    return None


def _identity_basis(n, spec):
    return [[spec.one if i == j else spec.zero for j in range(n)] for i in range(n)]


def _same(a, b, n):
    if len(a) != len(b):
        return False
    if not a:
        return True
    return rank(a) == rank(b) == rank(list(a) + list(b))


def Lt_construct(datum, t, method="auto", dual=False):
    """The module generated by C theta_rho C' (or C' theta_rho C when dual) in H_t."""
    model = build_ht(datum, t, method)
    B = model.B
    X, Y, base, image = _module_data(model, dual)
    L = _span(image, model.dim)
    d = len(L)
    gen = model.vector(X * B.theta(datum.rho) * Y)
    rep = {"t": t.to_json(), "q0": fmt_scalar(model.spec.q0), "dual": dual, "dim": d,
           "generator_nonzero": any(gen)}
    sub = submodule_span(model, [gen], "left")
    rep["generated_equals_image"] = sub.dim == d and all(L.contains(v) for v in sub.basis)
    if d == 0:
        rep["holds"] = rep["generated_equals_image"]
        return HtSubspace([]), rep
    ops = [restrict_operator(M, L) for _, M in model.left_generators()]
    irr, span_dim = burnside_irreducible(ops, d)
    rep["burnside_span"] = span_dim
    rep["irreducible"] = irr
    LX = model.left_matrix(X)
    rep["X_L_nonzero"] = any(any(_apply(LX, b)) for b in L.basis())
    M0, mrep = m_t0_kernel(datum, t, method, dual)
    rep["M_t0_dim"] = M0.dim
    rep["kernels_agree"] = mrep["kernels_agree"]
    rep["quotient_dim_ok"] = d == model.n0 - M0.dim
    rep["holds"] = (rep["generated_equals_image"] and irr and rep["X_L_nonzero"]
                    and mrep["kernels_agree"] and rep["quotient_dim_ok"])
    return HtSubspace(L.basis(), True, None), rep


# ---------------------------------------------------------------------------
# Theta_t and the two reduction paths


def theta_t_report(datum, t, radius=2):
    """dim Theta_t, consistency of the reduction, and REGULAR == GENERIC when regular."""
    model = build_ht(datum, t, "auto")
    R = datum
    xs = list(model.e) + _box(R.rank, radius)
    vecs = [model.red.reduce_monomial(x) for x in xs]
    rep = {"t": t.to_json(), "q0": fmt_scalar(model.spec.q0), "regular": model.red.regular,
           "method": model.red.method, "dim_theta_t": rank_of(vecs), "expected": model.n0}
    n0 = model.n0
    unit_ok = all(model.red.reduce_monomial(eu) == [model.spec.one if j == i else model.spec.zero
                                                    for j in range(n0)]
                  for i, eu in enumerate(model.e))
    # multiplicativity: red(theta_{x+y}) = sum_u red(theta_x)_u red(theta_{e_u + y})
    mult_ok = True
    for x in _box(R.rank, 1):
        rx = model.red.reduce_monomial(x)
        for y in R.fundamental_weights:
            lhs = model.red.reduce_monomial(tuple(a + b for a, b in zip(x, y)))
            rhs = [model.spec.zero] * n0
            for c, eu in zip(rx, model.e):
                if c:
                    r = model.red.reduce_monomial(tuple(a + b for a, b in zip(eu, y)))
                    rhs = [p + c * s for p, s in zip(rhs, r)]
            mult_ok &= lhs == rhs
    central_ok = True
    for x in R.fundamental_weights:
        z = symmetrize(R, LaurentPoly.monomial(x))
        v = model.red.reduce(z)
        central_ok &= v == [model.phi(z)] + [model.spec.zero] * (n0 - 1)
    rep["unit_vectors"] = unit_ok
    rep["multiplicative"] = mult_ok
    rep["central_scalars"] = central_ok
    ok = rep["dim_theta_t"] == n0 and unit_ok and mult_ok and central_ok
    if model.red.regular:
        gen = ThetaReducer(datum, t, "generic")
        reg = model.red if model.red.method == "regular" else ThetaReducer(datum, t, "regular")
        xs2 = xs + [tuple(a + b for a, b in zip(u, w)) for u in model.e for w in model.e]
        agree = all(gen.reduce_monomial(x) == reg.reduce_monomial(x) for x in xs2)
        rep["regular_equals_generic"] = agree
        ok = ok and agree
    rep["holds"] = ok
    return rep


# ---------------------------------------------------------------------------
# type A Lie criterion


def lie_criterion_typeA(datum, t):
    """Semisimple elements in g_{t,q} versus vanishing of H_t C theta_rho C'. Report only."""
    import sympy

    label = datum.type_label
    if not label.startswith("A"):
        raise ValueError("the Lie criterion is implemented for type A only")
    spec = t.spec
    q0 = spec.coerce(spec.q0)
    n = datum.rank + 1
    entries = []
    for a_s in datum.positive_roots_simple:
        i = next(k for k, c in enumerate(a_s) if c)
        j = i + sum(a_s)
        a_w = tuple(sum(datum.simple_roots[k][m] * c for k, c in enumerate(a_s)) for m in range(datum.rank))
        val = t.weight_value(a_w)
        if val == q0:
            entries.append((i, j))
        if spec.one / val == q0:
            entries.append((j, i))
    syms = sympy.symbols("a0:%d" % max(len(entries), 1))
    Xm = sympy.zeros(n, n)
    for s, (i, j) in zip(syms, entries):
        Xm[i, j] = s
    cartan = q0 == spec.one
    if cartan:
        hs = sympy.symbols("h0:%d" % (n - 1))
        for k, h in enumerate(hs):
            Xm[k, k] += h
            Xm[k + 1, k + 1] -= h
    lam = sympy.Symbol("lam")
    cp = sympy.Poly(Xm.charpoly(lam).as_expr(), lam)
    nilpotent_only = all(sympy.expand(c) == 0 for c in cp.all_coeffs()[1:])
    predicts_zero = not nilpotent_only
    Lsub, lrep = Lt_construct(datum, t)
    direct_zero = lrep["dim"] == 0
    return {
        "type": label,
        "t": t.to_json(),
        "q0": fmt_scalar(spec.q0),
        "root_spaces": ["E%d%d" % (i + 1, j + 1) for i, j in entries],
        "includes_cartan": cartan,
        "charpoly": str(cp.as_expr()),
        "has_semisimple": predicts_zero,
        "predicts_zero": predicts_zero,
        "direct_dim": lrep["dim"],
        "agree": predicts_zero == direct_zero,
        "q0_is_one": cartan,
    }
