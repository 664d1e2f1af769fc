"""Exact coefficient arithmetic.

* :class:`ScalarQ` -- Laurent polynomials in ``v`` over Q, with ``v^2 = q``.
* :class:`LaurentPoly` -- elements of the group algebra of the weight lattice
  over ``Q[v, v^-1]``; the monomial with exponent ``x`` is ``theta_x``.
* :class:`QuadNumber`, :class:`Specialization`, :class:`TorusPoint` --
  the specialized scalar field ``Q`` or ``Q[v]/(v^2 - q0)`` and points of the
  maximal torus with coordinates in it.

A LaurentPoly keeps ``v`` as one more lattice variable, so that all
arithmetic runs through the packed-key kernels of :mod:`.kernels`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import math

from . import kernels as K
from .kernels import InexactDivision

try:  # fast exact rationals for the specialized field
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - exercised only without gmpy2
    QQ = Fraction

RATIONALS = (int, Fraction, type(QQ(1)))

BITS = 15
OFF = 1 << (BITS - 1)
MASK = (1 << BITS) - 1


class Layout:
    """Packing of (v-exponent, x_1, ..., x_n) into a single int key."""

    def __init__(self, n):
        self.n = n
        self.v_shift = BITS * n
        self.x_shifts = tuple(BITS * (n - 1 - i) for i in range(n))
        self.all_shifts = (self.v_shift,) + self.x_shifts
        self.zero = sum(OFF << s for s in self.all_shifts)

    def pack(self, x, vexp=0):
        k = (vexp + OFF) << self.v_shift
        for e, s in zip(x, self.x_shifts):
            k += (e + OFF) << s
        return k

    def unpack(self, k):
        vexp = ((k >> self.v_shift) & MASK) - OFF
        x = tuple(((k >> s) & MASK) - OFF for s in self.x_shifts)
        return vexp, x

    def delta(self, x, vexp=0):
        return self.pack(x, vexp) - self.zero


@lru_cache(maxsize=None)
def layout(n):
    return Layout(n)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# scalars in v


class ScalarQ:
    """Finite sum ``sum c_m v^m`` with rational ``c_m``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = {0: terms}
        self.terms = {m: _norm(c) for m, c in terms.items() if c}

    @classmethod
    def v(cls, m=1):
        return cls({m: 1})

    @classmethod
    def q(cls, k=1):
        return cls({2 * k: 1})

    @classmethod
    def coerce(cls, c):
        return c if isinstance(c, ScalarQ) else cls(c)

    def __add__(self, other):
        other = ScalarQ.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ScalarQ(out)

    __radd__ = __add__

    def __neg__(self):
        return ScalarQ({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-ScalarQ.coerce(other))

    def __rsub__(self, other):
        return ScalarQ.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return other * self
        other = ScalarQ.coerce(other)
        out = {}
        for m, c in self.terms.items():
            for m2, c2 in other.terms.items():
                out[m + m2] = out.get(m + m2, 0) + c * c2
        return ScalarQ(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            return ScalarQ({m * k: Fraction(c) ** k})
        if k < 0:
            raise ValueError("only monomials are invertible in Q[v, 1/v]")
        out = ScalarQ(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ScalarQ(other)
        return isinstance(other, ScalarQ) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def bar(self):
        """v -> v^-1."""
        return ScalarQ({-m: c for m, c in self.terms.items()})

    def specialize(self, spec):
        return sum((spec.coerce(c) * spec.vpow(m) for m, c in self.terms.items()),
                   spec.zero)

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            parts.append("%s*v^%d" % (c, m) if m else str(c))
        return " + ".join(parts)

    def __repr__(self):
        return "ScalarQ(%s)" % self.to_text()


# ---------------------------------------------------------------------------
# group algebra


class LaurentPoly:
    """An element of Theta = Q[v^{+-1}][P]; ``terms`` maps packed keys to coefficients."""

    __slots__ = ("n", "terms", "_lay")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = terms if terms is not None else {}
        self._lay = layout(n)

    # constructors
    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls.monomial((0,) * n)

    @classmethod
    def monomial(cls, x, coeff=1, vexp=0):
        x = tuple(x)
        lay = layout(len(x))
        if not coeff:
            return cls(len(x))
        return cls(len(x), {lay.pack(x, vexp): _norm(coeff)})

    @classmethod
    def from_scalar(cls, n, s):
        s = ScalarQ.coerce(s)
        lay = layout(n)
        zero_x = (0,) * n
        return cls(n, {lay.pack(zero_x, m): c for m, c in s.terms.items()})

    @classmethod
    def from_terms(cls, n, items):
        """Build from (x, coeff) or (x, coeff, vexp) triples."""
        lay = layout(n)
        d = {}
        for it in items:
            x, c = it[0], it[1]
            m = it[2] if len(it) > 2 else 0
            k = lay.pack(x, m)
            d[k] = d.get(k, 0) + c
        return cls(n, {k: _norm(c) for k, c in d.items() if c})

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.from_scalar(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        return LaurentPoly(self.n, K.poly_add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return LaurentPoly(self.n, K.poly_add(self.terms, other.terms, -1))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return LaurentPoly(self.n, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly(self.n)
            return LaurentPoly(self.n, {k: _norm(c * other) for k, c in self.terms.items()})
        other = self._coerce(other)
        return LaurentPoly(self.n, K.poly_mul(self.terms, other.terms, self._lay.zero))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials are invertible")
            (key, c), = self.terms.items()
            m, x = self._lay.unpack(key)
            j = -k
            return LaurentPoly.monomial(tuple(-e * j for e in x),
                                        _norm(1 / Fraction(c) ** j), -m * j)
        out = LaurentPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ScalarQ)):
            other = self._coerce(other)
        return isinstance(other, LaurentPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def shift(self, x, vexp=0):
        """Multiply by the monomial v^vexp theta_x."""
        d = self._lay.delta(x, vexp)
        return LaurentPoly(self.n, {k + d: c for k, c in self.terms.items()})

    def act(self, w):
        """Weyl group action ``w(theta_x) = theta_{w(x)}`` (coefficients fixed)."""
        return LaurentPoly(self.n, K.poly_act(self.terms, self._lay.x_shifts, MASK, OFF,
                                              _act_deltas(w)))

    def invert_lattice(self):
        """theta_x -> theta_{-x} (v untouched)."""
        n = self.n
        return LaurentPoly(n, K.poly_act(self.terms, self._lay.x_shifts, MASK, OFF,
                                         _neg_deltas(n)))

    def bar_v(self):
        """v -> v^-1 on coefficients."""
        lay = self._lay
        out = {}
        for k, c in self.terms.items():
            m, x = lay.unpack(k)
            out[lay.pack(x, -m)] = c
        return LaurentPoly(self.n, out)

    # inspection
    def items(self):
        """Yield (x, vexp, coeff) triples in canonical order."""
        lay = self._lay
        rows = []
        for k, c in self.terms.items():
            m, x = lay.unpack(k)
            rows.append((x, m, c))
        rows.sort()
        return rows

    def coefficient(self, x):
        """The ScalarQ coefficient of theta_x."""
        x = tuple(x)
        return ScalarQ({m: c for y, m, c in self.items() if y == x})

    def support(self):
        return sorted({x for x, _, _ in self.items()})

    def is_monomial(self):
        return len(self.terms) == 1

    def is_invariant(self, datum):
        return all(self.act(s) == self for s in datum.simple_reflections)

    def evaluate(self, t):
        """phi_t: theta_x -> x(t), v -> the specialized v."""
        return t.evaluate(self)

    def specialize_v(self, value):
        """Substitute v = value (a rational); returns a LaurentPoly without v."""
        lay = self._lay
        out = {}
        for k, c in self.terms.items():
            m, x = lay.unpack(k)
            nk = lay.pack(x)
            out[nk] = out.get(nk, 0) + c * Fraction(value) ** m
        return LaurentPoly(self.n, {k: _norm(c) for k, c in out.items() if c})

    def to_text(self):
        """Canonical serialization: sorted monomials, exponent vectors, v-powers."""
        if not self.terms:
            return "0"
        parts = []
        for x, m, c in self.items():
            parts.append("%s*v^%d*[%s]" % (c, m, ",".join(map(str, x))))
        return " + ".join(parts)

    def __repr__(self):
        return "LaurentPoly(%s)" % self.to_text()


@lru_cache(maxsize=None)
def _act_deltas_cached(n, matrix):
    lay = layout(n)
    deltas = []
    for i in range(n):
        img = tuple(matrix[r][i] for r in range(n))
        diff = tuple(a - int(r == i) for r, a in enumerate(img))
        deltas.append(lay.delta(diff))
    return tuple(deltas)


def _act_deltas(w):
    return _act_deltas_cached(len(w.matrix), w.matrix)


@lru_cache(maxsize=None)
def _neg_deltas(n):
    lay = layout(n)
    return tuple(lay.delta(tuple(-2 * int(r == i) for r in range(n))) for i in range(n))


def exact_divide(f, g):
    """Exact quotient in the Laurent ring; raises InexactDivision with a witness.

    >>> from hecke_cell_lab.laurent import LaurentPoly as L
    >>> exact_divide(L.one(1) - L.monomial((2,)), L.one(1) - L.monomial((1,))).to_text()
    '1*v^0*[0] + 1*v^0*[1]'
    """
    lay = f._lay
    try:
        q = K.poly_divexact(f.terms, g.terms, lay.zero, lay.all_shifts, MASK, OFF)
    except InexactDivision as exc:
        m, x = lay.unpack(exc.witness)
        err = InexactDivision(exc.witness)
        err.args = ("inexact division: remainder monomial v^%d theta%r" % (m, x),)
        err.monomial = (x, m)
        raise err from None
    return LaurentPoly(f.n, q)


# ---------------------------------------------------------------------------
# W_0-sums


def alternating_sum(datum, f):
    """J(f) = sum_w (-1)^{l(w)} w(f)."""
    out = {}
    for w in datum.W0:
        K.poly_iadd(out, f.act(w).terms, -1 if w.length % 2 else 1)
    return LaurentPoly(f.n, out)


def symmetrize(datum, f):
    out = {}
    for w in datum.W0:
        K.poly_iadd(out, f.act(w).terms)
    return LaurentPoly(f.n, out)


def theta(datum, x, coeff=1, vexp=0):
    return LaurentPoly.monomial(x, coeff, vexp)


def q_poly(n):
    return LaurentPoly.monomial((0,) * n, 1, 2)


@lru_cache(maxsize=None)
def _weyl_data(type_label):
    from .root_data import build_root_datum
    R = build_root_datum(type_label)
    n = R.rank
    one = LaurentPoly.one(n)
    q = q_poly(n)
    num = one
    den = one
    for a in R.positive_roots:
        ta = LaurentPoly.monomial(a)
        num = num * (one - q * ta)
        den = den * (one - ta)
    weyl_den = alternating_sum(R, LaurentPoly.monomial(R.rho))
    return num, den, weyl_den


def numerator_product(datum):
    """prod_{alpha > 0} (1 - q theta_alpha)."""
    return _weyl_data(datum.type_label)[0]


def denominator_product(datum):
    """prod_{alpha > 0} (1 - theta_alpha)."""
    return _weyl_data(datum.type_label)[1]


def weyl_denominator(datum):
    """J(theta_rho) = sum_w (-1)^{l(w)} theta_{w(rho)}."""
    return _weyl_data(datum.type_label)[2]


def weyl_ratio_sum(datum, f):
    """sum_w w( f * prod_{alpha>0} (1 - q theta_alpha) / (1 - theta_alpha) ).

    Uses w(prod(1 - theta_alpha)) = (-1)^{nu + l(w)} theta_{w rho} J(theta_rho)
    to put every summand over the common denominator J(theta_rho), then
    divides exactly.  The quotient is asserted W_0-invariant.
    """
    num, _, wden = _weyl_data(datum.type_label)
    g = (f * num).shift(tuple(-r for r in datum.rho))
    top = alternating_sum(datum, g)
    if datum.nu % 2:
        top = -top
    out = exact_divide(top, wden)
    if not out.is_invariant(datum):
        raise AssertionError("weyl_ratio_sum produced a non-invariant element")
    return out


def pairing_ab(datum, A, B):
    """(A, B) = (-1)^nu theta_rho prod(1 - theta_alpha)^{-1} J(A B theta_rho).

    The result lies in the center Theta^{W_0}; this is asserted.
    """
    _, den, _ = _weyl_data(datum.type_label)
    top = alternating_sum(datum, (A * B).shift(datum.rho)).shift(datum.rho)
    if datum.nu % 2:
        top = -top
    out = exact_divide(top, den)
    if not out.is_invariant(datum):
        raise AssertionError("pairing is not W_0-invariant")
    return out


def weyl_ratio_sum_at(datum, f, t):
    """Term-by-term evaluation of weyl_ratio_sum(f) at a regular point t.

    Independent of the exact-division path: every summand's numerator and
    denominator are evaluated separately in the specialized field.
    """
    n = datum.rank
    one = LaurentPoly.one(n)
    q = q_poly(n)
    total = t.spec.zero
    for w in datum.W0:
        num = f.act(w).evaluate(t)
        den = t.spec.one
        for a in datum.positive_roots:
            wa = w(a)
            num = num * (one - q * LaurentPoly.monomial(wa)).evaluate(t)
            den = den * (one - LaurentPoly.monomial(wa)).evaluate(t)
        total = total + num / den
    return total


# ---------------------------------------------------------------------------
# specialized scalars


class QuadNumber:
    """``a + b v`` in Q[v]/(v^2 - d) for a non-square rational d (a field)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = QQ(a)
        self.b = QQ(b)
        self.d = QQ(d)

    def _c(self, o):
        if isinstance(o, QuadNumber):
            return o
        return QuadNumber(o, 0, self.d)

    def __add__(self, o):
        o = self._c(o)
        return QuadNumber(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._c(o)
        return QuadNumber(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, o):
        return self._c(o) - self

    def __neg__(self):
        return QuadNumber(-self.a, -self.b, self.d)

    def __mul__(self, o):
        if not isinstance(o, QuadNumber):
            o = QQ(o)
            return QuadNumber(self.a * o, self.b * o, self.d)
        return QuadNumber(self.a * o.a + self.d * self.b * o.b,
                          self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - self.d * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, o):
        return self * self._c(o).inverse()

    def __rtruediv__(self, o):
        return self._c(o) * self.inverse()

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = QuadNumber(1, 0, self.d)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, o):
        if isinstance(o, QuadNumber):
            return self.a == o.a and self.b == o.b
        if isinstance(o, RATIONALS):
            return self.b == 0 and self.a == o
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __str__(self):
        if not self.b:
            return str(self.a)
        return "%s + %sv" % (self.a, self.b)

    __repr__ = __str__


def is_rational_square(x):
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class Specialization:
    """Fix v (hence q = v^2) inside Q or Q[v]/(v^2 - q0).

    ``Specialization(q0=4)`` uses v = 2; ``Specialization(sqrt_q=-3)`` uses
    v = -3; ``Specialization(q0=-1)`` adjoins v with v^2 = -1.
    """

    def __init__(self, q0=None, sqrt_q=None):
        if sqrt_q is not None:
            r = Fraction(sqrt_q)
            if r == 0:
                raise ValueError("v must be invertible")
            self.q0 = r * r
            self.v = QQ(r)
            self.quadratic = False
        else:
            if q0 is None:
                raise ValueError("need q0 or sqrt_q")
            q0 = Fraction(q0)
            if q0 == 0:
                raise ValueError("q must be invertible")
            self.q0 = q0
            r = is_rational_square(q0)
            if r is not None:
                self.v = QQ(r)
                self.quadratic = False
            else:
                self.v = QuadNumber(0, 1, q0)
                self.quadratic = True
        self.zero = self.coerce(0)
        self.one = self.coerce(1)
        self._vpow = {}

    def coerce(self, c):
        if self.quadratic:
            return c if isinstance(c, QuadNumber) else QuadNumber(c, 0, self.q0)
        return QQ(c)

    def vpow(self, m):
        p = self._vpow.get(m)
        if p is None:
            p = self._vpow[m] = self.v ** m if m >= 0 else self.one / (self.v ** -m)
        return p

    def key(self):
        return ("quad", self.q0) if self.quadratic else ("sqrt", self.v)

    def describe(self):
        if self.quadratic:
            return "q0=%s, v^2=q0 adjoined" % self.q0
        return "q0=%s, v=%s" % (self.q0, self.v)

    def __eq__(self, other):
        return isinstance(other, Specialization) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Specialization(%s)" % self.describe()


def fmt_scalar(c):
    """Exact string form of a specialized scalar ("10/3", "2 + 1v")."""
    if isinstance(c, QuadNumber):
        if not c.b:
            return str(c.a)
        return "%s + %sv" % (c.a, c.b)
    return str(QQ(c))


class TorusPoint:
    """t in T, given by the values ``x_i(t)`` of the fundamental weights."""

    def __init__(self, spec, coords):
        self.spec = spec
        self.coords = tuple(spec.coerce(c) for c in coords)
        if any(not c for c in self.coords):
            raise ValueError("torus coordinates must be invertible")
        self._pow = {}

    @property
    def rank(self):
        return len(self.coords)

    def _p(self, i, e):
        key = (i, e)
        p = self._pow.get(key)
        if p is None:
            c = self.coords[i]
            p = c ** e if e >= 0 else self.spec.one / (c ** -e)
            self._pow[key] = p
        return p

    def weight_value(self, x):
        """x(t) = prod t_i^{x_i}."""
        out = self.spec.one
        for i, e in enumerate(x):
            if e:
                out = out * self._p(i, e)
        return out

    def evaluate(self, f):
        lay = f._lay
        total = self.spec.zero
        for k, c in f.terms.items():
            m, x = lay.unpack(k)
            total = total + self.spec.coerce(c) * self.spec.vpow(m) * self.weight_value(x)
        return total

    def inverse(self):
        return TorusPoint(self.spec, [self.spec.one / c for c in self.coords])

    def act(self, w):
        """w(t), characterized by x(w t) = (w^{-1} x)(t)."""
        wi = w.inverse()
        n = self.rank
        return TorusPoint(self.spec, [
            self.weight_value(wi(tuple(int(j == i) for j in range(n)))) for i in range(n)
        ])

    def is_regular(self, datum):
        return all(self.weight_value(a) != self.spec.one for a in datum.roots)

    def to_json(self):
        return [fmt_scalar(c) for c in self.coords]

    def __eq__(self, other):
        return isinstance(other, TorusPoint) and self.spec == other.spec \
            and self.coords == other.coords

    def __hash__(self):
        return hash((self.spec, self.coords))

    def __repr__(self):
        return "TorusPoint(%s; %s)" % (", ".join(self.to_json()), self.spec.describe())


def evaluate(f, t):
    return t.evaluate(f)
