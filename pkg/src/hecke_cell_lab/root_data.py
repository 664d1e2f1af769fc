"""Irreducible root systems of small rank in the fundamental-weight basis.

Weights are plain integer tuples ``x = (x_1, ..., x_n)`` meaning
``x_1 w_1 + ... + x_n w_n``, so the pairing with a simple coroot is just a
coordinate: ``<x, alpha_i^vee> = x_i``.  Simple roots are the columns of the
Cartan matrix ``a[i][j] = <alpha_j, alpha_i^vee>``.

Conventions (Bourbaki numbering): in B2 the root ``alpha_1`` is long and
``alpha_2`` short; in G2 ``alpha_1`` is short and ``alpha_2`` long.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import product

CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "G2": ((2, -3), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
}

WEYL_ORDER = {"A1": 2, "A2": 6, "B2": 8, "G2": 12, "A3": 24}
SUPPORTED_TYPES = tuple(CARTAN)


class UnsupportedType(ValueError):
    pass


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _apply(m, x):
    return tuple(sum(r[j] * x[j] for j in range(len(x))) for r in m)


class FiniteWeylElt:
    """An element of W_0: reduced word, action matrix and length.

    Elements are owned by a :class:`RootDatum` and compare by their index in
    ``datum.W0``.
    """

    __slots__ = ("index", "word", "matrix", "length", "_datum")

    def __init__(self, index, word, matrix, datum):
        self.index = index
        self.word = tuple(word)
        self.matrix = matrix
        self.length = len(word)
        self._datum = datum

    def __eq__(self, other):
        return isinstance(other, FiniteWeylElt) and self.index == other.index \
            and self._datum is other._datum

    def __hash__(self):
        return self.index

    def __lt__(self, other):
        return self.index < other.index

    def __mul__(self, other):
        return self._datum.W0[self._datum.mul_table[self.index][other.index]]

    def inverse(self):
        return self._datum.W0[self._datum.inv_table[self.index]]

    def __call__(self, x):
        return _apply(self.matrix, x)

    def __repr__(self):
        if not self.word:
            return "e"
        return "s" + "s".join(str(i + 1) for i in self.word)


class RootDatum:
    """Static data of one irreducible root system.

    >>> R = build_root_datum("A2")
    >>> len(R.W0), R.nu, R.rho
    (6, 3, (1, 1))
    """

    def __init__(self, type_label):
        if type_label not in CARTAN:
            raise UnsupportedType("unsupported root system type %r" % (type_label,))
        self.type_label = type_label
        self.cartan = CARTAN[type_label]
        n = self.rank = len(self.cartan)
        self.simple_roots = tuple(
            tuple(self.cartan[i][j] for i in range(n)) for j in range(n)
        )
        self.fundamental_weights = tuple(
            tuple(int(i == j) for i in range(n)) for j in range(n)
        )
        self._build_roots()
        self.rho = tuple([1] * n)
        self.nu = len(self.positive_roots)
        self._build_weyl_group()

    # -- roots -------------------------------------------------------------

    def _build_roots(self):
        # roots tracked in simple-root coordinates together with their coroot
        # in simple-coroot coordinates
        n = self.rank
        a = self.cartan
        seen = {}
        frontier = []
        for i in range(n):
            k = tuple(int(j == i) for j in range(n))
            frontier.append((k, k))
        while frontier:
            nxt = []
            for k, c in frontier:
                if k in seen:
                    continue
                seen[k] = c
                b = self._root_weight(k)
                for i in range(n):
                    k2 = list(k)
                    k2[i] -= b[i]
                    # <alpha_i, beta^vee> = sum_j c_j a[j][i]
                    p = sum(c[j] * a[j][i] for j in range(n))
                    c2 = list(c)
                    c2[i] -= p
                    nxt.append((tuple(k2), tuple(c2)))
            frontier = nxt
        pos = sorted(
            (k for k in seen if all(v >= 0 for v in k)),
            key=lambda k: (sum(k), tuple(-v for v in k)),
        )
        self.positive_roots_simple = tuple(pos)
        self.positive_roots = tuple(self._root_weight(k) for k in pos)
        self.positive_coroots = tuple(seen[k] for k in pos)
        self.roots = self.positive_roots + tuple(
            tuple(-v for v in r) for r in self.positive_roots
        )
        self._root_index = {r: i for i, r in enumerate(self.roots)}
        self.coroot_of = {}
        for r, c in zip(self.positive_roots, self.positive_coroots):
            self.coroot_of[r] = c
            self.coroot_of[tuple(-v for v in r)] = tuple(-v for v in c)

    def _root_weight(self, k):
        n = self.rank
        return tuple(sum(self.cartan[i][j] * k[j] for j in range(n)) for i in range(n))

    def pair(self, x, coroot):
        """``<x, coroot>`` with the coroot in simple-coroot coordinates."""
        return sum(a * b for a, b in zip(x, coroot))

    def is_root(self, x):
        return tuple(x) in self._root_index

    def is_positive_root(self, x):
        i = self._root_index.get(tuple(x))
        return i is not None and i < self.nu

    @cached_property
    def two_rho_vee(self):
        """Sum of positive coroots, in simple-coroot coordinates."""
        n = self.rank
        return tuple(sum(c[i] for c in self.positive_coroots) for i in range(n))

    @cached_property
    def highest_root(self):
        return max(self.positive_roots_simple, key=sum)

    @cached_property
    def affine_root(self):
        """The positive root phi with s_0 = t_phi s_phi.

        phi^vee is the highest coroot, i.e. phi is the highest short root.
        """
        i = max(range(self.nu), key=lambda j: sum(self.positive_coroots[j]))
        return self.positive_roots[i]

    def reflection_matrix(self, root):
        c = self.coroot_of[tuple(root)]
        n = self.rank
        return tuple(
            tuple(int(i == j) - root[i] * c[j] for j in range(n)) for i in range(n)
        )

    # -- Weyl group --------------------------------------------------------

    def _build_weyl_group(self):
        n = self.rank
        gens = [self.reflection_matrix(r) for r in self.simple_roots]
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        words = {ident: ()}
        order = [ident]
        frontier = [ident]
        while frontier:
            nxt = []
            for m in frontier:
                for i, g in enumerate(gens):
                    m2 = _matmul(m, g)
                    if m2 not in words:
                        words[m2] = words[m] + (i,)
                        order.append(m2)
                        nxt.append(m2)
            frontier = nxt
        self.W0 = [FiniteWeylElt(idx, words[m], m, self) for idx, m in enumerate(order)]
        index = {m: i for i, m in enumerate(order)}
        self._matrix_index = index
        self.mul_table = [
            [index[_matmul(a.matrix, b.matrix)] for b in self.W0] for a in self.W0
        ]
        self.inv_table = [row.index(0) for row in self.mul_table]
        self.identity = self.W0[0]
        self.simple_reflections = [self.W0[index[g]] for g in gens]
        self.w0 = max(self.W0, key=lambda w: w.length)

    def element_from_word(self, word):
        w = self.identity
        for i in word:
            w = w * self.simple_reflections[i]
        return w

    def element_from_matrix(self, m):
        return self.W0[self._matrix_index[m]]

    def act(self, w, x):
        return w(x)

    def inversion_count(self, w):
        return sum(1 for r in self.positive_roots if not self.is_positive_root(w(r)))

    def right_descents(self, w):
        """Right descents of w in S_0 (indices), i.e. w(alpha_i) < 0."""
        return frozenset(
            i for i, r in enumerate(self.simple_roots) if not self.is_positive_root(w(r))
        )

    def left_descents(self, w):
        return self.right_descents(w.inverse())

    # -- weights -----------------------------------------------------------

    @staticmethod
    def is_dominant(x):
        return all(v >= 0 for v in x)

    @staticmethod
    def is_antidominant(x):
        return all(v <= 0 for v in x)

    def dominant_representative(self, x):
        """Return (dominant weight, w) with w(dominant) = x."""
        x = tuple(x)
        for w in self.W0:
            y = w.inverse()(x)
            if self.is_dominant(y):
                return y, w
        raise AssertionError("no dominant representative")  # pragma: no cover

    def weight_box(self, radius):
        return list(product(range(-radius, radius + 1), repeat=self.rank))

    def __repr__(self):
        return "RootDatum(%r)" % self.type_label


_CACHE = {}


def build_root_datum(type_label):
    """Construct (and memoize) the root datum of ``type_label``."""
    R = _CACHE.get(type_label)
    if R is None:
        R = _CACHE[type_label] = RootDatum(type_label)
    return R


def poincare_polynomial(datum):
    """Coefficient list of sum_{w in W_0} q^{l(w)}, by enumeration."""
    coeffs = [0] * (datum.nu + 1)
    for w in datum.W0:
        coeffs[w.length] += 1
    return coeffs


def poincare_product_identity(datum):
    """Check prod (1 - q^{1+h}) / (1 - q^h) == Poincare polynomial exactly.

    ``h = <rho, alpha^vee>`` runs over positive roots.  The check clears
    denominators: it compares ``P(q) * prod(1 - q^h)`` with
    ``prod(1 - q^{1+h})`` as integer polynomials.
    Returns (holds, lhs_coeffs, rhs_coeffs).
    """
    def pmul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def trim(a):
        a = list(a)
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        return a

    def one_minus_qpow(h):
        p = [0] * (h + 1)
        p[0] += 1
        p[h] -= 1
        return p

    lhs = poincare_polynomial(datum)
    num = [1]
    for c in datum.positive_coroots:
        h = datum.pair(datum.rho, c)
        lhs = pmul(lhs, one_minus_qpow(h))
        num = pmul(num, one_minus_qpow(h + 1))
    lhs, num = trim(lhs), trim(num)
    return lhs == num, lhs, num


def evaluate_poincare(datum, q0):
    return sum(Fraction(c) * Fraction(q0) ** i for i, c in enumerate(poincare_polynomial(datum)))
