"""Pure-Python sparse Laurent-polynomial kernels.

Polynomials are dicts mapping a *packed* exponent key to a nonzero
coefficient (int or Fraction).  A key stores the exponent vector as
fixed-width fields offset by ``OFF``; see :class:`hecke_cell_lab.laurent.Layout`.
Adding two keys and subtracting ``zero`` (the key of the zero vector)
multiplies monomials, and numeric key order is lexicographic order.

The compiled module ``_kernels`` exposes the same functions with the same
signatures; :mod:`hecke_cell_lab.kernels` picks one at import time.
"""

from fractions import Fraction
import heapq


class InexactDivision(ArithmeticError):
    """Raised when a Laurent polynomial is not divisible by another."""

    def __init__(self, witness):
        super().__init__("inexact division, witness key %d" % witness)
        self.witness = witness


def poly_mul(a, b, zero):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    bi = list(b.items())
    for ka, ca in a.items():
        base = ka - zero
        for kb, cb in bi:
            k = base + kb
            c = get(k, 0) + ca * cb
            if c:
                out[k] = c
            else:
                out.pop(k, None)
    return out


def poly_add(a, b, scale=1):
    """Return ``a + scale * b``."""
    out = dict(a)
    get = out.get
    for k, c in b.items():
        c = get(k, 0) + scale * c
        if c:
            out[k] = c
        else:
            del out[k]
    return out


def poly_iadd(a, b, scale=1):
    """In-place ``a += scale * b``; returns ``a``."""
    get = a.get
    for k, c in b.items():
        c = get(k, 0) + scale * c
        if c:
            a[k] = c
        else:
            del a[k]
    return a


def poly_act(a, shifts, mask, off, deltas):
    """Apply a lattice automorphism given by per-coordinate key deltas."""
    out = {}
    for k, c in a.items():
        nk = k
        for sh, d in zip(shifts, deltas):
            x = ((k >> sh) & mask) - off
            if x:
                nk += x * d
        out[nk] = c
    return out


def poly_demazure(a, shift, mask, off, alpha, eps):
    """Monomial-wise ``(f - s f) / (1 - theta_{eps*alpha})``.

    ``shift`` locates the coordinate m = <x, alpha^vee> of the simple
    reflection s, ``alpha`` is the packed-key delta of the simple root.
    """
    out = {}
    get = out.get
    for k, c in a.items():
        m = ((k >> shift) & mask) - off
        if m == 0:
            continue
        if eps < 0:
            if m > 0:
                ks = [k - j * alpha for j in range(m)]
                sgn = 1
            else:
                ks = [k + j * alpha for j in range(1, 1 - m)]
                sgn = -1
        else:
            if m > 0:
                ks = [k - j * alpha for j in range(1, m + 1)]
                sgn = -1
            else:
                ks = [k + j * alpha for j in range(-m)]
                sgn = 1
        cc = c if sgn > 0 else -c
        for nk in ks:
            v = get(nk, 0) + cc
            if v:
                out[nk] = v
            else:
                del out[nk]
    return out


def _div(c, lc):
    if isinstance(c, int) and isinstance(lc, int):
        if c % lc == 0:
            return c // lc
        return Fraction(c, lc)
    r = Fraction(c) / lc
    return r.numerator if r.denominator == 1 else r


def _fields(k, shifts, mask, off):
    return [((k >> sh) & mask) - off for sh in shifts]


def poly_divexact(f, g, zero, shifts, mask, off):
    """Exact quotient ``f / g``; raises :class:`InexactDivision`.

    Quotient exponents are confined to the coordinate box forced by the
    Newton polytopes of ``f`` and ``g``, which guarantees termination.
    """
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return {}
    ff = [_fields(k, shifts, mask, off) for k in f]
    gf = [_fields(k, shifts, mask, off) for k in g]
    lo = [min(c) - min(d) for c, d in zip(zip(*ff), zip(*gf))]
    hi = [max(c) - max(d) for c, d in zip(zip(*ff), zip(*gf))]
    if any(a > b for a, b in zip(lo, hi)):
        raise InexactDivision(max(f))
    lead = max(g)
    lc = g[lead]
    rest = [(kg - lead, cg) for kg, cg in g.items() if kg != lead]
    r = dict(f)
    heap = [-k for k in r]
    heapq.heapify(heap)
    q = {}
    while heap:
        k = -heapq.heappop(heap)
        c = r.pop(k, 0)
        if not c:
            continue
        while heap and heap[0] == -k:
            heapq.heappop(heap)
        qk = k - lead + zero
        for sh, a, b in zip(shifts, lo, hi):
            e = ((qk >> sh) & mask) - off
            if e < a or e > b:
                raise InexactDivision(k)
        qc = _div(c, lc)
        q[qk] = qc
        for dk, cg in rest:
            nk = k + dk
            v = r.get(nk, 0) - qc * cg
            if v:
                if nk not in r:
                    heapq.heappush(heap, -nk)
                r[nk] = v
            else:
                r.pop(nk, None)
    return q
