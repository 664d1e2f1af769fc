# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled sparse Laurent-polynomial kernels.

Same functions and signatures as :mod:`hecke_cell_lab._kernels_py`.  Packed
keys fit in 60 bits for rank <= 3 and are handled as C ``long long``;
coefficients stay Python objects (int or Fraction), so results are
identical to the pure-Python module.
"""

from array import array
from fractions import Fraction
import heapq

from ._kernels_py import InexactDivision

from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

ctypedef long long key_t

# coefficients below this bound take the machine-integer path of poly_mul;
# products stay below 2^40 and at most 2^22 of them are summed per key
cdef long long SMALL = 1 << 20
cdef Py_ssize_t MAX_TERMS = 1 << 22


cdef bint _small_ints(dict a):
    cdef object c
    for c in a.values():
        if type(c) is not int or not (-SMALL < c < SMALL):
            return False
    return True


cdef dict _mul_small(dict a, dict b, key_t zero):
    cdef vector[key_t] ak, bk
    cdef vector[long long] ac, bc
    cdef unordered_map[key_t, long long] acc
    cdef vector[key_t] order
    cdef Py_ssize_t i, j
    cdef key_t base, k
    cdef long long c
    cdef dict out = {}
    for kobj, cobj in a.items():
        ak.push_back(kobj)
        ac.push_back(cobj)
    for kobj, cobj in b.items():
        bk.push_back(kobj)
        bc.push_back(cobj)
    acc.reserve(ak.size() * bk.size())
    for i in range(<Py_ssize_t>ak.size()):
        base = ak[i] - zero
        for j in range(<Py_ssize_t>bk.size()):
            k = base + bk[j]
            if acc.count(k) == 0:
                order.push_back(k)
                acc[k] = ac[i] * bc[j]
            else:
                acc[k] += ac[i] * bc[j]
    for i in range(<Py_ssize_t>order.size()):
        c = acc[order[i]]
        if c:
            out[order[i]] = c
    return out


def poly_mul(dict a, dict b, key_t zero):
    if min(len(a), len(b)) < MAX_TERMS and _small_ints(a) and _small_ints(b):
        return _mul_small(a, b, zero)
    cdef dict out = {}
    cdef list bc
    cdef Py_ssize_t j, nb
    cdef key_t base, k
    cdef key_t[::1] keys
    cdef object ca, c, kobj
    if len(a) > len(b):
        a, b = b, a
    keys = array("q", list(b))
    bc = list(b.values())
    nb = len(bc)
    for kobj, ca in a.items():
        base = <key_t>kobj - zero
        for j in range(nb):
            k = base + keys[j]
            c = out.get(k, 0) + ca * bc[j]
            if c:
                out[k] = c
            else:
                out.pop(k, None)
    return out


def poly_add(dict a, dict b, scale=1):
    """Return ``a + scale * b``."""
    cdef dict out = dict(a)
    cdef object k, c
    for k, c in b.items():
        c = out.get(k, 0) + scale * c
        if c:
            out[k] = c
        else:
            del out[k]
    return out


def poly_iadd(dict a, dict b, scale=1):
    """In-place ``a += scale * b``; returns ``a``."""
    cdef object k, c
    for k, c in b.items():
        c = a.get(k, 0) + scale * c
        if c:
            a[k] = c
        else:
            del a[k]
    return a


def poly_act(dict a, shifts, key_t mask, key_t off, deltas):
    """Apply a lattice automorphism given by per-coordinate key deltas."""
    cdef dict out = {}
    cdef Py_ssize_t i, n = len(shifts)
    cdef key_t k, nk, x
    cdef key_t sh[8]
    cdef key_t dl[8]
    cdef object kobj, c
    if n > 8:
        raise ValueError("too many coordinates")
    for i in range(n):
        sh[i] = shifts[i]
        dl[i] = deltas[i]
    for kobj, c in a.items():
        k = kobj
        nk = k
        for i in range(n):
            x = ((k >> sh[i]) & mask) - off
            if x:
                nk += x * dl[i]
        out[nk] = c
    return out


def poly_demazure(dict a, key_t shift, key_t mask, key_t off, key_t alpha, int eps):
    """Monomial-wise ``(f - s f) / (1 - theta_{eps*alpha})``."""
    cdef dict out = {}
    cdef key_t k, m, j, nk
    cdef object kobj, c, cc, v
    for kobj, c in a.items():
        k = kobj
        m = ((k >> shift) & mask) - off
        if m == 0:
            continue
        if eps < 0:
            if m > 0:
                cc = c
                for j in range(m):
                    nk = k - j * alpha
                    v = out.get(nk, 0) + cc
                    if v:
                        out[nk] = v
                    else:
                        del out[nk]
            else:
                cc = -c
                for j in range(1, 1 - m):
                    nk = k + j * alpha
                    v = out.get(nk, 0) + cc
                    if v:
                        out[nk] = v
                    else:
                        del out[nk]
        else:
            if m > 0:
                cc = -c
                for j in range(1, m + 1):
                    nk = k - j * alpha
                    v = out.get(nk, 0) + cc
                    if v:
                        out[nk] = v
                    else:
                        del out[nk]
            else:
                cc = c
                for j in range(0, -m):
                    nk = k + j * alpha
                    v = out.get(nk, 0) + cc
                    if v:
                        out[nk] = v
                    else:
                        del out[nk]
    return out


cdef object _div(object c, object lc):
    if isinstance(c, int) and isinstance(lc, int):
        if c % lc == 0:
            return c // lc
        return Fraction(c, lc)
    r = Fraction(c) / lc
    return r.numerator if r.denominator == 1 else r


def poly_divexact(dict f, dict g, key_t zero, shifts, key_t mask, key_t off):
    """Exact quotient ``f / g``; raises :class:`InexactDivision`."""
    cdef Py_ssize_t i, n = len(shifts)
    cdef key_t k, qk, e, lead, nk
    cdef list lo, hi, rest, heap
    cdef dict r, q
    cdef object c, qc, v, lc, cg
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return {}
    shl = list(shifts)
    ff = [[((kk >> s) & mask) - off for s in shl] for kk in f]
    gf = [[((kk >> s) & mask) - off for s in shl] for kk in g]
    lo = [min(c1) - min(d1) for c1, d1 in zip(zip(*ff), zip(*gf))]
    hi = [max(c1) - max(d1) for c1, d1 in zip(zip(*ff), zip(*gf))]
    if any(x > y for x, y in zip(lo, hi)):
        raise InexactDivision(max(f))
    lead = max(g)
    lc = g[lead]
    rest = [(kg - lead, cg2) for kg, cg2 in g.items() if kg != lead]
    r = dict(f)
    heap = [-kk for kk in r]
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
        for i in range(n):
            e = ((qk >> <key_t>shl[i]) & mask) - off
            if e < <key_t>lo[i] or e > <key_t>hi[i]:
                raise InexactDivision(k)
        qc = _div(c, lc)
        q[qk] = qc
        for dk, cg in rest:
            nk = k + <key_t>dk
            v = r.get(nk, 0) - qc * cg
            if v:
                if nk not in r:
                    heapq.heappush(heap, -nk)
                r[nk] = v
            else:
                r.pop(nk, None)
    return q
