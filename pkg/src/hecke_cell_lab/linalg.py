"""Exact dense linear algebra over Q or a quadratic field.

Entries are Fractions or :class:`~hecke_cell_lab.laurent.QuadNumber`; the
only requirements are field operations and a truth test for nonzero.
Matrices are lists of row lists.
"""

from __future__ import annotations


def rref(rows, ncols=None):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                ri = m[r]
                m[i] = [a - f * b for a, b in zip(m[i], ri)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def echelon_basis(rows):
    """Deterministic basis (RREF rows) of the row space."""
    return rref(rows)[0]


def nullspace(matrix, ncols=None):
    """Basis of {c : matrix c = 0} (right kernel) as a list of vectors."""
    if not matrix:
        if ncols is None:
            raise ValueError("need ncols for an empty matrix")
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    ncols = len(matrix[0])
    red, piv = rref(matrix, ncols)
    zero = matrix[0][0] * 0
    one = zero + 1
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), a[0][0] * 0) for col in bt] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), v[0] * 0) for row in a]


def vecmat(v, a):
    """Row vector times matrix."""
    n = len(a[0])
    out = [v[0] * 0] * n
    for x, row in zip(v, a):
        if x:
            out = [o + x * y for o, y in zip(out, row)]
    return out


def identity(n, one):
    zero = one * 0
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def inverse(a):
    n = len(a)
    one = a[0][0] * 0 + 1
    aug = [list(r) + e for r, e in zip(a, identity(n, one))]
    red, piv = rref(aug, n)
    if piv != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def solve(a, b):
    """Solve a x = b for square invertible a."""
    return matvec(inverse(a), b)


def same_span(rows_a, rows_b):
    return echelon_basis(rows_a) == echelon_basis(rows_b)


def in_span(basis_rows, v):
    return rank(list(basis_rows) + [v]) == rank(basis_rows)


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


class EchelonSpace:
    """Incrementally grown subspace kept in reduced echelon form."""

    def __init__(self, dim):
        self.dim = dim
        self.rows = []  # (pivot, row) with row[pivot] == 1
        self._by_pivot = {}

    def reduce(self, v):
        v = list(v)
        for p, row in self.rows:
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, v):
        """Insert v; returns True if the space grew."""
        v = self.reduce(v)
        p = next((i for i, c in enumerate(v) if c), None)
        if p is None:
            return False
        inv = 1 / v[p]
        v = [c * inv for c in v]
        new_rows = []
        for q, row in self.rows:
            c = row[p]
            if c:
                row = [a - c * b for a, b in zip(row, v)]
            new_rows.append((q, row))
        new_rows.append((p, v))
        new_rows.sort(key=lambda pr: pr[0])
        self.rows = new_rows
        return True

    def contains(self, v):
        return not any(self.reduce(v))

    def __len__(self):
        return len(self.rows)

    def basis(self):
        return [row for _, row in self.rows]

    def coordinates(self, v):
        """Coordinates of v (assumed inside) against basis()."""
        r = self.reduce(v)
        if any(r):
            raise ValueError("vector is not in the subspace")
        return [v[p] for p, _ in self.rows]
