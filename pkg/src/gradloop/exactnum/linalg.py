"""Exact linear algebra over Q and cyclotomic fields.

Rational systems go through fraction-free (Bareiss) elimination on integer
rows; systems with cyclotomic entries use Gauss-Jordan over the field.  Pivot
choice is deterministic: smallest :func:`size_key`, ties by row index.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import Inconsistent
from .scalars import Cyclotomic, inv, size_key

ZERO = Fraction(0)
ONE = Fraction(1)


def _all_rational(rows):
    return all(not isinstance(x, Cyclotomic) for row in rows for x in row)


@dataclass(frozen=True)
class Solution:
    particular: tuple
    kernel: tuple  # basis vectors of the homogeneous solution space


def _integer_rows(rows):
    out = []
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * den) for x in row])
    return out


def bareiss_echelon(M, ncols=None):
    """Fraction-free row echelon form of an integer matrix.

    Returns ``(E, pivots)`` where ``pivots`` lists ``(row, col)``.  Only the
    first ``ncols`` columns are eligible as pivot columns.
    """
    A = [list(r) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    ncols = n if ncols is None else ncols
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= m:
            break
        best = None
        for i in range(r, m):
            if A[i][c] and (best is None or (abs(A[i][c]), i) < best):
                best = (abs(A[i][c]), i)
        if best is None:
            continue
        i = best[1]
        A[r], A[i] = A[i], A[r]
        p = A[r][c]
        pr = A[r]
        for i in range(r + 1, m):
            ri = A[i]
            a = ri[c]
            for j in range(c + 1, n):
                ri[j] = (p * ri[j] - a * pr[j]) // prev
            ri[c] = 0
        # rows above the pivot keep their entries; Bareiss only clears below
        pivots.append((r, c))
        prev = p
        r += 1
    return A, pivots


def gauss_jordan(M, ncols=None):
    """Reduced row echelon form over the field; returns ``(R, pivots)``."""
    A = [list(r) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    ncols = n if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= m:
            break
        best = None
        for i in range(r, m):
            x = A[i][c]
            if x != 0:
                key = (size_key(x), i)
                if best is None or key < best:
                    best = key
        if best is None:
            continue
        i = best[1]
        A[r], A[i] = A[i], A[r]
        pinv = inv(A[r][c])
        A[r] = [x * pinv if x != 0 else ZERO for x in A[r]]
        pr = A[r]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y if y != 0 else x for x, y in zip(A[i], pr)]
        pivots.append((r, c))
        r += 1
    return A, pivots


def rank(M, reverse=False):
    """Rank; ``reverse`` eliminates columns right-to-left (independent order)."""
    rows = [list(r) for r in M]
    if not rows:
        return 0
    if reverse:
        rows = [r[::-1] for r in rows][::-1]
    if _all_rational(rows):
        _, piv = bareiss_echelon(_integer_rows(rows))
    else:
        _, piv = gauss_jordan(rows)
    return len(piv)


def linear_solve(A, b):
    """One solution of ``A x = b`` plus a kernel basis; raises Inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return Solution(tuple([ZERO] * n), tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))
    # the identity block records which combination of the original rows each
    # echelon row is (row scaling to integers is recorded there too)
    aug = [list(A[i]) + [b[i]] + [ONE if k == i else ZERO for k in range(m)] for i in range(m)]
    rational = _all_rational(aug)
    if rational:
        E, pivots = bareiss_echelon(_integer_rows(aug), ncols=n)
    else:
        E, pivots = gauss_jordan(aug, ncols=n)
    prank = len(pivots)
    for r in range(prank, m):
        if E[r][n] != 0:
            cert = tuple(E[r][n + 1:])
            raise Inconsistent(f"system is inconsistent (row {r})", certificate=cert)
    if rational:
        E = [[Fraction(x) for x in row] for row in E]
    x = _back_substitute_generic(E, pivots, n, n)
    pivot_cols = {c for _, c in pivots}
    kernel = []
    for f in range(n):
        if f in pivot_cols:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for r, c in reversed(pivots):
            row = E[r]
            s = ZERO
            for j in range(c + 1, n):
                if row[j] != 0 and v[j] != 0:
                    s -= row[j] * v[j]
            v[c] = s * inv(row[c]) if s != 0 else ZERO
        kernel.append(tuple(v))
    return Solution(tuple(x), tuple(kernel))


def _back_substitute_generic(E, pivots, n, rhs_col):
    x = [ZERO] * n
    for r, c in reversed(pivots):
        row = E[r]
        s = row[rhs_col]
        for j in range(c + 1, n):
            if row[j] != 0 and x[j] != 0:
                s = s - row[j] * x[j]
        x[c] = s * inv(row[c]) if s != 0 else ZERO
    return x


def matvec(A, x):
    out = []
    for row in A:
        s = ZERO
        for a, y in zip(row, x):
            if a != 0 and y != 0:
                s = s + a * y
        out.append(s)
    return out


def matmul(A, B):
    if not A:
        return []
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [ZERO] * n
        for k, a in enumerate(row):
            if a != 0:
                Bk = B[k]
                for j in range(n):
                    if Bk[j] != 0:
                        acc[j] = acc[j] + a * Bk[j]
        out.append(acc)
    return out


def identity_matrix(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def nullspace_sparse(equations, nvars):
    """Kernel basis of a sparse homogeneous system.

    ``equations`` is an iterable of dicts ``{var: coefficient}``.  The pivot
    rows are kept fully reduced, so the basis returned (one vector per free
    variable, that variable set to 1) is canonical for the solution space.
    """
    pivots = {}  # pivot var -> row dict (pivot coefficient 1)
    for eq in equations:
        row = {v: c for v, c in eq.items() if c != 0}
        hits = [v for v in row if v in pivots]
        for v in hits:
            c = row.get(v)
            if not c:
                continue
            for w, d in pivots[v].items():
                nv = row.get(w, ZERO) - c * d
                if nv != 0:
                    row[w] = nv
                else:
                    row.pop(w, None)
        if not row:
            continue
        p = min(row)
        pinv = inv(row[p])
        row = {v: c * pinv for v, c in row.items()}
        for q, prow in pivots.items():
            c = prow.get(p)
            if c:
                for w, d in row.items():
                    nv = prow.get(w, ZERO) - c * d
                    if nv != 0:
                        prow[w] = nv
                    else:
                        prow.pop(w, None)
        pivots[p] = row
    basis = []
    for f in range(nvars):
        if f in pivots:
            continue
        v = [ZERO] * nvars
        v[f] = ONE
        for p, prow in pivots.items():
            c = prow.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


class EchelonSpace:
    """Incrementally grown subspace of F^n with fully reduced basis rows."""

    def __init__(self, n):
        self.n = n
        self.rows = {}  # pivot index -> row (list), pivot entry 1

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        v = list(v)
        for p, row in self.rows.items():
            c = v[p]
            if c != 0:
                for j, d in enumerate(row):
                    if d != 0:
                        v[j] = v[j] - c * d
        return v

    def contains(self, v):
        return not any(x != 0 for x in self.reduce(v))

    def add(self, v):
        """Insert ``v``; return True when the space grew."""
        v = self.reduce(v)
        p = next((j for j, x in enumerate(v) if x != 0), None)
        if p is None:
            return False
        pinv = inv(v[p])
        v = [x * pinv if x != 0 else ZERO for x in v]
        for q, row in self.rows.items():
            c = row[p]
            if c != 0:
                self.rows[q] = [x - c * y if y != 0 else x for x, y in zip(row, v)]
        self.rows[p] = v
        return True

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows)]
