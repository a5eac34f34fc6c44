"""Integer matrices: Smith normal form and congruence systems.

Matrices are plain lists of lists of Python ints.  Everything here is exact
and deterministic: pivots are chosen by smallest absolute value, ties broken
by (row, column) order.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NoSolution


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(A))]


def det(M):
    """Integer determinant via fraction-free elimination."""
    n = len(M)
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


class _Reducer:
    """In-place diagonalization with optional tracking of U and V."""

    def __init__(self, M, track_u=True, track_v=True, rhs=None):
        self.A = [list(map(int, r)) for r in M]
        self.m = len(self.A)
        self.n = len(self.A[0]) if self.m else 0
        self.U = identity(self.m) if track_u else None
        self.V = identity(self.n) if track_v else None
        self.rhs = None if rhs is None else list(map(int, rhs))

    def swap_rows(self, i, j):
        if i == j:
            return
        A = self.A
        A[i], A[j] = A[j], A[i]
        if self.U is not None:
            self.U[i], self.U[j] = self.U[j], self.U[i]
        if self.rhs is not None:
            self.rhs[i], self.rhs[j] = self.rhs[j], self.rhs[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for row in self.A:
            row[i], row[j] = row[j], row[i]
        if self.V is not None:
            for row in self.V:
                row[i], row[j] = row[j], row[i]

    def add_row(self, dst, src, q):
        """row[dst] += q * row[src]"""
        rd, rs = self.A[dst], self.A[src]
        for k in range(self.n):
            if rs[k]:
                rd[k] += q * rs[k]
        if self.U is not None:
            ud, us = self.U[dst], self.U[src]
            for k in range(self.m):
                if us[k]:
                    ud[k] += q * us[k]
        if self.rhs is not None:
            self.rhs[dst] += q * self.rhs[src]

    def add_col(self, dst, src, q):
        """col[dst] += q * col[src]"""
        for row in self.A:
            if row[src]:
                row[dst] += q * row[src]
        if self.V is not None:
            for row in self.V:
                if row[src]:
                    row[dst] += q * row[src]

    def negate_row(self, i):
        self.A[i] = [-x for x in self.A[i]]
        if self.U is not None:
            self.U[i] = [-x for x in self.U[i]]
        if self.rhs is not None:
            self.rhs[i] = -self.rhs[i]

    def run(self):
        A, m, n = self.A, self.m, self.n
        t = 0
        while t < min(m, n):
            best = None
            for i in range(t, m):
                row = A[i]
                for j in range(t, n):
                    a = row[j]
                    if a and (best is None or abs(a) < best[0]):
                        best = (abs(a), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                break
            self.swap_rows(t, best[1])
            self.swap_cols(t, best[2])
            while True:
                clean = True
                for i in range(t + 1, m):
                    if A[i][t]:
                        self.add_row(i, t, -(A[i][t] // A[t][t]))
                        if A[i][t]:
                            clean = False
                for j in range(t + 1, n):
                    if A[t][j]:
                        self.add_col(j, t, -(A[t][j] // A[t][t]))
                        if A[t][j]:
                            clean = False
                if not clean:
                    # move the smallest leftover in row/column t onto the pivot
                    best = (abs(A[t][t]), t, t)
                    for i in range(t + 1, m):
                        if A[i][t] and abs(A[i][t]) < best[0]:
                            best = (abs(A[i][t]), i, t)
                    for j in range(t + 1, n):
                        if A[t][j] and abs(A[t][j]) < best[0]:
                            best = (abs(A[t][j]), t, j)
                    self.swap_rows(t, best[1])
                    self.swap_cols(t, best[2])
                    continue
                p = A[t][t]
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                self.add_row(t, bad, 1)
            if A[t][t] < 0:
                self.negate_row(t)
            t += 1
        return t


def smith_normal_form(M):
    """Return ``(U, D, V)`` with ``U*M*V == D``, U and V unimodular.

    ``D`` is diagonal with nonnegative entries forming a divisibility chain.
    """
    r = _Reducer(M)
    r.run()
    return r.U, r.A, r.V


def invariant_factors_of(M):
    U, D, V = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


@dataclass(frozen=True)
class AffineSolution:
    """One solution ``x`` plus generators of the homogeneous solution lattice.

    Every ``x + sum(k_i * g_i)`` is again a solution; together with the row
    moduli this describes the full solution set.
    """

    x: tuple
    lattice: tuple


def _solve_exact(A, t):
    """Integer solution of ``A z = t`` or raise NoSolution."""
    m = len(A)
    n = len(A[0]) if m else 0
    r = _Reducer(A, track_u=False, track_v=True, rhs=t)
    rank = r.run()
    D, tp = r.A, r.rhs
    zp = [0] * n
    ok = True
    for i in range(m):
        if i < rank:
            if tp[i] % D[i][i]:
                ok = False
                break
            zp[i] = tp[i] // D[i][i]
        elif tp[i]:
            ok = False
            break
    if not ok:
        # redo with U tracked to produce a certificate
        full = _Reducer(A, track_u=True, track_v=False, rhs=t)
        full.run()
        for i in range(m):
            g = full.A[i][i] if i < rank else 0
            if (g == 0 and full.rhs[i]) or (g and full.rhs[i] % g):
                raise NoSolution("integer system has no solution",
                                 certificate=(tuple(full.U[i]), g))
        raise AssertionError("inconsistent SNF bookkeeping")
    V = r.V
    z = tuple(sum(V[i][k] * zp[k] for k in range(n)) for i in range(n))
    kernel = tuple(tuple(V[i][k] for i in range(n)) for k in range(rank, n))
    return z, kernel


def integer_affine_solve(C, moduli, t):
    """Solve ``C x == t`` with row ``i`` taken modulo ``moduli[i]`` (0 = exact).

    Returns an :class:`AffineSolution`; raises :class:`NoSolution` carrying a
    certificate for the system ``[C | -diag(m)] z = t``.
    """
    m = len(C)
    ncols = len(C[0]) if m else 0
    moduli = [abs(int(x)) for x in moduli]
    t = [int(x) for x in t]
    if m == 0:
        return AffineSolution(tuple([0] * ncols),
                              tuple(tuple(int(i == j) for j in range(ncols)) for i in range(ncols)))
    slack = [i for i in range(m) if moduli[i] not in (0, 1)]
    rows = []
    for i in range(m):
        row = [0] * ncols if moduli[i] == 1 else list(map(int, C[i]))
        row += [-moduli[i] if s == i else 0 for s in slack]
        rows.append(row)
    tvec = [0 if moduli[i] == 1 else t[i] for i in range(m)]
    z, kernel = _solve_exact(rows, tvec)
    x = z[:ncols]
    lattice = [k[:ncols] for k in kernel if any(k[:ncols])]
    return AffineSolution(tuple(x), tuple(lattice))


def uniform_modulus_solve(C, modulus, t):
    """Faster path for ``C x == t (mod modulus)`` with one shared modulus.

    Uses the SNF of ``C`` alone: with ``U C V = D``, the system becomes
    ``d_i y_i == (U t)_i`` modulo ``modulus``.
    """
    m = len(C)
    n = len(C[0]) if m else 0
    modulus = abs(int(modulus))
    if modulus == 1 or m == 0:
        return AffineSolution(tuple([0] * n), ())
    if modulus == 0:
        z, kernel = _solve_exact(C, t)
        return AffineSolution(z, kernel)
    r = _Reducer(C, track_u=False, track_v=True, rhs=t)
    rank = r.run()
    D, tp = r.A, r.rhs
    y = [0] * n
    for i in range(m):
        target = tp[i] % modulus
        if i < rank:
            d = D[i][i]
            g = gcd(d, modulus)
            if target % g:
                return integer_affine_solve(C, [modulus] * m, t)  # raises with certificate
            # d*y == target (mod modulus)
            y[i] = (target // g) * pow(d // g, -1, modulus // g) % (modulus // g) if modulus // g > 1 else 0
        elif target:
            return integer_affine_solve(C, [modulus] * m, t)
    V = r.V
    x = tuple(sum(V[i][k] * y[k] for k in range(n)) % modulus for i in range(n))
    lattice = []
    for k in range(n):
        step = modulus // gcd(D[k][k], modulus) if k < rank else 1
        if step == modulus:
            continue
        lattice.append(tuple(step * V[i][k] % modulus for i in range(n)))
    return AffineSolution(x, tuple(lattice))


def check_no_solution_certificate(C, moduli, t, certificate):
    """Verify a NoSolution certificate against the original system."""
    u, g = certificate
    m = len(C)
    ncols = len(C[0]) if m else 0
    slack = [i for i in range(m) if moduli[i] not in (0, 1)]
    rows = []
    for i in range(m):
        row = [0] * ncols if moduli[i] == 1 else list(C[i])
        row += [-moduli[i] if s == i else 0 for s in slack]
        rows.append(row)
    tvec = [0 if moduli[i] == 1 else t[i] for i in range(m)]
    ncol = len(rows[0]) if rows else 0
    uA = [sum(u[i] * rows[i][j] for i in range(m)) for j in range(ncol)]
    ut = sum(u[i] * tvec[i] for i in range(m))
    if g == 0:
        return all(v == 0 for v in uA) and ut != 0
    return all(v % g == 0 for v in uA) and ut % g != 0
