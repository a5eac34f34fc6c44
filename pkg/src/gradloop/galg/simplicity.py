"""Graded ideals and a staged graded-simplicity semi-decision.

Graded ideals are exactly the subspaces invariant under the algebra ``E``
generated by all left and right multiplications and the degree projections.
The stages, cheapest first:

0. ``A^2`` must be all of ``A``.
1. Graded-division shortcut (1-dimensional components, all basis products
   nonzero).
2. Closures of homogeneous basis elements and of seeded random homogeneous
   elements; a proper closure is a witness.
3. ``D = C(A)_e`` is the commutant of ``E``.  If ``D`` is a field and
   ``dim E = n^2 / dim D`` then ``E = End_D(A)`` and ``A`` is a simple
   ``E``-module.  ``dim E`` is bounded below by ranks modulo a large prime.
   A reducible minimal polynomial in ``D`` yields an idempotent or nilpotent
   ``z`` and the witness ``z(A)``.
4. Small algebras: exact ``E`` and its trace-form radical; a nonzero radical
   gives the witness ``rad(E) A``.

Algebras over cyclotomic fields are first restricted to Q; this preserves
graded simplicity when ``A^2 = A``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..exactnum.linalg import EchelonSpace, linear_solve, matmul
from ..exactnum.scalars import euler_phi, zeta
from . import polys
from .algebra import restrict_scalars
from .centroid import centroid

ZERO = Fraction(0)
ONE = Fraction(1)
DEFAULT_SEED = 20240601
EXACT_ENVELOPE_MAX_DIM = 12


@dataclass
class Simple:
    certificate: str

    kind = "Simple"


@dataclass
class NotSimple:
    witness: list
    reason: str

    kind = "NotSimple"


@dataclass
class Unknown:
    diagnostics: dict = field(default_factory=dict)

    kind = "Unknown"


# -- graded ideals -------------------------------------------------------------------

def graded_ideal_closure(A, seeds):
    """Smallest graded ideal containing ``seeds``; a homogeneous, reduced basis."""
    comps = A.components
    spaces = {g: EchelonSpace(len(idx)) for g, idx in comps.items()}
    queue = []

    def push(g, vec):
        coords = [vec[i] for i in comps[g]]
        if spaces[g].add(coords):
            queue.append((g, vec))

    for s in seeds:
        for g, idx in comps.items():
            if any(s[i] != 0 for i in idx):
                v = [ZERO] * A.dim
                for i in idx:
                    v[i] = s[i]
                push(g, v)
    while queue:
        g, v = queue.pop()
        for j in range(A.dim):
            ej = A.basis_vector(j)
            for prod in (A.multiply(v, ej), A.multiply(ej, v)):
                if any(x != 0 for x in prod):
                    push(A.group.add(g, A.degrees[j]), prod)
    basis = []
    for g, idx in comps.items():
        for row in spaces[g].basis():
            v = [ZERO] * A.dim
            for i, c in zip(idx, row):
                v[i] = c
            basis.append(v)
    return basis


def verify_ideal_witness(A, W):
    """Witness is proper, nonzero, homogeneous and closed under multiplication."""
    if not W or len(W) >= A.dim:
        return False
    space = EchelonSpace(A.dim)
    for w in W:
        degs = {A.degrees[i] for i, x in enumerate(w) if x != 0}
        if len(degs) != 1:
            return False
        space.add(w)
    if len(space) != len(W) or len(space) >= A.dim:
        return False
    for w in W:
        for j in range(A.dim):
            ej = A.basis_vector(j)
            if not space.contains(A.multiply(w, ej)) or not space.contains(A.multiply(ej, w)):
                return False
    return True


def square_span(A):
    space = EchelonSpace(A.dim)
    for terms in A.products.values():
        v = [ZERO] * A.dim
        for k, c in terms.items():
            v[k] = c
        space.add(v)
    return space


def is_graded_division_shortcut(A):
    """Every component at most 1-dimensional and every basis product nonzero."""
    if any(len(idx) > 1 for idx in A.components.values()):
        return False
    n = A.dim
    return all(len(A.product(i, j)) == 1 for i in range(n) for j in range(n))


# -- modular envelope rank --------------------------------------------------------------

MOD_PRIME = 33554393  # prime below 2^25, so sums of products fit in int64


def _mod_matrix(M, p):
    out = np.zeros((len(M), len(M)), dtype=np.int64)
    for k, row in enumerate(M):
        for l, x in enumerate(row):
            if x != 0:
                x = Fraction(x)
                if x.denominator % p == 0:
                    raise ZeroDivisionError
                out[k, l] = x.numerator * pow(x.denominator, -1, p) % p
    return out


class _ModSpan:
    def __init__(self, size, p):
        self.p = p
        self.rows = np.zeros((0, size), dtype=np.int64)
        self.pivots = []

    def add(self, v):
        p = self.p
        v = v % p
        if self.pivots:
            coef = v[self.pivots]
            # chunked to keep intermediate products below 2^63
            for start in range(0, len(self.pivots), 8):
                sl = slice(start, start + 8)
                v = (v - (coef[sl, None] * self.rows[sl]).sum(axis=0)) % p
        nz = np.flatnonzero(v)
        if not len(nz):
            return False
        piv = int(nz[0])
        v = v * pow(int(v[piv]), -1, p) % p
        if len(self.rows):
            col = self.rows[:, piv].copy()
            self.rows = (self.rows - col[:, None] * v[None, :]) % p
        self.rows = np.vstack([self.rows, v])
        self.pivots.append(piv)
        return True

    def __len__(self):
        return len(self.pivots)


def envelope_rank_mod_p(gens, n, target, p=MOD_PRIME):
    """Dimension of the algebra generated by ``gens`` over F_p (lower bound over Q)."""
    G = [_mod_matrix(M, p) for M in gens]
    span = _ModSpan(n * n, p)
    ident = np.eye(n, dtype=np.int64)
    span.add(ident.reshape(-1))
    frontier = [ident]
    while frontier and len(span) < target:
        nxt = []
        for W in frontier:
            for X in G:
                Y = (X @ W) % p
                if span.add(Y.reshape(-1)):
                    nxt.append(Y)
                    if len(span) >= target:
                        return len(span)
        frontier = nxt
    return len(span)


def envelope_exact(gens, n, limit=None):
    """Basis of the algebra generated by ``gens`` over Q (flattened matrices)."""
    space = EchelonSpace(n * n)
    ident = [[ONE if k == l else ZERO for l in range(n)] for k in range(n)]
    space.add([x for row in ident for x in row])
    words = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for W in frontier:
            for X in gens:
                Y = matmul(X, W)
                if space.add([x for row in Y for x in row]):
                    nxt.append(Y)
                    words.append(Y)
                    if limit is not None and len(words) > limit:
                        return words
        frontier = nxt
    return words


def trace_radical(words, n):
    """Basis of ``{x in E : tr(x y) = 0 for all y in E}`` (characteristic zero)."""
    m = len(words)
    gram = [[sum(words[a][k][l] * words[b][l][k] for k in range(n) for l in range(n)
                 if words[a][k][l] != 0) for b in range(m)] for a in range(m)]
    sol = linear_solve(gram, [ZERO] * m)
    out = []
    for vec in sol.kernel:
        M = [[sum((vec[a] * words[a][k][l] for a in range(m) if vec[a] != 0), ZERO)
              for l in range(n)] for k in range(n)]
        out.append(M)
    return out


def _image_basis(A, mats):
    space = EchelonSpace(A.dim)
    for M in mats:
        for l in range(A.dim):
            space.add([M[k][l] for k in range(A.dim)])
    return space.basis()


def _homogeneous_split(A, vectors):
    """Split vectors into degree components (image of a degree-0 map is graded)."""
    out = []
    for v in vectors:
        for g, idx in A.components.items():
            if any(v[i] != 0 for i in idx):
                w = [ZERO] * A.dim
                for i in idx:
                    w[i] = v[i]
                out.append(w)
    space = EchelonSpace(A.dim)
    kept = []
    for w in out:
        if space.add(w):
            kept.append(w)
    return kept


def _poly_at(f, M):
    n = len(M)
    R = [[ZERO] * n for _ in range(n)]
    P = [[ONE if k == l else ZERO for l in range(n)] for k in range(n)]
    for c in f:
        if c != 0:
            R = [[r + c * p for r, p in zip(rr, pp)] for rr, pp in zip(R, P)]
        P = matmul(P, M)
    return R


def minimal_polynomial(M, max_deg):
    """Monic minimal polynomial of a matrix via dependence of its powers."""
    n = len(M)
    space = EchelonSpace(n * n)
    powers = []
    P = [[ONE if k == l else ZERO for l in range(n)] for k in range(n)]
    for d in range(max_deg + 1):
        flat = [x for row in P for x in row]
        if not space.add(flat):
            cols = [[pw[t] for pw in powers] for t in range(n * n)]
            sol = linear_solve(cols, flat)
            return [-c for c in sol.particular] + [ONE]
        powers.append(flat)
        P = matmul(P, M)
    flat = [x for row in P for x in row]
    cols = [[pw[t] for pw in powers] for t in range(n * n)]
    sol = linear_solve(cols, flat)
    return [-c for c in sol.particular] + [ONE]


def _field_check(A, D, rng, tries=6):
    """Decide whether the commutative algebra ``D`` (matrices) is a field.

    Returns ``("field", None)``, ``("witness", ideal_basis)`` or
    ``("unknown", note)``.
    """
    m = len(D)
    if m == 1:
        return "field", None
    notes = []
    for _ in range(tries):
        coeffs = [rng.randint(-3, 3) for _ in range(m)]
        if not any(coeffs):
            continue
        d = [[sum((c * M[k][l] for c, M in zip(coeffs, D) if c), ZERO) for l in range(A.dim)]
             for k in range(A.dim)]
        f = minimal_polynomial(d, m)
        kind, data = polys.split(f)
        if kind == "irreducible":
            if polys.deg(f) == m:
                return "field", f
            notes.append(f"irreducible of degree {polys.deg(f)} < {m}")
            continue
        if kind == "nilpotent":
            z = _poly_at(data, d)
            return "witness", _homogeneous_split(A, _image_basis(A, [z]))
        if kind == "coprime":
            g, h = data
            _, a, _ = polys.ext_gcd(g, h)
            e = _poly_at(polys.mul(a, g), d)
            return "witness", _homogeneous_split(A, _image_basis(A, [e]))
        notes.append("minimal polynomial could not be split or certified")
    return "unknown", "; ".join(notes)


def _generators(A):
    gens = [A.left_matrix(i) for i in range(A.dim)] + [A.right_matrix(i) for i in range(A.dim)]
    comps = A.components
    if len(comps) > 1:
        gens += [A.projection_matrix(g) for g in comps]
    return [M for M in gens if any(x != 0 for row in M for x in row)]


def graded_simplicity(A, seed=DEFAULT_SEED, samples=8):
    n = A.dim
    if n == 0:
        return NotSimple([], "zero algebra")
    # stage 0
    sq = square_span(A)
    if len(sq) < n:
        return NotSimple(_homogeneous_split(A, sq.basis()), "A^2 is a proper subspace")
    # stage 1
    if is_graded_division_shortcut(A):
        return Simple("graded-division: 1-dimensional components, nonzero basis products")
    rng = random.Random(seed)
    # stage 2
    for i in range(n):
        W = graded_ideal_closure(A, [A.basis_vector(i)])
        if len(W) < n:
            return NotSimple(W, f"ideal generated by basis element {i}")
    for _ in range(samples):
        for g, idx in A.components.items():
            if len(idx) < 2:
                continue
            v = [ZERO] * n
            for i in idx:
                v[i] = Fraction(rng.randint(-4, 4))
            if any(v):
                W = graded_ideal_closure(A, [v])
                if len(W) < n:
                    return NotSimple(W, "ideal generated by a sampled homogeneous element")
    if not A.is_rational():
        return _from_restriction(A, restrict_scalars(A), seed, samples)
    # stage 3
    C = centroid(A)
    D = C.components.get(A.group.zero, [])
    status, data = _field_check(A, D, rng)
    if status == "witness":
        if verify_ideal_witness(A, data):
            return NotSimple(data, "idempotent or nilpotent in the identity component of the centroid")
        return Unknown({"stage": 3, "note": "centroid element gave no valid witness"})
    gens = _generators(A)
    target = n * n // len(D) if D else n * n
    if status == "field":
        try:
            r = envelope_rank_mod_p(gens, n, target)
        except ZeroDivisionError:
            r = 0
        if r >= target:
            return Simple(f"C(A)_e is a field of dimension {len(D)} and the multiplication "
                          f"algebra has dimension {r} = n^2/{len(D)} (rank mod {MOD_PRIME})")
    # stage 4
    if n <= EXACT_ENVELOPE_MAX_DIM:
        words = envelope_exact(gens, n)
        rad = trace_radical(words, n)
        if rad:
            W = _homogeneous_split(A, _image_basis(A, rad))
            if verify_ideal_witness(A, W):
                return NotSimple(W, "radical of the multiplication algebra")
        elif status == "field" and len(words) * len(D) == n * n:
            return Simple("C(A)_e is a field and the exact multiplication algebra is End_D(A)")
    return Unknown({"stage": 4, "centroid_e_dim": len(D), "field_check": status,
                    "note": data if isinstance(data, str) else ""})


def _from_restriction(A, Aq, seed, samples):
    """Decide over Q and translate witnesses back to ``A``'s scalars."""
    verdict = graded_simplicity(Aq, seed=seed, samples=samples)
    if isinstance(verdict, Simple):
        return Simple("restriction of scalars to Q: " + verdict.certificate)
    if isinstance(verdict, Unknown):
        return verdict
    N = A.conductor()
    d = euler_phi(N)
    # candidate K-ideals: the K-span of the witness, then A W A
    lifted = []
    for w in verdict.witness:
        v = [ZERO] * A.dim
        for idx, c in enumerate(w):
            if c != 0:
                i, k = divmod(idx, d)
                v[i] = v[i] + c * zeta(N, k)
        lifted.append(v)
    W = graded_ideal_closure(A, lifted)
    if verify_ideal_witness(A, W):
        return NotSimple(W, "restriction of scalars: " + verdict.reason)
    AWA = []
    for w in lifted:
        for i in range(A.dim):
            left = A.multiply(A.basis_vector(i), w)
            for j in range(A.dim):
                AWA.append(A.multiply(left, A.basis_vector(j)))
    W = graded_ideal_closure(A, AWA)
    if verify_ideal_witness(A, W):
        return NotSimple(W, "restriction of scalars: " + verdict.reason)
    return Unknown({"stage": "restriction", "note": "could not lift the rational witness"})
