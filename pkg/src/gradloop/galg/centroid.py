"""Centroids of graded algebras and their twisted-group-algebra structure.

A centroid element ``c`` is stored as a dense matrix with ``C[k][l]`` the
``e_k`` coefficient of ``c(e_l)``.  The defining equations split exactly by
the shift degree ``deg k - deg l``, so each homogeneous component is solved
as its own sparse system.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..cohom import SymCocycle, class_invariants, standard_cocycle
from ..errors import CentroidNotGradedField, NotGradedCentral
from ..exactnum.linalg import EchelonSpace, matmul, nullspace_sparse, rank
from ..exactnum.scalars import inv
from ..exactnum.values import ValueGroup

ZERO = Fraction(0)
ONE = Fraction(1)


def _right_index(A):
    """``R[j][k]``: pairs ``(p, a)`` with ``e_p e_j`` having ``e_k`` coefficient ``a``."""
    n = A.dim
    R = [[[] for _ in range(n)] for _ in range(n)]
    L = [[[] for _ in range(n)] for _ in range(n)]
    for (p, j), terms in A.products.items():
        for k, a in terms.items():
            R[j][k].append((p, a))
            L[p][k].append((j, a))
    return L, R


def _equations(A, variables=None):
    """Yield sparse equations ``{(k, l): coeff}`` of the centroid system.

    With ``variables`` given (a set of pairs), only equations touching them
    are produced; by the degree analysis these involve no other variables.
    """
    n = A.dim
    G = A.group
    L, R = _right_index(A)
    deg = A.degrees
    for i in range(n):
        for j in range(n):
            prod = A.product(i, j)
            for k in range(n):
                if variables is not None:
                    shift = G.sub(deg[k], G.add(deg[i], deg[j]))
                    if shift not in variables:
                        continue
                base = {}
                for m, a in prod.items():
                    base[(k, m)] = base.get((k, m), ZERO) + a
                # c(e_i e_j) = c(e_i) e_j
                eq = dict(base)
                for p, a in R[j][k]:
                    eq[(p, i)] = eq.get((p, i), ZERO) - a
                if any(v != 0 for v in eq.values()):
                    yield eq
                # c(e_i e_j) = e_i c(e_j)
                eq = dict(base)
                for p, a in L[i][k]:
                    eq[(p, j)] = eq.get((p, j), ZERO) - a
                if any(v != 0 for v in eq.values()):
                    yield eq


@dataclass
class CentroidDescription:
    algebra: object
    basis: list           # all homogeneous basis matrices, grouped by degree
    components: dict      # degree -> list of matrices
    support: object       # Subgroup generated by the support (see support_is_subgroup)
    support_elements: tuple
    identity_dim: int

    @property
    def dim(self):
        return len(self.basis)

    def component_dims(self):
        return {g: len(v) for g, v in self.components.items()}

    def support_is_subgroup(self):
        return self.support.element_set == frozenset(self.support_elements)


def centroid(A):
    """Homogeneous basis of the centroid, one sparse solve per shift degree."""
    G = A.group
    n = A.dim
    comps = A.components
    by_shift = {}
    for k in range(n):
        for l in range(n):
            by_shift.setdefault(G.sub(A.degrees[k], A.degrees[l]), []).append((k, l))
    # bucket equations by shift in a single pass
    eqs = {g: [] for g in by_shift}
    for eq in _equations(A):
        (k, l) = next(iter(eq))
        eqs[G.sub(A.degrees[k], A.degrees[l])].append(eq)
    components = {}
    for g in G.elements:
        if g not in by_shift:
            continue
        variables = by_shift[g]
        pos = {v: t for t, v in enumerate(variables)}
        local = [{pos[v]: c for v, c in eq.items()} for eq in eqs[g]]
        kernel = nullspace_sparse(local, len(variables))
        mats = []
        for vec in kernel:
            M = [[ZERO] * n for _ in range(n)]
            for t, c in enumerate(vec):
                if c != 0:
                    k, l = variables[t]
                    M[k][l] = c
            mats.append(M)
        if mats:
            components[g] = mats
    support = tuple(components)
    H = G.subgroup(sorted(support))
    basis = [M for g in components for M in components[g]]
    e_dim = len(components.get(G.zero, []))
    del comps
    return CentroidDescription(A, basis, components, H, support, e_dim)


def centroid_full(A):
    """Unstructured solve of all ``n^2`` unknowns (reference for the block solve)."""
    n = A.dim
    kernel = nullspace_sparse(
        ({k * n + l: c for (k, l), c in eq.items()} for eq in _equations(A)), n * n)
    return [[[vec[k * n + l] for l in range(n)] for k in range(n)] for vec in kernel]


def in_centroid(A, M):
    """Check ``c(xy) = c(x)y = x c(y)`` on every basis pair."""
    n = A.dim
    cols = [[M[k][l] for k in range(n)] for l in range(n)]
    for i in range(n):
        for j in range(n):
            prod = A.multiply(A.basis_vector(i), A.basis_vector(j))
            c_xy = [sum((M[k][m] * prod[m] for m in range(n) if prod[m] != 0), ZERO)
                    for k in range(n)]
            if c_xy != A.multiply(cols[i], A.basis_vector(j)):
                return False
            if c_xy != A.multiply(A.basis_vector(i), cols[j]):
                return False
    return True


def is_graded_central(A_or_centroid):
    C = A_or_centroid if isinstance(A_or_centroid, CentroidDescription) else centroid(A_or_centroid)
    return C.identity_dim == 1


def _normalize(M):
    for row in M:
        for x in row:
            if x != 0:
                s = inv(x)
                return [[y * s if y != 0 else ZERO for y in r] for r in M]
    return M


def _scalar_of_identity(M):
    n = len(M)
    lam = M[0][0] if n else ONE
    for k in range(n):
        for l in range(n):
            if M[k][l] != (lam if k == l else ZERO):
                return None
    return lam


def _identity(n):
    return [[ONE if k == l else ZERO for l in range(n)] for k in range(n)]


def matpow(M, e):
    n = len(M)
    R = _identity(n)
    for _ in range(e):
        R = matmul(R, M)
    return R


@dataclass
class CentroidTGA:
    """``C(A)`` as the twisted group algebra ``F^tau' H``."""

    H: object               # Subgroup of A.group
    tau_prime: SymCocycle   # on H.abstract
    elements: dict          # element of G in H -> matrix c_h
    lambdas: tuple          # c_{h_i}^{n_i} = lambda_i id for the canonical generators
    centroid: CentroidDescription


def centroid_as_twisted_group_algebra(A, C=None):
    C = centroid(A) if C is None else C
    if C.identity_dim != 1:
        raise NotGradedCentral(f"identity component of the centroid has dimension {C.identity_dim}")
    G = A.group
    if not C.support_is_subgroup():
        raise CentroidNotGradedField("centroid support is not a subgroup")
    for g, mats in C.components.items():
        if len(mats) != 1:
            raise CentroidNotGradedField(f"centroid component {g} has dimension {len(mats)}", g)
    H = C.support
    n = A.dim
    gens = []
    lambdas = []
    for gen, order in H.decomposition:
        c = _normalize(C.components[gen][0])
        if rank(c) != n:
            raise CentroidNotGradedField(f"centroid element of degree {gen} is not invertible", gen)
        lam = _scalar_of_identity(matpow(c, order))
        if lam is None or lam == 0:
            raise CentroidNotGradedField(f"power of the degree-{gen} element is not a scalar", gen)
        gens.append(c)
        lambdas.append(lam)
    V = ValueGroup.covering(lambdas)
    tau = standard_cocycle(H.abstract, lambdas, V)
    Aab = H.abstract
    elements = {}
    for k in Aab.elements:
        M = _identity(n)
        for c, e in zip(gens, k):
            for _ in range(e):
                M = matmul(M, c)
        elements[H.embed(k)] = M
    # the products of the c_h reproduce tau' and the c_h commute
    for k1 in Aab.elements:
        h1 = H.embed(k1)
        for k2 in Aab.elements:
            h2 = H.embed(k2)
            lhs = matmul(elements[h1], elements[h2])
            if lhs != matmul(elements[h2], elements[h1]):
                raise CentroidNotGradedField("homogeneous centroid elements do not commute", (h1, h2))
            s = tau.value(k1, k2)
            rhs = [[s * x for x in row] for row in elements[G.add(h1, h2)]]
            if lhs != rhs:
                raise CentroidNotGradedField("centroid products do not match the cocycle", (h1, h2))
    return CentroidTGA(H, tau, elements, tuple(lambdas), C)


def centroid_class(A, C=None):
    return class_invariants(centroid_as_twisted_group_algebra(A, C).tau_prime)


def centroid_twist_map(A, M, h, tau):
    """``c^tau(x) = tau(h, g) c(x)`` for ``x`` of degree ``g``."""
    n = A.dim
    out = [[ZERO] * n for _ in range(n)]
    for l in range(n):
        s = tau.value(h, A.degrees[l])
        for k in range(n):
            if M[k][l] != 0:
                out[k][l] = s * M[k][l]
    return out


def span_contains(mats, M):
    space = EchelonSpace(len(M) * len(M))
    for X in mats:
        space.add([x for row in X for x in row])
    return space.contains([x for row in M for x in row])
