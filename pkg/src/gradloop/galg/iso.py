"""Graded isomorphism semi-decision: invariants first, then monomial maps.

Candidate maps send ``e_i`` to ``lambda_i f_{p(i)}`` for a degree-preserving
permutation ``p``.  For a fixed ``p`` the conditions
``lambda_i lambda_j / lambda_k = a_ij^k / b_{p(i) p(j)}^{p(k)}`` are linear in
exponent coordinates of a value group, so each permutation costs one
congruence solve.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..cohom import classes_equal
from ..errors import GradloopError
from ..exactnum.scalars import Cyclotomic
from ..exactnum.values import ValueGroup, factor_into_value_group
from ..snf import NoSolution, integer_affine_solve
from .algebra import GradedMorphism
from .centroid import centroid, centroid_as_twisted_group_algebra
from .simplicity import is_graded_division_shortcut, square_span

ZERO = Fraction(0)


@dataclass
class Iso:
    morphism: GradedMorphism
    kind = "Iso"


@dataclass
class NonIso:
    certificate: dict
    kind = "NonIso"


@dataclass
class IsoUnknown:
    diagnostics: dict
    kind = "Unknown"


def _root_torsion(*algebras):
    return lcm(2, *(A.conductor() for A in algebras))


def field_classes_differ(tA, tB, T):
    """Whether the centroid cocycles are provably non-cohomologous over the field.

    Sound when all values are rational (the field is Q and the value group
    is all of Q^x up to unused primes) or all values are roots of unity (then
    any root in the field is again a root of unity, inside ``mu_T``).
    """
    VA, VB = tA.coeffs, tB.coeffs
    V = VA.join(VB).extended(T)
    cyclo_free = any(isinstance(b, Cyclotomic) for b in V.free_basis)
    if cyclo_free:
        return None
    if T > 2 and V.free_basis:
        return None
    res = classes_equal(tA.coerce(V), tB.coerce(V))
    return None if res else res.index


def invariants_certificate(A, B):
    """A NonIso certificate from cheap invariants, or None."""
    if A.group != B.group:
        return {"reason": "different grading groups"}
    if A.component_dims() != B.component_dims():
        return {"reason": "component dimensions differ",
                "dims": [list(A.component_dims()), list(B.component_dims())]}
    sa, sb = len(square_span(A)), len(square_span(B))
    if sa != sb:
        return {"reason": "dim A^2 differs", "dims": [sa, sb]}
    da, db = is_graded_division_shortcut(A), is_graded_division_shortcut(B)
    if da != db:
        return {"reason": "graded-division status differs", "values": [da, db]}
    CA, CB = centroid(A), centroid(B)
    dA = {g: len(v) for g, v in CA.components.items()}
    dB = {g: len(v) for g, v in CB.components.items()}
    if dA != dB:
        return {"reason": "centroid component dimensions differ"}
    if CA.identity_dim == 1 and CB.identity_dim == 1:
        try:
            tA = centroid_as_twisted_group_algebra(A, CA)
            tB = centroid_as_twisted_group_algebra(B, CB)
        except GradloopError:
            return None
        idx = field_classes_differ(tA.tau_prime, tB.tau_prime, _root_torsion(A, B))
        if idx is not None:
            return {"reason": "centroid cocycle classes differ", "factor": idx}
    return None


def _permutations(A, B):
    """Degree-preserving bijections from the basis of A to that of B."""
    degs = list(A.components)
    comps = [A.components[g] for g in degs]
    targets = [B.components[g] for g in degs]
    for choice in itertools.product(*(itertools.permutations(idx) for idx in targets)):
        p = [0] * A.dim
        for idx, img in zip(comps, choice):
            for i, j in zip(idx, img):
                p[i] = j
        yield p


def _solve_diagonal(A, B, p, T):
    """Scalars ``lambda`` making ``e_i -> lambda_i f_p(i)`` multiplicative, or None."""
    n = A.dim
    rows, ratios = [], []
    for i in range(n):
        for j in range(n):
            pa = A.product(i, j)
            pb = B.product(p[i], p[j])
            if len(pa) != len(pb):
                return None
            for k, a in pa.items():
                b = pb.get(p[k])
                if b is None:
                    return None
                row = [0] * n
                row[i] += 1
                row[j] += 1
                row[k] -= 1
                rows.append(row)
                ratios.append(a / b)
    V = ValueGroup(T, ())
    for r in ratios:
        el = factor_into_value_group(r, V, auto_extend=True)
        V = el.group
    coords = [factor_into_value_group(r, V).coords for r in ratios]
    lam = [[0] * len(V.moduli) for _ in range(n)]
    if rows:
        for l, mu in enumerate(V.moduli):
            try:
                sol = integer_affine_solve(rows, [mu] * len(rows), [c[l] for c in coords])
            except NoSolution:
                return None
            for i in range(n):
                lam[i][l] = sol.x[i]
    return [V.embed(V.reduce(x)) for x in lam]


def graded_iso_search(A, B, budget=5000):
    cert = invariants_certificate(A, B)
    if cert is not None:
        return NonIso(cert)
    T = _root_torsion(A, B)
    complete = (all(len(idx) == 1 for idx in A.components.values())
                and A.is_rational() and B.is_rational())
    tried = 0
    for p in _permutations(A, B):
        if tried >= budget:
            return IsoUnknown({"reason": "budget exhausted", "tried": tried})
        tried += 1
        lam = _solve_diagonal(A, B, p, T)
        if lam is None:
            continue
        n = A.dim
        M = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            M[p[i]][i] = lam[i]
        phi = GradedMorphism(A, B, M)
        if phi.verify() and phi.invertible:
            return Iso(phi)
    if complete:
        return NonIso({"reason": "no diagonal solution for the unique degree-preserving basis map"})
    return IsoUnknown({"reason": "monomial search exhausted", "tried": tried})
