"""Worked examples run by ``gradloop demo --paper-examples``.

Each function returns ``(name, ok, details)`` where ``details`` is a
document-ready dict.
"""
from __future__ import annotations

from fractions import Fraction

from .abgroup import FiniteAbelianGroup
from .cohom import (character_from_real_cocycle, class_invariants, classes_equal, restrict,
                    standard_cocycle)
from .exactnum.scalars import format_scalar
from .galg.algebra import (group_algebra, matrix_algebra, quaternion_table, twist,
                           twisted_group_algebra)
from .galg.centroid import centroid, centroid_as_twisted_group_algebra, is_graded_central
from .galg.iso import Iso, graded_iso_search
from .galg.simplicity import Simple, graded_simplicity
from .loop import canonical_quotient, twisted_loop

MINUS_ONE = Fraction(-1)
HALF = Fraction(1, 2)


def sign_twist_of_complex_model():
    """``e, u`` with ``u^2 = -e`` twisted by ``tau(h, h) = -1`` becomes ``QC2``."""
    C2 = FiniteAbelianGroup((2,))
    tau = standard_cocycle(C2, [MINUS_ONE])
    model = twisted_group_algebra(C2, tau)
    B = twist(model, tau)
    uu = B.product(1, 1)
    res = graded_iso_search(B, group_algebra(C2))
    # (e + u)/2 and (e - u)/2 are orthogonal idempotents
    p, q = [HALF, HALF], [HALF, -HALF]
    idem = (B.multiply(p, p) == p and B.multiply(q, q) == q
            and B.multiply(p, q) == [0, 0] and B.multiply(q, p) == [0, 0])
    ok = uu == {0: Fraction(1)} and isinstance(res, Iso) and idem
    return "complex model twisted by a sign is QC2", ok, {
        "u*u": {str(k): format_scalar(c) for k, c in uu.items()},
        "iso": res.kind, "orthogonal_idempotents": idem}


def quaternions():
    G, table = quaternion_table()
    Q = twisted_group_algebra(G, table)
    C = centroid(Q)
    verdict = graded_simplicity(Q)
    C2 = FiniteAbelianGroup((2,))
    a = twisted_group_algebra(C2, standard_cocycle(C2, [Fraction(4)]))
    b = twisted_group_algebra(C2, standard_cocycle(C2, [Fraction(1)]))
    c = twisted_group_algebra(C2, standard_cocycle(C2, [MINUS_ONE]))
    same, diff = graded_iso_search(a, b), graded_iso_search(c, b)
    ok = (C.dim == 1 and is_graded_central(C) and isinstance(verdict, Simple)
          and same.kind == "Iso" and diff.kind == "NonIso")
    return "quaternion twisted group algebra", ok, {
        "centroid_dim": C.dim, "simplicity": verdict.kind,
        "equal_classes": same.kind, "classes_-1_vs_1": diff.kind}


def twisted_loop_centroid():
    C4 = FiniteAbelianGroup((4,))
    H, Q, pi = canonical_quotient(C4.subgroup([(2,)]))
    tau = standard_cocycle(C4, [MINUS_ONE])
    L = twisted_loop(matrix_algebra(Q, [(0,), (1,)]), pi, tau)
    tga = centroid_as_twisted_group_algebra(L)
    inv = class_invariants(tga.tau_prime)
    same = bool(classes_equal(tga.tau_prime, restrict(tau, tga.H)))
    ok = tga.H.element_set == H.element_set and same and not inv.is_trivial()
    return "centroid of a twisted loop algebra", ok, {
        "support": [list(h) for h in sorted(tga.H.element_set)],
        "class_invariants": [format_scalar(tga.tau_prime.coeffs.embed(x)) for x in inv.invariants],
        "matches_restriction": same}


def real_character():
    C4 = FiniteAbelianGroup((4,))
    tau = standard_cocycle(C4, [MINUS_ONE])
    rc = character_from_real_cocycle(tau)
    V = rc.chi.codomain
    return "square roots of a sign cocycle", bool(rc.certificate), {
        "chi": [format_scalar(V.embed(rc.chi(g))) for g in C4.elements],
        "z": [format_scalar(V.embed(rc.gamma(g))) for g in C4.elements]}


EXAMPLES = (sign_twist_of_complex_model, quaternions, twisted_loop_centroid, real_character)


def run_examples():
    return [f() for f in EXAMPLES]
