from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from gradloop.cohom import OneCochain, SymCocycle, coboundary, class_invariants, standard_cocycle
from gradloop.errors import (CentroidNotGradedField, CocycleIdentityViolation, DimensionExceeded,
                             GradingViolation)
from gradloop.exactnum.linalg import EchelonSpace, matmul
from gradloop.exactnum.scalars import zeta
from gradloop.galg import (GradedAlgebra, Iso, NonIso, NotSimple, Simple, algebra,
                           centroid, centroid_as_twisted_group_algebra, centroid_full,
                           centroid_twist_map, diagonal_iso_check, graded_ideal_closure,
                           graded_iso_search, graded_simplicity, group_algebra, in_centroid,
                           is_graded_central, matrix_algebra, regrade, restrict_scalars, twist,
                           twisted_group_algebra, validate_algebra, verify_ideal_witness)
from gradloop.galg.algebra import quaternion_table

import props
from builders import (C1, C2, C2C2, C4, V2, group, m2, quaternions, random_algebra, seeded,
                      sign_model, sl2, suite_algebras, unital)

ONE, MINUS = F(1), F(-1)


def span(vectors):
    S = EchelonSpace(len(vectors[0]) if vectors else 0)
    for v in vectors:
        S.add(v)
    return S


def flat(M):
    return [x for row in M for x in row]


# -- construction ----------------------------------------------------------------------

def test_validate_algebra_examples():
    doc = {"group": {"invariant_factors": []}, "degrees": [[]],
           "products": [{"i": 0, "j": 0, "terms": [{"k": 0, "c": "1"}]}]}
    assert validate_algebra(doc).dim == 1
    model = {"group": {"invariant_factors": [2]}, "degrees": [[0], [1]],
             "products": [{"i": 0, "j": 0, "terms": [{"k": 0, "c": "1"}]},
                          {"i": 0, "j": 1, "terms": [{"k": 1, "c": "1"}]},
                          {"i": 1, "j": 0, "terms": [{"k": 1, "c": "1"}]},
                          {"i": 1, "j": 1, "terms": [{"k": 0, "c": "-1"}]}]}
    A = validate_algebra(model)
    assert A == sign_model()
    model["products"][3]["terms"] = [{"k": 1, "c": "1"}]
    with pytest.raises(GradingViolation) as exc:
        validate_algebra(model)
    assert exc.value.location == (1, 1, 1)


def test_document_roundtrip_and_cap():
    for _, A in suite_algebras():
        assert validate_algebra(A.to_doc()) == A
    with pytest.raises(DimensionExceeded):
        group_algebra(group(2, 2, 2, 2, 2, 2, 2))  # 128 > 64


def test_twist_examples():
    A = sign_model()
    assert twist(A, SymCocycle.trivial(C2)) == A
    tau = standard_cocycle(C2, [MINUS])
    B = twist(A, tau)
    assert B.product(1, 1) == {0: ONE} and B == group_algebra(C2)
    assert twist(group_algebra(C2), tau).product(1, 1) == {0: MINUS}


def test_twisted_group_algebra_examples():
    assert twisted_group_algebra(C2, [[1, 1], [1, 1]]) == group_algebra(C2)
    assert twisted_group_algebra(C2, [[1, 1], [1, -1]]) == sign_model()
    Q = quaternions()
    a, b = C2C2.index((1, 0)), C2C2.index((0, 1))
    ab = C2C2.index((1, 1))
    assert Q.product(a, a) == {0: MINUS} and Q.product(b, b) == {0: MINUS}
    assert Q.product(a, b) == {ab: -Q.product(b, a)[ab]}
    with pytest.raises(CocycleIdentityViolation):
        twisted_group_algebra(C4, [[1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 2, 1], [1, 1, 1, 1]])


def test_restrict_scalars_examples():
    A = sign_model()
    assert restrict_scalars(A) == A
    # the 1-dimensional unital algebra over Q(zeta_4) becomes the Q(i)-model
    R = restrict_scalars(unital(C1), 4)
    assert R.dim == 2
    assert isinstance(graded_iso_search(R, regrade(sign_model(), C1, [(), ()])), Iso)
    R8 = restrict_scalars(matrix_algebra(C1, [(), ()]), 4)
    assert R8.dim == 8 and centroid(R8).dim == 2
    # genuinely cyclotomic structure constants: u*u = zeta_4 e over Q(zeta_4)
    K = algebra(C2, [(0,), (1,)], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: zeta(4)}})
    RK = restrict_scalars(K)
    assert RK.dim == 4 and RK.is_rational()


# -- centroid --------------------------------------------------------------------------

def test_centroid_examples():
    Z = GradedAlgebra(C1, [(), ()], {})
    assert centroid(Z).dim == 4
    assert centroid(matrix_algebra(C1, [(), ()])).dim == 1
    C = centroid(sign_model())
    assert C.dim == 2 and set(C.components) == {(0,), (1,)}
    assert C.support.element_set == C2.whole().element_set
    (Ce,), (Ch,) = C.components[(0,)], C.components[(1,)]
    assert span([flat(Ce)]).contains(flat([[ONE, 0], [0, ONE]]))
    L_u = sign_model().left_matrix(1)
    assert span([flat(Ch)]).contains(flat(L_u))


def test_is_graded_central_examples():
    assert is_graded_central(sign_model())
    assert not is_graded_central(regrade(sign_model(), C1, [(), ()]))
    for rows in ([(0,), (0,)], [(0,), (1,)], [(0,), (1,), (1,)]):
        assert is_graded_central(matrix_algebra(C2, rows))


@pytest.mark.parametrize("name,A", suite_algebras(), ids=[n for n, _ in suite_algebras()])
def test_centroid_block_solve_matches_full_solve(name, A):
    C = centroid(A)
    full = centroid_full(A)
    assert C.dim == len(full)
    S = span([flat(M) for M in full])
    for M in C.basis:
        assert in_centroid(A, M) and S.contains(flat(M))


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_centroid_soundness_on_random_algebras(seed):
    rng = seeded(seed)
    A = random_algebra(rng.choice(props.GROUPS), rng.randint(1, 5), rng)
    C = centroid(A)
    full = centroid_full(A)
    assert C.dim == len(full)
    for g, mats in C.components.items():
        for M in mats:
            assert in_centroid(A, M)
            # homogeneous of degree g: maps A_x into A_{x+g}
            for k in range(A.dim):
                for l in range(A.dim):
                    if M[k][l] != 0:
                        assert A.degrees[k] == A.group.add(A.degrees[l], g)


def test_centroid_as_twisted_group_algebra_examples():
    t = centroid_as_twisted_group_algebra(quaternions())
    assert t.H.order == 1 and t.tau_prime.is_trivial()
    t = centroid_as_twisted_group_algebra(sign_model())
    assert t.H.order == 2
    assert t.tau_prime.value((1,), (1,)) == -1
    assert t.elements[(0,)] == [[1, 0], [0, 1]]
    with pytest.raises(CentroidNotGradedField):
        # dual numbers Q[u]/(u^2), deg u = h: multiplication by u is central but not invertible
        centroid_as_twisted_group_algebra(algebra(C2, [(0,), (1,)], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}))


def test_centroid_twist_map_examples():
    A = sign_model()
    tau = standard_cocycle(C2, [MINUS])
    C = centroid(A)
    (Ce,) = C.components[(0,)]
    assert centroid_twist_map(A, Ce, (0,), tau) == Ce
    assert centroid_twist_map(A, Ce, (0,), SymCocycle.trivial(C2)) == Ce
    c = A.left_matrix(1)
    ct = centroid_twist_map(A, c, (1,), tau)
    assert matmul(ct, ct) == [[1, 0], [0, 1]]
    assert in_centroid(twist(A, tau), ct)


# -- ideals and simplicity --------------------------------------------------------------

def test_graded_ideal_closure_examples():
    A = group_algebra(C2)
    assert graded_ideal_closure(A, [[0, 0]]) == []
    T = regrade(A, C1, [(), ()])
    W = graded_ideal_closure(T, [[ONE, ONE]])
    assert len(W) == 1 and span(W).contains([ONE, ONE])
    assert len(graded_ideal_closure(A, [[0, ONE]])) == 2


def test_graded_simplicity_examples():
    assert isinstance(graded_simplicity(group_algebra(C2)), Simple)
    v = graded_simplicity(regrade(group_algebra(C2), C1, [(), ()]))
    assert isinstance(v, NotSimple) and verify_ideal_witness(regrade(group_algebra(C2), C1, [(), ()]), v.witness)
    assert span(v.witness).contains([ONE, ONE]) or span(v.witness).contains([ONE, MINUS])
    assert isinstance(graded_simplicity(quaternions()), Simple)


@pytest.mark.parametrize("name,A", suite_algebras(), ids=[n for n, _ in suite_algebras()])
def test_suite_algebras_are_graded_central_simple(name, A):
    assert isinstance(graded_simplicity(A), Simple)
    assert is_graded_central(A)


def test_not_simple_verdicts():
    # zero product: A^2 = 0
    Z = GradedAlgebra(C2, [(0,), (1,)], {})
    assert isinstance(graded_simplicity(Z), NotSimple)
    # direct sum of two copies of M2
    M = matrix_algebra(C1, [(), ()])
    prods = dict(M.products)
    prods.update({(i + 4, j + 4): {k + 4: c for k, c in t.items()} for (i, j), t in M.products.items()})
    S = GradedAlgebra(C1, [()] * 8, prods)
    v = graded_simplicity(S)
    assert isinstance(v, NotSimple) and verify_ideal_witness(S, v.witness)
    # upper triangular 2x2 matrices: radical span{E12}
    U = algebra(C1, [(), (), ()], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}})
    v = graded_simplicity(U)
    assert isinstance(v, NotSimple) and verify_ideal_witness(U, v.witness)


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_not_simple_witnesses_reverify(seed):
    rng = seeded(seed)
    A = random_algebra(rng.choice(props.GROUPS), rng.randint(2, 5), rng)
    v = graded_simplicity(A)
    if isinstance(v, NotSimple) and v.witness:
        assert verify_ideal_witness(A, v.witness)


# -- isomorphism ----------------------------------------------------------------------

def test_diagonal_iso_check_examples():
    A = group_algebra(C2)
    phi = diagonal_iso_check(A, A, OneCochain.trivial(C2, V2))
    assert phi and phi.matrix == [[1, 0], [0, 1]]
    gamma = OneCochain.from_values(C2, V2, [1, 2])
    assert diagonal_iso_check(twist(A, coboundary(gamma)), A, gamma)
    for q in (1, 2, -1, F(1, 3)):
        g = OneCochain.from_values(C2, V2.extended(1, [3]), [1, q])
        assert not diagonal_iso_check(sign_model(), A, g)


def test_graded_iso_search_examples():
    A = group_algebra(C2)
    assert isinstance(graded_iso_search(A, A), Iso)
    d = twist(A, coboundary(OneCochain.from_values(C2, V2, [1, -2])))
    res = graded_iso_search(A, d)
    assert isinstance(res, Iso) and res.morphism.verify()
    assert isinstance(graded_iso_search(sign_model(), A), NonIso)


def test_graded_iso_search_certificates():
    assert isinstance(graded_iso_search(group_algebra(C2), group_algebra(C4)), NonIso)
    assert isinstance(graded_iso_search(m2(C2), matrix_algebra(C2, [(0,), (0,)])), NonIso)
    # twisted group algebras are isomorphic exactly when their classes agree
    cases = [(F(4), F(1), True), (F(-1), F(1), False), (F(2), F(8), True), (F(2), F(3), False),
             (F(-4), F(-1), True)]
    for a, b, same in cases:
        ta, tb = standard_cocycle(C2, [a]), standard_cocycle(C2, [b])
        res = graded_iso_search(twisted_group_algebra(C2, ta), twisted_group_algebra(C2, tb))
        assert isinstance(res, Iso if same else NonIso), (a, b)


# -- twist properties ------------------------------------------------------------------

@given(st.integers(0, 10 ** 6), st.integers(0, 40))
def test_twist_properties(seed, k):
    rng = seeded(seed)
    A = props.seeded_instance(k, rng)
    for check in props.SUITE_CHECKS:
        check(A, rng)


@pytest.mark.parametrize("name,A", suite_algebras(), ids=[n for n, _ in suite_algebras()])
def test_centroid_twist_identity(name, A):
    rng = seeded(len(name))
    for _ in range(3):
        props.check_centroid_twist(A, rng)


def test_identity_predicates():
    assert props.associator_zero(m2(C2)) and not props.commutative(m2(C2))
    assert props.commutative(group_algebra(C2C2))
    assert props.lie(sl2()) and not props.associator_zero(sl2())


@pytest.mark.parametrize("name,A", suite_algebras(), ids=[n for n, _ in suite_algebras()])
def test_twist_keeps_simple(name, A):
    rng = seeded(3)
    tau = props.random_cocycle(A.group, V2, rng)
    assert isinstance(graded_simplicity(twist(A, tau)), Simple)


def test_quaternion_class_is_recorded():
    G, table = quaternion_table()
    Q = twisted_group_algebra(G, table)
    assert centroid(Q).dim == 1
    assert class_invariants(standard_cocycle(C2, [MINUS])).invariant_scalars() == [-1]
