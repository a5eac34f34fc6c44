import itertools
from fractions import Fraction as F

import pytest

from gradloop.abgroup import GroupHom, hom_group, section
from gradloop.cohom import (SymCocycle, class_invariants, classes_equal, inflate, restrict,
                            section_cocycle, standard_cocycle)
from gradloop.errors import (CentroidNotSplit, ClassMismatch, NotGradedCentral, NotGradedSimple,
                             SimplicityUnknown)
from gradloop.exactnum.values import ValueGroup
from gradloop.galg import (Iso, Unknown, centroid, centroid_as_twisted_group_algebra,
                           graded_iso_search, group_algebra, matrix_algebra, regrade, twist)
from gradloop.loop import (Equivalent, NotEquivalent, build_equivalence_iso, canonical_centroid_check,
                           canonical_quotient, central_image, chi_twist, classify, equivalence_check,
                           loop_algebra, make_triple, split_centroid_basis, tensor_model,
                           twisted_loop)

from builders import (C1, C2, C2C2, C4, V2, m2, quaternions, quotient_of, roundtrip_cases,
                      sign_model, unital)

MINUS = F(-1)
SIGNS = ValueGroup.sign_group()


def c4_setup():
    return quotient_of(C4, [(2,)])


# -- loop algebras ---------------------------------------------------------------------

def test_loop_algebra_examples():
    H, Q, pi = quotient_of(C2, [])
    A = sign_model()
    L = loop_algebra(A, pi)
    assert L.dim == A.dim and L.degrees == A.degrees
    assert isinstance(graded_iso_search(L, A), Iso)
    H, Q, pi = quotient_of(C2C2, [(1, 0), (0, 1)])
    L = loop_algebra(unital(Q), pi)
    assert L.dim == 4 and L == group_algebra(C2C2)
    H, Q, pi = c4_setup()
    L = loop_algebra(group_algebra(Q), pi)
    assert L.dim == 4 and sorted(L.degrees) == sorted(C4.elements)


def test_twisted_loop_examples():
    H, Q, pi = c4_setup()
    A = m2(Q)
    assert twisted_loop(A, pi, SymCocycle.trivial(C4)) == loop_algebra(A, pi)
    H, Q, pi = quotient_of(C2, [(1,)])
    L = twisted_loop(unital(Q), pi, standard_cocycle(C2, [MINUS]))
    assert L == sign_model()
    H, Q, pi = c4_setup()
    L = twisted_loop(group_algebra(Q), pi, standard_cocycle(C4, [MINUS]))
    assert L.dim == 4


@pytest.mark.parametrize("case", roundtrip_cases(), ids=lambda c: c[0])
def test_tensor_model_equals_twisted_loop(case):
    name, G, H, A, tau = case
    H, Q, pi = canonical_quotient(H)
    assert tensor_model(A, pi, tau) == twisted_loop(A, pi, tau)


def test_chi_twist_examples():
    H, Q, pi = c4_setup()
    sigma = section_cocycle(pi, section(pi))
    A = group_algebra(Q)
    triv = GroupHom(H.abstract, SIGNS, ((0,),))
    assert chi_twist(A, triv, sigma) == A
    sign = GroupHom(H.abstract, SIGNS, ((1,),))
    assert chi_twist(A, sign, sigma).product(1, 1) == {0: MINUS}
    outs = [chi_twist(A, chi, sigma) for chi in hom_group(H.abstract, SIGNS)]
    assert len(outs) == 2 and outs[0] != outs[1]


# -- centroid of loops ----------------------------------------------------------------

def test_canonical_centroid_check_m2():
    H, Q, pi = c4_setup()
    L = loop_algebra(m2(Q), pi)
    rep = canonical_centroid_check(L, H)
    assert rep.ok and rep.centroid_dim == 2
    n = L.dim
    assert rep.maps[(0,)] == [[int(k == l) for l in range(n)] for k in range(n)]
    tga = centroid_as_twisted_group_algebra(L)
    assert class_invariants(tga.tau_prime).is_trivial()


def test_canonical_centroid_check_twisted():
    H, Q, pi = c4_setup()
    tau = standard_cocycle(C4, [MINUS])
    L = twisted_loop(m2(Q), pi, tau)
    rep = canonical_centroid_check(L, H)
    assert rep.ok
    from gradloop.exactnum.linalg import matmul
    c = rep.maps[(2,)]
    n = L.dim
    assert matmul(c, c) == [[-int(k == l) for l in range(n)] for k in range(n)]
    tga = centroid_as_twisted_group_algebra(L)
    assert class_invariants(tga.tau_prime).invariant_scalars() == [-1]


def test_canonical_centroid_check_commutative_base():
    """QC2 has a 2-dimensional centroid, so the shift maps are central but do not span."""
    H, Q, pi = c4_setup()
    rep = canonical_centroid_check(loop_algebra(group_algebra(Q), pi), H)
    assert rep.all_central and not rep.spans and rep.centroid_dim == 4


@pytest.mark.parametrize("case", roundtrip_cases(), ids=lambda c: c[0])
def test_centroid_of_twisted_loops(case):
    name, G, H, A, tau = case
    H, Q, pi = canonical_quotient(H)
    L = twisted_loop(A, pi, tau)
    tga = centroid_as_twisted_group_algebra(L)
    assert tga.H.element_set == H.element_set
    assert all(len(m) == 1 for m in tga.centroid.components.values())
    assert classes_equal(tga.tau_prime, restrict(tau, H))


# -- central image ------------------------------------------------------------------------

def _split(B):
    return split_centroid_basis(centroid_as_twisted_group_algebra(B))


def test_central_image_examples():
    Qm = quaternions()
    ci = central_image(Qm, C2C2.trivial(), _split(Qm))
    assert ci.algebra.dim == 4
    ci = central_image(group_algebra(C4), C4.whole(), _split(group_algebra(C4)))
    assert ci.algebra.dim == 1 and ci.algebra.product(0, 0) == {0: 1}
    H, Q, pi = c4_setup()
    A0 = m2(Q)
    L = loop_algebra(A0, pi)
    ci = central_image(L, H, _split(L))
    assert ci.algebra.dim * H.order == L.dim
    assert isinstance(graded_iso_search(ci.algebra, A0), Iso)


def test_central_image_rejects_nonsplit():
    tga = centroid_as_twisted_group_algebra(sign_model())
    with pytest.raises(CentroidNotSplit):
        split_centroid_basis(tga)


def test_two_character_choices_are_equivalent():
    """A central image taken with a nontrivial character is a chi-twist of the default one."""
    H, Q, pi = c4_setup()
    L = loop_algebra(m2(Q), pi)
    c = _split(L)
    sign = {h: (-1) ** (H.coords(h)[0]) for h in H.element_set}
    c2 = {h: [[sign[h] * x for x in row] for row in M] for h, M in c.items()}
    A1 = central_image(L, H, c).algebra
    A2 = central_image(L, H, c2).algebra
    triv = SymCocycle.trivial(C4)
    t1, t2 = make_triple(H, triv, A1), make_triple(H, triv, A2)
    assert isinstance(equivalence_check(t1, t2), Equivalent)


# -- classification --------------------------------------------------------------------

def test_classify_examples():
    t = classify(quaternions())
    assert t.H.order == 1 and t.tau.is_trivial() and t.A.dim == 4
    t = classify(sign_model())
    assert t.H.order == 2 and t.A.dim == 1
    assert class_invariants(t.tau_prime).invariant_scalars() == [-1]
    assert t.iso.verify() and t.iso.invertible
    H, Q, pi = c4_setup()
    B = twisted_loop(m2(Q), pi, standard_cocycle(C4, [MINUS]))
    t = classify(B)
    assert t.H.element_set == H.element_set
    assert class_invariants(t.tau_prime).invariant_scalars() == [-1]
    assert isinstance(graded_iso_search(t.A, m2(Q)), Iso)


def test_classify_on_commutative_base_finds_the_full_group():
    """L(QC2) twisted by carry(-1) is a graded field, so its centroid has support C4."""
    H, Q, pi = c4_setup()
    B = twisted_loop(group_algebra(Q), pi, standard_cocycle(C4, [MINUS]))
    t = classify(B)
    assert t.H.order == 4 and t.A.dim == 1


def test_classify_errors():
    with pytest.raises(NotGradedCentral):
        classify(regrade(sign_model(), C1, [(), ()]))
    Z = matrix_algebra(C2, [(0,), (1,)])
    from gradloop.galg import NotSimple
    with pytest.raises(NotGradedSimple):
        classify(Z, verdict=NotSimple([[1, 0, 0, 0]], "forced"))
    with pytest.raises(SimplicityUnknown):
        classify(Z, verdict=Unknown({"stage": 4}))


def test_triple_invariants_and_document():
    t = classify(sign_model())
    assert restrict(t.tau, t.H) == t.tau_prime
    doc = t.to_doc()
    assert set(doc) >= {"H", "tau_prime_class", "A", "tau", "certificates"}
    assert doc["certificates"]["iso_checked"] is True


@pytest.mark.parametrize("case", roundtrip_cases(), ids=lambda c: c[0])
def test_roundtrip(case):
    name, G, H, A, tau = case
    Hc, Q, pi = canonical_quotient(H)
    B = twisted_loop(A, pi, tau)
    t = classify(B)
    assert t.iso.verify() and t.iso.invertible
    assert t.H.element_set == Hc.element_set
    assert t.A.dim * Hc.order == B.dim
    assert restrict(t.tau, t.H) == t.tau_prime
    res = equivalence_check(t, make_triple(H, tau, A))
    assert isinstance(res, Equivalent)
    assert res.loop_iso.verify() and res.loop_iso.invertible


# -- equivalence ---------------------------------------------------------------------------

def test_equivalence_examples():
    H, Q, pi = c4_setup()
    A = m2(Q)
    tau = standard_cocycle(C4, [MINUS])
    t = make_triple(H, tau, A)
    res = equivalence_check(t, t)
    assert isinstance(res, Equivalent) and class_invariants(res.mu).is_trivial()
    t_plus = make_triple(H, SymCocycle.trivial(C4), A)
    res = equivalence_check(t, t_plus)
    assert isinstance(res, NotEquivalent) and res.certificate["step"] == "b"
    sigma = section_cocycle(pi, section(pi))
    for chi in hom_group(H.abstract, SIGNS):
        A2 = chi_twist(A, chi, sigma)
        res = equivalence_check(t, make_triple(H, tau, A2))
        assert isinstance(res, Equivalent)


def test_equivalence_different_subgroups():
    t1 = classify(quaternions())
    t2 = make_triple(C2C2.subgroup([(1, 0)]), SymCocycle.trivial(C2C2),
                     m2(quotient_of(C2C2, [(1, 0)])[1]))
    assert isinstance(equivalence_check(t1, t2), NotEquivalent)


def test_equivalence_detects_non_isomorphic_algebras():
    H, Q, pi = quotient_of(C2C2, [(1, 0)])
    t1 = make_triple(H, SymCocycle.trivial(C2C2), m2(Q))
    t2 = make_triple(H, SymCocycle.trivial(C2C2), matrix_algebra(Q, [Q.zero, Q.zero]))
    assert isinstance(equivalence_check(t1, t2), NotEquivalent)


def test_equivalence_is_an_equivalence_relation():
    H, Q, pi = c4_setup()
    sigma = section_cocycle(pi, section(pi))
    A = m2(Q)
    triples = []
    for v in (MINUS, F(1), F(2)):
        tau = standard_cocycle(C4, [v], V2)
        for chi in hom_group(H.abstract, SIGNS):
            triples.append(make_triple(H, tau, chi_twist(A, chi, sigma)))
    triples.append(make_triple(H, standard_cocycle(C4, [F(4)], V2), A))
    verdict = {}
    for (i, a), (j, b) in itertools.product(enumerate(triples), repeat=2):
        verdict[i, j] = isinstance(equivalence_check(a, b), Equivalent)
    n = len(triples)
    assert all(verdict[i, i] for i in range(n))
    assert all(verdict[i, j] == verdict[j, i] for i in range(n) for j in range(n))
    for i, j, k in itertools.product(range(n), repeat=3):
        if verdict[i, j] and verdict[j, k]:
            assert verdict[i, k]
    # carry(4) restricts to a square on H, so it sits with the untwisted triples
    assert verdict[2, n - 1] and verdict[3, n - 1]
    assert not verdict[0, n - 1] and not verdict[4, n - 1]


def test_build_equivalence_iso_examples():
    H, Q, pi = c4_setup()
    A = m2(Q)
    triv = SymCocycle.trivial(C4)
    phi = build_equivalence_iso(A, SymCocycle.trivial(Q), triv, triv, pi)
    n = phi.source.dim
    assert phi.matrix == [[int(k == l) for l in range(n)] for k in range(n)]
    mu = standard_cocycle(Q, [MINUS])
    phi = build_equivalence_iso(A, mu, inflate(mu, pi), triv, pi)
    assert phi.matrix == [[int(k == l) for l in range(n)] for k in range(n)]
    assert loop_algebra(twist(A, mu), pi) == twist(loop_algebra(A, pi), inflate(mu, pi))
    # mu(1,1) = -1 against tau1 = tau2 = trivial: an explicit rescaling is needed
    A2 = group_algebra(Q)
    assert classes_equal(inflate(mu, pi), triv)
    phi = build_equivalence_iso(A2, mu, triv, triv, pi)
    assert phi.verify() and phi.source.dim == 4
    assert any(phi.matrix[k][k] != 1 for k in range(4))
    with pytest.raises(ClassMismatch):
        build_equivalence_iso(A, SymCocycle.trivial(Q), standard_cocycle(C4, [MINUS]), triv, pi)


def test_centroid_dimension_of_loops():
    for name, G, H, A, tau in roundtrip_cases():
        Hc, Q, pi = canonical_quotient(H)
        assert centroid(twisted_loop(A, pi, tau)).dim == Hc.order
