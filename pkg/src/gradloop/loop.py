"""Loop algebras, their cocycle twists, and the classification pipeline.

For ``pi: G -> Q = G/H`` and a ``Q``-graded algebra ``A`` the loop algebra
has basis ``(a_i, g)`` with ``deg a_i = pi(g)``, ordered by the index of
``g`` and then by ``i``.  :func:`classify` recovers, from a graded-central
graded-simple ``B``, a triple ``(H, [tau'], A)`` together with an explicit
graded isomorphism ``B -> L_pi^tau(A)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .abgroup import GroupHom, hom_group, quotient, section
from .cohom import (SymCocycle, _common, class_invariants, classes_equal,
                    delta, extend_cocycle_data, inflate, inflation_preimage,
                    restrict, section_cocycle)
from .errors import (CentroidNotSplit, CertificateFailure, ClassMismatch,
                     GroupMismatch, NotGradedCentral, NotGradedSimple,
                     SimplicityUnknown)
from .exactnum.linalg import matmul, rank
from .exactnum.scalars import conductor, format_scalar, inv
from .exactnum.values import ValueGroup
from .galg.algebra import GradedAlgebra, GradedMorphism, Mismatch, diagonal_iso_check, twist
from .galg.centroid import (centroid, centroid_as_twisted_group_algebra, in_centroid)
from .galg.iso import Iso, IsoUnknown, graded_iso_search
from .galg.simplicity import DEFAULT_SEED, NotSimple, Unknown, graded_simplicity

ZERO = Fraction(0)
ONE = Fraction(1)


def canonical_subgroup(H):
    """The same subgroup generated by its sorted element list (deterministic data)."""
    return H.parent.subgroup(sorted(H.element_set))


def canonical_quotient(H):
    H = canonical_subgroup(H)
    Q, pi = quotient(H.parent, H)
    return H, Q, pi


@dataclass(frozen=True)
class LoopProvenance:
    base: GradedAlgebra
    pi: GroupHom
    tau: object               # SymCocycle on G or None
    pairs: tuple              # basis index -> (i, g)

    @property
    def index(self):
        return {p: t for t, p in enumerate(self.pairs)}


def _loop_pairs(A, pi):
    G = pi.domain
    return tuple((i, g) for g in G.elements for i in range(A.dim)
                 if A.degrees[i] == pi(g))


def loop_algebra(A, pi):
    if A.group != pi.codomain:
        raise GroupMismatch("algebra is not graded by the codomain of the projection")
    G = pi.domain
    pairs = _loop_pairs(A, pi)
    index = {p: t for t, p in enumerate(pairs)}
    prods = {}
    for s, (i, g) in enumerate(pairs):
        for t, (j, h) in enumerate(pairs):
            terms = A.product(i, j)
            if terms:
                gh = G.add(g, h)
                prods[(s, t)] = {index[(k, gh)]: c for k, c in terms.items()}
    L = GradedAlgebra(G, [g for _, g in pairs], prods, max_dim=max(A.max_dim, len(pairs)))
    return L.with_provenance(LoopProvenance(A, pi, None, pairs))


def twisted_loop(A, pi, tau):
    L = loop_algebra(A, pi)
    Lt = twist(L, tau)
    return Lt.with_provenance(LoopProvenance(A, pi, tau, L.provenance.pairs))


def tensor_model(A, pi, tau):
    """The matched-basis subalgebra of ``A (x) F^tau G``, graded by ``G``.

    ``(a_i (x) u_g)(a_j (x) u_h) = c_ij^k tau(g, h) a_k (x) u_{g+h}``;
    the span of ``a_i (x) u_g`` with ``deg a_i = pi(g)`` is closed.
    """
    G = pi.domain
    full = [(i, g) for g in G.elements for i in range(A.dim)]
    findex = {p: t for t, p in enumerate(full)}
    fprods = {}
    for s, (i, g) in enumerate(full):
        for t, (j, h) in enumerate(full):
            terms = A.product(i, j)
            if terms:
                w = tau.value(g, h)
                gh = G.add(g, h)
                fprods[(s, t)] = {findex[(k, gh)]: w * c for k, c in terms.items()}
    matched = [p for p in full if A.degrees[p[0]] == pi(p[1])]
    sub = {findex[p]: t for t, p in enumerate(matched)}
    prods = {}
    for (s, t), terms in fprods.items():
        if s in sub and t in sub:
            out = {}
            for k, c in terms.items():
                if k not in sub:
                    raise CertificateFailure("matched span is not a subalgebra")
                out[sub[k]] = c
            prods[(sub[s], sub[t])] = out
    return GradedAlgebra(G, [g for _, g in matched], prods, max_dim=max(A.max_dim, len(matched)))


def chi_twist(A, chi, sigma):
    """Twist by ``chi o sigma`` (whose class is ``delta(chi)``)."""
    return twist(A, delta(chi, sigma))


# -- central image ----------------------------------------------------------------------

@dataclass
class CentralImage:
    algebra: GradedAlgebra    # graded by Q
    H: object
    pi: GroupHom
    section: object
    matrix: list              # dim A x dim B: the quotient map


def _matvec(M, x):
    return [sum((a * b for a, b in zip(row, x) if a != 0 and b != 0), ZERO) for row in M]


def central_image(B, H, c):
    """Quotient of ``B`` by ``span{c_h(x) - x}`` for a split centroid basis ``c``.

    ``c`` maps each element of ``H`` to its centroid matrix with
    ``c_{h1} c_{h2} = c_{h1+h2}``.  The quotient is realized on the
    components ``B_{s(q)}`` of section representatives.
    """
    G = B.group
    H, Q, pi = canonical_quotient(H)
    s = section(pi)
    comps = B.components
    rep_index = {}
    degrees = []
    for q in Q.elements:
        for l in comps.get(s(q), []):
            rep_index[l] = len(degrees)
            degrees.append(q)
    m, n = len(degrees), B.dim
    if m * H.order != n:
        raise CertificateFailure(f"central image has dimension {m}, expected {n}/{H.order}")
    Qm = [[ZERO] * n for _ in range(m)]
    for g, idx in comps.items():
        q = pi(g)
        h = G.sub(g, s(q))
        M = c[G.neg(h)]
        for l in idx:
            for k in range(n):
                x = M[k][l]
                if x != 0:
                    if k not in rep_index:
                        raise CertificateFailure("centroid element left the representative component")
                    Qm[rep_index[k]][l] = x
    reps = sorted(rep_index, key=rep_index.get)
    prods = {}
    for a, la in enumerate(reps):
        for b, lb in enumerate(reps):
            terms = B.product(la, lb)
            if terms:
                y = [ZERO] * n
                for k, v in terms.items():
                    y[k] = v
                img = _matvec(Qm, y)
                prods[(a, b)] = {t: v for t, v in enumerate(img) if v != 0}
    A = GradedAlgebra(Q, degrees, prods, max_dim=B.max_dim)
    # the quotient map is multiplicative on all basis pairs
    cols = [[Qm[r][l] for r in range(m)] for l in range(n)]
    for i in range(n):
        for j in range(n):
            terms = B.product(i, j)
            y = [ZERO] * n
            for k, v in terms.items():
                y[k] = v
            if _matvec(Qm, y) != A.multiply(cols[i], cols[j]):
                raise CertificateFailure("quotient map is not multiplicative", (i, j))
    return CentralImage(A, H, pi, s, Qm)


# -- classification ------------------------------------------------------------------------

@dataclass
class ClassificationTriple:
    G: object
    H: object                 # canonical Subgroup of G
    tau_prime: SymCocycle     # on H.abstract
    A: GradedAlgebra          # graded by Q
    tau: SymCocycle           # on G, restrict(tau, H) == tau_prime entrywise
    tau_normal: SymCocycle    # standard cocycle in the same class as tau
    pi: GroupHom
    section: object
    iso: GradedMorphism = None          # B -> L_pi^tau(A), verified
    certificates: dict = field(default_factory=dict)

    def class_invariants(self):
        return class_invariants(self.tau_prime)

    def to_doc(self):
        cls = self.class_invariants()
        V = self.tau_prime.coeffs
        return {
            "H": self.H.to_doc(),
            "tau_prime_class": [format_scalar(V.embed(x)) for x in cls.invariants],
            "A": self.A.to_doc(),
            "tau": self.tau_normal.to_doc(),
            "certificates": dict(self.certificates),
            "tau_raw": self.tau.to_doc(),
        }


def make_triple(H, tau, A):
    """A triple from construction data; ``tau`` lives on ``H.parent``."""
    H, Q, pi = canonical_quotient(H)
    if A.group != Q:
        raise GroupMismatch("algebra must be graded by the canonical quotient G/H")
    ext = extend_cocycle_data(restrict(tau, H), H)
    return ClassificationTriple(H.parent, H, restrict(tau, H), A, tau, ext.standard, pi, section(pi))


def split_centroid_basis(tga):
    """Rescale ``c_h`` by ``gamma(h)^-1`` where ``tau' = d(gamma)``, making it split."""
    H = tga.H
    tp = tga.tau_prime
    eq = classes_equal(tp, SymCocycle.trivial(tp.group, tp.coeffs))
    if not eq:
        raise CentroidNotSplit("centroid cocycle has a nontrivial class")
    G = H.parent
    out = {}
    for h, M in tga.elements.items():
        s = inv(eq.gamma.value(H.coords(h)))
        out[h] = [[s * x if x != 0 else ZERO for x in row] for row in M]
    for h1, M1 in out.items():
        for h2, M2 in out.items():
            if matmul(M1, M2) != out[G.add(h1, h2)]:
                raise CertificateFailure("rescaled centroid basis is not split", (h1, h2))
    return out


def classify(B, seed=DEFAULT_SEED, verdict=None):
    C = centroid(B)
    if C.identity_dim != 1:
        raise NotGradedCentral(f"C(B)_e has dimension {C.identity_dim}")
    verdict = graded_simplicity(B, seed=seed) if verdict is None else verdict
    if isinstance(verdict, Unknown):
        raise SimplicityUnknown(f"graded simplicity undecided: {verdict.diagnostics}")
    if isinstance(verdict, NotSimple):
        raise NotGradedSimple(f"input has a proper graded ideal ({verdict.reason})")
    tga = centroid_as_twisted_group_algebra(B, C)
    H = tga.H
    ext = extend_cocycle_data(tga.tau_prime, H)
    tau = ext.tau
    Bp = twist(B, tau.inverse())
    tga2 = centroid_as_twisted_group_algebra(Bp)
    if tga2.H != H:
        raise CertificateFailure("centroid support changed under the inverse twist")
    csplit = split_centroid_basis(tga2)
    ci = central_image(Bp, H, csplit)
    A = ci.algebra
    L = twisted_loop(A, ci.pi, tau)
    index = L.provenance.index
    n = B.dim
    Phi = [[ZERO] * n for _ in range(L.dim)]
    for l in range(n):
        g = B.degrees[l]
        for a in range(A.dim):
            x = ci.matrix[a][l]
            if x != 0:
                Phi[index[(a, g)]][l] = x
    iso = GradedMorphism(B, L, Phi)
    if not iso.verify() or not iso.invertible:
        raise CertificateFailure("explicit isomorphism B -> L_pi^tau(A) failed", iso.failing_pair())
    certs = {"iso_checked": True, "centroid_dim": C.dim, "simplicity": verdict.kind}
    return ClassificationTriple(B.group, ci.H, tga.tau_prime, A, tau, ext.standard,
                                ci.pi, ci.section, iso, certs)


# -- equivalence -----------------------------------------------------------------------------

@dataclass
class Equivalent:
    mu: SymCocycle
    iso: GradedMorphism            # A1^mu -> A2
    loop_iso: GradedMorphism = None  # L^{tau1}(A1) -> L^{tau2}(A2)
    kind = "Equivalent"


@dataclass
class NotEquivalent:
    certificate: dict
    kind = "NotEquivalent"


@dataclass
class EquivalenceUnknown:
    diagnostics: dict
    kind = "Unknown"


def _field_torsion(*objs):
    N = 1
    for o in objs:
        if isinstance(o, GradedAlgebra):
            N = lcm(N, o.conductor())
        elif isinstance(o, SymCocycle) and isinstance(o.coeffs, ValueGroup):
            for b in o.coeffs.free_basis:
                N = lcm(N, conductor(b))
            if o.coeffs.torsion > 2 and not o.is_trivial():
                used = {x[0] for row in o.table for x in row}
                for t in used:
                    order = o.coeffs.torsion // gcd(t, o.coeffs.torsion)
                    N = lcm(N, order if order > 2 else 1)
    return lcm(2, N)


def loop_morphism(psi, pi, tau=None):
    """Lift a graded morphism ``A -> A'`` to the (twisted) loop algebras."""
    L1 = loop_algebra(psi.source, pi) if tau is None else twisted_loop(psi.source, pi, tau)
    L2 = loop_algebra(psi.target, pi) if tau is None else twisted_loop(psi.target, pi, tau)
    i1, i2 = L1.provenance.pairs, L2.provenance.index
    M = [[ZERO] * L1.dim for _ in range(L2.dim)]
    for s, (i, g) in enumerate(i1):
        for k in range(psi.target.dim):
            x = psi.matrix[k][i]
            if x != 0:
                M[i2[(k, g)]][s] = x
    return GradedMorphism(L1, L2, M)


def build_equivalence_iso(A1, mu, tau1, tau2, pi):
    """Diagonal isomorphism ``L_pi^tau1(A1) -> L_pi^tau2(A1^mu)``."""
    mu_hat = inflate(mu, pi)
    res = classes_equal(tau1, mu_hat * tau2)
    if not res:
        raise ClassMismatch("[tau1] != pi*[mu][tau2]", res.index)
    X = loop_algebra(A1, pi)
    A1mu = twist(A1, mu)
    if loop_algebra(A1mu, pi) != twist(X, mu_hat):
        raise CertificateFailure("L(A^mu) differs from L(A)^(inflated mu)")
    L1 = twisted_loop(A1, pi, tau1)
    L2 = twisted_loop(A1mu, pi, tau2)
    phi = diagonal_iso_check(L1, L2, res.gamma)
    if isinstance(phi, Mismatch):
        raise CertificateFailure("diagonal isomorphism failed", phi.pair)
    return phi


def compose(psi, phi):
    """``psi o phi`` as a GradedMorphism."""
    return GradedMorphism(phi.source, psi.target, matmul(psi.matrix, phi.matrix))


def equivalence_check(t1, t2, budget=5000):
    if t1.G != t2.G:
        raise GroupMismatch("triples are over different groups")
    if t1.H.element_set != t2.H.element_set:
        return NotEquivalent({"reason": "subgroups differ", "step": "a"})
    H, pi = t1.H, t1.pi
    if t2.pi.codomain != pi.codomain or t2.pi.matrix != pi.matrix:
        raise GroupMismatch("triples use different projections; build them with canonical quotients")
    tau1, tau2 = _common(t1.tau, t2.tau)
    res = classes_equal(restrict(tau1, H), restrict(tau2, H))
    if not res:
        return NotEquivalent({"reason": "restricted classes differ", "step": "b", "factor": res.index})
    nu = inflation_preimage(class_invariants(tau1 / tau2), pi)
    T = _field_torsion(t1.A, t2.A, tau1, tau2)
    V = nu.coeffs.join(ValueGroup(T, ()))
    nu = nu.coerce(V)
    sigma = section_cocycle(pi, t1.section, H)
    unknown = []
    for chi in hom_group(H.abstract, ValueGroup(T, ())):
        mu = nu * delta(chi, sigma).coerce(V)
        out = graded_iso_search(twist(t1.A, mu), t2.A, budget=budget)
        if isinstance(out, Iso):
            psi = out.morphism
            phi = build_equivalence_iso(t1.A, mu, tau1, tau2, pi)
            full = compose(loop_morphism(psi, pi, tau2), phi)
            if not full.verify() or not full.invertible:
                raise CertificateFailure("composed loop isomorphism failed", full.failing_pair())
            return Equivalent(mu, psi, full)
        if isinstance(out, IsoUnknown):
            unknown.append(out.diagnostics)
    if unknown:
        return EquivalenceUnknown({"reason": "isomorphism search inconclusive", "details": unknown})
    return NotEquivalent({"reason": "no character twist is isomorphic", "step": "c"})


# -- canonical centroid ------------------------------------------------------------------------

@dataclass
class CentroidCheck:
    maps: dict                 # h -> matrix of x (x) g -> tau(h, g) x (x) (h + g)
    all_central: bool
    spans: bool
    centroid_dim: int

    @property
    def ok(self):
        return self.all_central and self.spans


def canonical_centroid_check(L, H):
    prov = L.provenance
    if not isinstance(prov, LoopProvenance):
        raise CertificateFailure("algebra has no loop provenance")
    G = L.group
    index = prov.index
    n = L.dim
    maps = {}
    for h in sorted(H.element_set):
        M = [[ZERO] * n for _ in range(n)]
        for t, (i, g) in enumerate(prov.pairs):
            s = ONE if prov.tau is None else prov.tau.value(h, g)
            M[index[(i, G.add(h, g))]][t] = s
        maps[h] = M
    for h, M in maps.items():
        if not in_centroid(L, M):
            raise CertificateFailure("shift map is not in the centroid", h)
    C = centroid(L)
    r = rank([[x for row in M for x in row] for M in maps.values()])
    # spans fails exactly when A itself has a centroid larger than the scalars
    return CentroidCheck(maps, True, r == len(maps) == C.dim, C.dim)
