"""Finite abelian groups in invariant-factor form.

Groups are written additively: an element is a tuple of integers reduced
modulo the invariant factors, and the identity is the zero tuple.  Subgroups,
quotients, sections and homomorphisms are all computed through the Smith
normal form in :mod:`gradloop.snf`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd, prod

from .errors import (GroupMismatch, GroupOrderExceeded, HomNotWellDefined,
                     InfiniteTarget, NotASubgroup, NotSurjective)
from .snf import NoSolution, integer_affine_solve, smith_normal_form

MAX_ORDER = 256

GroupElement = tuple  # tuple[int, ...], coordinates reduced mod invariant factors


def _lcm(a, b):
    return a * b // gcd(a, b) if a and b else 0


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z/n_1 + ... + Z/n_r`` with ``n_1 | n_2 | ... | n_r``."""

    invariant_factors: tuple
    max_order: int = field(default=MAX_ORDER, compare=False, repr=False)

    def __post_init__(self):
        factors = tuple(int(n) for n in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for i, n in enumerate(factors):
            if n < 1:
                raise ValueError(f"invariant factor {n} must be >= 1", (i,))
            if i + 1 < len(factors) and factors[i + 1] % n:
                raise ValueError(f"invariant factors {factors} do not form a divisibility chain", (i,))
        if prod(factors) > self.max_order:
            raise GroupOrderExceeded(
                f"group order {prod(factors)} exceeds the cap {self.max_order}")

    @classmethod
    def cyclic(cls, n, **kw):
        return cls((n,), **kw)

    @classmethod
    def trivial_group(cls):
        return cls(())

    # -- basic data -----------------------------------------------------------
    @property
    def moduli(self):
        return self.invariant_factors

    @property
    def rank(self):
        return len(self.invariant_factors)

    @cached_property
    def order(self):
        return prod(self.invariant_factors)

    @cached_property
    def exponent(self):
        return reduce(_lcm, self.invariant_factors, 1)

    @property
    def zero(self):
        return (0,) * self.rank

    @cached_property
    def elements(self):
        """All elements, in lexicographic coordinate order."""
        return tuple(itertools.product(*(range(n) for n in self.invariant_factors)))

    @cached_property
    def _index(self):
        return {g: i for i, g in enumerate(self.elements)}

    def index(self, g):
        return self._index[tuple(g)]

    def __len__(self):
        return self.order

    def __contains__(self, g):
        return len(g) == self.rank and all(0 <= x < n for x, n in zip(g, self.invariant_factors))

    def __str__(self):
        factors = [n for n in self.invariant_factors if n > 1]
        return " x ".join(f"C{n}" for n in factors) if factors else "trivial"

    # -- arithmetic -------------------------------------------------------------
    def reduce(self, v):
        return tuple(int(x) % n for x, n in zip(v, self.invariant_factors))

    def add(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.invariant_factors))

    def sub(self, a, b):
        return tuple((x - y) % n for x, y, n in zip(a, b, self.invariant_factors))

    def neg(self, a):
        return tuple(-x % n for x, n in zip(a, self.invariant_factors))

    def scale(self, k, a):
        return tuple(k * x % n for x, n in zip(a, self.invariant_factors))

    def element_order(self, a):
        o = 1
        for x, n in zip(a, self.invariant_factors):
            o = _lcm(o, n // gcd(x, n))
        return o

    # -- structure --------------------------------------------------------------
    def unit(self, i):
        return tuple(int(j == i) for j in range(self.rank))

    def cyclic_decomposition(self):
        """The standard decomposition: unit vectors of the nontrivial factors."""
        return [(self.unit(i), n) for i, n in enumerate(self.invariant_factors) if n > 1]

    def subgroup(self, generators):
        return Subgroup(self, tuple(self.reduce(g) for g in generators))

    def whole(self):
        return self.subgroup([g for g, _ in self.cyclic_decomposition()])

    def trivial(self):
        return self.subgroup([])

    def all_subgroups(self):
        """Every subgroup, found by adjoining one coset representative at a time."""
        zero = self.zero
        start = frozenset([zero])
        seen = {start: ()}
        frontier = [start]
        while frontier:
            nxt = []
            for S in frontier:
                done = set(S)
                for g in self.elements:
                    if g in done:
                        continue
                    cyc = [zero]
                    x = g
                    while x != zero:
                        cyc.append(x)
                        x = self.add(x, g)
                    T = frozenset(self.add(s, c) for s in S for c in cyc)
                    done.update(self.add(g, s) for s in S)
                    if T not in seen:
                        seen[T] = seen[S] + (g,)
                        nxt.append(T)
            frontier = nxt
        subs = [self.subgroup(gens) for gens in seen.values()]
        return sorted(subs, key=lambda S: (S.order, sorted(S.elements)))

    def to_doc(self):
        return {"invariant_factors": list(self.invariant_factors)}


def _inverse_unimodular(U):
    """Inverse of an integer matrix with determinant +-1, by integer row ops."""
    n = len(U)
    M = [list(map(int, row)) + [int(i == j) for j in range(n)] for i, row in enumerate(U)]
    for c in range(n):
        # Euclid down column c until a single nonzero entry remains at row c
        while True:
            rows = [r for r in range(c, n) if M[r][c]]
            p = min(rows, key=lambda r: abs(M[r][c]))
            M[c], M[p] = M[p], M[c]
            done = True
            for r in range(c + 1, n):
                if M[r][c]:
                    q = M[r][c] // M[c][c]
                    M[r] = [a - q * b for a, b in zip(M[r], M[c])]
                    done = done and not M[r][c]
            if done:
                break
        if M[c][c] < 0:
            M[c] = [-x for x in M[c]]
    for c in range(n - 1, -1, -1):
        for r in range(c):
            if M[r][c]:
                q = M[r][c]
                M[r] = [a - q * b for a, b in zip(M[r], M[c])]
    return [row[n:] for row in M]


def closure_elements(G, generators):
    """Exhaustive subgroup generation by breadth-first closure (test oracle)."""
    elems = {G.zero}
    frontier = [G.zero]
    gens = [G.reduce(g) for g in generators]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.add(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


class Subgroup:
    """A subgroup of ``parent`` given by generators.

    The cyclic decomposition fixes an abstract copy ``abstract`` of the
    subgroup (invariant-factor form) together with mutually inverse maps
    :meth:`embed` and :meth:`coords`.
    """

    def __init__(self, parent, generators):
        self.parent = parent
        self.generators = tuple(parent.reduce(g) for g in generators)
        for g in self.generators:
            if len(g) != parent.rank:
                raise GroupMismatch(f"generator {g} has wrong length for {parent}")

    def __repr__(self):
        return f"Subgroup({self.parent}, order={self.order}, generators={list(self.generators)})"

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.parent == other.parent
                and self.element_set == other.element_set)

    def __hash__(self):
        return hash((self.parent, self.element_set))

    @cached_property
    def membership_data(self):
        """Generators of the subgroup lattice inside Z^r, ready for congruence solves."""
        return [list(col) for col in zip(*self.generators)] if self.generators else None

    def contains(self, g):
        """Membership through the lattice: solve ``sum x_j h_j == g`` mod the factors."""
        G = self.parent
        g = G.reduce(g)
        if not self.generators:
            return g == G.zero
        try:
            integer_affine_solve(self.membership_data, G.invariant_factors, g)
        except NoSolution:
            return False
        return True

    def __contains__(self, g):
        return tuple(g) in self.element_set

    @cached_property
    def decomposition(self):
        return _cyclic_decomposition(self)

    @cached_property
    def abstract(self):
        return FiniteAbelianGroup(tuple(n for _, n in self.decomposition),
                                  max_order=self.parent.max_order)

    @cached_property
    def _coords(self):
        table = {}
        for k in self.abstract.elements:
            table[self.embed(k)] = k
        return table

    def embed(self, k):
        G = self.parent
        out = G.zero
        for (gen, _), c in zip(self.decomposition, k):
            out = G.add(out, G.scale(c, gen))
        return out

    def coords(self, g):
        return self._coords[tuple(g)]

    @cached_property
    def elements(self):
        return tuple(sorted(self._coords))

    @cached_property
    def element_set(self):
        return frozenset(self._coords)

    @property
    def order(self):
        return self.abstract.order

    def is_whole(self):
        return self.order == self.parent.order

    def to_doc(self):
        return {"generators": [list(g) for g, _ in self.decomposition]}


def _cyclic_decomposition(H):
    G = H.parent
    if not H.generators:
        return []
    if len(closure_elements(G, H.generators)) == G.order:
        return G.cyclic_decomposition()
    k = len(H.generators)
    r = G.rank
    # relations among the generators: kernel of Z^k -> G
    B = [[H.generators[j][i] for j in range(k)] + [G.invariant_factors[i] if c == i else 0 for c in range(r)]
         for i in range(r)]
    U, D, V = smith_normal_form(B)
    rank = sum(1 for i in range(min(len(D), len(D[0]))) if D[i][i])
    relations = [[V[row][c] for row in range(k)] for c in range(rank, k + r)]
    relations = [rel for rel in relations if any(rel)]
    R = [[rel[i] for rel in relations] for i in range(k)]
    U2, D2, V2 = smith_normal_form(R)
    Uinv = _inverse_unimodular(U2)
    out = []
    for i in range(k):
        d = D2[i][i] if i < len(relations) else 0
        if d == 1:
            continue
        if d == 0:
            raise AssertionError("subgroup of a finite group has an infinite factor")
        gen = G.zero
        for j in range(k):
            gen = G.add(gen, G.scale(Uinv[j][i], H.generators[j]))
        out.append((gen, d))
    out.sort(key=lambda p: p[1])
    if prod(d for _, d in out) != len(closure_elements(G, H.generators)):
        raise AssertionError("cyclic decomposition lost elements")
    return out


def cyclic_decomposition(H):
    """List of ``(generator, order)`` realizing H as an internal direct sum."""
    if isinstance(H, FiniteAbelianGroup):
        return H.cyclic_decomposition()
    return list(H.decomposition)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism acting on coordinates: ``phi(g) = reduce(matrix * g)``.

    ``codomain`` needs ``moduli`` and ``reduce``; modulus 0 stands for a free
    coordinate, so value groups can serve as targets.
    """

    domain: FiniteAbelianGroup
    codomain: object
    matrix: tuple

    def __post_init__(self):
        M = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", M)
        if len(M) != len(self.codomain.moduli) or any(len(row) != self.domain.rank for row in M):
            raise GroupMismatch("homomorphism matrix has the wrong shape")
        for i, n in enumerate(self.domain.invariant_factors):
            img = [row[i] * n for row in M]
            for x, m in zip(img, self.codomain.moduli):
                if (m == 0 and x != 0) or (m and x % m):
                    raise HomNotWellDefined(
                        f"relation {n}*e_{i} is not sent to zero", (i,))

    def __call__(self, g):
        return self.codomain.reduce(
            [sum(a * b for a, b in zip(row, g)) for row in self.matrix])

    @cached_property
    def _images(self):
        return tuple(self(g) for g in self.domain.elements)

    def image_of_index(self, i):
        return self._images[i]

    def is_surjective(self):
        if not isinstance(self.codomain, FiniteAbelianGroup):
            return False
        return len(set(self._images)) == self.codomain.order

    def kernel(self):
        zero = tuple(0 for _ in self.codomain.moduli)
        return self.domain.subgroup(
            [g for g, img in zip(self.domain.elements, self._images) if img == zero])

    def is_trivial(self):
        zero = tuple(0 for _ in self.codomain.moduli)
        return all(img == zero for img in self._images)

    @classmethod
    def identity(cls, G):
        return cls(G, G, tuple(tuple(int(i == j) for j in range(G.rank)) for i in range(G.rank)))


def quotient(G, H):
    """``(Q, pi)`` with ``Q`` isomorphic to ``G/H`` and ``pi`` the projection."""
    if H.parent != G:
        raise NotASubgroup("subgroup does not live in this group")
    r = G.rank
    cols = [[G.invariant_factors[i] if c == i else 0 for i in range(r)] for c in range(r)]
    cols += [list(h) for h in H.generators]
    R = [[col[i] for col in cols] for i in range(r)]
    U, D, V = smith_normal_form(R) if r else ([], [], [])
    keep = [i for i in range(r) if D[i][i] > 1]
    Q = FiniteAbelianGroup(tuple(D[i][i] for i in keep), max_order=G.max_order)
    M = tuple(tuple(U[i][j] % D[i][i] for j in range(r)) for i in keep)
    pi = GroupHom(G, Q, M)
    if pi.kernel().element_set != H.element_set or not pi.is_surjective():
        raise AssertionError("quotient projection failed its kernel check")
    return Q, pi


@dataclass(frozen=True)
class Section:
    """Set-theoretic section of a surjection, stored as a value table."""

    pi: GroupHom
    table: tuple  # indexed by codomain element index

    def __call__(self, q):
        return self.table[self.pi.codomain.index(q)]

    def check(self):
        Q = self.pi.codomain
        return all(self.pi(self.table[i]) == q for i, q in enumerate(Q.elements))


def section(pi):
    """Least (lexicographic) preimage of each element; ``s(0) = 0``."""
    Q = pi.codomain
    if not pi.is_surjective():
        raise NotSurjective("section requires a surjective homomorphism")
    table = [None] * Q.order
    for i, g in enumerate(pi.domain.elements):
        q = pi.image_of_index(i)
        j = Q.index(q)
        if table[j] is None:
            table[j] = g
    return Section(pi, tuple(table))


def hom_group(H, T):
    """All homomorphisms ``H -> T`` for a finite group or value group ``T``.

    Free coordinates of a value group receive only the trivial image.
    """
    moduli = getattr(T, "moduli", None)
    if moduli is None:
        raise InfiniteTarget("target has no coordinate description")
    torsion_coords = [i for i, m in enumerate(moduli) if m > 0]
    candidates_by_coord = [range(moduli[i]) for i in torsion_coords]
    torsion_elements = []
    for vals in itertools.product(*candidates_by_coord):
        v = [0] * len(moduli)
        for i, x in zip(torsion_coords, vals):
            v[i] = x
        torsion_elements.append(tuple(v))
    gens = [n for n in H.invariant_factors]
    choices = []
    for n in gens:
        ok = [x for x in torsion_elements
              if all((n * c) % m == 0 if m else c == 0 for c, m in zip(x, moduli))]
        choices.append(ok)
    homs = []
    for images in itertools.product(*choices):
        M = tuple(tuple(images[j][i] for j in range(len(gens))) for i in range(len(moduli)))
        homs.append(GroupHom(H, T, M))
    return homs


def load_group(doc, max_order=MAX_ORDER):
    return FiniteAbelianGroup(tuple(doc["invariant_factors"]), max_order=max_order)


def load_subgroup(G, doc):
    return G.subgroup([tuple(g) for g in doc["generators"]])
