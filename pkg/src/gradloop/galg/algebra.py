"""Graded algebras given by structure constants, twists and morphisms."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from ..abgroup import FiniteAbelianGroup
from ..cohom import SymCocycle, add_table
from ..errors import (CocycleIdentityViolation, DimensionExceeded, DocumentError,
                      GradingViolation, GroupMismatch)
from ..exactnum.scalars import (Cyclotomic, _as_coeffs, conductor, euler_phi,
                                format_scalar, parse_scalar, zeta)

MAX_DIM = 64
ZERO = Fraction(0)
ONE = Fraction(1)


class GradedAlgebra:
    """Finite-dimensional algebra with a basis of homogeneous elements.

    ``products[(i, j)]`` is a dict ``{k: c}``: ``e_i e_j = sum c e_k``.
    Missing pairs multiply to zero.  The grading is checked at construction.
    """

    def __init__(self, group, degrees, products, max_dim=MAX_DIM, provenance=None):
        self.group = group
        self.degrees = tuple(group.reduce(d) for d in degrees)
        n = len(self.degrees)
        if n > max_dim:
            raise DimensionExceeded(f"dimension {n} exceeds the cap {max_dim}")
        prods = {}
        for (i, j), terms in products.items():
            if not (0 <= i < n and 0 <= j < n):
                raise GradingViolation(f"basis index out of range in product ({i}, {j})", (i, j))
            clean = {}
            for k, c in terms.items():
                if not 0 <= k < n:
                    raise GradingViolation(f"basis index {k} out of range", (i, j, k))
                if c != 0:
                    clean[k] = clean.get(k, ZERO) + c
                    if clean[k] == 0:
                        del clean[k]
            for k in clean:
                if group.add(self.degrees[i], self.degrees[j]) != self.degrees[k]:
                    raise GradingViolation(
                        f"e_{i} e_{j} has a component on e_{k} of the wrong degree", (i, j, k))
            if clean:
                prods[(i, j)] = clean
        self.products = prods
        self.max_dim = max_dim
        self.provenance = provenance

    @property
    def dim(self):
        return len(self.degrees)

    def __repr__(self):
        return f"GradedAlgebra({self.group}, dim={self.dim})"

    def __eq__(self, other):
        """Identical structure tensors on identical graded bases."""
        return (isinstance(other, GradedAlgebra) and self.group == other.group
                and self.degrees == other.degrees and self.products == other.products)

    __hash__ = None

    # -- structure --------------------------------------------------------------
    def product(self, i, j):
        return self.products.get((i, j), {})

    def multiply(self, x, y):
        out = [ZERO] * self.dim
        nzx = [(i, a) for i, a in enumerate(x) if a != 0]
        nzy = [(j, b) for j, b in enumerate(y) if b != 0]
        for i, a in nzx:
            for j, b in nzy:
                p = self.products.get((i, j))
                if p:
                    ab = a * b
                    for k, c in p.items():
                        out[k] = out[k] + ab * c
        return out

    @property
    def components(self):
        """Degree -> list of basis indices, in group element order."""
        comp = {}
        for i, d in enumerate(self.degrees):
            comp.setdefault(d, []).append(i)
        return {g: comp[g] for g in self.group.elements if g in comp}

    def component_dims(self):
        comps = self.components
        return tuple(len(comps.get(g, ())) for g in self.group.elements)

    def support(self):
        return list(self.components)

    def conductor(self):
        n = 1
        for terms in self.products.values():
            for c in terms.values():
                n = lcm(n, conductor(c))
        return n

    def is_rational(self):
        return self.conductor() == 1

    def basis_vector(self, i):
        v = [ZERO] * self.dim
        v[i] = ONE
        return v

    def left_matrix(self, i):
        """Matrix of ``x -> e_i x``; entry ``[k][l]`` is the ``e_k`` coefficient of ``e_i e_l``."""
        M = [[ZERO] * self.dim for _ in range(self.dim)]
        for l in range(self.dim):
            for k, c in self.product(i, l).items():
                M[k][l] = c
        return M

    def right_matrix(self, i):
        M = [[ZERO] * self.dim for _ in range(self.dim)]
        for l in range(self.dim):
            for k, c in self.product(l, i).items():
                M[k][l] = c
        return M

    def projection_matrix(self, g):
        return [[ONE if (k == l and self.degrees[k] == g) else ZERO for l in range(self.dim)]
                for k in range(self.dim)]

    def with_provenance(self, provenance):
        out = GradedAlgebra.__new__(GradedAlgebra)
        out.__dict__.update(self.__dict__)
        out.provenance = provenance
        return out

    def to_doc(self):
        prods = []
        for (i, j) in sorted(self.products):
            terms = [{"k": k, "c": format_scalar(c)} for k, c in sorted(self.products[(i, j)].items())]
            prods.append({"i": i, "j": j, "terms": terms})
        return {"group": self.group.to_doc(),
                "degrees": [list(d) for d in self.degrees],
                "products": prods}


def validate_algebra(doc, max_dim=MAX_DIM, max_order=None):
    """Build a :class:`GradedAlgebra` from its document form."""
    try:
        kw = {} if max_order is None else {"max_order": max_order}
        G = FiniteAbelianGroup(tuple(doc["group"]["invariant_factors"]), **kw)
        degrees = [tuple(int(x) for x in d) for d in doc["degrees"]]
        for idx, d in enumerate(degrees):
            if len(d) != G.rank or d not in G:
                raise GradingViolation(f"degree {list(d)} is not an element of {G}", (idx,))
        products = {}
        for entry in doc.get("products", []):
            i, j = int(entry["i"]), int(entry["j"])
            terms = products.setdefault((i, j), {})
            for t in entry["terms"]:
                k = int(t["k"])
                terms[k] = terms.get(k, ZERO) + parse_scalar(t["c"])
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed algebra document: {exc}") from None
    return GradedAlgebra(G, degrees, products, max_dim=max_dim)


def algebra(group, degrees, table, **kw):
    """Convenience constructor: ``table`` maps ``(i, j)`` to ``{k: c}`` with loose scalars."""
    prods = {}
    for key, terms in table.items():
        prods[key] = {k: (parse_scalar(c) if isinstance(c, (str, dict)) else
                          (c if isinstance(c, Cyclotomic) else Fraction(c)))
                      for k, c in terms.items()}
    return GradedAlgebra(group, degrees, prods, **kw)


# -- twists ---------------------------------------------------------------------------

def twist(A, tau):
    """``x * y = tau(deg x, deg y) x y`` on homogeneous elements."""
    if tau.group != A.group:
        raise GroupMismatch("cocycle and algebra are graded by different groups")
    G = A.group
    idx = [G.index(d) for d in A.degrees]
    cache = {}
    prods = {}
    for (i, j), terms in A.products.items():
        key = (idx[i], idx[j])
        s = cache.get(key)
        if s is None:
            s = cache[key] = tau.coeffs.embed(tau.table[key[0]][key[1]])
        prods[(i, j)] = {k: s * c for k, c in terms.items()}
    return GradedAlgebra(G, A.degrees, prods, max_dim=A.max_dim)


def check_scalar_cocycle(G, table):
    """Cocycle identity for a raw scalar table (symmetry not required)."""
    add = add_table(G)
    n = G.order
    for a in range(n):
        for b in range(n):
            tab = table[a][b]
            for c in range(n):
                if tab * table[add[a][b]][c] != table[a][add[b][c]] * table[b][c]:
                    raise CocycleIdentityViolation(
                        "cocycle identity fails", (G.elements[a], G.elements[b], G.elements[c]))


def twisted_group_algebra(G, t):
    """Basis ``u_g`` (element order) with ``u_a u_b = t(a, b) u_{a+b}``.

    ``t`` is a :class:`SymCocycle` or a raw scalar table, possibly
    nonsymmetric.
    """
    if isinstance(t, SymCocycle):
        table = t.scalar_table()
    else:
        table = [[x if isinstance(x, Cyclotomic) else
                  (parse_scalar(x) if isinstance(x, (str, dict)) else Fraction(x)) for x in row]
                 for row in t]
        if any(x == 0 for row in table for x in row):
            raise CocycleIdentityViolation("twisted group algebra table has a zero entry")
        check_scalar_cocycle(G, table)
    add = add_table(G)
    n = G.order
    prods = {(a, b): {add[a][b]: table[a][b]} for a in range(n) for b in range(n)}
    return GradedAlgebra(G, G.elements, prods)


def quaternion_table():
    """Nonsymmetric sign cocycle on C2 x C2: ``(-1)^(x1 y1 + x2 y2 + x1 y2)``."""
    G = FiniteAbelianGroup((2, 2))
    return G, [[Fraction(-1) ** ((x[0] * y[0] + x[1] * y[1] + x[0] * y[1]) % 2)
                for y in G.elements] for x in G.elements]


def group_algebra(G):
    return twisted_group_algebra(G, [[1] * G.order for _ in range(G.order)])


def matrix_algebra(G, row_degrees):
    """``M_n(Q)`` with the elementary grading ``deg E_ij = g_i - g_j``.

    Basis order is ``E_11, E_12, ..., E_nn``.  For ``G = C2`` and row
    degrees ``(0, 1)`` this is the diagonal/antidiagonal grading.
    """
    n = len(row_degrees)
    degs = [G.sub(row_degrees[i], row_degrees[j]) for i in range(n) for j in range(n)]
    prods = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                prods[(i * n + j, j * n + l)] = {i * n + l: ONE}
    return GradedAlgebra(G, degs, prods)


# -- morphisms ------------------------------------------------------------------------

@dataclass
class GradedMorphism:
    """Linear map given by its matrix: column ``i`` is the image of ``e_i``."""

    source: GradedAlgebra
    target: GradedAlgebra
    matrix: list
    invertible: bool = field(default=False)

    def image(self, i):
        return [row[i] for row in self.matrix]

    def apply(self, x):
        out = [ZERO] * self.target.dim
        for i, a in enumerate(x):
            if a != 0:
                for k in range(self.target.dim):
                    b = self.matrix[k][i]
                    if b != 0:
                        out[k] = out[k] + a * b
        return out

    def failing_pair(self):
        """First basis pair breaking degree or multiplicativity, or None."""
        A, B = self.source, self.target
        images = [self.image(i) for i in range(A.dim)]
        for i in range(A.dim):
            for k, c in enumerate(images[i]):
                if c != 0 and B.degrees[k] != A.degrees[i]:
                    return (i, None)
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.apply(A.multiply(A.basis_vector(i), A.basis_vector(j)))
                rhs = B.multiply(images[i], images[j])
                if lhs != rhs:
                    return (i, j)
        return None

    def verify(self):
        from ..exactnum.linalg import rank
        ok = self.failing_pair() is None
        self.invertible = (self.source.dim == self.target.dim
                           and rank(self.matrix) == self.source.dim)
        return ok


@dataclass(frozen=True)
class Mismatch:
    pair: tuple

    def __bool__(self):
        return False


def diagonal_iso_check(A, B, gamma):
    """``phi(e_i) = gamma(deg e_i) f_i``; a verified morphism or the failing pair."""
    if A.group != B.group or A.degrees != B.degrees:
        raise GroupMismatch("diagonal maps need matched graded bases")
    n = A.dim
    scal = [gamma.value(d) for d in A.degrees]
    M = [[scal[i] if i == k else ZERO for i in range(n)] for k in range(n)]
    for i in range(n):
        for j in range(n):
            pa, pb = A.product(i, j), B.product(i, j)
            for k in set(pa) | set(pb):
                if pa.get(k, ZERO) * scal[k] != scal[i] * scal[j] * pb.get(k, ZERO):
                    return Mismatch((i, j))
    phi = GradedMorphism(A, B, M)
    if not phi.verify():
        return Mismatch(phi.failing_pair())
    return phi


# -- scalars --------------------------------------------------------------------------

def restrict_scalars(A, N=None):
    """The same algebra over Q with basis ``b_i zeta^k``, ``k < phi(N)``.

    Index ``i * phi(N) + k`` stands for ``b_i zeta^k``; it keeps the degree of
    ``b_i``.
    """
    N = A.conductor() if N is None else N
    if N <= 2:
        return A
    d = euler_phi(N)
    degrees = [deg for deg in A.degrees for _ in range(d)]
    prods = {}
    for (i, j), terms in A.products.items():
        for a in range(d):
            for b in range(d):
                out = {}
                za = zeta(N, a + b)
                for m, c in terms.items():
                    for r, x in enumerate(_as_coeffs(c * za, N)):
                        if x:
                            key = m * d + r
                            out[key] = out.get(key, ZERO) + x
                prods[(i * d + a, j * d + b)] = out
    return GradedAlgebra(A.group, degrees, prods, max_dim=max(A.max_dim, A.dim * d))


def regrade(A, group, degrees):
    """Same structure constants with new degrees (checked for compatibility)."""
    return GradedAlgebra(group, degrees, A.products, max_dim=A.max_dim)
