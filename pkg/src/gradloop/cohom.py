"""Symmetric 2-cocycles on finite abelian groups.

Cocycle values live in a *coefficient group*: either a :class:`ValueGroup`
(values in the multiplicative group of the field) or a
:class:`FiniteAbelianGroup`.  Both are handled in exponent coordinates, i.e.
as ``Z^d / diag(moduli)`` with modulus 0 marking a free coordinate, so the
multiplicative group law becomes coordinatewise addition.  Tables are dense
and indexed by the lexicographic element index of the group.

Classes are compared through norm invariants: for the canonical cyclic
decomposition ``G = <g_1> + ... + <g_r>`` with orders ``n_i``, the class of a
symmetric cocycle is determined by ``N_i = sum_k tau(k g_i, g_i)`` taken modulo
``n_i``-th multiples.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

import numpy as np

from .abgroup import FiniteAbelianGroup, GroupHom, Section
from .errors import (CertificateFailure, CocycleError, CocycleIdentityViolation,
                     ExtensionFailure, GroupMismatch, NotNormalized,
                     NotSymmetric, SectionInvalid, UnrepresentableValue)
from .exactnum.values import ValueGroup, factor_into_value_group
from .snf import NoSolution, integer_affine_solve


class NoPreimage(CocycleError):
    """No class on the quotient inflates to the requested class."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


# -- coordinate helpers ---------------------------------------------------------

def _red(moduli, v):
    return tuple(x % m if m else x for x, m in zip(v, moduli))


def _add(moduli, a, b):
    return tuple((x + y) % m if m else x + y for x, y, m in zip(a, b, moduli))


def _sub(moduli, a, b):
    return tuple((x - y) % m if m else x - y for x, y, m in zip(a, b, moduli))


def _scale(moduli, k, a):
    return tuple(k * x % m if m else k * x for x, m in zip(a, moduli))


def _zero(C):
    return (0,) * len(C.moduli)


@lru_cache(maxsize=512)
def add_table(G):
    """``T[i][j]`` is the index of ``elements[i] + elements[j]``."""
    idx = G.index
    els = G.elements
    return tuple(tuple(idx(G.add(a, b)) for b in els) for a in els)


@lru_cache(maxsize=512)
def neg_table(G):
    return tuple(G.index(G.neg(a)) for a in G.elements)


def coords_of(C, x):
    """Coordinates of a value: tuples pass through, scalars are factored."""
    if isinstance(x, (tuple, list)):
        if len(x) != len(C.moduli):
            raise UnrepresentableValue(f"coordinate vector {x} has the wrong length")
        return _red(C.moduli, x)
    if isinstance(C, ValueGroup):
        return factor_into_value_group(x, C).coords
    raise UnrepresentableValue(f"value {x!r} needs coordinates in {C}")


# -- cochains ---------------------------------------------------------------------

@dataclass(frozen=True)
class OneCochain:
    group: FiniteAbelianGroup
    coeffs: object
    values: tuple  # coordinate tuple per element index, values[0] == identity

    def __call__(self, g):
        return self.values[self.group.index(tuple(g))]

    def value(self, g):
        return self.coeffs.embed(self(g))

    def __mul__(self, other):
        m = self.coeffs.moduli
        return OneCochain(self.group, self.coeffs,
                          tuple(_add(m, a, b) for a, b in zip(self.values, other.values)))

    def inverse(self):
        m = self.coeffs.moduli
        z = _zero(self.coeffs)
        return OneCochain(self.group, self.coeffs, tuple(_sub(m, z, a) for a in self.values))

    def coerce(self, V):
        if V == self.coeffs:
            return self
        return OneCochain(self.group, V, tuple(V.coerce(a, self.coeffs) for a in self.values))

    @classmethod
    def trivial(cls, G, C):
        return cls(G, C, (_zero(C),) * G.order)

    @classmethod
    def from_values(cls, G, C, values):
        """``values`` maps each element (in order) to a scalar or coordinates."""
        vals = tuple(coords_of(C, x) for x in values)
        if any(vals[0]):
            raise NotNormalized("one-cochain must send the identity to the identity", (0,))
        return cls(G, C, vals)


@dataclass(frozen=True)
class SymCocycle:
    """Normalized 2-cochain table; built unchecked, see :func:`validate_cocycle`."""

    group: FiniteAbelianGroup
    coeffs: object
    table: tuple  # table[i][j] = coordinates of tau(elements[i], elements[j])

    def __call__(self, a, b):
        G = self.group
        return self.table[G.index(tuple(a))][G.index(tuple(b))]

    def value(self, a, b):
        return self.coeffs.embed(self(a, b))

    def scalar_table(self):
        E = self.coeffs.embed
        return [[E(x) for x in row] for row in self.table]

    def _check_compatible(self, other):
        if self.group != other.group:
            raise GroupMismatch("cocycles live on different groups")

    def __mul__(self, other):
        self._check_compatible(other)
        a, b = _common(self, other)
        m = a.coeffs.moduli
        return SymCocycle(a.group, a.coeffs,
                          tuple(tuple(_add(m, x, y) for x, y in zip(r1, r2))
                                for r1, r2 in zip(a.table, b.table)))

    def inverse(self):
        m = self.coeffs.moduli
        z = _zero(self.coeffs)
        return SymCocycle(self.group, self.coeffs,
                          tuple(tuple(_sub(m, z, x) for x in row) for row in self.table))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k):
        m = self.coeffs.moduli
        return SymCocycle(self.group, self.coeffs,
                          tuple(tuple(_scale(m, k, x) for x in row) for row in self.table))

    def coerce(self, V):
        if V == self.coeffs:
            return self
        src = self.coeffs
        return SymCocycle(self.group, V,
                          tuple(tuple(V.coerce(x, src) for x in row) for row in self.table))

    def is_trivial(self):
        return not any(any(x) for row in self.table for x in row)

    @classmethod
    def trivial(cls, G, C=None):
        C = ValueGroup.sign_group() if C is None else C
        z = _zero(C)
        return cls(G, C, tuple((z,) * G.order for _ in range(G.order)))

    def to_doc(self):
        from .exactnum.scalars import format_scalar
        if isinstance(self.coeffs, ValueGroup):
            rows = [[format_scalar(self.coeffs.embed(x)) for x in row] for row in self.table]
            coeffs = self.coeffs.to_doc()
        else:
            rows = [[list(x) for x in row] for row in self.table]
            coeffs = {"group": self.coeffs.to_doc()}
        return {"group": self.group.to_doc(), "coeffs": coeffs, "table": rows}


def _common(a, b):
    """Bring two cocycles (or cochains) to a shared value group."""
    if a.coeffs == b.coeffs:
        return a, b
    if isinstance(a.coeffs, ValueGroup) and isinstance(b.coeffs, ValueGroup):
        V = a.coeffs.join(b.coeffs)
        return a.coerce(V), b.coerce(V)
    raise GroupMismatch("cocycles have different coefficient groups")


# -- validation -----------------------------------------------------------------

def _identity_violation(G, C, table):
    """First triple violating the cocycle identity, or None (numpy sweep)."""
    n = G.order
    if n == 0:
        return None
    d = len(C.moduli)
    T = np.array([[list(x) for x in row] for row in table], dtype=np.int64).reshape(n, n, d)
    add = np.array(add_table(G), dtype=np.int64)
    mod = np.array([m if m else 0 for m in C.moduli], dtype=np.int64)
    free = mod == 0
    safe_mod = np.where(free, 1, mod)
    for a in range(n):
        ab = add[a]                       # a+b for all b
        lhs = T[a][:, None, :] + T[ab][:, :, :]          # tau(a,b) + tau(a+b,c)
        rhs = T[a][add][:, :, :] + T                     # tau(a,b+c) + tau(b,c)
        diff = lhs - rhs
        bad = np.where(free, diff != 0, diff % safe_mod != 0).any(axis=2)
        if bad.any():
            b, c = map(int, np.argwhere(bad)[0])
            return a, b, c
    return None


def check_cocycle_table(G, C, table, symmetric=True):
    """Raise the appropriate error for a normalized coordinate table."""
    z = _zero(C)
    for i in range(G.order):
        if table[0][i] != z or table[i][0] != z:
            raise NotNormalized("tau(e, g) and tau(g, e) must be the identity",
                                (G.zero, G.elements[i]))
    if symmetric:
        for i in range(G.order):
            for j in range(i + 1, G.order):
                if table[i][j] != table[j][i]:
                    raise NotSymmetric("table is not symmetric",
                                       (G.elements[i], G.elements[j]))
    bad = _identity_violation(G, C, table)
    if bad is not None:
        raise CocycleIdentityViolation(
            "cocycle identity fails", tuple(G.elements[k] for k in bad))


def validate_cocycle(G, C, table, symmetric=True):
    """Check a raw table and return the normalized :class:`SymCocycle`.

    Entries may be scalars (factored into the value group ``C``) or
    coordinate vectors.  The table is divided by ``tau(e, e)`` first.
    """
    if C is None:
        C = ValueGroup.covering([x for row in table for x in row])
    n = G.order
    if len(table) != n or any(len(row) != n for row in table):
        raise CocycleError(f"table must be {n} x {n}")
    coords = [[coords_of(C, x) for x in row] for row in table]
    m = C.moduli
    ee = coords[0][0]
    if any(ee):
        coords = [[_sub(m, x, ee) for x in row] for row in coords]
    tab = tuple(tuple(row) for row in coords)
    check_cocycle_table(G, C, tab, symmetric=symmetric)
    return SymCocycle(G, C, tab)


def validated(tau):
    check_cocycle_table(tau.group, tau.coeffs, tau.table)
    return tau


# -- basic constructions ----------------------------------------------------------

def coboundary(gamma):
    G, C = gamma.group, gamma.coeffs
    m = C.moduli
    add = add_table(G)
    v = gamma.values
    memo = {}

    def d(a, b, c):
        key = (a, b, c)
        out = memo.get(key)
        if out is None:
            out = memo[key] = _sub(m, _add(m, a, b), c)
        return out

    return SymCocycle(G, C, tuple(
        tuple(d(v[i], v[j], v[add[i][j]]) for j in range(G.order))
        for i in range(G.order)))


def _factor_indices(G):
    return [i for i, n in enumerate(G.invariant_factors) if n > 1]


def standard_cocycle(G, v, C=None):
    """Carry cocycle ``tau(a, b) = sum_i v_i * floor((a_i + b_i) / n_i)``.

    ``v`` has one entry per nontrivial invariant factor of ``G`` (the
    canonical cyclic decomposition), given as scalars or coordinates.
    """
    facs = _factor_indices(G)
    if len(v) != len(facs):
        raise GroupMismatch(f"need {len(facs)} parameters, got {len(v)}")
    if C is None:
        C = ValueGroup.covering(list(v))
    vc = [coords_of(C, x) for x in v]
    m = C.moduli
    ns = G.invariant_factors
    z = _zero(C)
    # the table depends only on the carry pattern, so memoize per pattern
    cache = {}
    els = G.elements
    rows = []
    for a in els:
        row = []
        for b in els:
            key = tuple(a[i] + b[i] >= ns[i] for i in facs)
            val = cache.get(key)
            if val is None:
                val = z
                for flag, c in zip(key, vc):
                    if flag:
                        val = _add(m, val, c)
                cache[key] = val
            row.append(val)
        rows.append(tuple(row))
    return SymCocycle(G, C, tuple(rows))


# -- invariants and class equality ------------------------------------------------

@dataclass(frozen=True)
class CohomClass:
    group: FiniteAbelianGroup
    coeffs: object
    invariants: tuple  # per cyclic factor, reduced coordinates
    norms: tuple = field(compare=False, default=())

    def is_trivial(self):
        return not any(any(x) for x in self.invariants)

    def invariant_scalars(self):
        return [self.coeffs.embed(x) for x in self.norms]


def reduction_moduli(n, C):
    """Moduli for the classes of ``C / C^n`` in coordinates."""
    return tuple(gcd(n, m) if m else n for m in C.moduli)


def norms(tau):
    G, C = tau.group, tau.coeffs
    m = C.moduli
    out = []
    for i in _factor_indices(G):
        n = G.invariant_factors[i]
        gi = G.unit(i)
        j = G.index(gi)
        acc = _zero(C)
        x = G.zero
        for _ in range(n):
            acc = _add(m, acc, tau.table[G.index(x)][j])
            x = G.add(x, gi)
        out.append(acc)
    return tuple(out)


def class_invariants(tau):
    G, C = tau.group, tau.coeffs
    N = norms(tau)
    inv = tuple(_red(reduction_moduli(G.invariant_factors[i], C), x)
                for i, x in zip(_factor_indices(G), N))
    return CohomClass(G, C, inv, N)


@dataclass(frozen=True)
class Equal:
    gamma: OneCochain  # tau1 = tau2 * d(gamma)

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotEqual:
    index: int  # first cyclic factor whose invariants differ

    def __bool__(self):
        return False


def _divide_by_order(n, N, C):
    """Coordinates ``x`` with ``n*x == N`` in ``C``, via an exponent congruence solve."""
    out = []
    for c, m in zip(N, C.moduli):
        try:
            sol = integer_affine_solve([[n]], [m], [c])
        except NoSolution:
            return None
        out.append(sol.x[0] % m if m else sol.x[0])
    return tuple(out)


def solve_coboundary(rho):
    """A one-cochain ``gamma`` with ``d(gamma) == rho``, or None.

    Walks the group along the canonical generators: once ``gamma(g_i)`` is
    fixed with ``n_i * gamma(g_i) == N_i``, the relation
    ``gamma(x + g_i) = gamma(x) + gamma(g_i) - rho(x, g_i)`` determines every
    other value.  The result is checked entrywise.
    """
    G, C = rho.group, rho.coeffs
    m = C.moduli
    facs = _factor_indices(G)
    N = norms(rho)
    gen_vals = []
    for i, Ni in zip(facs, N):
        x = _divide_by_order(G.invariant_factors[i], Ni, C)
        if x is None:
            return None
        gen_vals.append(x)
    vals = [None] * G.order
    vals[0] = _zero(C)
    T = rho.table
    # lexicographic order: each element's predecessor along its last nonzero
    # nontrivial coordinate has already been visited
    for idx, g in enumerate(G.elements):
        if idx == 0:
            continue
        k = max(t for t, i in enumerate(facs) if g[i])
        i = facs[k]
        prev = list(g)
        prev[i] -= 1
        p = G.index(tuple(prev))
        gi = G.index(G.unit(i))
        vals[idx] = _sub(m, _add(m, vals[p], gen_vals[k]), T[p][gi])
    gamma = OneCochain(G, C, tuple(vals))
    if coboundary(gamma).table != rho.table:
        return None
    return gamma


def solve_coboundary_lattice(rho):
    """Reference solver: the full congruence system on rows ``(x, g_i)``."""
    G, C = rho.group, rho.coeffs
    gens = [G.index(G.unit(i)) for i in _factor_indices(G)]
    add = add_table(G)
    n = G.order
    rows, rhs = [], []
    for x in range(n):
        for h in gens:
            row = [0] * (n - 1)
            for k, s in ((x, 1), (h, 1), (add[x][h], -1)):
                if k:
                    row[k - 1] += s
            rows.append(row)
            rhs.append(rho.table[x][h])
    vals = [[0] * len(C.moduli) for _ in range(n)]
    for l, mod in enumerate(C.moduli):
        t = [r[l] for r in rhs]
        if n == 1:
            break
        try:
            sol = integer_affine_solve(rows, [mod] * len(rows), t)
        except NoSolution:
            return None
        for k in range(1, n):
            vals[k][l] = sol.x[k - 1]
    gamma = OneCochain(G, C, tuple(_red(C.moduli, v) for v in vals))
    if coboundary(gamma).table != rho.table:
        return None
    return gamma


def classes_equal(tau1, tau2):
    """``Equal(gamma)`` with ``tau1 = tau2 * d(gamma)``, or ``NotEqual(i)``."""
    tau1, tau2 = _common(tau1, tau2)
    if tau1.group != tau2.group:
        raise GroupMismatch("cocycles live on different groups")
    c1, c2 = class_invariants(tau1), class_invariants(tau2)
    for i, (a, b) in enumerate(zip(c1.invariants, c2.invariants)):
        if a != b:
            return NotEqual(i)
    gamma = solve_coboundary(tau1 / tau2)
    if gamma is None:
        raise CertificateFailure("equal invariants but no coboundary witness found")
    return Equal(gamma)


# -- functorial maps ----------------------------------------------------------------

def restrict(tau, H):
    """Restriction to the subgroup ``H``, as a cocycle on ``H.abstract``."""
    if H.parent != tau.group:
        raise GroupMismatch("subgroup does not live in the cocycle's group")
    A = H.abstract
    G = tau.group
    img = [G.index(H.embed(k)) for k in A.elements]
    T = tau.table
    return SymCocycle(A, tau.coeffs, tuple(tuple(T[i][j] for j in img) for i in img))


def inflate(mu, pi):
    """``(g1, g2) -> mu(pi(g1), pi(g2))`` for the projection ``pi: G -> Q``."""
    Q = pi.codomain
    if mu.group != Q:
        raise GroupMismatch("cocycle is not on the codomain of the projection")
    G = pi.domain
    img = [Q.index(pi.image_of_index(i)) for i in range(G.order)]
    T = mu.table
    return SymCocycle(G, mu.coeffs, tuple(tuple(T[i][j] for j in img) for i in img))


def section_cocycle(pi, s, H=None):
    """``sigma(q1, q2) = s(q1) + s(q2) - s(q1 + q2)``, valued in ``H = ker pi``.

    Values are stored in the coordinates of ``H.abstract``.
    """
    if not isinstance(s, Section) or not s.check():
        raise SectionInvalid("pi o s is not the identity")
    G, Q = pi.domain, pi.codomain
    H = pi.kernel() if H is None else H
    A = H.abstract
    rows = []
    for q1 in Q.elements:
        row = []
        for q2 in Q.elements:
            x = G.sub(G.add(s(q1), s(q2)), s(Q.add(q1, q2)))
            if x not in H.element_set:
                raise SectionInvalid(f"s({q1})+s({q2})-s({q1}+{q2}) is not in H", (q1, q2))
            row.append(H.coords(x))
        rows.append(tuple(row))
    return SymCocycle(Q, A, tuple(rows))


def delta(chi, sigma):
    """``chi o sigma`` for a character ``chi`` of the coefficient group of ``sigma``."""
    if chi.domain != sigma.coeffs:
        raise GroupMismatch("character is not defined on the section cocycle's values")
    V = chi.codomain
    cache = {}
    rows = []
    for row in sigma.table:
        out = []
        for x in row:
            y = cache.get(x)
            if y is None:
                y = cache[x] = tuple(chi(x))
            out.append(y)
        rows.append(tuple(out))
    return SymCocycle(sigma.group, V, tuple(rows))


# -- extensions ----------------------------------------------------------------------

def _generator_coords(H):
    """Coordinates in ``G`` of the canonical generators of ``H`` with their orders."""
    A = H.abstract
    out = []
    for i in _factor_indices(A):
        out.append((H.embed(A.unit(i)), A.invariant_factors[i]))
    return out


@dataclass(frozen=True)
class Extension:
    tau: SymCocycle           # on G, restricts to tau_prime exactly
    parameters: tuple         # standard-cocycle parameters v on G
    standard: SymCocycle      # standard_cocycle(G, v): the normal form of [tau]
    gamma: OneCochain         # on H, tau_prime = standard|_H * d(gamma)


def extension_parameters(cls, H):
    """Parameters ``v`` on ``G`` whose standard cocycle restricts to class ``cls``.

    For a generator ``h_j = sum_i c_ji g_i`` of order ``m_j`` the restricted
    invariant is ``sum_i (m_j c_ji / n_i) v_i``: the number of carries in
    coordinate ``i`` while adding ``h_j`` to itself ``m_j`` times.
    """
    G = H.parent
    C = cls.coeffs
    facs = _factor_indices(G)
    gens = _generator_coords(H)
    v = [[0] * len(C.moduli) for _ in facs]
    if not gens or not facs:
        return tuple(tuple(x) for x in v)
    rows = [[m * h[i] // G.invariant_factors[i] for i in facs] for h, m in gens]
    for l, mu in enumerate(C.moduli):
        moduli = [gcd(m, mu) if mu else m for _, m in gens]
        t = [inv[l] for inv in cls.invariants]
        try:
            sol = integer_affine_solve(rows, moduli, t)
        except NoSolution as exc:
            raise ExtensionFailure("invariant matching system is unsolvable",
                                   exc.certificate) from None
        for k in range(len(facs)):
            v[k][l] = sol.x[k]
    return tuple(_red(C.moduli, x) for x in v)


def extend_cocycle_data(tau_prime, H):
    """Constructive extension of a cocycle on ``H.abstract`` to ``H.parent``."""
    if tau_prime.group != H.abstract:
        raise GroupMismatch("cocycle must live on the subgroup's abstract group")
    G, C = H.parent, tau_prime.coeffs
    m = C.moduli
    v = extension_parameters(class_invariants(tau_prime), H)
    std = standard_cocycle(G, v, C)
    rho = tau_prime / restrict(std, H)
    gamma = solve_coboundary(rho)
    if gamma is None:
        raise ExtensionFailure("restricted classes differ after invariant matching")
    # extend gamma by the identity off H
    z = _zero(C)
    if not any(any(x) for x in gamma.values):
        tau = std
    else:
        ext = [z] * G.order
        for k, val in zip(H.abstract.elements, gamma.values):
            ext[G.index(H.embed(k))] = val
        dg = coboundary(OneCochain(G, C, tuple(ext)))
        memo = {}

        def plus(x, y):
            out = memo.get((x, y))
            if out is None:
                out = memo[(x, y)] = _add(m, x, y)
            return out

        tau = SymCocycle(G, C, tuple(tuple(plus(x, y) for x, y in zip(r1, r2))
                                     for r1, r2 in zip(std.table, dg.table)))
    if restrict(tau, H).table != tau_prime.table:
        raise ExtensionFailure("extended cocycle does not restrict to the input")
    return Extension(tau, v, std, gamma)


def extend_cocycle(tau_prime, H):
    return extend_cocycle_data(tau_prime, H).tau


def normal_form(tau_prime, H):
    """Standard cocycle on ``G`` representing the canonical extension class."""
    return extend_cocycle_data(tau_prime, H).standard


def inflation_preimage(cls, pi):
    """Standard cocycle ``nu`` on ``Q = pi.codomain`` with ``[inflate(nu)] = cls``."""
    G, Q = pi.domain, pi.codomain
    C = cls.coeffs
    if cls.group != G:
        raise GroupMismatch("class is not on the projection's domain")
    gf = _factor_indices(G)
    qf = _factor_indices(Q)
    # carries in Q-coordinate j while adding pi(g_i) to itself n_i times
    rows = []
    for i in gf:
        n = G.invariant_factors[i]
        p = pi(G.unit(i))
        rows.append([n * p[j] // Q.invariant_factors[j] for j in qf])
    w = [[0] * len(C.moduli) for _ in qf]
    if gf:
        for l, mu in enumerate(C.moduli):
            moduli = [gcd(G.invariant_factors[i], mu) if mu else G.invariant_factors[i] for i in gf]
            t = [inv[l] for inv in cls.invariants]
            if not qf:
                if any(x % mm if mm else x for x, mm in zip(t, moduli)):
                    raise NoPreimage("class is nontrivial but the quotient is trivial",
                                     certificate=(l, tuple(t)))
                continue
            try:
                sol = integer_affine_solve(rows, moduli, t)
            except NoSolution as exc:
                raise NoPreimage("no class on the quotient inflates to this class",
                                 certificate=(l, exc.certificate)) from None
            for k in range(len(qf)):
                w[k][l] = sol.x[k]
    nu = standard_cocycle(Q, [_red(C.moduli, x) for x in w], C)
    if class_invariants(inflate(nu, pi)) != cls:
        raise CertificateFailure("inflated preimage has the wrong class")
    return nu


# -- signs and square roots -----------------------------------------------------------

@dataclass(frozen=True)
class RealCharacter:
    chi: GroupHom           # G -> mu_T, chi(g) = z_g^2
    gamma: OneCochain       # z_g, values in mu_T
    certificate: Equal      # [tau] = [d gamma] over mu_T


def character_from_real_cocycle(tau):
    """Character and square roots realizing a sign-valued class as a coboundary.

    With ``N_i = (-1)^e_i`` the sign invariants, ``chi(g_i) = zeta_{n_i}^e_i``
    and ``z_{g_i} = zeta_{2 n_i}^e_i``; ``z_g`` is extended multiplicatively in
    the canonical coordinates, so ``d(z)`` is the carry cocycle with
    parameters ``N_i``, which is cohomologous to ``tau``.
    """
    C = tau.coeffs
    if not (isinstance(C, ValueGroup) and C.torsion == 2 and not C.free_basis):
        raise UnrepresentableValue("expected a cocycle with values in {+1, -1}")
    G = tau.group
    T = 2 * G.exponent
    V = ValueGroup(T, ())
    facs = _factor_indices(G)
    e = [x[0] % 2 for x in norms(tau)]
    # chi(g_i) = zeta_T^(e_i T / n_i); z_{g_i} = zeta_T^(e_i T / (2 n_i))
    row = [0] * G.rank
    zexp = [0] * G.rank
    for i, ei in zip(facs, e):
        n = G.invariant_factors[i]
        if n % 2 == 0:
            row[i] = ei * T // n
            zexp[i] = ei * T // (2 * n)
        # odd n: the sign invariant is trivial, nothing to take a root of
    chi = GroupHom(G, V, (tuple(row),))
    gamma = OneCochain(G, V, tuple((sum(a * z for a, z in zip(g, zexp)) % T,) for g in G.elements))
    for g in G.elements:
        if (2 * gamma(g)[0] - chi(g)[0]) % T:
            raise CertificateFailure("z_g^2 != chi(g)")
    cert = classes_equal(tau.coerce(V), coboundary(gamma))
    if not cert:
        raise CertificateFailure("sign class is not the coboundary class")
    return RealCharacter(chi, gamma, cert)


# -- enumeration helpers ---------------------------------------------------------------

def standard_family(G, values, C):
    """All standard cocycles on ``G`` with parameters drawn from ``values``."""
    k = len(_factor_indices(G))
    for v in itertools.product(values, repeat=k):
        yield v, standard_cocycle(G, list(v), C)


def all_coboundaries(G, C, values):
    """Set of coboundary tables for every normalized cochain with given values (oracle)."""
    out = set()
    n = G.order
    for vals in itertools.product(values, repeat=n - 1):
        gamma = OneCochain(G, C, (_zero(C),) + tuple(vals))
        out.add(coboundary(gamma).table)
    return out
