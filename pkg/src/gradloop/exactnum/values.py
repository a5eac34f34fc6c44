"""Value groups: finitely generated subgroups of the multiplicative group.

A :class:`ValueGroup` is ``mu_T x Z^k``: the roots of unity of order ``T``
times a free part spanned by ``free_basis``.  Elements are exponent
coordinates ``(t, e_1, ..., e_k)`` standing for ``zeta_T^t * prod b_i^e_i``,
so that the multiplicative group law becomes coordinate addition.  The
coordinate moduli are ``(T, 0, ..., 0)``; modulus 0 means a free coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from ..errors import UnrepresentableValue
from .scalars import (Cyclotomic, format_scalar, inv, parse_scalar,
                      root_of_unity_exponent, zeta)


def _lcm(a, b):
    return a * b // gcd(a, b)


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def factor_int(n):
    """Trial-division factorization of a positive integer: {prime: exponent}."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divide_coords(x, n, moduli):
    """Coordinates ``w`` with ``n*w == x`` coordinatewise, or None."""
    out = []
    for c, m in zip(x, moduli):
        if m == 0:
            if c % n:
                return None
            out.append(c // n)
        else:
            g = gcd(n, m)
            if c % g:
                return None
            mm = m // g
            out.append((c // g) * pow(n // g, -1, mm) % mm if mm > 1 else 0)
    return tuple(out)


@dataclass(frozen=True)
class ValueGroup:
    torsion: int = 2
    free_basis: tuple = ()

    def __post_init__(self):
        if self.torsion < 1:
            raise ValueError("torsion order must be >= 1")
        basis = tuple(parse_scalar(b) if isinstance(b, (str, dict)) else
                      (b if isinstance(b, Cyclotomic) else Fraction(b)) for b in self.free_basis)
        object.__setattr__(self, "free_basis", basis)
        seen = set()
        for b in basis:
            if isinstance(b, Cyclotomic):
                continue  # independence of cyclotomic units is trusted
            b = Fraction(b)
            if b.denominator != 1 or not is_prime(b.numerator):
                raise UnrepresentableValue(f"free basis entry {b} is not a prime")
            if b in seen:
                raise UnrepresentableValue(f"free basis entry {b} repeated")
            seen.add(b)

    @classmethod
    def sign_group(cls):
        return cls(2, ())

    @classmethod
    def roots_of_unity(cls, T):
        return cls(T, ())

    @cached_property
    def moduli(self):
        return (self.torsion,) + (0,) * len(self.free_basis)

    @property
    def identity(self):
        return (0,) * (1 + len(self.free_basis))

    def reduce(self, v):
        v = tuple(int(x) for x in v)
        return (v[0] % self.torsion,) + v[1:]

    def mul(self, a, b):
        return ((a[0] + b[0]) % self.torsion,) + tuple(x + y for x, y in zip(a[1:], b[1:]))

    def inv(self, a):
        return (-a[0] % self.torsion,) + tuple(-x for x in a[1:])

    def is_finite(self):
        return not self.free_basis

    @cached_property
    def _prime_index(self):
        return {Fraction(b): i for i, b in enumerate(self.free_basis) if not isinstance(b, Cyclotomic)}

    def element(self, coords):
        return ValueElement(self, self.reduce(coords))

    def embed(self, coords):
        """Exact scalar denoted by the coordinates."""
        out = zeta(self.torsion, coords[0])
        for b, e in zip(self.free_basis, coords[1:]):
            if e:
                out = out * (b ** e if e > 0 else inv(b) ** (-e))
        return out

    def extended(self, torsion=1, primes=(), units=()):
        T = _lcm(self.torsion, torsion)
        basis = list(self.free_basis)
        have = set(self._prime_index)
        for p in sorted(set(primes)):
            if Fraction(p) not in have:
                basis.append(Fraction(p))
        for u in units:
            if u not in basis:
                basis.append(u)
        rat = sorted(b for b in basis if not isinstance(b, Cyclotomic))
        cyc = [b for b in basis if isinstance(b, Cyclotomic)]
        return ValueGroup(T, tuple(rat) + tuple(cyc))

    def coerce(self, coords, source):
        """Map coordinates from a value group ``source`` contained in this one."""
        if source == self:
            return tuple(coords)
        if self.torsion % source.torsion:
            raise UnrepresentableValue("torsion part does not embed")
        out = [coords[0] * (self.torsion // source.torsion) % self.torsion] + [0] * len(self.free_basis)
        for b, e in zip(source.free_basis, coords[1:]):
            if e:
                try:
                    j = self.free_basis.index(b)
                except ValueError:
                    raise UnrepresentableValue(f"basis element {b} missing") from None
                out[1 + j] += e
        return tuple(out)

    def join(self, other):
        return self.extended(other.torsion,
                             [b for b in other.free_basis if not isinstance(b, Cyclotomic)],
                             [b for b in other.free_basis if isinstance(b, Cyclotomic)])

    def factor(self, q):
        return factor_into_value_group(q, self).coords

    def to_doc(self):
        return {"torsion": self.torsion, "free_basis": [format_scalar(b) for b in self.free_basis]}

    @classmethod
    def from_doc(cls, doc):
        return cls(int(doc.get("torsion", 2)), tuple(parse_scalar(b) for b in doc.get("free_basis", [])))

    @classmethod
    def covering(cls, values, torsion=2):
        """Smallest value group of this model containing every given scalar."""
        V = cls(torsion, ())
        for q in values:
            V = factor_into_value_group(q, V, auto_extend=True).group
        return V


@dataclass(frozen=True)
class ValueElement:
    group: ValueGroup
    coords: tuple

    @property
    def torsion_exp(self):
        return self.coords[0]

    @property
    def free_exps(self):
        return self.coords[1:]

    def __mul__(self, other):
        return ValueElement(self.group, self.group.mul(self.coords, other.coords))

    def inverse(self):
        return ValueElement(self.group, self.group.inv(self.coords))

    def __pow__(self, n):
        V = self.group
        return ValueElement(V, V.reduce(tuple(n * c for c in self.coords)))

    def embed(self):
        return self.group.embed(self.coords)

    def is_identity(self):
        return not any(self.coords)


def factor_into_value_group(q, V, auto_extend=False):
    """Express the scalar ``q`` in ``V``.

    Rationals are factored by trial division; cyclotomic inputs must be a
    root of unity, possibly times a declared cyclotomic basis unit.  With
    ``auto_extend`` the returned element lives in an enlarged group.
    """
    if q == 0:
        raise UnrepresentableValue("zero is not in the multiplicative group")
    if isinstance(q, Cyclotomic):
        return _factor_cyclotomic(q, V, auto_extend)
    q = Fraction(q)
    T = V.torsion
    if q < 0 and T % 2:
        if not auto_extend:
            raise UnrepresentableValue(f"-1 is not in mu_{T}")
        V = V.extended(2)
        T = V.torsion
    t = T // 2 if q < 0 else 0
    primes = factor_int(abs(q.numerator))
    for p, e in factor_int(q.denominator).items():
        primes[p] = primes.get(p, 0) - e
    missing = [p for p in primes if Fraction(p) not in V._prime_index]
    if missing:
        if not auto_extend:
            raise UnrepresentableValue(f"primes {sorted(missing)} are not in the free basis")
        V = V.extended(1, missing)
    coords = [t] + [0] * len(V.free_basis)
    for p, e in primes.items():
        coords[1 + V._prime_index[Fraction(p)]] = e
    return ValueElement(V, tuple(coords))


def _factor_cyclotomic(q, V, auto_extend):
    T = _lcm(V.torsion, 2 * q.n if q.n % 2 else q.n)
    k = root_of_unity_exponent(q, T)
    if k is not None:
        if T != V.torsion:
            if not auto_extend:
                if root_of_unity_exponent(q, V.torsion) is None:
                    raise UnrepresentableValue(f"root of unity outside mu_{V.torsion}")
            else:
                V = V.extended(T)
        k = root_of_unity_exponent(q, V.torsion)
        if k is None:
            raise UnrepresentableValue(f"root of unity outside mu_{V.torsion}")
        return ValueElement(V, (k,) + (0,) * len(V.free_basis))
    for j, b in enumerate(V.free_basis):
        if not isinstance(b, Cyclotomic):
            continue
        for e in (1, -1):
            r = q / (b ** e)
            k = root_of_unity_exponent(r, V.torsion)
            if k is not None:
                coords = [k] + [0] * len(V.free_basis)
                coords[1 + j] = e
                return ValueElement(V, tuple(coords))
    if not auto_extend:
        raise UnrepresentableValue(f"cyclotomic value {q!r} is not representable")
    V = V.extended(1, (), (q,))
    coords = [0] * (1 + len(V.free_basis))
    coords[1 + V.free_basis.index(q)] = 1
    return ValueElement(V, tuple(coords))


def power_membership(v, n, V=None):
    """Witness ``w`` with ``w**n == v`` in ``V``, or None (not an n-th power)."""
    V = V or v.group
    coords = v.coords if v.group == V else V.coerce(v.coords, v.group)
    w = divide_coords(coords, n, V.moduli)
    return None if w is None else ValueElement(V, w)
