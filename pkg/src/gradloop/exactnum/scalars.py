"""Exact scalars: :class:`fractions.Fraction` and cyclotomic numbers.

A :class:`Cyclotomic` of conductor ``n`` stores its coordinates in the power
basis ``1, z, ..., z^(phi(n)-1)`` of ``Q(z)``, ``z = exp(2 pi i/n)``, i.e. the
remainder modulo the ``n``-th cyclotomic polynomial.  Arithmetic between
different conductors happens in the field of the lcm.  Any result whose
irrational part vanishes is returned as a plain ``Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

MAX_CONDUCTOR = 24


def _lcm(a, b):
    return a * b // gcd(a, b)


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def mobius(n):
    if n == 1:
        return 1
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def _poly_divmod_int(num, den):
    """Exact division of integer polynomials (low degree first), den monic."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, num[:len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, constant term first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        if d < n:
            poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _reduce(poly, n):
    """Remainder of a rational polynomial modulo Phi_n, as a phi(n)-tuple."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = [Fraction(x) for x in poly]
    for i in range(len(c) - 1, deg - 1, -1):
        lead = c[i]
        if lead:
            for j in range(deg):
                if phi[j]:
                    c[i - deg + j] -= lead * phi[j]
            c[i] = Fraction(0)
    c += [Fraction(0)] * (deg - len(c))
    return tuple(c[:deg])


def _make(n, coeffs):
    if all(x == 0 for x in coeffs[1:]):
        return coeffs[0] if coeffs else Fraction(0)
    obj = object.__new__(Cyclotomic)
    obj.n = n
    obj.coeffs = coeffs
    return obj


def _as_coeffs(x, n):
    """Coordinates of a scalar in the power basis of conductor n."""
    if isinstance(x, Cyclotomic):
        if x.n == n:
            return x.coeffs
        step = n // x.n
        poly = [Fraction(0)] * (step * (len(x.coeffs) - 1) + 1)
        for k, c in enumerate(x.coeffs):
            poly[k * step] = c
        return _reduce(poly, n)
    return (Fraction(x),) + (Fraction(0),) * (euler_phi(n) - 1)


class Cyclotomic:
    """Element of ``Q(zeta_n)`` with at least one irrational coordinate."""

    __slots__ = ("n", "coeffs")

    def __new__(cls, n, coeffs):
        n = int(n)
        if n < 1:
            raise ValueError("conductor must be positive")
        if n > MAX_CONDUCTOR:
            raise ValueError(f"conductor {n} exceeds the cap {MAX_CONDUCTOR}")
        if n <= 2:
            total = Fraction(0)
            sign = -1 if n == 2 else 1
            for k, c in enumerate(coeffs):
                total += Fraction(c) * sign ** k
            return total
        return _make(n, _reduce(coeffs, n))

    # -- coercion ---------------------------------------------------------------
    @staticmethod
    def _common(a, b):
        na = a.n if isinstance(a, Cyclotomic) else 1
        nb = b.n if isinstance(b, Cyclotomic) else 1
        n = _lcm(na, nb)
        return n, _as_coeffs(a, n), _as_coeffs(b, n)

    @staticmethod
    def _ok(other):
        return isinstance(other, (Cyclotomic, Fraction, int))

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other):
        if not self._ok(other):
            return NotImplemented
        n, a, b = self._common(self, other)
        return _make(n, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return _make(self.n, tuple(-x for x in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not self._ok(other):
            return NotImplemented
        n, a, b = self._common(self, other)
        return _make(n, tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other):
        if not self._ok(other):
            return NotImplemented
        n, a, b = self._common(other, self)
        return _make(n, tuple(x - y for x, y in zip(a, b)))

    def __mul__(self, other):
        if isinstance(other, (Fraction, int)):
            if other == 0:
                return Fraction(0)
            return _make(self.n, tuple(x * other for x in self.coeffs))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        n, a, b = self._common(self, other)
        prodc = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prodc[i + j] += x * y
        return _make(n, _reduce(prodc, n))

    __rmul__ = __mul__

    def conjugate_by(self, k):
        """Galois action zeta -> zeta^k, ``gcd(k, n) == 1``."""
        poly = [Fraction(0)] * (k * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            poly[i * k] += c
        return _make(self.n, _reduce(poly, self.n))

    def norm(self):
        out = Fraction(1)
        for k in range(1, self.n):
            if gcd(k, self.n) == 1:
                out = out * (self.conjugate_by(k) if k > 1 else self)
        return Fraction(out)

    def inverse(self):
        others = Fraction(1)
        for k in range(2, self.n):
            if gcd(k, self.n) == 1:
                others = others * self.conjugate_by(k)
        nrm = Fraction(self * others)
        return others * (1 / nrm) if not isinstance(others, Fraction) else others / nrm

    def __truediv__(self, other):
        if isinstance(other, (Fraction, int)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return _make(self.n, tuple(x / other for x in self.coeffs))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not self._ok(other):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = Fraction(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (Fraction, int)):
            return False  # _make never stores a rational value as Cyclotomic
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        n, a, b = self._common(self, other)
        return a == b

    def __hash__(self):
        # normalized trace is invariant under passing to a larger conductor
        return hash(normalized_trace(self))

    def __bool__(self):
        return True

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"({c})*z{self.n}^{k}")
        return " + ".join(terms)


def normalized_trace(x):
    if not isinstance(x, Cyclotomic):
        return Fraction(x)
    n = x.n
    total = Fraction(0)
    for k, c in enumerate(x.coeffs):
        if c:
            d = n // gcd(k, n)
            total += c * Fraction(mobius(d), euler_phi(d))
    return total


def zeta(n, k=1):
    """``exp(2 pi i k / n)`` as an exact scalar."""
    n = int(n)
    k %= n
    if n == 1:
        return Fraction(1)
    if n == 2:
        return Fraction(-1) ** k
    if 2 * k % n == 0:
        return Fraction(1) if k == 0 else Fraction(-1)
    g = gcd(k, n)
    if n // g <= 2:
        return Fraction(-1) ** k
    poly = [0] * (k + 1)
    poly[k] = 1
    return Cyclotomic(n, poly)


def conductor(x):
    return x.n if isinstance(x, Cyclotomic) else 1


def is_rational(x):
    return not isinstance(x, Cyclotomic)


def as_scalar(x):
    if isinstance(x, Cyclotomic):
        return x
    return Fraction(x)


def inv(x):
    if isinstance(x, Cyclotomic):
        return x.inverse()
    return 1 / Fraction(x)


def root_of_unity_exponent(x, order):
    """``k`` with ``zeta(order, k) == x``, or None."""
    for k in range(order):
        if zeta(order, k) == x:
            return k
    return None


def size_key(x):
    """Magnitude used for deterministic pivot choice (smaller is preferred)."""
    if isinstance(x, Cyclotomic):
        return (1, sum(abs(c.numerator) + c.denominator for c in x.coeffs))
    x = Fraction(x)
    return (0, abs(x.numerator) + x.denominator)


# -- literal grammar --------------------------------------------------------------

def parse_scalar(obj):
    """Parse ``"-3/4"``, an int, or ``{"N": n, "coeffs": [...]}``."""
    if isinstance(obj, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        s = obj.strip()
        num, _, den = s.partition("/")
        if not num.lstrip("-").isdigit() or (den and not den.isdigit()):
            raise ValueError(f"bad rational literal {obj!r}")
        return Fraction(int(num), int(den) if den else 1)
    if isinstance(obj, dict) and set(obj) == {"N", "coeffs"}:
        n = int(obj["N"])
        coeffs = [parse_scalar(c) for c in obj["coeffs"]]
        if len(coeffs) > n:
            raise ValueError("more coefficients than the conductor allows")
        if n > MAX_CONDUCTOR:
            raise ValueError(f"conductor {n} exceeds the cap {MAX_CONDUCTOR}")
        return Cyclotomic(n, coeffs) if n > 2 else Cyclotomic(n, coeffs)
    raise ValueError(f"unrecognized scalar literal {obj!r}")


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x):
    if isinstance(x, Cyclotomic):
        return {"N": x.n, "coeffs": [format_rational(c) for c in x.coeffs]}
    return format_rational(x)
