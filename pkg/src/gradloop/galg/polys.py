"""Univariate polynomials over Q and F_p, enough to split minimal polynomials.

Polynomials are lists of coefficients, constant term first.  Over Q the
toolkit is square-free decomposition, rational roots, and an irreducibility
certificate from factor-degree patterns modulo several primes (a degree ``d``
factor over Q must be a sum of degrees of factors mod every good prime).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from ..exactnum.values import factor_int

PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73)


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f):
    return len(trim(f)) - 1


def monic(f):
    f = trim(f)
    lead = f[-1]
    return [Fraction(c) / lead for c in f]


def sub(f, g):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return trim(Fraction(a) - b for a, b in zip(f, g))


def mul(f, g):
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def divmod_poly(f, g):
    f = [Fraction(c) for c in trim(f)]
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    lead = Fraction(g[-1])
    while len(f) >= len(g) and f:
        c = f[-1] / lead
        k = len(f) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] -= c * b
        f = trim(f)
    return trim(q), f


def gcd_poly(f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, divmod_poly(f, g)[1]
    return monic(f) if f else []


def ext_gcd(f, g):
    """``(d, a, b)`` with ``a f + b g = d`` monic."""
    r0, r1 = trim(f), trim(g)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    lead = r0[-1]
    return monic(r0), [c / lead for c in s0], [c / lead for c in t0]


def derivative(f):
    return trim(Fraction(i) * c for i, c in enumerate(f) if i)


def squarefree_part(f):
    g = gcd_poly(f, derivative(f))
    return monic(divmod_poly(f, g)[0])


def is_squarefree(f):
    return deg(gcd_poly(f, derivative(f))) == 0


def _integer_primitive(f):
    f = [Fraction(c) for c in trim(f)]
    den = lcm(*(c.denominator for c in f))
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def _divisors(n, limit=10 ** 12):
    n = abs(n)
    if n == 0 or n > limit:
        return None
    divs = [1]
    for p, e in factor_int(n).items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return divs


def rational_roots(f):
    """All rational roots, or None when the coefficients are too large to try."""
    f = _integer_primitive(f)
    roots = []
    while f and f[0] == 0:
        roots.append(Fraction(0))
        f = f[1:]
    if len(f) <= 1:
        return roots
    ps, qs = _divisors(f[0]), _divisors(f[-1])
    if ps is None or qs is None:
        return None
    for p in ps:
        for q in qs:
            for r in (Fraction(p, q), Fraction(-p, q)):
                if r not in roots and evaluate(f, r) == 0:
                    roots.append(r)
    return roots


def evaluate(f, x):
    acc = Fraction(0)
    for c in reversed(trim(f)):
        acc = acc * x + c
    return acc


# -- arithmetic modulo p -------------------------------------------------------------

def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f, g, p):
    f = list(f)
    inv = pow(g[-1], -1, p)
    while len(f) >= len(g):
        c = f[-1] * inv % p
        k = len(f) - len(g)
        for i, b in enumerate(g):
            f[k + i] = (f[k + i] - c * b) % p
        _ptrim(f)
    return f


def _pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)


def _pgcd(f, g, p):
    f, g = _ptrim(list(f)), _ptrim(list(g))
    while g:
        f, g = g, _pmod(f, g, p)
    if f:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        e >>= 1
        if e:
            base = _pmod(_pmul(base, base, p), m, p)
    return result


def _pdiv(f, g, p):
    f = list(f)
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - len(g) + 1, 1)
    while len(f) >= len(g) and f:
        c = f[-1] * inv % p
        k = len(f) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] = (f[k + i] - c * b) % p
        _ptrim(f)
    return _ptrim(q)


def factor_degrees_mod_p(f, p):
    """Degrees of the irreducible factors of ``f`` mod ``p``; None if ``p`` is bad."""
    ints = _integer_primitive(f)
    if ints[-1] % p == 0:
        return None
    fp = _ptrim([c % p for c in ints])
    dfp = _ptrim([(i * c) % p for i, c in enumerate(fp)][1:])
    if len(_pgcd(fp, dfp, p)) > 1:
        return None  # not square-free mod p
    degrees = []
    h = [0, 1]
    rest = fp
    i = 0
    while len(rest) - 1 >= 2 * (i + 1):
        i += 1
        h = _ppowmod(h, p, rest, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(rest, _ptrim(diff), p)
        if len(g) > 1:
            degrees += [i] * ((len(g) - 1) // i)
            rest = _pdiv(rest, g, p)
            h = _pmod(h, rest, p)
    if len(rest) > 1:
        degrees.append(len(rest) - 1)
    return degrees


def _subset_sums(degrees):
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def irreducible_certified(f, primes=PRIMES):
    """True when the factor-degree patterns force irreducibility over Q."""
    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    possible = set(range(n + 1))
    for p in primes:
        ds = factor_degrees_mod_p(f, p)
        if ds is None:
            continue
        possible &= _subset_sums(ds)
        if possible == {0, n}:
            return True
    return False


def split(f):
    """Classify ``f`` over Q.

    Returns ``("irreducible", None)``, ``("nilpotent", s)`` with ``s`` the
    square-free part (when ``f`` has repeated factors), ``("coprime", (g, h))``
    with ``f = g h`` and ``gcd(g, h) = 1``, or ``("unknown", None)``.
    """
    f = monic(f)
    if not is_squarefree(f):
        return "nilpotent", squarefree_part(f)
    if irreducible_certified(f):
        return "irreducible", None
    roots = rational_roots(f)
    if roots:
        g = [-roots[0], Fraction(1)]
        return "coprime", (g, divmod_poly(f, g)[0])
    return "unknown", None
