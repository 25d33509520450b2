"""Primes, multiplicative orders, cyclotomic polynomials and splitting shapes mod p.

Polynomials over F_p are plain lists of residues, ascending, with no
trailing zeros; only the *degrees* of irreducible factors are ever computed.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import sympy

from .core_arith import IntPolynomial
from .errors import InvalidInput, NotCoprime, NotMonic, NotSquareFree


def sieve(limit: int) -> list[int]:
    """Primes <= limit in ascending order (Eratosthenes)."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for q in range(2, math.isqrt(limit) + 1):
        if flags[q]:
            flags[q * q::q] = bytearray(len(range(q * q, limit + 1, q)))
    return [i for i, f in enumerate(flags) if f]


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of |n| (empty for 0 and +-1)."""
    n = abs(n)
    if n < 2:
        return []
    return sorted(sympy.factorint(n))


def euler_phi(m: int) -> int:
    out = m
    for q in prime_factors(m):
        out -= out // q
    return out


def multiplicative_order(p: int, m: int) -> int:
    """Least k >= 1 with p^k = 1 (mod m)."""
    if m < 2:
        raise InvalidInput("modulus must be >= 2")
    if math.gcd(p, m) != 1:
        raise NotCoprime(f"gcd({p}, {m}) != 1")
    phi = euler_phi(m)
    order = phi
    for q in prime_factors(phi):
        while order % q == 0 and pow(p, order // q, m) == 1:
            order //= q
    return order


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPolynomial:
    """Phi_m by exact division of x^m - 1 by Phi_d for the proper divisors d of m."""
    if m < 1:
        raise InvalidInput("cyclotomic index must be positive")
    f = IntPolynomial([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            f, r = f.divmod_monic(cyclotomic(d))
            assert r.is_zero()
    return f


# -- arithmetic in F_p[x] ---------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _mulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _rem(out, f, p)


def _rem(a, f, p):
    """a mod f for monic f."""
    a = [c % p for c in a]
    df = len(f) - 1
    for k in range(len(a) - 1, df - 1, -1):
        c = a[k]
        if c:
            for j in range(df + 1):
                a[k - df + j] = (a[k - df + j] - c * f[j]) % p
    return _trim(a[:df] if len(a) > df else a)


def _divexact(a, b, p):
    """Quotient a / b over F_p (b nonzero)."""
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        q[k - db] = c
        if c:
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return _trim(q)


def _gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        b = [c * inv % p for c in b]
        a, b = b, _rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _powmod(base, e, f, p):
    result, base = [1], _rem(base, f, p)
    while e:
        if e & 1:
            result = _mulmod(result, base, f, p)
        base = _mulmod(base, base, f, p)
        e >>= 1
    return result


@dataclass(frozen=True)
class DegreePattern:
    """Degrees of the irreducible factors of f mod p, with multiplicity (descending)."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self.degrees).items()))

    @property
    def lcm(self) -> int:
        return math.lcm(*self.degrees) if self.degrees else 1


def degree_pattern(f: IntPolynomial, p: int) -> DegreePattern:
    """Distinct-degree factorization shape of a monic f over F_p.

    Raises NotSquareFree when gcd(f, f') mod p is non-constant.
    """
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    if f.degree < 1:
        raise InvalidInput("degree must be >= 1")
    g = [c % p for c in f.coeffs]
    dg = _trim([c % p for c in f.derivative().coeffs])
    if not dg or len(_gcd(g, dg, p)) > 1:
        raise NotSquareFree(f"{f} is not squarefree mod {p}")
    degrees: list[int] = []
    x = [0, 1]
    h = x
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, g, p)
        common = _gcd(g, _sub(h, x, p), p)
        k = len(common) - 1
        if k > 0:
            degrees += [d] * (k // d)
            g = _divexact(g, common, p)
            h = _rem(h, g, p)
    if len(g) - 1 > 0:
        degrees.append(len(g) - 1)
    return DegreePattern(tuple(degrees))
