"""Exact roots of unity, cyclotomic integers and Euler factors.

A :class:`CycInt` is an element of Z[zeta_N] written in the power basis
1, zeta, ..., zeta^(phi(N)-1) reduced modulo Phi_N.  That basis is a
Q-basis of Q(zeta_N), so the representation is canonical at a fixed level
and equality reduces to lifting both sides to lcm(N, M).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

from .core_arith import IntPolynomial
from .errors import InvalidInput
from .primes import cyclotomic


@dataclass(frozen=True, order=True)
class Rotation:
    """The unit-circle value exp(2*pi*i*numerator/denominator), gcd-reduced."""

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        den = int(self.denominator)
        if den < 1:
            raise InvalidInput("rotation denominator must be >= 1")
        num = int(self.numerator) % den
        g = math.gcd(num, den)
        object.__setattr__(self, "numerator", num // g)
        object.__setattr__(self, "denominator", den // g)

    def __mul__(self, other: "Rotation") -> "Rotation":
        d = math.lcm(self.denominator, other.denominator)
        return Rotation(self.numerator * (d // self.denominator)
                        + other.numerator * (d // other.denominator), d)

    def __pow__(self, k: int) -> "Rotation":
        return Rotation(self.numerator * k, self.denominator)

    @property
    def order(self) -> int:
        return self.denominator

    def to_cyc(self) -> "CycInt":
        return CycInt.zeta(self.denominator, self.numerator)

    def to_complex(self) -> complex:
        return complex(mpmath.expjpi(mpmath.mpf(2 * self.numerator) / self.denominator))


@lru_cache(maxsize=None)
def _phi_coeffs(n: int) -> tuple[int, ...]:
    return cyclotomic(n).coeffs


def _reduce(poly: Sequence[int], n: int) -> tuple[int, ...]:
    f = _phi_coeffs(n)
    d = len(f) - 1
    a = list(poly) + [0] * max(0, d - len(poly))
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if c:
            for j in range(d + 1):
                a[k - d + j] -= c * f[j]
    return tuple(a[:d])


class CycInt:
    """Cyclotomic integer at level N (an element of Z[exp(2*pi*i/N)])."""

    __slots__ = ("level", "coeffs")
    __hash__ = None  # equality lifts across levels; no cheap canonical hash

    def __init__(self, level: int, coeffs: Sequence[int]):
        level = int(level)
        if level == 2:
            level = 1
        self.level = level
        self.coeffs = _reduce([int(c) for c in coeffs], level)

    @classmethod
    def integer(cls, c: int) -> "CycInt":
        return cls(1, (c,))

    @classmethod
    def zeta(cls, level: int, k: int = 1) -> "CycInt":
        k %= level
        if level <= 2:
            return cls(1, ((-1) ** k,))
        return cls(level, [0] * k + [1])

    @staticmethod
    def coerce(x) -> "CycInt":
        if isinstance(x, CycInt):
            return x
        if isinstance(x, int):
            return CycInt.integer(x)
        if isinstance(x, Rotation):
            return x.to_cyc()
        raise TypeError(f"cannot coerce {type(x).__name__} to CycInt")

    def lift(self, level: int) -> "CycInt":
        if level == self.level or (self.level == 1 and level <= 2):
            return self
        if level % self.level:
            raise InvalidInput(f"cannot lift level {self.level} to {level}")
        step = level // self.level
        poly = [0] * (step * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for k, c in enumerate(self.coeffs):
            poly[k * step] = c
        return CycInt(level, poly)

    def _pair(self, other):
        other = CycInt.coerce(other)
        if other.level == self.level:
            return self, other, self.level
        n = math.lcm(self.level, other.level)
        return self.lift(n), other.lift(n), n

    def __add__(self, other):
        a, b, n = self._pair(other)
        m = max(len(a.coeffs), len(b.coeffs))
        return CycInt(n, [(a.coeffs[i] if i < len(a.coeffs) else 0)
                          + (b.coeffs[i] if i < len(b.coeffs) else 0) for i in range(m)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.level, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-CycInt.coerce(other))

    def __rsub__(self, other):
        return CycInt.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.level, [c * other for c in self.coeffs])
        a, b, n = self._pair(other)
        if not a.coeffs or not b.coeffs:
            return CycInt(n, ())
        out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    out[i + j] += x * y
        return CycInt(n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            a, b, _ = self._pair(other)
        except TypeError:
            return NotImplemented
        return a.coeffs == b.coeffs

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def to_mpc(self):
        n = self.level
        return mpmath.fsum(c * mpmath.expjpi(mpmath.mpf(2 * k) / n)
                           for k, c in enumerate(self.coeffs) if c) if self.coeffs else mpmath.mpc(0)

    def __complex__(self) -> complex:
        return complex(self.to_mpc())

    def terms(self) -> list[list[int]]:
        """Sum-of-rotations form: [[num, den, weight], ...] with reduced rotations."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c:
                r = Rotation(k, self.level)
                out.append([r.numerator, r.denominator, c])
        return out

    @classmethod
    def from_terms(cls, terms: Iterable[Sequence[int]]) -> "CycInt":
        acc = cls.integer(0)
        for num, den, weight in terms:
            acc = acc + cls.zeta(int(den), int(num)) * int(weight)
        return acc

    def __repr__(self):
        if self.is_integer():
            return f"CycInt({int(self)})"
        return f"CycInt(level={self.level}, coeffs={self.coeffs})"


def expand_rotations(rotations: Iterable[Rotation]) -> list[CycInt]:
    """Coefficients of prod (1 - rho z) over the given rotations, exactly."""
    rots = sorted(rotations)
    level = math.lcm(*(r.denominator for r in rots)) if rots else 1
    poly = [CycInt.integer(1).lift(level)]
    for r in rots:
        rho = CycInt.zeta(r.denominator, r.numerator).lift(level)
        nxt = poly + [CycInt(level, ())]
        for k in range(len(poly)):
            nxt[k + 1] = nxt[k + 1] - rho * poly[k]
        poly = nxt
    return poly


def _strip_cyc(coeffs: list[CycInt]) -> tuple[CycInt, ...]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True, eq=False)
class EulerFactor:
    """Reciprocal local factor 1 + c_1 z + ... + c_d z^d at a prime."""

    prime: int
    coeffs: tuple[CycInt, ...]

    def __post_init__(self):
        cs = _strip_cyc([CycInt.coerce(c) for c in self.coeffs])
        if not cs or cs[0] != 1:
            raise InvalidInput(f"Euler factor at {self.prime} must have constant term 1")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_ints(cls, prime: int, coeffs: Iterable[int]) -> "EulerFactor":
        return cls(prime, tuple(CycInt.integer(c) for c in coeffs))

    @classmethod
    def from_poly(cls, prime: int, poly: IntPolynomial) -> "EulerFactor":
        return cls.from_ints(prime, poly.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_integral(self) -> bool:
        return all(c.is_integer() for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, EulerFactor):
            return NotImplemented
        return self.prime == other.prime and self.coeffs == other.coeffs

    def same_poly(self, other: "EulerFactor") -> bool:
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other: "EulerFactor") -> "EulerFactor":
        out = [CycInt.integer(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return EulerFactor(self.prime, tuple(out))

    def __pow__(self, k: int) -> "EulerFactor":
        result = EulerFactor.from_ints(self.prime, (1,))
        for _ in range(k):
            result = result * self
        return result

    def complex_coeffs(self) -> list[complex]:
        return [complex(c) for c in self.coeffs]

    def evaluate(self, z):
        """Value of the polynomial at z (mpmath number)."""
        acc = mpmath.mpf(0)
        for c in reversed(self.coeffs):
            v = int(c) if c.is_integer() else c.to_mpc()
            acc = acc * z + v
        return acc

    def inverse_series(self, terms: int) -> list:
        """First ``terms`` coefficients of 1/factor as a power series in z."""
        cs = self.int_coeffs() if self.is_integral() else self.coeffs
        d = len(cs) - 1
        b = [1 if self.is_integral() else CycInt.integer(1)]
        for k in range(1, terms):
            acc = 0
            for j in range(1, min(k, d) + 1):
                acc = acc + cs[j] * b[k - j]
            b.append(-acc)
        return b[:terms]

    def to_json(self) -> list:
        return [int(c) if c.is_integer() else c.terms() for c in self.coeffs]

    @classmethod
    def from_json(cls, prime: int, data: Sequence) -> "EulerFactor":
        cs = []
        for c in data:
            cs.append(CycInt.integer(int(c)) if isinstance(c, int) else CycInt.from_terms(c))
        return cls(prime, tuple(cs))

    def __repr__(self):
        body = ", ".join(str(int(c)) if c.is_integer() else repr(c) for c in self.coeffs)
        return f"EulerFactor(p={self.prime}, [{body}])"
