"""Exact integer polynomials and matrices.

Polynomials are dense coefficient tuples, ascending by degree; the zero
polynomial is the empty tuple.  Matrices are square and stored row-major.
Everything here is exact integer arithmetic except :func:`perron_eigen`,
which returns rigorous *rational* enclosures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInput, NonConvergence, NotPrimitive

__all__ = [
    "IntPolynomial",
    "IntMatrix",
    "PerronData",
    "char_poly",
    "mat_pow",
    "perron_eigen",
    "poly_mul",
    "poly_eval_rational",
    "det_bareiss",
]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense univariate polynomial over Z, coefficients ascending by degree."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        result, base = IntPolynomial((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * self.coeffs[k] for k in range(1, len(self.coeffs)))

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Exact division by a monic polynomial."""
        if not divisor.is_monic():
            raise InvalidInput("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c:
                quot[k - dd] = c
                for j in range(dd + 1):
                    rem[k - dd + j] -= c * divisor.coeffs[j]
        return IntPolynomial(quot), IntPolynomial(rem[:dd])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = str(a) if (a != 1 or k == 0) else ""
            terms.append((sign, body + ("*" if body and mono else "") + mono))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {t}" for s, t in terms[1:]])


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if a.is_zero() or b.is_zero():
        return IntPolynomial()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPolynomial(out)


def poly_eval_rational(f: IntPolynomial, x) -> Fraction:
    """Horner evaluation at a rational point, exactly."""
    return Fraction(f(Fraction(x)))


@dataclass(frozen=True)
class IntMatrix:
    order: int
    entries: tuple[int, ...]

    def __post_init__(self):
        ent = tuple(int(e) for e in self.entries)
        if self.order < 1 or len(ent) != self.order * self.order:
            raise InvalidInput(f"need {self.order}x{self.order} entries, got {len(ent)}")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InvalidInput("matrix must be square")
        return cls(n, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, n: int) -> "IntMatrix":
        return cls(n, (0,) * (n * n))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.order + j]

    def rows(self) -> list[list[int]]:
        n = self.order
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def transpose(self) -> "IntMatrix":
        n = self.order
        return IntMatrix(n, tuple(self[j, i] for i in range(n) for j in range(n)))

    def trace(self) -> int:
        return sum(self[i, i] for i in range(self.order))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(self.order, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.order, tuple(-a for a in self.entries))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        n = self.order
        if other.order != n:
            raise InvalidInput("order mismatch in matrix product")
        a, b = self.rows(), other.rows()
        bt = list(zip(*b))
        return IntMatrix(n, tuple(sum(x * y for x, y in zip(a[i], bt[j]))
                                  for i in range(n) for j in range(n)))

    def apply(self, v: Sequence) -> list:
        n = self.order
        return [sum(self[i, j] * v[j] for j in range(n)) for i in range(n)]

    def det(self) -> int:
        return det_bareiss(self.rows())


def det_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def mat_pow(m: IntMatrix, k: int) -> IntMatrix:
    if k < 0:
        raise InvalidInput("exponent must be non-negative")
    result, base = IntMatrix.identity(m.order), m
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


def char_poly(m: IntMatrix) -> IntPolynomial:
    """det(xI - M) by the Faddeev-LeVerrier recurrence, kept in Z.

    The divisions by k are exact over the integers (Newton's identities),
    so no rational intermediate ever appears.
    """
    n = m.order
    c = [0] * (n + 1)
    c[n] = 1
    mk = IntMatrix.zero(n)
    ident = IntMatrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk + IntMatrix(n, tuple(c[n - k + 1] * e for e in ident.entries))
        t = (m @ mk).trace()
        q, r = divmod(-t, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact over Z"
        c[n - k] = q
    return IntPolynomial(c)


@dataclass(frozen=True)
class PerronData:
    """Rational enclosure of a Perron-Frobenius eigenvalue.

    ``eigenvector`` holds the final iterate scaled to first coordinate 1; it is
    an approximation whose accuracy tracks ``error_bound`` but is not enclosed.
    """

    eigenvalue_low: Fraction
    eigenvalue_high: Fraction
    eigenvector: tuple[Fraction, ...]
    error_bound: Fraction
    iterations: int = 0

    @property
    def eigenvalue(self) -> Fraction:
        return (self.eigenvalue_low + self.eigenvalue_high) / 2

    def contains(self, x) -> bool:
        return self.eigenvalue_low <= x <= self.eigenvalue_high


def _is_primitive(m: IntMatrix) -> bool:
    n = m.order
    if any(e < 0 for e in m.entries):
        return False
    pattern = [[m[i, j] > 0 for j in range(n)] for i in range(n)]
    power = pattern
    for _ in range(n * n):
        if all(all(r) for r in power):
            return True
        power = [[any(power[i][k] and pattern[k][j] for k in range(n)) for j in range(n)]
                 for i in range(n)]
    return all(all(r) for r in power)


MAX_SWEEPS = 10_000


def perron_eigen(m: IntMatrix, tolerance=Fraction(1, 10**12)) -> PerronData:
    """Collatz-Wielandt enclosure of the Perron root of a primitive matrix.

    For any strictly positive x, min_i (Mx)_i/x_i <= lambda <= max_i (Mx)_i/x_i.
    The iterate is rounded to a dyadic grid each sweep to keep rationals small;
    rounding preserves positivity, so every enclosure stays rigorous.
    """
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise InvalidInput("tolerance must be positive")
    if not _is_primitive(m):
        raise NotPrimitive("no power of the matrix up to order^2 is strictly positive")
    n = m.order
    bits = max(64, 2 * math.ceil(math.log2(1 / tolerance)) + 32)
    scale = 1 << bits
    x = [Fraction(1)] * n
    lo = hi = None
    for sweep in range(1, MAX_SWEEPS + 1):
        y = m.apply(x)
        ratios = [yi / xi for yi, xi in zip(y, x)]
        lo, hi = min(ratios), max(ratios)
        if hi - lo <= tolerance:
            vec = tuple(xi / x[0] for xi in x)
            return PerronData(lo, hi, vec, (hi - lo) / 2, sweep)
        top = max(y)
        x = [Fraction(max(1, round(yi / top * scale)), scale) for yi in y]
    raise NonConvergence(f"width {float(hi - lo):.3g} after {MAX_SWEEPS} sweeps")
