"""Torus-side local factors built from powers of a unimodular Perron matrix B.

For a prime p with exponent m = pi(p), write

    det(xI - B^m) = x^(n+1) - a_1 x^n - ... - a_n x - 1

and form the reciprocal local factor

    1 - a_1 z + a_2 z^2 - ... + (-1)^n a_n z^n + p z^(n+1).

The z^k sign strictly alternates for 1 <= k <= n.  The printed closed form
ends "- a_n z^n" which agrees with alternation only for odd n; handles built
for even n carry a note saying so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .core_arith import IntMatrix, IntPolynomial, PerronData, char_poly, mat_pow, perron_eigen
from .dirichlet import LFunctionHandle, build_handle
from .errors import (InvalidInput, NormalFormMismatch, NotCoprime, NotFound, OrderMismatch)
from .euler import EulerFactor
from .primes import multiplicative_order


@dataclass(frozen=True)
class Constant:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidInput("Constant strategy needs k >= 1")


@dataclass(frozen=True)
class OrderMod:
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise InvalidInput("OrderMod strategy needs m >= 2")


@dataclass(frozen=True, eq=False)
class TraceMatch:
    """Least m <= bound whose torus factor equals the target's factor at p."""

    target: LFunctionHandle
    bound: int
    B: IntMatrix | None = None

    def __post_init__(self):
        if self.bound < 1:
            raise InvalidInput("TraceMatch search bound must be >= 1")


PiStrategy = Union[Constant, OrderMod, TraceMatch]


@dataclass(frozen=True)
class TorusDescriptor:
    label: str
    B: IntMatrix
    perron: PerronData | None = field(default=None, compare=False)

    def __post_init__(self):
        B = self.B
        if any(e < 0 for e in B.entries):
            raise InvalidInput(f"{self.label}: B must be non-negative")
        if abs(B.det()) != 1:
            raise InvalidInput(f"{self.label}: |det B| must be 1")
        if self.perron is None:
            object.__setattr__(self, "perron", perron_eigen(B, Fraction(1, 10**15)))
        if self.n > 0 and not self.perron.eigenvalue_low > 1:
            raise InvalidInput(f"{self.label}: Perron eigenvalue enclosure must lie above 1")

    @property
    def n(self) -> int:
        return self.B.order - 1

    @property
    def theta(self) -> tuple[Fraction, ...]:
        """theta_1..theta_n from the normalized eigenvector (1, theta_1, ..., theta_n)."""
        return self.perron.eigenvector[1:]

    def to_json(self, strategy: PiStrategy | None = None) -> dict:
        doc = {"label": self.label, "n": self.n, "B": list(self.B.entries)}
        if strategy is not None:
            doc["strategy"] = strategy_to_json(strategy)
        return doc


def golden_torus() -> TorusDescriptor:
    return TorusDescriptor("golden", IntMatrix.from_rows([[1, 1], [1, 0]]))


def degenerate_torus() -> TorusDescriptor:
    """n = 0: B = [[1]]; its factors are 1 + p z."""
    return TorusDescriptor("n=0", IntMatrix.from_rows([[1]]))


@dataclass(frozen=True)
class CharCoeffs:
    a: tuple[int, ...]

    def reconstruct(self) -> IntPolynomial:
        """x^(n+1) - a_1 x^n - ... - a_n x - 1 (ascending coefficients)."""
        n = len(self.a)
        return IntPolynomial([-1] + [-self.a[n - j] for j in range(1, n + 1)] + [1])


def torus_char_coeffs(B: IntMatrix, m: int) -> CharCoeffs:
    if m < 1:
        raise InvalidInput("exponent must be >= 1")
    cp = char_poly(mat_pow(B, m))
    if cp[0] != -1:
        raise NormalFormMismatch(f"det(xI - B^{m}) = {cp} has constant term {cp[0]}, not -1")
    n = B.order - 1
    # coefficient of x^(n+1-i) is -a_i
    return CharCoeffs(tuple(-cp[n + 1 - i] for i in range(1, n + 1)))


def torus_local_zeta(B: IntMatrix, m: int, p: int) -> EulerFactor:
    a = torus_char_coeffs(B, m).a
    coeffs = [1] + [(-1) ** k * a[k - 1] for k in range(1, len(a) + 1)] + [p]
    return EulerFactor.from_ints(p, coeffs)


def literal_sign_differs(n: int) -> bool:
    """True when the printed '- a_n z^n' disagrees with strict alternation."""
    return n >= 2 and n % 2 == 0


def pi_of_p(strategy: PiStrategy, p: int, B: IntMatrix | None = None) -> int:
    if isinstance(strategy, Constant):
        return strategy.k
    if isinstance(strategy, OrderMod):
        if math.gcd(p, strategy.m) != 1:
            raise NotCoprime(f"gcd({p}, {strategy.m}) != 1")
        return multiplicative_order(p, strategy.m)
    if isinstance(strategy, TraceMatch):
        B = B if B is not None else strategy.B
        if B is None:
            raise InvalidInput("TraceMatch needs the torus matrix B")
        target = strategy.target.factors.get(p)
        if target is None:
            raise NotFound(f"target {strategy.target.label} has no factor at {p}")
        for m in range(1, strategy.bound + 1):
            try:
                if torus_local_zeta(B, m, p).same_poly(target):
                    return m
            except NormalFormMismatch:
                continue
        raise NotFound(f"no m <= {strategy.bound} matches the target factor at {p}")
    raise InvalidInput(f"unknown strategy {strategy!r}")


def torus_l_handle(torus: TorusDescriptor, strategy: PiStrategy, prime_bound: int,
                   threads: int = 1) -> LFunctionHandle:
    notes = []
    if literal_sign_differs(torus.n):
        notes.append(f"n={torus.n} is even: the printed local factor ends '- a_n z^n', "
                     "strict alternation gives '+ a_n z^n'; alternation used")

    def factor(p):
        return torus_local_zeta(torus.B, pi_of_p(strategy, p, torus.B), p)

    return build_handle(f"L(torus {torus.label}, {strategy_label(strategy)})", torus.n + 1,
                        prime_bound, factor,
                        skip=(NotFound, NotCoprime, NormalFormMismatch),
                        threads=threads, notes=notes)


def strategy_label(strategy: PiStrategy) -> str:
    if isinstance(strategy, Constant):
        return f"Constant({strategy.k})"
    if isinstance(strategy, OrderMod):
        return f"OrderMod({strategy.m})"
    return f"TraceMatch({strategy.target.label}, M={strategy.bound})"


def strategy_to_json(strategy: PiStrategy) -> dict:
    if isinstance(strategy, Constant):
        return {"kind": "constant", "parameter": strategy.k}
    if isinstance(strategy, OrderMod):
        return {"kind": "order_mod", "parameter": strategy.m}
    return {"kind": "trace_match",
            "parameter": {"target": strategy.target.to_json(), "bound": strategy.bound}}


def strategy_from_json(doc: dict, load_handle=None) -> PiStrategy:
    """``load_handle`` resolves a trace_match target given as a path string."""
    try:
        kind, param = doc["kind"], doc.get("parameter")
        if kind == "constant":
            return Constant(int(param))
        if kind == "order_mod":
            return OrderMod(int(param))
        if kind == "trace_match":
            target = param["target"]
            if isinstance(target, str):
                if load_handle is None:
                    raise InvalidInput("trace_match target given by path but no loader")
                target = load_handle(target)
            else:
                target = LFunctionHandle.from_json(target)
            return TraceMatch(target, int(param["bound"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"bad strategy document: {exc}") from exc
    raise InvalidInput(f"unknown strategy kind {kind!r}")


def torus_from_json(doc: dict, load_handle=None) -> tuple[TorusDescriptor, PiStrategy | None]:
    try:
        n = int(doc["n"])
        entries = [int(x) for x in doc["B"]]
        if len(entries) != (n + 1) ** 2:
            raise InvalidInput(f"B must have {(n + 1) ** 2} entries for n={n}")
        torus = TorusDescriptor(str(doc["label"]), IntMatrix(n + 1, tuple(entries)))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise InvalidInput(f"bad torus document: {exc}") from exc
    strategy = strategy_from_json(doc["strategy"], load_handle) if "strategy" in doc else None
    return torus, strategy


# -- SO(m, m | Z) -------------------------------------------------------------

def _mat(x) -> IntMatrix:
    return x if isinstance(x, IntMatrix) else IntMatrix.from_rows(x)


def so_mm_violations(A, B, C, D) -> list[str]:
    """Names of the block identities that fail (empty when the matrix is in SO(m,m|Z))."""
    A, B, C, D = map(_mat, (A, B, C, D))
    m = A.order
    if any(X.order != m for X in (B, C, D)):
        raise OrderMismatch("all four blocks must share one order")
    ident, zero = IntMatrix.identity(m), IntMatrix.zero(m)
    At, Bt, Ct, Dt = (X.transpose() for X in (A, B, C, D))
    bad = []
    if At @ D + Ct @ B != ident:
        bad.append("A^t D + C^t B = I")
    if At @ C + Ct @ A != zero:
        bad.append("A^t C + C^t A = 0")
    if Bt @ D + Dt @ B != zero:
        bad.append("B^t D + D^t B = 0")
    return bad


def assemble(A, B, C, D) -> list[list[int]]:
    A, B, C, D = (_mat(X).rows() for X in (A, B, C, D))
    return [ra + rb for ra, rb in zip(A, B)] + [rc + rd for rc, rd in zip(C, D)]


def _split_form(u: Sequence[int], v: Sequence[int], m: int) -> int:
    # polarization of x_1 x_{m+1} + ... + x_m x_{2m}
    return sum(u[i] * v[m + i] + u[m + i] * v[i] for i in range(m))


def preserves_split_form(A, B, C, D) -> bool:
    """Check q(Mx) = q(x) through the bilinear form on all pairs of basis vectors."""
    rows = assemble(A, B, C, D)
    size = len(rows)
    m = size // 2
    cols = [[rows[i][j] for i in range(size)] for j in range(size)]
    basis = [[int(i == j) for i in range(size)] for j in range(size)]
    return all(_split_form(cols[i], cols[j], m) == _split_form(basis[i], basis[j], m)
               for i in range(size) for j in range(i, size))


def is_so_mm_Z(A, B, C, D) -> bool:
    ok = not so_mm_violations(A, B, C, D)
    assert ok == preserves_split_form(A, B, C, D), "block identities and form check disagree"
    return ok
