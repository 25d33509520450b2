"""L-function handles: Dirichlet coefficients, numeric values and comparisons.

A handle is an *incomplete* Euler product: a finite map prime -> EulerFactor
plus the primes deliberately dropped.  Coefficients a_n vanish whenever n is
divisible by an excluded prime.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import mpmath

from .errors import DomainError, InvalidInput, MissingPrime, PoleWarning
from .euler import CycInt, EulerFactor
from .primes import sieve

DEFAULT_PRECISION = 96


@dataclass(frozen=True, eq=False)
class LFunctionHandle:
    label: str
    degree: int
    factors: dict[int, EulerFactor] = field(default_factory=dict)
    exclusions: dict[int, str] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", dict(sorted(self.factors.items())))
        object.__setattr__(self, "exclusions", dict(sorted(self.exclusions.items())))
        overlap = set(self.factors) & set(self.exclusions)
        if overlap:
            raise InvalidInput(f"primes both factored and excluded: {sorted(overlap)}")
        for p, fac in self.factors.items():
            if fac.degree > self.degree:
                raise InvalidInput(f"factor at {p} has degree {fac.degree} > {self.degree}")

    def covers(self, p: int) -> bool:
        return p in self.factors or p in self.exclusions

    def is_integral(self) -> bool:
        return all(f.is_integral() for f in self.factors.values())

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "degree": self.degree,
            "factors": {str(p): f.to_json() for p, f in self.factors.items()},
            "exclusions": list(self.exclusions),
            "exclusion_reasons": {str(p): r for p, r in self.exclusions.items()},
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "LFunctionHandle":
        try:
            reasons = doc.get("exclusion_reasons", {})
            return cls(
                label=str(doc["label"]),
                degree=int(doc["degree"]),
                factors={int(p): EulerFactor.from_json(int(p), c) for p, c in doc["factors"].items()},
                exclusions={int(p): reasons.get(str(p), "excluded") for p in doc.get("exclusions", ())},
                notes=tuple(doc.get("notes", ())),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"bad handle document: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)


def coeffs_from_euler(handle: LFunctionHandle, n_terms: int) -> list:
    """Dirichlet coefficients a_1..a_N (returned as a list, index n-1 holds a_n).

    Integers when every factor is integral, CycInt otherwise.
    """
    if n_terms < 1:
        raise InvalidInput("N must be >= 1")
    integral = handle.is_integral()
    one = 1 if integral else CycInt.integer(1)
    zero = 0 if integral else CycInt.integer(0)
    a = [zero] * (n_terms + 1)
    a[1] = one
    spf = list(range(n_terms + 1))
    for q in range(2, math.isqrt(n_terms) + 1):
        if spf[q] == q:
            for k in range(q * q, n_terms + 1, q):
                if spf[k] == k:
                    spf[k] = q
    prime_powers: dict[int, list] = {}
    for p in sieve(n_terms):
        if p in handle.exclusions:
            prime_powers[p] = None
        elif p in handle.factors:
            kmax = int(math.log(n_terms, p)) + 2
            prime_powers[p] = handle.factors[p].inverse_series(kmax)
        else:
            raise MissingPrime(f"{handle.label}: no factor or exclusion at p={p}")
    for n in range(2, n_terms + 1):
        p = spf[n]
        m, k = n, 0
        while m % p == 0:
            m //= p
            k += 1
        series = prime_powers[p]
        if series is None:
            a[n] = zero
        else:
            val = series[k] if m == 1 else series[k] * a[m]
            a[n] = val if integral else CycInt.coerce(val)
    return a[1:]


@dataclass(frozen=True)
class Evaluation:
    value: object
    tail_bound: float
    prime_bound: int
    precision: int
    poles: tuple[int, ...] = ()


def prime_tail(s: float, prime_bound: int) -> float:
    """Upper bound for sum_{p > P} p^-s, via the integral of x^-s over [P, inf)."""
    return float(prime_bound) ** (1 - s) / (s - 1)


def evaluate(handle: LFunctionHandle, s, prime_bound: int,
             precision: int = DEFAULT_PRECISION) -> Evaluation:
    """Truncated Euler product prod_{p <= P} factor(p^-s)^-1.

    ``tail_bound`` is degree * sum_{p>P} p^-s, the first-order size of the
    missing log-factors; factors vanishing at p^-s are skipped and reported.
    """
    if s <= 1:
        raise DomainError(f"s must exceed 1, got {s}")
    poles = []
    with mpmath.workprec(precision):
        s_mp = mpmath.mpf(s)
        value = mpmath.mpf(1)
        for p, fac in handle.factors.items():
            if p > prime_bound:
                break
            v = fac.evaluate(mpmath.power(p, -s_mp))
            if v == 0:
                poles.append(p)
                continue
            value = value / v
        if isinstance(value, mpmath.mpc) and value.imag == 0:
            value = value.real
        value = +value
    if poles:
        warnings.warn(f"{handle.label}: factor vanishes at p={poles}", PoleWarning, stacklevel=2)
    return Evaluation(value, handle.degree * prime_tail(float(s), prime_bound), prime_bound,
                      precision, tuple(poles))


def dirichlet_partial_sum(coeffs: Sequence, s, precision: int = DEFAULT_PRECISION):
    with mpmath.workprec(precision):
        s_mp = mpmath.mpf(s)
        terms = []
        for n, c in enumerate(coeffs, start=1):
            v = c if isinstance(c, int) else c.to_mpc()
            if v:
                terms.append(v * mpmath.power(n, -s_mp))
        return +mpmath.fsum(terms)


class Verdict(enum.Enum):
    IDENTICAL_ON_OVERLAP = "IdenticalOnOverlap"
    FINITE_EXCEPTION_SET = "FiniteExceptionSet"
    DIVERGENT = "Divergent"


@dataclass(frozen=True)
class Mismatch:
    prime: int
    left: EulerFactor
    right: EulerFactor


@dataclass(frozen=True)
class ComparisonReport:
    left_label: str
    right_label: str
    prime_bound: int
    term_bound: int
    matched_primes: int
    mismatched_primes: tuple[Mismatch, ...]
    excluded_primes: tuple[int, ...]
    coefficient_max_abs_diff: float
    verdict: Verdict

    @property
    def exception_count(self) -> int:
        return len(self.mismatched_primes)

    def verdict_text(self) -> str:
        if self.verdict is Verdict.FINITE_EXCEPTION_SET:
            return f"FiniteExceptionSet({self.exception_count})"
        return self.verdict.value

    def to_json(self) -> dict:
        return {
            "left": self.left_label,
            "right": self.right_label,
            "prime_bound": self.prime_bound,
            "term_bound": self.term_bound,
            "matched_primes": self.matched_primes,
            "mismatched_primes": [
                {"p": m.prime, "left": m.left.to_json(), "right": m.right.to_json()}
                for m in self.mismatched_primes],
            "excluded_primes": list(self.excluded_primes),
            "coefficient_max_abs_diff": format(self.coefficient_max_abs_diff, ".17g"),
            "verdict": self.verdict_text(),
        }


def compare(a: LFunctionHandle, b: LFunctionHandle, prime_bound: int,
            term_bound: int) -> ComparisonReport:
    """Prime-by-prime exact comparison on the overlap of two handles.

    Mismatches confined below P/2 give FiniteExceptionSet; any mismatch in
    the window [P/2, P] gives Divergent.
    """
    matched, mismatched, excluded = 0, [], []
    for p in sieve(max(prime_bound, term_bound)):
        for h in (a, b):
            if not h.covers(p):
                raise MissingPrime(f"{h.label}: no factor or exclusion at p={p}")
        if p > prime_bound:
            continue
        if p in a.exclusions or p in b.exclusions:
            excluded.append(p)
        elif a.factors[p].same_poly(b.factors[p]):
            matched += 1
        else:
            mismatched.append(Mismatch(p, a.factors[p], b.factors[p]))
    ca, cb = coeffs_from_euler(a, term_bound), coeffs_from_euler(b, term_bound)
    diff = 0.0
    for x, y in zip(ca, cb):
        d = x - y
        diff = max(diff, abs(d) if isinstance(d, int) else abs(complex(d)))
    if not mismatched:
        verdict = Verdict.IDENTICAL_ON_OVERLAP
    elif any(2 * m.prime >= prime_bound for m in mismatched):
        verdict = Verdict.DIVERGENT
    else:
        verdict = Verdict.FINITE_EXCEPTION_SET
    return ComparisonReport(a.label, b.label, prime_bound, term_bound, matched,
                            tuple(mismatched), tuple(excluded), float(diff), verdict)


def product_handle(parts: Iterable[tuple[LFunctionHandle, int]],
                   label: str | None = None) -> LFunctionHandle:
    """Per-prime product of handles raised to exponents; exclusions are unioned."""
    parts = list(parts)
    if not parts:
        raise InvalidInput("product of no handles")
    if any(e < 1 for _, e in parts):
        raise InvalidInput("exponents must be >= 1")
    primes = sorted(set().union(*(set(h.factors) | set(h.exclusions) for h, _ in parts)))
    factors, exclusions = {}, {}
    for p in primes:
        reasons = []
        for h, _ in parts:
            if not h.covers(p):
                raise MissingPrime(f"{h.label}: no factor or exclusion at p={p}")
            if p in h.exclusions:
                reasons.append(f"{h.label}: {h.exclusions[p]}")
        if reasons:
            exclusions[p] = "; ".join(reasons)
            continue
        acc = EulerFactor.from_ints(p, (1,))
        for h, e in parts:
            acc = acc * h.factors[p] ** e
        factors[p] = acc
    if label is None:
        label = " * ".join(h.label if e == 1 else f"({h.label})^{e}" for h, e in parts)
    notes = tuple(n for h, _ in parts for n in h.notes)
    return LFunctionHandle(label, sum(h.degree * e for h, e in parts), factors, exclusions, notes)


def coeffs_to_csv(coeffs: Sequence) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "a_n(real)", "a_n(imag)"])
    for n, c in enumerate(coeffs, start=1):
        z = complex(c) if not isinstance(c, int) else complex(c, 0)
        w.writerow([n, format(z.real + 0.0, ".17g"), format(z.imag + 0.0, ".17g")])
    return buf.getvalue()


def build_handle(label: str, degree: int, prime_bound: int, factor_fn, skip=(),
                 threads: int = 1, notes: Sequence[str] = ()) -> LFunctionHandle:
    """Run ``factor_fn(p)`` over primes <= P; exceptions in ``skip`` become exclusions.

    With threads > 1 the per-prime work is fanned out, but assembly is in
    ascending prime order regardless.
    """
    skip = tuple(skip)

    def one(p):
        try:
            return p, factor_fn(p), None
        except skip as exc:
            return p, None, f"{type(exc).__name__}: {exc}"

    primes = sieve(prime_bound)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, primes))
    else:
        results = [one(p) for p in primes]
    factors = {p: f for p, f, _ in results if f is not None}
    exclusions = {p: why for p, f, why in results if f is None}
    return LFunctionHandle(label, degree, factors, exclusions, tuple(notes))
