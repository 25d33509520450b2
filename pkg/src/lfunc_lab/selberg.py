"""Length spectra l = log N(P) and the associated Selberg-type product.

The product uses the exponential normalization (1 - exp(-s l))^-1, which
with l = log N(P) is exactly the Dedekind factor (1 - N(P)^-s)^-1.  The
power-law reading (1 - l^-s)^-1 is available from :func:`selberg_zeta_literal`
for side-by-side reports.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import mpmath

from .dirichlet import DEFAULT_PRECISION, prime_tail
from .errors import DomainError, Excluded, InvalidInput
from .galois import FieldDescriptor, prime_decomposition, splitting_data
from .primes import sieve

LITERAL_NOTE = ("power-law reading prod (1 - l^-s)^-1 does not reproduce the Dedekind "
                "factor under l = log N(P); exponential normalization used")


@dataclass(frozen=True)
class LengthSpectrum:
    entries: tuple[tuple[mpmath.mpf, int], ...]
    source_label: str = ""
    precision: int = DEFAULT_PRECISION
    prime_bound: int | None = None
    degree_bound: int | None = None

    def __post_init__(self):
        for length, mult in self.entries:
            if not length > 0:
                raise InvalidInput(f"non-positive length {length}")
            if int(mult) < 1:
                raise InvalidInput(f"multiplicity must be >= 1, got {mult}")

    def __len__(self):
        return len(self.entries)

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def to_json_text(self) -> str:
        # lengths are written with 30 significant digits so reloading is lossless
        # at the working precision
        digits = max(30, int(self.precision * 0.30103) + 3)
        body = ", ".join(f"[{mpmath.nstr(l, digits, strip_zeros=False)}, {m}]"
                         for l, m in self.entries)
        head = {"source_label": self.source_label, "precision_bits": self.precision,
                "prime_bound": self.prime_bound, "degree_bound": self.degree_bound}
        return json.dumps(head)[:-1] + f', "entries": [{body}]}}'

    @classmethod
    def from_json_text(cls, text: str) -> "LengthSpectrum":
        from decimal import Decimal
        doc = json.loads(text, parse_float=Decimal)
        if isinstance(doc, list):
            doc = {"entries": doc}
        prec = int(doc.get("precision_bits") or DEFAULT_PRECISION)
        with mpmath.workprec(prec):
            entries = tuple((mpmath.mpf(str(l)), int(m)) for l, m in doc["entries"])
        return cls(entries, doc.get("source_label", ""), prec, doc.get("prime_bound"),
                   doc.get("degree_bound"))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["length", "multiplicity"])
        for l, m in self.entries:
            w.writerow([mpmath.nstr(l, 17, strip_zeros=False), m])
        return buf.getvalue()


def spectrum_from_field(fld: FieldDescriptor, prime_bound: int,
                        precision: int = DEFAULT_PRECISION, closure: bool = False) -> LengthSpectrum:
    """One geodesic of length f log p per prime ideal of norm p^f above p <= P.

    ``closure=True`` uses the Galois closure's (f, g) instead of the field's
    own decomposition (they coincide for Galois fields).
    """
    entries = []
    with mpmath.workprec(precision):
        for p in sieve(prime_bound):
            try:
                if closure:
                    sd = splitting_data(fld, p)
                    parts = {sd.residue_degree_f: sd.factor_count_g}
                else:
                    parts = {}
                    for f in prime_decomposition(fld, p):
                        parts[f] = parts.get(f, 0) + 1
            except Excluded:
                continue
            logp = mpmath.log(p)
            for f, g in sorted(parts.items()):
                entries.append((f * logp, g))
    degree = fld.group_order if closure else fld.degree
    return LengthSpectrum(tuple(entries), fld.label + (" closure" if closure else ""),
                          precision, prime_bound, degree)


@dataclass(frozen=True)
class SelbergValue:
    value: mpmath.mpf
    tail_bound: float | None
    note: str = LITERAL_NOTE


def selberg_zeta(spectrum: LengthSpectrum, s) -> SelbergValue:
    if s <= 1:
        raise DomainError(f"s must exceed 1, got {s}")
    with mpmath.workprec(spectrum.precision):
        s_mp = mpmath.mpf(s)
        value = mpmath.mpf(1)
        for length, mult in spectrum.entries:
            value /= (1 - mpmath.exp(-s_mp * length)) ** mult
        value = +value
    tail = None
    if spectrum.prime_bound is not None and spectrum.degree_bound is not None:
        tail = spectrum.degree_bound * prime_tail(float(s), max(spectrum.prime_bound, 1))
    return SelbergValue(value, tail)


def selberg_zeta_literal(spectrum: LengthSpectrum, s):
    """prod (1 - l^-s)^-mult, the power-law reading; can be negative or blow up for l < 1."""
    if s <= 1:
        raise DomainError(f"s must exceed 1, got {s}")
    with mpmath.workprec(spectrum.precision):
        value = mpmath.mpf(1)
        for length, mult in spectrum.entries:
            value /= (1 - mpmath.power(length, -mpmath.mpf(s))) ** mult
        return +value


@dataclass(frozen=True)
class SpectrumComparison:
    matched: tuple[tuple[mpmath.mpf, mpmath.mpf, int], ...]
    unmatched_a: tuple[tuple[mpmath.mpf, int], ...]
    unmatched_b: tuple[tuple[mpmath.mpf, int], ...]

    @property
    def all_matched(self) -> bool:
        return not self.unmatched_a and not self.unmatched_b


def compare_spectra(a: LengthSpectrum, b: LengthSpectrum, tol) -> SpectrumComparison:
    """Greedy two-pointer matching of sorted lengths within tol, respecting multiplicities."""
    xs = sorted([l, m] for l, m in a.entries)
    ys = sorted([l, m] for l, m in b.entries)
    matched, ua, ub = [], [], []
    i = j = 0
    while i < len(xs) and j < len(ys):
        (la, ma), (lb, mb) = xs[i], ys[j]
        if abs(la - lb) <= tol:
            k = min(ma, mb)
            matched.append((la, lb, k))
            xs[i][1] -= k
            ys[j][1] -= k
            if xs[i][1] == 0:
                i += 1
            if ys[j][1] == 0:
                j += 1
        elif la < lb:
            ua.append((la, ma))
            i += 1
        else:
            ub.append((lb, mb))
            j += 1
    ua += [(l, m) for l, m in xs[i:]]
    ub += [(l, m) for l, m in ys[j:]]
    return SpectrumComparison(tuple(matched), tuple(ua), tuple(ub))
