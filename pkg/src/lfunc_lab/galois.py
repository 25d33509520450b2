"""Number-field descriptors and Frobenius classes of unramified primes.

Three group models are supported:

* ``cyclic``: an abelian field inside Q(zeta_m).  Its Galois group is
  (Z/m)^* / H for the subgroup H fixing the field; classes are cosets,
  keyed by their least residue.
* ``symmetric``: a degree-n polynomial whose splitting field has group S_n.
  Frobenius acts on the roots with the cycle type given by the factor
  degrees of f mod p.
* ``explicit``: a user table mapping degree patterns to class keys.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Hashable

from .core_arith import IntPolynomial, det_bareiss
from .errors import InvalidInput, NotSquareFree, Ramified, UnsupportedModel
from .primes import (DegreePattern, degree_pattern, euler_phi, multiplicative_order,
                     prime_factors, sieve)

CYCLIC, SYMMETRIC, EXPLICIT = "cyclic", "symmetric", "explicit"


def discriminant(f: IntPolynomial) -> int:
    """Discriminant of a monic f via the Sylvester resultant with f'."""
    if not f.is_monic():
        raise InvalidInput("discriminant implemented for monic polynomials only")
    d = f.degree
    if d < 1:
        raise InvalidInput("degree must be >= 1")
    if d == 1:
        return 1
    g = f.derivative()
    a = list(reversed(f.coeffs))
    b = list(reversed(g.coeffs))
    size = 2 * d - 1
    rows = []
    for i in range(d - 1):
        rows.append([0] * i + a + [0] * (size - len(a) - i))
    for i in range(d):
        rows.append([0] * i + b + [0] * (size - len(b) - i))
    res = det_bareiss(rows)
    return (-1) ** (d * (d - 1) // 2) * res


def partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of n as descending tuples, in reverse lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for k in range(min(n, largest), 0, -1):
        out += [(k,) + rest for rest in partitions(n - k, k)]
    return out


def _class_size_sn(cycle_type: tuple[int, ...]) -> int:
    n = sum(cycle_type)
    denom = 1
    for length, mult in Counter(cycle_type).items():
        denom *= length ** mult * math.factorial(mult)
    return math.factorial(n) // denom


@dataclass(frozen=True)
class ConjugacyClassId:
    key: Hashable
    order: int


@dataclass(frozen=True)
class SplittingData:
    residue_degree_f: int
    factor_count_g: int


@dataclass(frozen=True)
class GroupModel:
    kind: str
    parameter: Any = None
    kernel: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "parameter": self.parameter}
        if self.kernel is not None:
            out["kernel"] = list(self.kernel)
        return out


@dataclass(frozen=True, eq=False)
class FieldDescriptor:
    label: str
    defining_poly: IntPolynomial
    group_model: GroupModel
    discriminant: int = 0
    ramified_primes: frozenset[int] = frozenset()
    _cyclic: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        f = self.defining_poly
        if not f.is_monic() or f.degree < 1:
            raise InvalidInput(f"{self.label}: defining polynomial must be monic of degree >= 1")
        disc = discriminant(f)
        if disc == 0:
            raise InvalidInput(f"{self.label}: defining polynomial is not squarefree")
        object.__setattr__(self, "discriminant", disc)
        ram = set(self.ramified_primes) | set(prime_factors(disc))
        kind = self.group_model.kind
        if kind == CYCLIC:
            m = int(self.group_model.parameter)
            if m < 2:
                raise InvalidInput("cyclic model needs conductor m >= 2")
            if euler_phi(m) % f.degree:
                raise InvalidInput(f"{self.label}: degree {f.degree} does not divide phi({m})")
            ram |= set(prime_factors(m))
            self._cyclic.update(_cyclic_structure(m, f.degree, self.group_model.kernel))
        elif kind == SYMMETRIC:
            if int(self.group_model.parameter) != f.degree:
                raise InvalidInput(f"{self.label}: symmetric model degree must equal deg f")
        elif kind == EXPLICIT:
            _check_explicit(self.group_model.parameter)
        else:
            raise UnsupportedModel(f"unknown group model {kind!r}")
        object.__setattr__(self, "ramified_primes", frozenset(ram))

    @property
    def degree(self) -> int:
        return self.defining_poly.degree

    @property
    def group_order(self) -> int:
        kind = self.group_model.kind
        if kind == CYCLIC:
            return self._cyclic["order"]
        if kind == SYMMETRIC:
            return math.factorial(self.degree)
        return int(self.group_model.parameter["group_order"])

    @property
    def is_galois(self) -> bool:
        return self.group_order == self.degree

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "defining_poly": list(self.defining_poly.coeffs),
            "model": self.group_model.to_json(),
            "ramified_primes": sorted(self.ramified_primes),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FieldDescriptor":
        try:
            model = doc["model"]
            kernel = model.get("kernel")
            gm = GroupModel(model["kind"], model.get("parameter"),
                            tuple(kernel) if kernel is not None else None)
            return cls(str(doc["label"]), IntPolynomial(doc["defining_poly"]), gm,
                       ramified_primes=frozenset(doc.get("ramified_primes", ())))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"bad field document: {exc}") from exc


def _check_explicit(param):
    if not isinstance(param, dict) or "group_order" not in param:
        raise UnsupportedModel("explicit model needs {'group_order', 'table'}")


def _cyclic_structure(m: int, degree: int, kernel) -> dict:
    units = [a for a in range(1, m) if math.gcd(a, m) == 1]
    phi = len(units)
    if kernel is None:
        if degree == phi:
            kernel = (1,)
        else:
            gen = next((a for a in units if multiplicative_order(a, m) == phi), None)
            if gen is None:
                raise UnsupportedModel(
                    f"(Z/{m})^* is not cyclic; give the kernel subgroup explicitly")
            step = degree
            kernel = tuple(sorted({pow(gen, step * k, m) for k in range(phi // degree)}))
    h = frozenset(int(a) % m for a in kernel)
    if len(h) * degree != phi or any((a * b) % m not in h for a in h for b in h):
        raise InvalidInput(f"kernel {sorted(h)} is not a subgroup of index {degree} in (Z/{m})^*")
    rep = {}
    for a in units:
        rep[a] = min((a * b) % m for b in h)
    reps = sorted(set(rep.values()))
    order = {}
    for r in reps:
        k, x = 1, r
        while x not in h:
            x, k = (x * r) % m, k + 1
        order[r] = k
    return {"m": m, "kernel": h, "rep": rep, "classes": reps, "class_order": order,
            "order": len(reps)}


def _explicit_lookup(field: FieldDescriptor, pattern: DegreePattern) -> ConjugacyClassId:
    table = field.group_model.parameter.get("table")
    if not table:
        raise UnsupportedModel(f"{field.label}: explicit model without class-resolution table")
    for row in table:
        if tuple(sorted(row["pattern"], reverse=True)) == pattern.degrees:
            key = row["key"]
            return ConjugacyClassId(tuple(key) if isinstance(key, list) else key, int(row["order"]))
    raise UnsupportedModel(f"{field.label}: no table entry for pattern {pattern.degrees}")


def _check_unramified(field: FieldDescriptor, p: int) -> DegreePattern:
    if p in field.ramified_primes:
        raise Ramified(f"{p} is ramified in {field.label}")
    try:
        return degree_pattern(field.defining_poly, p)
    except NotSquareFree as exc:
        raise Ramified(str(exc)) from exc


def frobenius_class(field: FieldDescriptor, p: int) -> ConjugacyClassId:
    """Frobenius class of an unramified prime p; raises Ramified otherwise."""
    pattern = _check_unramified(field, p)
    kind = field.group_model.kind
    if kind == CYCLIC:
        c = field._cyclic
        r = c["rep"][p % c["m"]]
        return ConjugacyClassId(r, c["class_order"][r])
    if kind == SYMMETRIC:
        return ConjugacyClassId(pattern.degrees, pattern.lcm)
    return _explicit_lookup(field, pattern)


def splitting_data(field: FieldDescriptor, p: int) -> SplittingData:
    """Residue degree and prime count of p in the Galois closure."""
    f = frobenius_class(field, p).order
    return SplittingData(f, field.group_order // f)


def prime_decomposition(field: FieldDescriptor, p: int) -> tuple[int, ...]:
    """Residue degrees of the primes above p in the field itself (not its closure)."""
    pattern = _check_unramified(field, p)
    if field.group_model.kind == CYCLIC:
        f = frobenius_class(field, p).order
        return (f,) * (field.degree // f)
    return pattern.degrees


def class_list(field: FieldDescriptor) -> list[ConjugacyClassId]:
    kind = field.group_model.kind
    if kind == CYCLIC:
        c = field._cyclic
        return [ConjugacyClassId(r, c["class_order"][r]) for r in c["classes"]]
    if kind == SYMMETRIC:
        n = field.degree
        if n > 5:
            raise UnsupportedModel("class lists for symmetric models are limited to n <= 5")
        return [ConjugacyClassId(lam, math.lcm(*lam)) for lam in partitions(n)]
    table = field.group_model.parameter.get("classes") or field.group_model.parameter.get("table")
    if not table:
        raise UnsupportedModel(f"{field.label}: explicit model lists no classes")
    seen, out = set(), []
    for row in table:
        key = tuple(row["key"]) if isinstance(row["key"], list) else row["key"]
        if key not in seen:
            seen.add(key)
            out.append(ConjugacyClassId(key, int(row["order"])))
    return out


def class_size(field: FieldDescriptor, cls: ConjugacyClassId) -> int:
    kind = field.group_model.kind
    if kind == CYCLIC:
        return 1
    if kind == SYMMETRIC:
        return _class_size_sn(cls.key)
    for row in field.group_model.parameter.get("classes", ()):
        key = tuple(row["key"]) if isinstance(row["key"], list) else row["key"]
        if key == cls.key and "size" in row:
            return int(row["size"])
    raise UnsupportedModel("class sizes unknown for this explicit model")


@dataclass
class ChebotarevRow:
    key: Hashable
    observed: int
    expected: float

    @property
    def within_factor_two(self) -> bool:
        return self.expected / 2 <= self.observed <= 2 * self.expected


def chebotarev_report(field: FieldDescriptor, prime_bound: int) -> list[ChebotarevRow]:
    """Observed Frobenius class counts vs |C|/|G| densities (informational only)."""
    counts: Counter = Counter()
    total = 0
    for p in sieve(prime_bound):
        try:
            counts[frobenius_class(field, p).key] += 1
            total += 1
        except Ramified:
            continue
    g = field.group_order
    return [ChebotarevRow(c.key, counts[c.key], total * class_size(field, c) / g)
            for c in class_list(field)]


# -- presets ------------------------------------------------------------------

def _field(label, coeffs, kind, parameter, kernel=None):
    return FieldDescriptor(label, IntPolynomial(coeffs), GroupModel(kind, parameter, kernel))


def rational_field() -> FieldDescriptor:
    return _field("Q", [0, 1], SYMMETRIC, 1)


def gaussian_field() -> FieldDescriptor:
    """Q(i), conductor 4, group C2."""
    return _field("Q(i)", [1, 0, 1], CYCLIC, 4)


def cubic_cyclic_field() -> FieldDescriptor:
    """Maximal real subfield of Q(zeta_7): x^3 + x^2 - 2x - 1, group C3."""
    return _field("Q(zeta7)+", [-1, -2, 1, 1], CYCLIC, 7)


def quintic_cyclotomic_field() -> FieldDescriptor:
    """Q(zeta_5), group C4."""
    return _field("Q(zeta5)", [1, 1, 1, 1, 1], CYCLIC, 5)


def s3_cubic_field() -> FieldDescriptor:
    """x^3 - x - 1 (discriminant -23), Galois closure S3."""
    return _field("S3:x^3-x-1", [-1, -1, 0, 1], SYMMETRIC, 3)


def s4_quartic_field() -> FieldDescriptor:
    """x^4 - x - 1 (discriminant -283), Galois closure S4."""
    return _field("S4:x^4-x-1", [-1, -1, 0, 0, 1], SYMMETRIC, 4)


def cyclotomic_field(m: int) -> FieldDescriptor:
    from .primes import cyclotomic
    return FieldDescriptor(f"Q(zeta{m})", cyclotomic(m), GroupModel(CYCLIC, m))


PRESET_FIELDS = {
    "Q": rational_field,
    "C2": gaussian_field,
    "C3": cubic_cyclic_field,
    "C4": quintic_cyclotomic_field,
    "S3": s3_cubic_field,
    "S4": s4_quartic_field,
}
