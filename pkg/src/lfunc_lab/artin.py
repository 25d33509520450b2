"""Artin and Dedekind Euler factors from eigenvalue tables.

A representation is stored as the spectrum of sigma(Fr_p) per conjugacy
class: a multiset of roots of unity.  det(I - sigma(c) z) depends only on
that spectrum, so no matrices are ever chosen.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .dirichlet import LFunctionHandle, build_handle
from .errors import Excluded, InvalidInput, MissingClass, UnsupportedModel
from .euler import EulerFactor, Rotation, expand_rotations
from .galois import (CYCLIC, SYMMETRIC, ConjugacyClassId, FieldDescriptor, class_list,
                     frobenius_class, partitions, prime_decomposition, rational_field)


def _key_from_json(key):
    return tuple(key) if isinstance(key, list) else key


def _key_to_json(key):
    return list(key) if isinstance(key, tuple) else key


@dataclass(frozen=True, eq=False)
class Representation:
    label: str
    dimension: int
    table: dict[Hashable, tuple[Rotation, ...]] = field(default_factory=dict)

    def __post_init__(self):
        table = {}
        for key, rots in self.table.items():
            rots = tuple(sorted(r if isinstance(r, Rotation) else Rotation(*r) for r in rots))
            if len(rots) != self.dimension:
                raise InvalidInput(f"{self.label}: class {key!r} has {len(rots)} eigenvalues, "
                                   f"expected {self.dimension}")
            table[key] = rots
        object.__setattr__(self, "table", table)

    def eigenvalues(self, cls: ConjugacyClassId) -> tuple[Rotation, ...]:
        try:
            rots = self.table[cls.key]
        except KeyError:
            raise MissingClass(f"{self.label}: no eigenvalues for class {cls.key!r}") from None
        if any(cls.order % r.denominator for r in rots):
            raise InvalidInput(f"{self.label}: eigenvalue order does not divide {cls.order} "
                               f"at class {cls.key!r}")
        return rots

    def validate_for(self, fld: FieldDescriptor) -> None:
        for c in class_list(fld):
            self.eigenvalues(c)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "dimension": self.dimension,
            "classes": [{"key": _key_to_json(k), "rotations": [[r.numerator, r.denominator] for r in v]}
                        for k, v in self.table.items()],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Representation":
        try:
            table = {_key_from_json(c["key"]): tuple(Rotation(n, d) for n, d in c["rotations"])
                     for c in doc["classes"]}
            return cls(str(doc["label"]), int(doc["dimension"]), table)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"bad representation document: {exc}") from exc


# -- Euler factors ---------------------------------------------------------------

def artin_euler_factor(rep: Representation, fld: FieldDescriptor, p: int) -> EulerFactor:
    """det(I - rep(Fr_p) z); raises Excluded (Ramified) at ramified primes."""
    cls = frobenius_class(fld, p)
    return EulerFactor(p, tuple(expand_rotations(rep.eigenvalues(cls))))


def _one_minus_zpow(p: int, f: int) -> EulerFactor:
    return EulerFactor.from_ints(p, [1] + [0] * (f - 1) + [-1])


def dedekind_euler_factor(fld: FieldDescriptor, p: int) -> EulerFactor:
    """prod over primes P | p of the field of (1 - z^f(P))."""
    acc = EulerFactor.from_ints(p, (1,))
    for f in prime_decomposition(fld, p):
        acc = acc * _one_minus_zpow(p, f)
    return acc


def closure_dedekind_euler_factor(fld: FieldDescriptor, p: int) -> EulerFactor:
    """(1 - z^f)^(|G|/f): the Dedekind factor of the Galois closure."""
    f = frobenius_class(fld, p).order
    return _one_minus_zpow(p, f) ** (fld.group_order // f)


# -- handles -------------------------------------------------------------------

def artin_handle(rep: Representation, fld: FieldDescriptor, prime_bound: int,
                 threads: int = 1) -> LFunctionHandle:
    return build_handle(f"L({rep.label}, {fld.label})", rep.dimension, prime_bound,
                        lambda p: artin_euler_factor(rep, fld, p), skip=(Excluded,),
                        threads=threads)


def dedekind_handle(fld: FieldDescriptor, prime_bound: int, closure: bool = False,
                    threads: int = 1) -> LFunctionHandle:
    if closure:
        return build_handle(f"zeta(closure of {fld.label})", fld.group_order, prime_bound,
                            lambda p: closure_dedekind_euler_factor(fld, p), skip=(Excluded,),
                            threads=threads)
    return build_handle(f"zeta({fld.label})", fld.degree, prime_bound,
                        lambda p: dedekind_euler_factor(fld, p), skip=(Excluded,),
                        threads=threads)


def riemann_zeta_handle(prime_bound: int) -> LFunctionHandle:
    fld = rational_field()
    return artin_handle(trivial_rep(fld), fld, prime_bound)


# -- regular representation identity -------------------------------------------

@dataclass(frozen=True)
class ClassIdentityRow:
    key: Hashable
    order: int
    product: EulerFactor
    expected: EulerFactor
    passed: bool


def regular_rep_identity_check(fld: FieldDescriptor,
                               reps: Sequence[tuple[Representation, int]]) -> list[ClassIdentityRow]:
    """Per class c: prod_i det(I - sigma_i(c) z)^mult_i  vs  (1 - z^f)^(|G|/f)."""
    g = fld.group_order
    rows = []
    for c in class_list(fld):
        lhs = EulerFactor.from_ints(0, (1,))
        for rep, mult in reps:
            lhs = lhs * EulerFactor(0, tuple(expand_rotations(rep.eigenvalues(c)))) ** mult
        rhs = _one_minus_zpow(0, c.order) ** (g // c.order)
        rows.append(ClassIdentityRow(c.key, c.order, lhs, rhs, lhs.same_poly(rhs)))
    return rows


LITERAL_FACTORIZATION_NOTE = (
    "literal reading: zeta_K(s) = L(sigma, s)^m for a single irreducible sigma; "
    "the standard factorization has one factor per irreducible with exponent its dimension, "
    "so disagreements here are reported, not judged")


@dataclass(frozen=True)
class LiteralFactorizationReport:
    field_label: str
    rep_label: str
    exponent: int
    zeta_source: str
    prime_bound: int
    agreeing: tuple[int, ...]
    disagreeing: tuple[int, ...]
    excluded: tuple[int, ...]
    note: str = LITERAL_FACTORIZATION_NOTE

    def to_json(self) -> dict:
        return {
            "field": self.field_label, "representation": self.rep_label,
            "exponent": self.exponent, "zeta_source": self.zeta_source,
            "prime_bound": self.prime_bound, "agreeing": list(self.agreeing),
            "disagreeing": list(self.disagreeing), "excluded": list(self.excluded),
            "note": self.note,
        }


def literal_factorization_report(fld: FieldDescriptor, rep: Representation, prime_bound: int,
                                 exponent: int | None = None,
                                 closure: bool = True) -> LiteralFactorizationReport:
    """Compare zeta_K factors with (Artin factor)^exponent prime by prime.

    ``exponent`` defaults to the representation's dimension; ``closure``
    selects the Galois closure's zeta (the K of the identity is Galois).
    No verdict is attached.
    """
    from .primes import sieve
    e = rep.dimension if exponent is None else int(exponent)
    agree, disagree, excluded = [], [], []
    for p in sieve(prime_bound):
        try:
            z = closure_dedekind_euler_factor(fld, p) if closure else dedekind_euler_factor(fld, p)
            a = artin_euler_factor(rep, fld, p) ** e
        except Excluded:
            excluded.append(p)
            continue
        (agree if z.same_poly(a) else disagree).append(p)
    return LiteralFactorizationReport(fld.label, rep.label, e, "galois_closure" if closure else "field",
                                      prime_bound, tuple(agree), tuple(disagree), tuple(excluded))


# -- presets ---------------------------------------------------------------------

def trivial_rep(fld: FieldDescriptor) -> Representation:
    return Representation("trivial", 1, {c.key: (Rotation(0),) for c in class_list(fld)})


def _require_symmetric(fld: FieldDescriptor) -> int:
    if fld.group_model.kind != SYMMETRIC:
        raise UnsupportedModel(f"{fld.label}: symmetric-group preset on non-symmetric model")
    return fld.degree


def sign_rep(fld: FieldDescriptor) -> Representation:
    n = _require_symmetric(fld)
    return Representation("sign", 1, {lam: (Rotation(n - len(lam), 2),) for lam in partitions(n)})


def _permutation_spectrum(lam: tuple[int, ...]) -> list[Rotation]:
    return [Rotation(k, length) for length in lam for k in range(length)]


def standard_rep(fld: FieldDescriptor) -> Representation:
    """(n-1)-dimensional standard representation of S_n (permutation minus trivial)."""
    n = _require_symmetric(fld)
    table = {}
    for lam in partitions(n):
        spec = _permutation_spectrum(lam)
        spec.remove(Rotation(0))
        table[lam] = tuple(spec)
    return Representation("standard", n - 1, table)


def twisted_standard_rep(fld: FieldDescriptor) -> Representation:
    """standard (x) sign."""
    std, sgn = standard_rep(fld), sign_rep(fld)
    table = {k: tuple(r * sgn.table[k][0] for r in v) for k, v in std.table.items()}
    return Representation("standard*sign", std.dimension, table)


def s4_two_dim_rep(fld: FieldDescriptor) -> Representation:
    """The 2-dimensional irreducible of S4, pulled back through S4 -> S3."""
    if _require_symmetric(fld) != 4:
        raise UnsupportedModel("2-dimensional preset exists for S4 only")
    one, minus, w = Rotation(0), Rotation(1, 2), Rotation(1, 3)
    table = {
        (1, 1, 1, 1): (one, one),
        (2, 1, 1): (one, minus),
        (2, 2): (one, one),
        (3, 1): (w, w * w),
        (4,): (one, minus),
    }
    return Representation("two-dim", 2, table)


def _cyclic_generator(fld: FieldDescriptor) -> tuple[int, dict[Hashable, int]]:
    if fld.group_model.kind != CYCLIC:
        raise UnsupportedModel(f"{fld.label}: character presets need a cyclic model")
    c = fld._cyclic
    g_order, m = c["order"], c["m"]
    gen = next((r for r in c["classes"] if c["class_order"][r] == g_order), None)
    if gen is None:
        raise UnsupportedModel(f"{fld.label}: Galois group is abelian but not cyclic")
    dlog, x = {}, 1
    for k in range(g_order):
        dlog[c["rep"][x]] = k
        x = x * gen % m
    return g_order, dlog


def cyclic_character(fld: FieldDescriptor, j: int) -> Representation:
    """chi_j(g^k) = exp(2 pi i jk/|G|) for a fixed generator g of the quotient group."""
    order, dlog = _cyclic_generator(fld)
    j %= order
    return Representation(f"chi{j}/{order}", 1,
                          {key: (Rotation(j * k, order),) for key, k in dlog.items()})


def quadratic_character(fld: FieldDescriptor) -> Representation:
    order, _ = _cyclic_generator(fld)
    if order % 2:
        raise UnsupportedModel(f"{fld.label}: group of odd order has no quadratic character")
    rep = cyclic_character(fld, order // 2)
    return Representation(f"quadratic mod {fld.group_model.parameter}", 1, rep.table)


def irreducible_reps(fld: FieldDescriptor) -> list[tuple[Representation, int]]:
    """All irreducibles with multiplicity = dimension, for the shipped group models."""
    kind = fld.group_model.kind
    if kind == CYCLIC:
        order, _ = _cyclic_generator(fld)
        return [(cyclic_character(fld, j), 1) for j in range(order)]
    n = _require_symmetric(fld)
    if n == 1:
        return [(trivial_rep(fld), 1)]
    if n == 2:
        return [(trivial_rep(fld), 1), (sign_rep(fld), 1)]
    if n == 3:
        return [(trivial_rep(fld), 1), (sign_rep(fld), 1), (standard_rep(fld), 2)]
    if n == 4:
        return [(trivial_rep(fld), 1), (sign_rep(fld), 1), (s4_two_dim_rep(fld), 2),
                (standard_rep(fld), 3), (twisted_standard_rep(fld), 3)]
    raise UnsupportedModel(f"no irreducible table shipped for S{n}")
