import math

import pytest

from lfunc_lab import galois
from lfunc_lab.core_arith import IntPolynomial
from lfunc_lab.errors import InvalidInput, Ramified, UnsupportedModel
from lfunc_lab.galois import (ConjugacyClassId, FieldDescriptor, GroupModel, class_list,
                              discriminant, frobenius_class, splitting_data)
from lfunc_lab.primes import sieve


@pytest.fixture(scope="module")
def qi():
    return galois.gaussian_field()


@pytest.fixture(scope="module")
def s3():
    return galois.s3_cubic_field()


def test_discriminants():
    assert discriminant(IntPolynomial([1, 0, 1])) == -4
    assert discriminant(IntPolynomial([-1, -1, 0, 1])) == -23
    assert discriminant(IntPolynomial([-1, -1, 0, 0, 1])) == -283
    assert discriminant(IntPolynomial([-1, -2, 1, 1])) == 49
    assert discriminant(IntPolynomial([1, 1, 1, 1, 1])) == 125


def test_frobenius_examples(qi, s3):
    assert frobenius_class(qi, 5) == ConjugacyClassId(1, 1)
    assert frobenius_class(qi, 3) == ConjugacyClassId(3, 2)
    assert frobenius_class(s3, 2) == ConjugacyClassId((3,), 3)
    with pytest.raises(Ramified):
        frobenius_class(s3, 23)
    with pytest.raises(Ramified):
        frobenius_class(qi, 2)


def test_splitting_examples(qi, s3):
    assert splitting_data(qi, 13) == galois.SplittingData(1, 2)
    assert splitting_data(qi, 7) == galois.SplittingData(2, 1)
    assert splitting_data(s3, 2) == galois.SplittingData(3, 2)


def test_class_lists(qi, s3):
    assert [c.key for c in class_list(qi)] == [1, 3]
    assert [c.key for c in class_list(s3)] == [(3,), (2, 1), (1, 1, 1)]
    assert len(class_list(galois.s4_quartic_field())) == 5


def test_abelian_rigidity():
    for fld in (galois.gaussian_field(), galois.cubic_cyclic_field(),
                galois.quintic_cyclotomic_field()):
        m = fld.group_model.parameter
        seen = {}
        for p in sieve(1000):
            try:
                c = frobenius_class(fld, p)
            except Ramified:
                continue
            assert seen.setdefault(p % m, c) == c


@pytest.mark.parametrize("name", list(galois.PRESET_FIELDS))
def test_splitting_consistency(name):
    fld = galois.PRESET_FIELDS[name]()
    for p in sieve(500):
        try:
            c = frobenius_class(fld, p)
            sd = splitting_data(fld, p)
        except Ramified:
            assert p in fld.ramified_primes or fld.discriminant % p == 0
            continue
        assert sd.residue_degree_f * sd.factor_count_g == fld.group_order
        assert fld.group_order % c.order == 0
        assert sum(galois.prime_decomposition(fld, p)) == fld.degree


def test_cubic_cyclic_field_matches_degree_pattern():
    # for a Galois field the Frobenius order is the common factor degree
    fld = galois.cubic_cyclic_field()
    for p in sieve(400):
        if p == 7:
            continue
        from lfunc_lab.primes import degree_pattern
        pat = degree_pattern(fld.defining_poly, p)
        assert set(pat.degrees) == {frobenius_class(fld, p).order}


def test_chebotarev_report_s3(s3):
    rows = galois.chebotarev_report(s3, 10_000)
    assert all(r.within_factor_two for r in rows)
    assert sum(r.observed for r in rows) == len(sieve(10_000)) - 1


def test_partitions():
    assert [len(galois.partitions(n)) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


def test_descriptor_validation():
    with pytest.raises(InvalidInput):
        FieldDescriptor("bad", IntPolynomial([1, 0, 2]), GroupModel("symmetric", 2))
    with pytest.raises(InvalidInput):
        FieldDescriptor("bad", IntPolynomial([-1, -1, 0, 1]), GroupModel("cyclic", 5))
    with pytest.raises(UnsupportedModel):
        FieldDescriptor("q8", IntPolynomial([1, 0, 1]), GroupModel("cyclic", 8))


def test_real_quadratic_subfield_of_conductor_5():
    fld = FieldDescriptor("Q(sqrt5)", IntPolynomial([-1, -1, 1]), GroupModel("cyclic", 5))
    assert fld.group_order == 2
    for p in sieve(200):
        if p == 5:
            continue
        split = p % 5 in (1, 4)
        assert (frobenius_class(fld, p).order == 1) == split


def test_explicit_model():
    table = [{"pattern": [1, 1], "key": "e", "order": 1},
             {"pattern": [2], "key": "s", "order": 2}]
    fld = FieldDescriptor("Q(i) explicit", IntPolynomial([1, 0, 1]),
                          GroupModel("explicit", {"group_order": 2, "table": table}))
    assert frobenius_class(fld, 5).key == "e"
    assert frobenius_class(fld, 7).key == "s"
    bare = FieldDescriptor("bare", IntPolynomial([1, 0, 1]),
                           GroupModel("explicit", {"group_order": 2}))
    with pytest.raises(UnsupportedModel):
        frobenius_class(bare, 5)


def test_json_round_trip(s3):
    back = FieldDescriptor.from_json(s3.to_json())
    assert back.to_json() == s3.to_json()
    assert back.group_order == math.factorial(3)
