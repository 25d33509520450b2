import math
import warnings

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfunc_lab import galois
from lfunc_lab.artin import artin_handle, dedekind_handle, quadratic_character, riemann_zeta_handle
from lfunc_lab.dirichlet import (LFunctionHandle, Verdict, coeffs_from_euler, coeffs_to_csv,
                                 compare, dirichlet_partial_sum, evaluate, product_handle)
from lfunc_lab.errors import DomainError, InvalidInput, MissingPrime, PoleWarning
from lfunc_lab.euler import CycInt, EulerFactor
from lfunc_lab.nctorus import Constant, golden_torus, torus_l_handle
from lfunc_lab.primes import sieve


def chi4_handle(P):
    qi = galois.gaussian_field()
    return artin_handle(quadratic_character(qi), qi, P)


def small_handle(P, rows):
    """Handle with the given integer factors (1, c1, c2, ...) at the first primes."""
    factors = {p: EulerFactor.from_ints(p, (1,) + tuple(r)) for p, r in zip(sieve(P), rows)}
    return LFunctionHandle("h", max([f.degree for f in factors.values()] + [1]), factors)


def test_coefficient_examples():
    assert coeffs_from_euler(riemann_zeta_handle(20), 20) == [1] * 20
    assert coeffs_from_euler(chi4_handle(10), 10) == [1, 0, -1, 0, 1, 0, -1, 0, 1, 0]
    assert coeffs_from_euler(LFunctionHandle("empty", 1), 1) == [1]


def test_missing_prime():
    with pytest.raises(MissingPrime):
        coeffs_from_euler(riemann_zeta_handle(10), 30)


def test_evaluate_examples():
    z = riemann_zeta_handle(10_000)
    assert abs(float(evaluate(z, 2, 10_000).value) - 1.644934) < 1e-3
    assert abs(float(evaluate(z, 3, 10_000).value) - 1.2020569) < 1e-4
    assert evaluate(LFunctionHandle("empty", 1), 2, 100).value == 1
    with pytest.raises(DomainError):
        evaluate(z, 1, 100)
    ev = evaluate(z, 2, 10_000)
    assert abs(float(ev.value) - math.pi ** 2 / 6) <= ev.tail_bound


def test_pole_warning():
    h = LFunctionHandle("pole", 1, {2: EulerFactor.from_ints(2, (1, -4))})
    with pytest.warns(PoleWarning):
        ev = evaluate(h, 2, 10)
    assert ev.poles == (2,)


def test_compare_examples():
    z = riemann_zeta_handle(1000)
    assert compare(z, z, 1000, 1000).verdict is Verdict.IDENTICAL_ON_OVERLAP
    prod = product_handle([(z, 1), (chi4_handle(1000), 1)])
    rep = compare(prod, dedekind_handle(galois.gaussian_field(), 1000), 1000, 1000)
    assert rep.verdict is Verdict.IDENTICAL_ON_OVERLAP and rep.excluded_primes == (2,)
    assert rep.coefficient_max_abs_diff == 0
    gold = torus_l_handle(golden_torus(), Constant(1), 1000)
    assert compare(gold, z, 1000, 1000).verdict is Verdict.DIVERGENT


def test_compare_finite_exceptions():
    z = riemann_zeta_handle(200)
    factors = dict(z.factors)
    factors[3] = EulerFactor.from_ints(3, (1, 1))
    altered = LFunctionHandle("altered", 1, factors)
    rep = compare(z, altered, 200, 50)
    assert rep.verdict is Verdict.FINITE_EXCEPTION_SET and rep.exception_count == 1
    assert "1" in rep.verdict_text()
    factors[199] = EulerFactor.from_ints(199, (1, 1))
    late = LFunctionHandle("late", 1, factors)
    assert compare(z, late, 200, 50).verdict is Verdict.DIVERGENT


def test_compare_is_symmetric():
    a = product_handle([(riemann_zeta_handle(300), 1), (chi4_handle(300), 1)])
    b = dedekind_handle(galois.s3_cubic_field(), 300)
    ab, ba = compare(a, b, 300, 300), compare(b, a, 300, 300)
    assert ab.verdict is ba.verdict
    assert [m.prime for m in ab.mismatched_primes] == [m.prime for m in ba.mismatched_primes]


def test_product_examples():
    z, chi = riemann_zeta_handle(20), chi4_handle(20)
    prod = product_handle([(z, 1), (chi, 1)])
    assert prod.factors[5].int_coeffs() == (1, -2, 1)
    assert product_handle([(z, 1)]).to_json()["factors"] == z.to_json()["factors"]
    assert product_handle([(chi, 2)]).factors[3].int_coeffs() == (1, 2, 1)
    assert 2 in prod.exclusions


factor_rows = st.lists(st.lists(st.integers(-3, 3), min_size=1, max_size=3), min_size=168, max_size=168)


@settings(max_examples=25, deadline=None)
@given(factor_rows)
def test_coefficients_multiplicative(rows):
    h = small_handle(1000, rows)
    a = coeffs_from_euler(h, 1000)
    for m in range(2, 32):
        for n in range(2, 1000 // m + 1):
            if math.gcd(m, n) == 1:
                assert a[m * n - 1] == a[m - 1] * a[n - 1]


@settings(max_examples=15, deadline=None)
@given(factor_rows, factor_rows)
def test_product_is_dirichlet_convolution(r1, r2):
    N = 300
    h1, h2 = small_handle(1000, r1), small_handle(1000, r2)
    a, b = coeffs_from_euler(h1, N), coeffs_from_euler(h2, N)
    c = coeffs_from_euler(product_handle([(h1, 1), (h2, 1)]), N)
    for n in range(1, N + 1):
        assert c[n - 1] == sum(a[d - 1] * b[n // d - 1] for d in range(1, n + 1) if n % d == 0)


def test_evaluate_matches_partial_sum():
    # for L(chi4) at s = 3 both truncations converge fast enough to agree to 1e-6
    h = chi4_handle(5000)
    ev = evaluate(h, 3, 5000).value
    ps = dirichlet_partial_sum(coeffs_from_euler(h, 5000), 3)
    assert abs(ev - ps.real) < 1e-6
    beta3 = mpmath.pi ** 3 / 32
    assert abs(ev - beta3) < 1e-6


def test_non_integral_coefficients_are_cyclotomic():
    c3 = galois.cubic_cyclic_field()
    from lfunc_lab.artin import cyclic_character
    h = artin_handle(cyclic_character(c3, 1), c3, 100)
    a = coeffs_from_euler(h, 100)
    assert all(isinstance(x, CycInt) for x in a)
    # chi(p) for p = 1 mod 7 is trivial
    assert a[28] == 1


def test_handle_validation_and_json():
    with pytest.raises(InvalidInput):
        LFunctionHandle("bad", 1, {3: EulerFactor.from_ints(3, (1, 0, 1))})
    with pytest.raises(InvalidInput):
        LFunctionHandle("bad", 1, {3: EulerFactor.from_ints(3, (1, 1))}, {3: "x"})
    for h in (chi4_handle(100), torus_l_handle(golden_torus(), Constant(2), 30)):
        back = LFunctionHandle.from_json(h.to_json())
        assert back.dumps() == h.dumps()


def test_csv_format():
    text = coeffs_to_csv(coeffs_from_euler(chi4_handle(10), 5))
    lines = text.splitlines()
    assert lines[0] == "n,a_n(real),a_n(imag)"
    assert len(lines) == 6 and lines[3].startswith("3,")
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        float(lines[3].split(",")[1])
