import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfunc_lab.core_arith import IntMatrix, char_poly, mat_pow
from lfunc_lab.dirichlet import Verdict, compare
from lfunc_lab.errors import InvalidInput, NormalFormMismatch, NotCoprime, NotFound, OrderMismatch
from lfunc_lab.nctorus import (CharCoeffs, Constant, OrderMod, TorusDescriptor, TraceMatch,
                               assemble, degenerate_torus, golden_torus, is_so_mm_Z,
                               literal_sign_differs, pi_of_p, so_mm_violations,
                               strategy_from_json, strategy_to_json, torus_char_coeffs,
                               torus_from_json, torus_l_handle, torus_local_zeta)
from lfunc_lab.primes import sieve

GOLDEN = IntMatrix.from_rows([[1, 1], [1, 0]])


def lucas(m):
    a, b = 2, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def test_char_coeffs_examples():
    assert torus_char_coeffs(GOLDEN, 1).a == (1,)
    assert torus_char_coeffs(GOLDEN, 3).a == (4,)
    with pytest.raises(NormalFormMismatch):
        torus_char_coeffs(GOLDEN, 2)


def test_even_power_of_golden_matrix_is_outside_normal_form():
    # B^4 = [[5,3],[3,2]] has det +1, so det(xI - B^4) = x^2 - 7x + 1
    assert mat_pow(GOLDEN, 4).rows() == [[5, 3], [3, 2]]
    assert char_poly(mat_pow(GOLDEN, 4)).coeffs == (1, -7, 1)
    with pytest.raises(NormalFormMismatch):
        torus_char_coeffs(GOLDEN, 4)
    with pytest.raises(NormalFormMismatch):
        torus_local_zeta(GOLDEN, 4, 7)


def test_local_zeta_examples():
    assert torus_local_zeta(GOLDEN, 1, 5).int_coeffs() == (1, -1, 5)
    assert torus_local_zeta(GOLDEN, 5, 7).int_coeffs() == (1, -11, 7)
    one = IntMatrix.from_rows([[1]])
    for m in (1, 2, 7):
        assert torus_local_zeta(one, m, 3).int_coeffs() == (1, 3)


@pytest.mark.parametrize("m", range(1, 11))
def test_odd_powers_follow_lucas_numbers(m):
    if m % 2 == 0:
        with pytest.raises(NormalFormMismatch):
            torus_char_coeffs(GOLDEN, m)
        return
    assert torus_char_coeffs(GOLDEN, m).a == (lucas(m),)
    assert torus_char_coeffs(GOLDEN, m).a[0] == mat_pow(GOLDEN, m).trace()


def test_local_zeta_alternates_for_larger_n():
    # companion matrix of x^3 - x - 1: non-negative, det 1, primitive
    B = IntMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 1, 0]])
    t = TorusDescriptor("cubic", B)
    assert t.n == 2 and literal_sign_differs(2) and not literal_sign_differs(1)
    for m in range(1, 8):
        try:
            cc = torus_char_coeffs(B, m)
        except NormalFormMismatch:
            continue
        assert cc.reconstruct() == char_poly(mat_pow(B, m))
        f = torus_local_zeta(B, m, 11).int_coeffs()
        assert f == (1, -cc.a[0], cc.a[1], 11)


def unimodular_nonneg(order):
    return st.lists(st.integers(0, 3), min_size=order * order, max_size=order * order).map(
        lambda e: IntMatrix(order, tuple(e))).filter(lambda m: abs(m.det()) == 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 3).flatmap(unimodular_nonneg), st.integers(1, 6),
       st.sampled_from([2, 3, 5, 97]))
def test_local_zeta_structure(B, m, p):
    try:
        cc = torus_char_coeffs(B, m)
    except NormalFormMismatch:
        assert char_poly(mat_pow(B, m))[0] == 1
        return
    assert cc.reconstruct() == char_poly(mat_pow(B, m))
    f = torus_local_zeta(B, m, p)
    assert f.coeffs[0] == 1 and f.degree == B.order and f.int_coeffs()[-1] == p
    assert f.int_coeffs()[1] == -mat_pow(B, m).trace()


def test_pi_of_p_examples():
    assert pi_of_p(Constant(1), 97) == 1
    assert pi_of_p(OrderMod(5), 2) == 4
    with pytest.raises(NotCoprime):
        pi_of_p(OrderMod(5), 5)
    target = torus_l_handle(golden_torus(), Constant(3), 60)
    tm = TraceMatch(target, 10)
    assert all(pi_of_p(tm, p, GOLDEN) == 3 for p in sieve(60))
    with pytest.raises(NotFound):
        pi_of_p(tm, 61, GOLDEN)


def test_strategy_ranges():
    with pytest.raises(InvalidInput):
        Constant(0)
    with pytest.raises(InvalidInput):
        OrderMod(1)


def test_torus_descriptor_validation():
    with pytest.raises(InvalidInput):
        TorusDescriptor("neg", IntMatrix.from_rows([[1, -1], [1, 0]]))
    with pytest.raises(InvalidInput):
        TorusDescriptor("det2", IntMatrix.from_rows([[2, 1], [0, 1]]))
    t = golden_torus()
    assert t.n == 1 and abs(float(t.theta[0]) - 0.6180339887) < 1e-9


def test_handle_examples():
    h = torus_l_handle(golden_torus(), Constant(1), 10)
    assert sorted(h.factors) == [2, 3, 5, 7]
    assert all(f.int_coeffs() == (1, -1, p) for p, f in h.factors.items())
    h0 = torus_l_handle(degenerate_torus(), Constant(1), 10)
    assert all(f.int_coeffs() == (1, p) for p, f in h0.factors.items())


def test_handle_exclusions():
    from lfunc_lab.artin import riemann_zeta_handle
    h = torus_l_handle(golden_torus(), TraceMatch(riemann_zeta_handle(50), 3), 50)
    assert h.exclusions and not h.factors
    h = torus_l_handle(golden_torus(), Constant(2), 20)
    assert not h.factors and all("NormalFormMismatch" in r for r in h.exclusions.values())
    h = torus_l_handle(golden_torus(), OrderMod(5), 30)
    assert 5 in h.exclusions and "NotCoprime" in h.exclusions[5]


def test_even_n_handle_carries_note():
    B = IntMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 1, 0]])
    h = torus_l_handle(TorusDescriptor("cubic", B), Constant(1), 20)
    assert h.notes and "alternation" in h.notes[0]
    assert not torus_l_handle(golden_torus(), Constant(1), 20).notes


def test_trace_match_round_trip_threads():
    target = torus_l_handle(golden_torus(), Constant(5), 200)
    a = torus_l_handle(golden_torus(), TraceMatch(target, 10), 200, threads=4)
    assert compare(a, target, 200, 200).verdict is Verdict.IDENTICAL_ON_OVERLAP
    assert a.to_json() == torus_l_handle(golden_torus(), TraceMatch(target, 10), 200).to_json()


def test_json_round_trips():
    t = golden_torus()
    target = torus_l_handle(t, Constant(3), 30)
    for strat in (Constant(3), OrderMod(7), TraceMatch(target, 5)):
        back = strategy_from_json(strategy_to_json(strat))
        assert strategy_to_json(back) == strategy_to_json(strat)
        t2, s2 = torus_from_json(t.to_json(strat))
        assert t2 == t and strategy_to_json(s2) == strategy_to_json(strat)
    with pytest.raises(InvalidInput):
        torus_from_json({"label": "x", "n": 1, "B": [1, 1, 1]})
    with pytest.raises(InvalidInput):
        strategy_from_json({"kind": "psychic", "parameter": 1})


# -- SO(m, m | Z) ---------------------------------------------------------------

I1, Z1 = [[1]], [[0]]


def test_so_examples():
    assert is_so_mm_Z(I1, Z1, Z1, I1)
    assert is_so_mm_Z(Z1, I1, I1, Z1)
    assert not is_so_mm_Z(I1, I1, Z1, I1)
    assert so_mm_violations(I1, I1, Z1, I1) == ["B^t D + D^t B = 0"]
    with pytest.raises(OrderMismatch):
        so_mm_violations(I1, [[1, 0], [0, 1]], Z1, I1)


def split_gram(m):
    J = np.zeros((2 * m, 2 * m), dtype=object)
    J[:m, m:] = np.eye(m, dtype=int)
    J[m:, :m] = np.eye(m, dtype=int)
    return J


def numpy_oracle(M, m):
    M = np.array(M, dtype=object)
    return bool((M.T.dot(split_gram(m)).dot(M) == split_gram(m)).all())


def blocks(M, m):
    M = np.array(M, dtype=object)
    return [M[:m, :m].tolist(), M[:m, m:].tolist(), M[m:, :m].tolist(), M[m:, m:].tolist()]


def generators(m):
    """Generators of O(m,m|Z): [[A,0],[0,A^-t]], [[I,S],[0,I]] with S skew, and swaps."""
    gens = []
    for i in range(m):
        for j in range(m):
            if i != j:
                A = np.eye(m, dtype=int)
                A[i, j] = 1
                Ainv_t = np.linalg.inv(A).round().astype(int).T
                gens.append(np.block([[A, np.zeros((m, m), int)], [np.zeros((m, m), int), Ainv_t]]))
                if i < j:
                    S = np.zeros((m, m), int)
                    S[i, j], S[j, i] = 1, -1
                    gens.append(np.block([[np.eye(m, dtype=int), S], [np.zeros((m, m), int), np.eye(m, dtype=int)]]))
    P = np.eye(2 * m, dtype=int)
    P[[0, m]] = P[[m, 0]]
    gens.append(P)
    return gens


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3).flatmap(lambda m: st.tuples(st.just(m), st.lists(st.integers(0, 10**6), min_size=1, max_size=6))),
       st.lists(st.integers(-2, 2), min_size=36, max_size=36))
def test_so_closure_and_numpy_oracle(word, noise):
    m, picks = word
    gens = generators(m)
    M = np.eye(2 * m, dtype=int)
    for k in picks:
        g = gens[k % len(gens)]
        assert is_so_mm_Z(*blocks(g, m))
        M = M @ g
    assert is_so_mm_Z(*blocks(M, m))
    assert numpy_oracle(M, m)
    # a random integer perturbation is judged the same way by both checks
    R = M + np.array(noise[:4 * m * m]).reshape(2 * m, 2 * m)
    assert is_so_mm_Z(*blocks(R, m)) == numpy_oracle(R, m)


def test_assemble_layout():
    rows = assemble([[1]], [[2]], [[3]], [[4]])
    assert rows == [[1, 2], [3, 4]]
    assert CharCoeffs((1,)).reconstruct().coeffs == (-1, -1, 1)
