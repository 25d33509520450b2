"""
Local factors of the golden-mean torus
======================================

B = [[1, 1], [1, 0]] is the smallest unimodular Perron matrix.  Its odd
powers have determinant -1, so their characteristic polynomials sit in the
normal form x^2 - a_1 x - 1 with a_1 a Lucas number.
"""

from lfunc_lab.dirichlet import compare
from lfunc_lab.errors import NormalFormMismatch
from lfunc_lab.nctorus import (Constant, OrderMod, TraceMatch, golden_torus, torus_char_coeffs,
                               torus_l_handle, torus_local_zeta)

torus = golden_torus()
print("Perron root in", [float(torus.perron.eigenvalue_low), float(torus.perron.eigenvalue_high)])
print("theta_1 ~", float(torus.theta[0]))

for m in range(1, 8):
    try:
        print(m, torus_char_coeffs(torus.B, m).a, torus_local_zeta(torus.B, m, 5).int_coeffs())
    except NormalFormMismatch as exc:
        print(m, "outside the normal form:", exc)

# pi(p) is pluggable; the order of p mod 5 picks odd and even exponents alike
h = torus_l_handle(torus, OrderMod(5), 60)
print("factors at", sorted(h.factors), "|", len(h.exclusions), "primes excluded")

# TraceMatch searches for the exponent that reproduces a given factor
target = torus_l_handle(torus, Constant(3), 500)
found = torus_l_handle(torus, TraceMatch(target, 10), 500)
print(compare(found, target, 500, 500).verdict_text())
