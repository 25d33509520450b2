"""
Factoring the Dedekind zeta of Q(i)
===================================

The zeta function of Q(i) splits as zeta(s) L(chi_4, s).  We build both
sides prime by prime and compare them.
"""

from lfunc_lab import artin, galois
from lfunc_lab.dirichlet import coeffs_from_euler, compare, evaluate, product_handle

P = 1000
qi = galois.gaussian_field()
print(qi.label, "discriminant", qi.discriminant, "ramified", sorted(qi.ramified_primes))

# Frobenius at a split and an inert prime
for p in (5, 7):
    print(p, galois.frobenius_class(qi, p), galois.splitting_data(qi, p))

zeta = artin.riemann_zeta_handle(P)
l_chi = artin.artin_handle(artin.quadratic_character(qi), qi, P)
dedekind = artin.dedekind_handle(qi, P)

report = compare(dedekind, product_handle([(zeta, 1), (l_chi, 1)]), P, P)
print(report.verdict_text(), "excluded:", report.excluded_primes)

# the first Dirichlet coefficients count ideals of each norm (away from 2)
print(coeffs_from_euler(dedekind, 20))

# truncated Euler product at s = 2: zeta(2) * Catalan's constant
print(evaluate(dedekind, 2, P).value)
