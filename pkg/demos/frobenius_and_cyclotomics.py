"""
Frobenius classes from factorization patterns
=============================================

Over F_p the cyclotomic polynomial Phi_m splits into factors of one common
degree, the order of p mod m.  For a non-Galois cubic the pattern reads off
a cycle type in S_3 instead.
"""

from lfunc_lab import galois
from lfunc_lab.primes import cyclotomic, degree_pattern, multiplicative_order, sieve

m = 12
phi = cyclotomic(m)
print("Phi_12 =", phi)
for p in sieve(40):
    if m % p:
        print(p, degree_pattern(phi, p).degrees, "order", multiplicative_order(p, m))

# x^3 - x - 1 has discriminant -23; its splitting field has group S_3
s3 = galois.s3_cubic_field()
for p in sieve(30):
    try:
        print(p, galois.frobenius_class(s3, p).key)
    except galois.Ramified:
        print(p, "ramified")

# densities of cycle types against the Chebotarev prediction
for row in galois.chebotarev_report(s3, 10_000):
    print(row)
