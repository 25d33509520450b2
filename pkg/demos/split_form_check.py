"""
Membership in SO(m, m | Z)
==========================

A 2m x 2m integer matrix [[A, B], [C, D]] preserves the split form
x_1 x_{m+1} + ... + x_m x_{2m} exactly when three block identities hold.
"""

import numpy as np

from lfunc_lab.nctorus import is_so_mm_Z, so_mm_violations

I2, Z2 = np.eye(2, dtype=int).tolist(), np.zeros((2, 2), dtype=int).tolist()
print(is_so_mm_Z(I2, Z2, Z2, I2))

# a skew upper block is allowed, a symmetric one is not
skew = [[0, 1], [-1, 0]]
sym = [[0, 1], [1, 0]]
print(is_so_mm_Z(I2, skew, Z2, I2), so_mm_violations(I2, skew, Z2, I2))
print(is_so_mm_Z(I2, sym, Z2, I2), so_mm_violations(I2, sym, Z2, I2))

# swapping x_1 and x_2 in the order-1 case
print(is_so_mm_Z([[0]], [[1]], [[1]], [[0]]))
