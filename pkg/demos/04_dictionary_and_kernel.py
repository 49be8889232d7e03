"""
Dictionary expansion, tail bounds and the kernel series.

Run:  python3 demos/04_dictionary_and_kernel.py
"""

import numpy as np

from clifford_bargmann import bargmann as sb
from clifford_bargmann.clifford import Multivector, norm0
from clifford_bargmann.hermite import random_combination

rng = np.random.default_rng(4)

# coefficients <phi, f> recover a random span element; the series equals B f
f = random_combination(2, 3, 2, rng)
exp = sb.expand(f, 3, 2)
z = np.array([0.4 - 0.3j, 0.1 + 0.6j])
print("series at z   :", exp(z))
print("B f (numeric) :", sb.transform_numeric(f, z))
print("|series|_0 = %.4f, tail bound = %.4f" % (norm0(exp(z)), exp.tail_bound(z)))

# truncated kernel series against the closed form
x = np.array([0.5, 0.1])
z = np.array([0.3 + 0.2j, -0.1])
closed = Multivector.scalar(2, sb.kernel_closed(x, z))
print("\nkernel at x=(0.5,0.1), z=(0.3+0.2i,-0.1)")
for q in range(5):
    err = norm0(sb.kernel_series(x, z, 2 * q, q) - closed)
    print(f"  caps ({2 * q},{q}): error {err:.2e}")

# at |x| ~ 1, |z| ~ 1 the box l <= 8, k <= 4 is limited by the missing k > 4 terms
x = np.array([0.9, -0.6])
z = np.array([0.6 + 0.3j, -0.5 + 0.4j])
z = z / np.linalg.norm(z)
closed = Multivector.scalar(2, sb.kernel_closed(x, z))
print("\nkernel at |x| = %.2f, |z| = 1" % np.linalg.norm(x))
for L, K, N in [(8, 4, None), (10, 2, None), (6, 6, None), (12, 12, 10), (12, 12, 12)]:
    err = norm0(sb.kernel_series(x, z, L, K, max_total=N) - closed)
    label = f"l<={L}, k<={K}" + (f", l+k<={N}" if N else "")
    print(f"  {label:24s} error {err:.2e}")
