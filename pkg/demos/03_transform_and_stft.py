"""
The transform on the Hermite basis, the STFT identity and the isometry.

Run:  python3 demos/03_transform_and_stft.py
"""

import math

import numpy as np

from clifford_bargmann import bargmann as sb
from clifford_bargmann.clifford import norm0
from clifford_bargmann.hermite import basis_indices, phi, random_combination

rng = np.random.default_rng(3)

# images of basis functions: z^l P_k(z) / sqrt(gamma)
for idx in [(0, 0, 1), (1, 0, 1), (0, 1, 1), (2, 1, 1)]:
    print(idx, "->", sb.transform_exact(idx, 2))

# numeric transform (quadrature with a complex-shifted rule) vs exact
print("\n index      max relative error over 20 random z")
for idx in basis_indices(2, 3, 1):
    f, psi = phi(idx, 2), sb.transform_exact(idx, 2)
    err = 0.0
    for _ in range(20):
        z = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-1, 1, 2)
        err = max(err, norm0(sb.transform_numeric(f, z) - psi(z)) / norm0(psi(z)))
    print(f" {idx.label():10s} {err:.2e}")

# STFT with a Gaussian window vs the transform, on a random span element
f = random_combination(2, 2, 2, rng)
print("\n t                 omega              residual")
for _ in range(5):
    t, w = rng.uniform(-1, 1, 2), rng.uniform(-1, 1, 2)
    lhs, rhs, res = sb.stft_bargmann_check(f, t, w)
    print(f" {np.round(t, 3)!s:17s} {np.round(w, 3)!s:18s} {res:.1e}")

# unitary up to (2 pi)^(-m/2)
print("\nisometry residuals:")
for m in (2, 3):
    res = [sb.isometry_check(random_combination(m, 2, 1, rng), random_combination(m, 2, 1, rng))[2]
           for _ in range(20)]
    print(f"  m={m}: max {max(res):.1e}")

# unit-norm module basis and the printed normalisation
print("\n", sb.f2_normalization_report((1, 1, 1), 2))
print("(2 pi)^(m/2) at m=2:", 2 * math.pi)
