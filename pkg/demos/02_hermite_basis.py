"""
Generalized Clifford-Hermite polynomials and the orthonormal L2 basis.

Run:  python3 demos/02_hermite_basis.py
"""

import math

import numpy as np

from clifford_bargmann.hermite import basis_indices, gamma, gram_matrix, hermite_poly, phi
from clifford_bargmann.monogenics import build_basis
from clifford_bargmann.polynomial import CliffordPolynomial

# normalisation constants, in units of pi for m = 2
print("gamma_{l,k} / pi for m = 2")
print("  l\\k " + "".join(f"{k:>10d}" for k in range(4)))
for l in range(5):
    print(f"  {l:3d} " + "".join(f"{gamma(l, k, 2) / math.pi:10.3f}" for k in range(4)))

# first few Hermite polynomials H_l * 1
one = CliffordPolynomial.constant(2, 1)
for l in range(4):
    print(f"H_{l} =", hermite_poly(l, one))

# with a monogenic factor
P = build_basis(2, 1)[1]
print("H_2 P_1 =", hermite_poly(2, P))

# Gram matrix of the basis, computed by exact-degree Gauss-Hermite quadrature
idx, G = gram_matrix(2, 3, 2)
print(f"\n{len(idx)} basis functions with l <= 3, k <= 2 (m = 2)")
print("max |G - I| =", np.max(np.abs(G - np.eye(len(idx)))))

idx, G = gram_matrix(3, 2, 2)
print(f"{len(idx)} basis functions with l <= 2, k <= 2 (m = 3)")
print("max |G - I| =", np.max(np.abs(G - np.eye(len(idx)))))

# a basis function on a line through the origin
f = phi((2, 1, 1), 2)
for s in np.linspace(-3, 3, 7):
    print(f"  phi_(2,1,1)({s:+.1f}, 0) = {f((s, 0.0))}")
