"""
Clifford numbers, the Dirac operator and inner spherical monogenics.

Run:  python3 demos/01_algebra_and_monogenics.py
"""

import numpy as np

from clifford_bargmann.clifford import Multivector, blade_mask, bar, dagger, norm0
from clifford_bargmann.polynomial import CliffordPolynomial, dirac, gaussian_dirac_power
from clifford_bargmann.monogenics import build_basis, monogenic_dimension, sphere_pairing

# --- generators square to -1 and anticommute
m = 3
e1 = Multivector.blade(m, blade_mask(1), exact=True)
e2 = Multivector.blade(m, blade_mask(2), exact=True)
e3 = Multivector.blade(m, blade_mask(3), exact=True)
print("e1 e1        =", e1 * e1)
print("e1 e2        =", e1 * e2)
print("e2 e1        =", e2 * e1)
print("(e1+e2)^2    =", (e1 + e2) * (e1 + e2))

# bar flips vectors and bivectors, keeps the pseudoscalar in Cl_3
e123 = e1 * e2 * e3
print("bar(e123)    =", bar(e123))

# complex coefficients: dagger conjugates as well
z = Multivector.blade(m, blade_mask(1), 1 + 1j)
print("dagger((1+i)e1) =", dagger(z))

# |.|_0 is not multiplicative once m >= 3
u = Multivector.scalar(m, 1.0) + e123.to_float()
print("|u u| / |u|^2 for u = 1 + e123:", norm0(u * u) / norm0(u) ** 2)

# --- the Dirac operator acts from the left
x1 = CliffordPolynomial.variable(2, 1)
x2 = CliffordPolynomial.variable(2, 2)
e12 = Multivector.blade(2, blade_mask(1, 2), exact=True)
P = x1 - x2 * e12
print("\nP          =", P)
print("D P        =", dirac(P))
xvec = CliffordPolynomial.vector_variable(2)
print("D x        =", dirac(xvec))
print("D^2 Gaussian polynomial part:", gaussian_dirac_power(CliffordPolynomial.constant(2, 1), 2))

# --- bases of M^+(k): counts follow C(m+k-2, k)
print("\n m  k  dim  built  max |<P_i,P_j> - delta|")
for m in (2, 3, 4):
    for k in range(4):
        B = build_basis(m, k)
        dev = max(norm0(sphere_pairing(p, q) - (1.0 if i == j else 0.0))
                  for i, p in enumerate(B) for j, q in enumerate(B))
        print(f"{m:2d} {k:2d} {monogenic_dimension(m, k):4d} {len(B):6d}   {dev:.1e}")

# every element is a right combination of exactly monogenic generators
B = build_basis(3, 2)
print("\ngenerators of M^+(2), m=3, annihilated exactly:", B.dirac_exact_zero())
for Q in B.generators:
    print("  ", Q)
