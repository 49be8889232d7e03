"""
Orthonormal bases of inner spherical monogenics M_l^+(k).

Generators are produced exactly (rational coefficients) by the
Cauchy-Kovalevskaya extension in the last variable: for a scalar monomial
``p`` in ``x_1 .. x_{m-1}``,

    P = sum_n x_m^n / n! * (e_m D')^n p,    D' = sum_{j<m} e_j d_j,

is the unique left monogenic polynomial restricting to ``p`` on ``x_m = 0``.
The ``C(m+k-2, k)`` extensions of the degree-``k`` monomials generate
M_l^+(k) freely as a right Clifford module.

Orthonormality is with respect to the Clifford-valued sphere pairing
``<P, Q> = (1/A_m) int_{S^{m-1}} bar(P) Q dS`` (mean over the unit sphere),
and is imposed module-wise: ``<P_i, P_j> = delta_ij`` as Clifford numbers,
not only in the scalar part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .clifford import Multivector, blade_mask, bar_signs, _tables
from .polynomial import (
    DEFAULT_DEGREE_CAP,
    CliffordPolynomial,
    DegreeCapError,
    dirac,
    is_homogeneous,
    multi_indices,
)

__all__ = [
    "MonogenicBasis",
    "monogenic_dimension",
    "sphere_monomial_mean",
    "sphere_pairing",
    "ck_extension",
    "ck_generators",
    "build_basis",
    "verify_monogenic",
    "clifford_inverse",
    "clifford_inverse_sqrt",
    "left_matrix",
]


def monogenic_dimension(m, k):
    """dim M_l^+(k) = C(m+k-2, k), with dimension 1 for k = 0."""
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")
    if k == 0:
        return 1
    return math.comb(m + k - 2, k)


def sphere_monomial_mean(alpha):
    """Exact mean of ``x^alpha`` over the unit sphere S^{m-1}."""
    if any(a % 2 for a in alpha):
        return Fraction(0)
    m = len(alpha)
    num = math.prod(math.prod(range(a - 1, 0, -2)) for a in alpha)
    den = math.prod(m + 2 * i for i in range(sum(alpha) // 2))
    return Fraction(num, den)


@lru_cache(maxsize=None)
def _mean_matrix(m, s, t):
    rows = multi_indices(m, s)
    cols = multi_indices(m, t)
    return np.array(
        [[sphere_monomial_mean(tuple(a + b for a, b in zip(r, c))) for c in cols] for r in rows],
        dtype=object,
    )


def _dense(p, s):
    """Coefficient block of the degree-``s`` part as a (T, 2**m) array."""
    n = 1 << p.m
    exact = p.is_exact
    rows = []
    for alpha in multi_indices(p.m, s):
        c = p.coefficient(alpha)
        if exact and not c.is_exact:
            c = c.astype(object)
        rows.append(c.coeffs if (exact or c.dtype != object) else c.coeffs.astype(np.float64))
    arr = np.array(rows, dtype=object if exact else None)
    if not exact:
        arr = arr.astype(np.complex128 if np.iscomplexobj(arr) else np.float64)
    return arr.reshape(len(rows), n)


def _contract(left, right, m):
    # result[c] = sum_i sign[c, i] left^T M right [i, i ^ c], with `left`
    # already barred and multiplied by the mean matrix
    partner, sign = _tables(m)
    G = left.T @ right
    n = 1 << m
    idx = np.arange(n)
    picked = G[idx[None, :], partner]  # [c, i] -> G[i, i ^ c]
    if G.dtype == object:
        return (picked * sign.astype(object)).sum(axis=1)
    return (picked * sign).sum(axis=1)


def sphere_pairing(P, Q):
    """
    Mean of ``bar(P) Q`` over S^{m-1}, as a Multivector.

    Exact when both polynomials have rational coefficients.  The inputs need
    not be homogeneous; every pair of homogeneous parts is paired.
    """
    if P.m != Q.m:
        raise ValueError("dimension mismatch")
    m = P.m
    exact = P.is_exact and Q.is_exact
    if not exact:
        P = P.to_float() if P.is_exact else P
        Q = Q.to_float() if Q.is_exact else Q
    cplx = P.field == "complex" or Q.field == "complex"
    if exact:
        total = np.array([Fraction(0)] * (1 << m), dtype=object)
        signs = bar_signs(m).astype(object)
    else:
        total = np.zeros(1 << m, dtype=np.complex128 if cplx else np.float64)
        signs = bar_signs(m)
    for s in sorted({sum(a) for a, _ in P.items()}):
        Ps = _dense(P, s) * signs
        for t in sorted({sum(a) for a, _ in Q.items()}):
            if (s + t) % 2:
                continue
            M = _mean_matrix(m, s, t)
            if not exact:
                M = M.astype(np.float64)
            total = total + _contract(M.T @ Ps, _dense(Q, t), m)
    return Multivector(m, total)


def ck_extension(p):
    """
    Left monogenic extension of a polynomial independent of ``x_m``.

    The result agrees with ``p`` on the hyperplane ``x_m = 0``.
    """
    m = p.m
    if any(a[-1] for a, _ in p.items()):
        raise ValueError("input must not depend on the last variable")
    exact = p.is_exact
    e_m = Multivector.blade(m, blade_mask(m), exact=exact)
    x_m = CliffordPolynomial.variable(m, m, p.kind, exact=exact)

    def d_prime(q):
        out = CliffordPolynomial.zero(m, q.kind)
        for j in range(1, m):
            dq = q.partial(j)
            if dq:
                out = out + Multivector.blade(m, blade_mask(j), exact=exact) * dq
        return out

    result = CliffordPolynomial.zero(m, p.kind)
    term = p
    power = CliffordPolynomial.constant(m, Multivector.scalar(m, 1, exact=exact), p.kind)
    n = 0
    while term:
        result = result + power * term / (math.factorial(n) if not exact else Fraction(math.factorial(n)))
        term = e_m * d_prime(term)
        power = power * x_m
        n += 1
    return result


@lru_cache(maxsize=None)
def ck_generators(m, k):
    """Exact right-module generators of M_l^+(k), one per monomial in x_1..x_{m-1}."""
    if m < 2:
        raise ValueError("monogenic bases need m >= 2")
    gens = []
    for beta in multi_indices(m - 1, k):
        mono = CliffordPolynomial(m, {beta + (0,): Multivector.scalar(m, 1, exact=True)})
        gens.append(ck_extension(mono))
    return tuple(gens)


def left_matrix(a):
    """Matrix of ``b -> a b`` on coefficient vectors."""
    partner, sign = _tables(a.m)
    coeffs = a.coeffs.astype(np.float64) if a.is_exact else a.coeffs
    # (a b)[c] = sum_j sign[c, j ^ c] a[j ^ c] b[j]
    idx = np.arange(1 << a.m)
    src = partner  # [c, j] -> j ^ c
    return sign[idx[:, None], src] * coeffs[src]


def clifford_inverse(a):
    L = left_matrix(a)
    e0 = np.zeros(1 << a.m)
    e0[0] = 1.0
    return Multivector(a.m, np.linalg.solve(L, e0))


def clifford_inverse_sqrt(c):
    """
    ``c^(-1/2)`` for ``c = bar(c)`` positive definite (e.g. a self-pairing).

    The left-regular matrix of a bar-symmetric element is symmetric, and the
    inverse square root of that matrix is again left multiplication by an
    algebra element, read off from its first column.
    """
    L = left_matrix(c.to_float() if c.field == "real" else Multivector(c.m, c.coeffs.real))
    L = 0.5 * (L + L.T)
    w, V = np.linalg.eigh(L)
    if w.min() <= 0:
        raise np.linalg.LinAlgError("self-pairing is not positive definite")
    root = (V * w ** -0.5) @ V.T
    return Multivector(c.m, root[:, 0])


@dataclass(frozen=True)
class MonogenicBasis:
    """
    Clifford-orthonormal right-module basis of M_l^+(k).

    ``elements[j] == sum_i generators[i] * transition[j][i]``: every element
    is an explicit right combination of the exact generators, so its
    monogenicity follows from ``dirac(generator) == 0`` in rational arithmetic.
    """

    m: int
    k: int
    elements: tuple
    generators: tuple  # exact CK generators
    transition: tuple  # transition[j][i]: Multivector

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, j):
        """1-based access, matching the j-index of the basis labels."""
        if not 1 <= j <= len(self.elements):
            raise IndexError(f"j must be in 1..{len(self.elements)}, got {j}")
        return self.elements[j - 1]

    def __iter__(self):
        return iter(self.elements)

    def dirac_exact_zero(self):
        """Exact certificate: every generator is annihilated by D in rational arithmetic."""
        return all(verify_monogenic(Q) for Q in self.generators)


def _combine(gens, coeffs, m):
    out = CliffordPolynomial.zero(m)
    for Q, c in zip(gens, coeffs):
        if c:
            out = out + Q * c
    return out


@lru_cache(maxsize=None)
def build_basis(m, k, degree_cap=DEFAULT_DEGREE_CAP):
    """
    Orthonormal basis of the right module M_l^+(k).

    Module Gram-Schmidt: ``U_j = Q_j - sum_i P_i <P_i, Q_j>`` followed by
    ``P_j = U_j <U_j, U_j>^(-1/2)``, processing generators in grlex order.
    The right coefficients on the generators are tracked alongside.
    """
    if m < 2:
        raise ValueError("monogenic bases need m >= 2")
    if k > degree_cap:
        raise DegreeCapError(f"degree k={k} exceeds cap {degree_cap}")
    gens = ck_generators(m, k)
    expected = monogenic_dimension(m, k)
    if len(gens) != expected:
        raise RuntimeError(f"generator count {len(gens)} != dimension {expected}")
    fgens = [Q.to_float() for Q in gens]
    zero = Multivector.zero(m)
    elements, combos = [], []
    for j in range(expected):
        comb = [Multivector.scalar(m, 1.0) if i == j else zero for i in range(expected)]
        # second sweep is a refinement pass against accumulated round-off
        for sweep in range(2):
            U = _combine(fgens, comb, m)
            for P, cP in zip(elements, combos):
                s = sphere_pairing(P, U)
                comb = [a - b * s for a, b in zip(comb, cP)]
            U = _combine(fgens, comb, m)
            c = sphere_pairing(U, U)
            if sweep == 0 and c.norm0() < 1e-12:
                raise RuntimeError(f"rank deficiency while orthonormalising M^+({k}) for m={m}")
            r = clifford_inverse_sqrt(c)
            comb = [a * r for a in comb]
        combos.append(comb)
        elements.append(_combine(fgens, comb, m))
    return MonogenicBasis(m, k, tuple(elements), gens, tuple(tuple(c) for c in combos))


def verify_monogenic(P, atol=0.0):
    """True iff ``D P`` vanishes (exactly for ``atol=0``)."""
    DP = dirac(P)
    if atol == 0.0:
        return not DP
    return all(np.max(np.abs(np.asarray(c.coeffs, dtype=np.complex128))) <= atol for _, c in DP.items())


def is_inner_spherical_monogenic(P, atol=0.0):
    return is_homogeneous(P) is not None and verify_monogenic(P, atol)
