"""
Generalized Clifford-Hermite polynomials and the orthonormal L^2 basis.

``H_{l,m,k} P_k`` is defined by the Rodrigues-type formula

    H_{l,m,k}(x) P_k(x) = (-1)^l exp(|x|^2/2) D^l (exp(-|x|^2/2) P_k(x)),

and the basis functions are

    phi_{l,k,j}(x) = H_{l,m,k}(x) P_k^(j)(x) exp(-|x|^2/4) / sqrt(gamma_{l,k}).

Functions of the form ``p(x) exp(-|x|^2/4)`` with ``p`` a Clifford
polynomial are represented by :class:`HermiteFunction`; inner products of
two of them are Gaussian integrals of polynomials and are computed exactly
by Gauss-Hermite quadrature.
"""

from __future__ import annotations

import math
from functools import lru_cache
from numbers import Number
from typing import NamedTuple

import numpy as np

from .clifford import Multivector, bar_signs, product_arrays
from .monogenics import build_basis, monogenic_dimension, verify_monogenic
from .polynomial import DEFAULT_DEGREE_CAP, CliffordPolynomial, DegreeCapError, gaussian_dirac_power
from .quadrature import integrate_gaussian, nodes_for_degree, tensor_rule

__all__ = [
    "BasisIndex",
    "HermiteFunction",
    "HermiteBasisElement",
    "BasisCombination",
    "QuadratureDegreeError",
    "gamma",
    "log_gamma_constant",
    "hermite_poly",
    "phi",
    "basis_indices",
    "l2_inner",
    "l2_norm",
    "gram_matrix",
    "random_combination",
]


class QuadratureDegreeError(ValueError):
    """An explicitly supplied rule cannot integrate the integrand exactly."""


class BasisIndex(NamedTuple):
    """Label (l, k, j); compares and hashes like the plain tuple."""

    l: int
    k: int
    j: int

    def label(self):
        return f"({self.l},{self.k},{self.j})"


def log_gamma_constant(l, k, m):
    """log of gamma_{l,k} for dimension m."""
    if l < 0 or k < 0:
        raise ValueError("l and k must be nonnegative")
    p, odd = divmod(l, 2)
    half = m / 2
    return (
        (2 * p + half + k + odd) * math.log(2)
        + math.lgamma(p + 1)
        + half * math.log(math.pi)
        + math.lgamma(half + k + p + odd)
        - math.lgamma(half)
    )


def gamma(l, k, m):
    """Normalisation constant gamma_{l,k} of the Clifford-Hermite system."""
    return math.exp(log_gamma_constant(l, k, m))


@lru_cache(maxsize=None)
def _hermite_cached(l, P, degree_cap):
    return gaussian_dirac_power(P, l, degree_cap) * (-1) ** l


def hermite_poly(l, P, degree_cap=DEFAULT_DEGREE_CAP, atol=1e-12):
    """``H_{l,m,k} P_k`` for an inner spherical monogenic ``P_k``."""
    if not verify_monogenic(P, atol=0.0 if P.is_exact else atol):
        raise ValueError("P_k must be left monogenic")
    if P.degree + l > degree_cap:
        raise DegreeCapError(f"l + k = {P.degree + l} exceeds cap {degree_cap}")
    return _hermite_cached(l, P, degree_cap)


class HermiteFunction:
    """``p(x) exp(-|x|^2/4)`` for a Clifford polynomial ``p`` in real variables."""

    __slots__ = ("poly",)

    def __init__(self, poly):
        if poly.kind != "x":
            raise ValueError("Hermite functions live on R^m")
        self.poly = poly

    @property
    def m(self):
        return self.poly.m

    def __call__(self, x):
        x = np.asarray(x, dtype=np.float64)
        return self.poly(x) * math.exp(-float(x @ x) / 4)

    def evaluate_many(self, points):
        points = np.asarray(points)
        envelope = np.exp(-np.sum(points * points, axis=-1) / 4)
        return self.poly.evaluate_many(points) * envelope[:, None]

    def __add__(self, other):
        if not isinstance(other, HermiteFunction):
            return NotImplemented
        return HermiteFunction(self.poly + other.poly)

    def __sub__(self, other):
        if not isinstance(other, HermiteFunction):
            return NotImplemented
        return HermiteFunction(self.poly - other.poly)

    def __neg__(self):
        return HermiteFunction(-self.poly)

    def __mul__(self, a):
        # right module action f -> f a
        if isinstance(a, (Multivector, Number)):
            return HermiteFunction(self.poly * a)
        return NotImplemented

    def __rmul__(self, a):
        if isinstance(a, Number):
            return HermiteFunction(self.poly * a)
        return NotImplemented

    def __repr__(self):
        return f"HermiteFunction({self.poly} * exp(-|x|^2/4))"


class HermiteBasisElement(HermiteFunction):
    __slots__ = ("index",)

    def __init__(self, index, poly):
        super().__init__(poly)
        self.index = index

    def __repr__(self):
        return f"phi{self.index.label()}[m={self.m}]"


def basis_indices(m, lmax, kmax):
    """All (l, k, j) with l <= lmax, k <= kmax, in l-major, then k, then j order."""
    return [
        BasisIndex(l, k, j)
        for l in range(lmax + 1)
        for k in range(kmax + 1)
        for j in range(1, monogenic_dimension(m, k) + 1)
    ]


@lru_cache(maxsize=None)
def _phi_poly(l, k, j, m):
    P = build_basis(m, k)[j]
    return hermite_poly(l, P) / math.sqrt(gamma(l, k, m))


def phi(index, m):
    """The orthonormal basis function phi_{l,k,j} on R^m."""
    if not isinstance(index, BasisIndex):
        index = BasisIndex(*index)
    l, k, j = index
    if l < 0 or k < 0:
        raise ValueError(f"invalid index {index}")
    if not 1 <= j <= monogenic_dimension(m, k):
        raise IndexError(f"j={j} out of range 1..{monogenic_dimension(m, k)} for m={m}, k={k}")
    return HermiteBasisElement(index, _phi_poly(l, k, j, m))


class BasisCombination:
    """Finite right-linear combination ``sum phi_a c_a`` with Clifford coefficients."""

    def __init__(self, m, coefficients):
        self.m = m
        self.coefficients = {
            (i if isinstance(i, BasisIndex) else BasisIndex(*i)): (
                c if isinstance(c, Multivector) else Multivector.scalar(m, c)
            )
            for i, c in coefficients.items()
        }

    def function(self):
        poly = CliffordPolynomial.zero(self.m)
        for idx, c in sorted(self.coefficients.items()):
            poly = poly + phi(idx, self.m).poly * c
        return HermiteFunction(poly)

    def __repr__(self):
        return f"BasisCombination(m={self.m}, {len(self.coefficients)} terms)"


def random_combination(m, lmax, kmax, rng, terms=None):
    """Random combination of basis functions with Gaussian Clifford coefficients."""
    indices = basis_indices(m, lmax, kmax)
    if terms is not None and terms < len(indices):
        chosen = rng.choice(len(indices), size=terms, replace=False)
        indices = [indices[i] for i in sorted(chosen)]
    return BasisCombination(m, {i: Multivector(m, rng.standard_normal(1 << m)) for i in indices})


def _as_function(f):
    if isinstance(f, BasisCombination):
        return f.function()
    if isinstance(f, HermiteFunction):
        return f
    raise TypeError(f"expected HermiteFunction or BasisCombination, got {type(f).__name__}")


def l2_inner(f, g, rule=None):
    """
    ``<f, g> = int bar(f(x)) g(x) dx`` for Gaussian-enveloped polynomials.

    Both envelopes combine to ``exp(-|x|^2/2)``, i.e. unit variance.
    """
    f, g = _as_function(f), _as_function(g)
    if f.m != g.m:
        raise ValueError("dimension mismatch")
    m = f.m
    degree = max(f.poly.degree, 0) + max(g.poly.degree, 0)
    if rule is None:
        rule = tensor_rule(nodes_for_degree(degree), m)
    elif degree > rule.exact_degree:
        raise QuadratureDegreeError(f"rule exact to degree {rule.exact_degree}, integrand degree {degree}")
    signs = bar_signs(m)

    def integrand(x):
        return product_arrays(f.poly.evaluate_many(x) * signs, g.poly.evaluate_many(x), m)

    return Multivector(m, integrate_gaussian(integrand, m, variance=1.0, rule=rule))


def l2_norm(f):
    return math.sqrt(max(float(np.real(l2_inner(f, f).scalar_part())), 0.0))


def gram_matrix(m, lmax, kmax):
    """
    Scalar parts of ``<phi_a, phi_b>`` over all indices up to the caps.

    Returns ``(indices, matrix)``.
    """
    indices = basis_indices(m, lmax, kmax)
    polys = [phi(i, m).poly for i in indices]
    degree = 2 * max(p.degree for p in polys)
    rule = tensor_rule(nodes_for_degree(degree), m)
    pts = rule.points(1.0)
    vals = np.stack([p.evaluate_many(pts) for p in polys])  # (B, N, n)
    # [bar(a) b]_0 = sum_A a_A b_A for real coefficients
    G = np.einsum("anc,bnc,n->ab", vals, vals, rule.weights) * rule.scale(1.0)
    return indices, G
