"""
Sparse multivariate polynomials with Clifford coefficients.

A :class:`CliffordPolynomial` in ``m`` variables is a mapping from exponent
tuples ``alpha`` to :class:`~clifford_bargmann.clifford.Multivector`
coefficients.  Variables are either real (``kind="x"``) or complex
(``kind="z"``); the algebra is identical, only evaluation and the scalar
field of the coefficients differ.

Coefficients multiply to the right of the monomial, ``x^alpha * c``, and a
product of two polynomials multiplies coefficients in the order written.
Since monomials are scalar this is the same as ``c x^alpha``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Number

import numpy as np

from .clifford import Multivector, blade_mask, bar as _bar, dagger as _dagger, format_multivector

DEFAULT_DEGREE_CAP = 12

__all__ = [
    "CliffordPolynomial",
    "DegreeCapError",
    "DEFAULT_DEGREE_CAP",
    "grlex_key",
    "multi_indices",
    "dirac",
    "laplacian",
    "gaussian_dirac_power",
    "evaluate",
    "is_homogeneous",
    "euler_check",
]


class DegreeCapError(ValueError):
    """Raised when an operation would exceed the configured degree cap."""


def grlex_key(alpha):
    """Sort key: total degree ascending, then x_1 before x_2 before ... ."""
    return (sum(alpha), tuple(-a for a in alpha))


def multi_indices(m, s):
    """All exponent tuples of length ``m`` with total degree ``s`` in grlex order."""
    if m == 1:
        return [(s,)]
    out = []
    for first in range(s, -1, -1):
        for rest in multi_indices(m - 1, s - first):
            out.append((first,) + rest)
    return out


def _factorial(alpha):
    return math.prod(math.factorial(a) for a in alpha)


class CliffordPolynomial:
    """Immutable polynomial ``sum_alpha x^alpha c_alpha`` with Clifford ``c_alpha``."""

    __slots__ = ("m", "kind", "_terms")

    def __init__(self, m, terms=None, kind="x"):
        if kind not in ("x", "z"):
            raise ValueError(f"kind must be 'x' or 'z', got {kind!r}")
        clean = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != m or any(a < 0 for a in alpha):
                raise ValueError(f"bad multi-index {alpha} for m={m}")
            if not isinstance(c, Multivector):
                c = Multivector.scalar(m, c, exact=isinstance(c, (int, Fraction)))
            if c.m != m:
                raise ValueError("coefficient dimension mismatch")
            if kind == "x" and c.field == "complex" and np.any(np.imag(c.coeffs) != 0):
                raise ValueError("real-variable polynomials take real Clifford coefficients")
            if c:
                clean[alpha] = clean[alpha] + c if alpha in clean else c
                if not clean[alpha]:
                    del clean[alpha]
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "_terms", dict(sorted(clean.items(), key=lambda t: grlex_key(t[0]))))

    def __setattr__(self, name, value):
        raise AttributeError("CliffordPolynomial is immutable")

    # constructors ----------------------------------------------------------

    @classmethod
    def constant(cls, m, c, kind="x"):
        if not isinstance(c, Multivector):
            c = Multivector.scalar(m, c, exact=isinstance(c, (int, Fraction)))
        return cls(m, {(0,) * m: c}, kind)

    @classmethod
    def variable(cls, m, j, kind="x", exact=True):
        """The scalar coordinate x_j (1-based)."""
        alpha = [0] * m
        alpha[j - 1] = 1
        return cls(m, {tuple(alpha): Multivector.scalar(m, 1, exact=exact)}, kind)

    @classmethod
    def vector_variable(cls, m, kind="x", exact=True):
        """The Clifford vector variable sum_j x_j e_j."""
        terms = {}
        for j in range(1, m + 1):
            alpha = [0] * m
            alpha[j - 1] = 1
            terms[tuple(alpha)] = Multivector.blade(m, blade_mask(j), exact=exact)
        return cls(m, terms, kind)

    @classmethod
    def zero(cls, m, kind="x"):
        return cls(m, {}, kind)

    # inspection ------------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, alpha):
        return self._terms.get(tuple(alpha), Multivector.zero(self.m))

    @property
    def degree(self):
        return max((sum(a) for a in self._terms), default=-1)

    @property
    def is_exact(self):
        return all(c.is_exact for c in self._terms.values())

    @property
    def field(self):
        return "complex" if any(c.field == "complex" for c in self._terms.values()) else "real"

    def _check(self, other):
        if not isinstance(other, CliffordPolynomial):
            raise TypeError(f"expected CliffordPolynomial, got {type(other).__name__}")
        if other.m != self.m or other.kind != self.kind:
            raise ValueError(f"polynomial mismatch: (m={self.m}, {self.kind}) vs (m={other.m}, {other.kind})")

    # conversions ------------------------------------------------------------

    def with_kind(self, kind):
        """Same coefficients, variables reinterpreted (x -> z substitution)."""
        return CliffordPolynomial(self.m, self._terms, kind)

    def astype(self, dtype):
        return CliffordPolynomial(self.m, {a: c.astype(dtype) for a, c in self._terms.items()}, self.kind)

    def to_float(self):
        return self.astype(np.float64)

    def map_coefficients(self, fn):
        return CliffordPolynomial(self.m, {a: fn(c) for a, c in self._terms.items()}, self.kind)

    def bar(self):
        """Coefficient-wise Clifford conjugation (the pointwise bar for real variables)."""
        return self.map_coefficients(_bar)

    def dagger_coefficients(self):
        return self.map_coefficients(_dagger)

    # ring operations -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (Number, Multivector)):
            other = CliffordPolynomial.constant(self.m, other, self.kind)
        self._check(other)
        terms = dict(self._terms)
        for a, c in other._terms.items():
            terms[a] = terms[a] + c if a in terms else c
        return CliffordPolynomial(self.m, terms, self.kind)

    __radd__ = __add__

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CliffordPolynomial):
            return poly_mul(self, other)
        if isinstance(other, (Number, Multivector)):
            return self.map_coefficients(lambda c: c * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Number, Multivector)):
            return self.map_coefficients(lambda c: other * c)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            return self.map_coefficients(lambda c: c / other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("power must be a nonnegative integer")
        result = CliffordPolynomial.constant(self.m, 1, self.kind)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return (self.m, self.kind) == (other.m, other.kind) and not (self - other)

    def __hash__(self):
        return hash((self.m, self.kind, tuple((a, hash(c)) for a, c in self._terms.items())))

    def isclose(self, other, atol=1e-12):
        self._check(other)
        return all(c.isclose(Multivector.zero(self.m), atol) for c in (self - other)._terms.values())

    # calculus --------------------------------------------------------------

    def partial(self, j):
        """d/dx_j (1-based)."""
        terms = {}
        for alpha, c in self._terms.items():
            a = alpha[j - 1]
            if a == 0:
                continue
            beta = alpha[: j - 1] + (a - 1,) + alpha[j:]
            terms[beta] = c * a
        return CliffordPolynomial(self.m, terms, self.kind)

    def __call__(self, point):
        return evaluate(self, point)

    def evaluate_many(self, points):
        """
        Evaluate at an ``(N, m)`` array of points; returns ``(N, 2**m)`` coefficients.
        """
        points = np.asarray(points)
        if points.ndim != 2 or points.shape[1] != self.m:
            raise ValueError(f"points must have shape (N, {self.m}), got {points.shape}")
        n = 1 << self.m
        if not self._terms:
            return np.zeros((points.shape[0], n), dtype=np.result_type(points.dtype, np.float64))
        alphas = np.array(list(self._terms), dtype=np.int64)
        coeffs = np.stack([c.coeffs for c in self._terms.values()])
        if coeffs.dtype == object:
            coeffs = coeffs.astype(np.float64)
        if points.dtype == object:
            points = points.astype(np.complex128 if any(isinstance(p, complex) for p in points.ravel())
                                   else np.float64)
        # (N, T): monomial values
        mono = np.ones((points.shape[0], len(alphas)), dtype=np.result_type(points.dtype, np.float64))
        for j in range(self.m):
            powers = alphas[:, j]
            if powers.any():
                mono = mono * points[:, j : j + 1] ** powers[None, :]
        return mono @ coeffs

    def serialize(self):
        return serialize(self)

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"CliffordPolynomial(m={self.m}, kind={self.kind!r}, {serialize(self)})"


def poly_mul(p, q):
    p._check(q)
    terms = {}
    for a, c in p._terms.items():
        for b, d in q._terms.items():
            g = tuple(x + y for x, y in zip(a, b))
            cd = c * d
            terms[g] = terms[g] + cd if g in terms else cd
    return CliffordPolynomial(p.m, terms, p.kind)


def poly_add(p, q):
    return p + q


def dirac(p):
    """Left Dirac operator: sum_j e_j * d/dx_j p, e_j multiplying from the left."""
    exact = p.is_exact
    out = CliffordPolynomial.zero(p.m, p.kind)
    for j in range(1, p.m + 1):
        dp = p.partial(j)
        if dp:
            out = out + Multivector.blade(p.m, blade_mask(j), exact=exact) * dp
    return out


def laplacian(p):
    out = CliffordPolynomial.zero(p.m, p.kind)
    for j in range(1, p.m + 1):
        out = out + p.partial(j).partial(j)
    return out


def gaussian_dirac_power(p, l, degree_cap=DEFAULT_DEGREE_CAP):
    """
    Polynomial ``q`` with ``D^l(exp(-|x|^2/2) p) = exp(-|x|^2/2) q``.

    Each step applies ``f -> -x f + D f`` (x the vector variable), which is
    the product rule for the Gaussian envelope.
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    if p.degree + l > degree_cap:
        raise DegreeCapError(f"degree {p.degree} + l={l} exceeds cap {degree_cap}")
    xvec = CliffordPolynomial.vector_variable(p.m, p.kind, exact=p.is_exact)
    q = p
    for _ in range(l):
        q = dirac(q) - xvec * q
    return q


def evaluate(p, point):
    """Direct evaluation at a single point; exact when point and coefficients are rational."""
    point = list(point)
    if len(point) != p.m:
        raise ValueError(f"point must have {p.m} coordinates, got {len(point)}")
    exact = p.is_exact and all(isinstance(v, (int, Fraction)) for v in point)
    if exact:
        result = Multivector.zero(p.m, dtype=object)
        for alpha, c in p.items():
            mono = math.prod((Fraction(v) ** a for v, a in zip(point, alpha)), start=Fraction(1))
            result = result + c * mono
        return result
    cplx = any(isinstance(v, (complex, np.complexfloating)) for v in point)
    arr = np.array(point, dtype=np.complex128 if cplx else np.float64)
    return Multivector(p.m, p.evaluate_many(arr[None, :])[0])


def is_homogeneous(p):
    """Degree ``s`` if every term has total degree ``s``, else ``None`` (zero -> None)."""
    degrees = {sum(a) for a in p._terms}
    return degrees.pop() if len(degrees) == 1 else None


def euler_check(p):
    """True iff sum_j x_j d_j p == s p for the homogeneous degree s of p."""
    s = is_homogeneous(p)
    if s is None:
        return False
    out = CliffordPolynomial.zero(p.m, p.kind)
    for j in range(1, p.m + 1):
        out = out + CliffordPolynomial.variable(p.m, j, p.kind) * p.partial(j)
    return out == p * s


def monomial_factorial(alpha):
    return _factorial(alpha)


def serialize(p):
    """Canonical text form: grlex-ordered ``(coeff) * x^(a1,...,am)`` terms."""
    if not p._terms:
        return "0"
    return " + ".join(
        f"({format_multivector(c)}) * {p.kind}^({','.join(map(str, a))})" for a, c in p._terms.items()
    )
