"""
Real and complex Clifford algebras Cl_m with generators e_j^2 = -1.

Blades are stored as bit masks: bit ``j - 1`` set means the generator
``e_j`` occurs in ``e_A``.  Factors are always kept in ascending order, so
``0b101`` is ``e_1 e_3`` (named ``e13``) and ``0`` is the unit ``e0``.

A :class:`Multivector` wraps a length ``2**m`` coefficient vector indexed by
blade mask.  Three coefficient flavours are supported:

* ``float64``    - real algebra, floating point
* ``complex128`` - complexified algebra
* ``object``     - real algebra with exact :class:`fractions.Fraction` entries

Mixed operations promote towards complex (and exact towards float).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Number

import numpy as np

MAX_DIM = 8

__all__ = [
    "MAX_DIM",
    "Multivector",
    "blade_mask",
    "blade_name",
    "blade_product",
    "bar",
    "dagger",
    "inner0",
    "norm0",
    "multiply",
    "product_arrays",
    "bar_signs",
    "grade",
]


def _check_dim(m):
    if not isinstance(m, (int, np.integer)) or not 1 <= m <= MAX_DIM:
        raise ValueError(f"dimension m must be an integer in [1, {MAX_DIM}], got {m!r}")
    return int(m)


def grade(mask):
    return bin(mask).count("1")


def blade_mask(*indices):
    """Mask of ``e_{i1} e_{i2} ...``; indices are 1-based and must be distinct."""
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated generator e{i}")
        mask |= bit
    return mask


def blade_name(mask):
    if mask == 0:
        return "e0"
    return "e" + "".join(str(j + 1) for j in range(mask.bit_length()) if mask >> j & 1)


def _swap_count(a, b):
    # number of transpositions needed to move the factors of b past those of a
    a >>= 1
    count = 0
    while a:
        count += grade(a & b)
        a >>= 1
    return count


def blade_product(A, B, m):
    """
    Product of two basis blades.

    Returns ``(sign, C)`` with ``e_A e_B = sign * e_C`` and ``C = A ^ B``.
    """
    m = _check_dim(m)
    top = 1 << m
    for mask in (A, B):
        if not 0 <= mask < top:
            raise ValueError(f"blade mask {mask:#b} out of range for m={m}")
    n = _swap_count(A, B) + grade(A & B)
    return (-1 if n % 2 else 1), A ^ B


@lru_cache(maxsize=None)
def _tables(m):
    """Gather/sign tables so that (ab)[c] = sum_i sign[c, i] a[i] b[i ^ c]."""
    n = 1 << m
    idx = np.arange(n)
    partner = idx[:, None] ^ idx[None, :]  # [c, i] -> i ^ c
    sign = np.empty((n, n), dtype=np.int8)
    for c in range(n):
        for i in range(n):
            sign[c, i] = blade_product(i, i ^ c, m)[0]
    partner.setflags(write=False)
    sign.setflags(write=False)
    return partner, sign


@lru_cache(maxsize=None)
def bar_signs(m):
    """(-1)^(|A|(|A|+1)/2) for every blade A."""
    n = 1 << m
    out = np.array([-1 if (grade(A) * (grade(A) + 1) // 2) % 2 else 1 for A in range(n)],
                   dtype=np.int8)
    out.setflags(write=False)
    return out


def product_arrays(a, b, m):
    """
    Geometric product on raw coefficient arrays.

    ``a`` and ``b`` have trailing axis of length ``2**m`` and broadcast over
    leading axes.  Works for float, complex and object (Fraction) dtypes.
    """
    partner, sign = _tables(m)
    a = np.asarray(a)
    b = np.asarray(b)
    if a.dtype == object and b.dtype == object:
        return _exact_product(a, b, partner, sign)
    # bp[..., c, i] = b[..., i ^ c]
    bp = b[..., partner]
    if a.dtype == object or b.dtype == object:
        terms = a[..., None, :] * bp * sign.astype(object)
    else:
        terms = a[..., None, :] * bp * sign
    return terms.sum(axis=-1)


def _numerators(x):
    # x == num / den with integer num and one common den
    den = math.lcm(*(Fraction(v).denominator for v in x.flat)) if x.size else 1
    num = np.empty(x.shape, dtype=object)
    for i, v in np.ndenumerate(x):
        v = Fraction(v)
        num[i] = v.numerator * (den // v.denominator)
    return num, den


def _exact_product(a, b, partner, sign):
    # integer arithmetic on numerators is far cheaper than Fraction arithmetic
    na, da = _numerators(a)
    nb, db = _numerators(b)
    terms = na[..., None, :] * nb[..., partner]
    total = np.where(sign > 0, terms, -terms).sum(axis=-1)
    den = da * db
    out = np.empty(total.shape, dtype=object)
    for i, v in np.ndenumerate(total):
        out[i] = Fraction(v, den)
    return out


def _result_dtype(*dtypes):
    if any(np.dtype(d).kind == "c" for d in dtypes):
        return np.complex128
    if all(np.dtype(d) == object for d in dtypes):
        return object
    return np.float64


def _coerce(values, dtype):
    values = np.asarray(values)
    if dtype is object:
        out = np.empty(values.shape, dtype=object)
        for i, v in np.ndenumerate(values):
            out[i] = Fraction(v)
        return out
    if values.dtype == object:
        return np.array([complex(v) if dtype is np.complex128 else float(v)
                         for v in values.ravel()], dtype=dtype).reshape(values.shape)
    return values.astype(dtype)


def _scalar_dtype(x):
    if isinstance(x, Fraction) or isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return object
    if isinstance(x, (complex, np.complexfloating)):
        return np.complex128
    return np.float64


class Multivector:
    """
    Immutable element of Cl_m.

    >>> e1 = Multivector.blade(2, blade_mask(1))
    >>> (e1 * e1).scalar_part()
    -1.0
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs=None, dtype=None):
        m = _check_dim(m)
        n = 1 << m
        if coeffs is None:
            arr = np.zeros(n, dtype=dtype or np.float64)
        else:
            arr = np.asarray(coeffs)
            if arr.shape != (n,):
                raise ValueError(f"expected {n} coefficients for m={m}, got shape {arr.shape}")
            if dtype is not None:
                arr = _coerce(arr, dtype)
            elif arr.dtype.kind in "biu":
                arr = arr.astype(np.float64)
            elif arr.dtype.kind not in "fcO":
                raise TypeError(f"unsupported coefficient dtype {arr.dtype}")
            if arr.dtype.kind == "f":
                arr = arr.astype(np.float64)
            elif arr.dtype.kind == "c":
                arr = arr.astype(np.complex128)
            else:
                arr = arr.copy()
            if arr.dtype == object:
                arr = _coerce(arr, object)
        arr.setflags(write=False)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # construction helpers -------------------------------------------------

    @classmethod
    def scalar(cls, m, value, exact=False):
        dtype = object if exact else (np.complex128 if isinstance(value, complex) else np.float64)
        arr = np.zeros(1 << m, dtype=dtype) if dtype is not object else _coerce(np.zeros(1 << m), object)
        arr[0] = Fraction(value) if exact else value
        return cls(m, arr)

    @classmethod
    def blade(cls, m, mask, value=1, exact=False):
        m = _check_dim(m)
        if not 0 <= mask < 1 << m:
            raise ValueError(f"blade mask {mask:#b} out of range for m={m}")
        if exact:
            arr = _coerce(np.zeros(1 << m, dtype=int), object)
            arr[mask] = Fraction(value)
        else:
            arr = np.zeros(1 << m, dtype=np.complex128 if isinstance(value, complex) else np.float64)
            arr[mask] = value
        return cls(m, arr)

    @classmethod
    def vector(cls, m, components):
        """Clifford vector sum_j x_j e_j."""
        components = list(components)
        if len(components) != m:
            raise ValueError(f"need {m} components, got {len(components)}")
        exact = all(isinstance(c, (Fraction, int)) for c in components)
        cplx = any(isinstance(c, complex) or np.iscomplexobj(c) for c in components)
        dtype = object if exact else (np.complex128 if cplx else np.float64)
        arr = np.zeros(1 << m, dtype=dtype if dtype is not object else int)
        if dtype is object:
            arr = _coerce(arr, object)
        for j, c in enumerate(components):
            arr[1 << j] = Fraction(c) if exact else c
        return cls(m, arr)

    @classmethod
    def zero(cls, m, dtype=np.float64):
        return cls(m, None, dtype=dtype)

    # basic properties ------------------------------------------------------

    @property
    def dtype(self):
        return self.coeffs.dtype

    @property
    def field(self):
        return "complex" if self.coeffs.dtype.kind == "c" else "real"

    @property
    def is_exact(self):
        return self.coeffs.dtype == object

    def scalar_part(self):
        return self.coeffs[0]

    def __getitem__(self, mask):
        return self.coeffs[mask]

    def terms(self):
        """Nonzero (mask, coefficient) pairs in ascending mask order."""
        return [(A, c) for A, c in enumerate(self.coeffs) if c != 0]

    def astype(self, dtype):
        if dtype is object and self.field == "complex":
            raise TypeError("exact mode is real-only")
        return Multivector(self.m, _coerce(self.coeffs, dtype))

    def to_complex(self):
        return self.astype(np.complex128)

    def to_float(self):
        return self if self.dtype == np.float64 else self.astype(np.float64)

    # arithmetic ------------------------------------------------------------

    def _align(self, other):
        if not isinstance(other, Multivector):
            raise TypeError(f"expected Multivector, got {type(other).__name__}")
        if other.m != self.m:
            raise ValueError(f"dimension mismatch: m={self.m} vs m={other.m}")
        dtype = _result_dtype(self.dtype, other.dtype)
        a = self.coeffs if self.dtype == dtype else _coerce(self.coeffs, dtype)
        b = other.coeffs if other.dtype == dtype else _coerce(other.coeffs, dtype)
        return a, b

    def _scale(self, s):
        dtype = _result_dtype(self.dtype, _scalar_dtype(s))
        a = self.coeffs if self.dtype == dtype else _coerce(self.coeffs, dtype)
        if dtype is object:
            s = Fraction(s)
        return Multivector(self.m, a * s)

    def __add__(self, other):
        if isinstance(other, Number):
            other = Multivector.scalar(self.m, other, exact=isinstance(other, (int, Fraction)) and self.is_exact)
        a, b = self._align(other)
        return Multivector(self.m, a + b)

    __radd__ = __add__

    def __neg__(self):
        return Multivector(self.m, -self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return multiply(self, other)
        if isinstance(other, Number):
            return self._scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return self._scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            if self.is_exact and isinstance(other, (int, Fraction)):
                return self._scale(Fraction(1) / Fraction(other))
            return self._scale(1 / other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Number):
            other = Multivector.scalar(self.m, other)
        if not isinstance(other, Multivector) or other.m != self.m:
            return NotImplemented
        a, b = self._align(other)
        return bool(np.all(a == b))

    def __hash__(self):
        return hash((self.m, tuple(self.coeffs.tolist())))

    def isclose(self, other, atol=1e-12):
        a, b = self._align(other)
        return bool(np.all(np.abs(np.asarray(a - b, dtype=np.complex128)) <= atol))

    def __bool__(self):
        return bool(np.any(self.coeffs != 0))

    def bar(self):
        return bar(self)

    def dagger(self):
        return dagger(self)

    def norm0(self):
        return norm0(self)

    def __repr__(self):
        return f"Multivector(m={self.m}, {self})"

    def __str__(self):
        return format_multivector(self)


def _fmt_scalar(c):
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, (complex, np.complexfloating)):
        if c.imag == 0:
            return repr(float(c.real))
        return f"({float(c.real)!r}{float(c.imag):+}j)"
    return repr(float(c))


def format_multivector(a):
    parts = [f"{_fmt_scalar(c)}*{blade_name(A)}" for A, c in a.terms()]
    return " + ".join(parts) if parts else "0"


def multiply(a, b):
    """Geometric product ``a b``."""
    x, y = a._align(b)
    return Multivector(a.m, product_arrays(x, y, a.m))


def bar(a):
    """Clifford conjugation, linear over the scalars."""
    s = bar_signs(a.m)
    if a.is_exact:
        return Multivector(a.m, a.coeffs * s.astype(object))
    return Multivector(a.m, a.coeffs * s)


def dagger(a):
    """Conjugate-linear involution: complex conjugate of each coefficient times bar."""
    if a.is_exact or a.field == "real":
        return bar(a) if a.is_exact else bar(a.to_complex())
    return Multivector(a.m, np.conj(a.coeffs) * bar_signs(a.m))


def inner0(a, b):
    """(a, b)_0 = [a^dagger b]_0 = sum_A conj(a_A) b_A."""
    x, y = a._align(b)
    if x.dtype == object:
        return sum((p * q for p, q in zip(x, y)), Fraction(0))
    val = np.sum(np.conj(x) * y)
    return val if x.dtype.kind == "c" else float(val)


def norm0(a):
    if a.is_exact:
        return float(sum(c * c for c in a.coeffs)) ** 0.5
    return float(np.sqrt(np.sum(np.abs(a.coeffs) ** 2)))
