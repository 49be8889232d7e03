"""Segal-Bargmann transform for Clifford algebra-valued functions."""

from .clifford import Multivector, bar, blade_mask, blade_product, dagger, inner0, multiply, norm0
from .polynomial import (
    CliffordPolynomial,
    DegreeCapError,
    dirac,
    evaluate,
    gaussian_dirac_power,
    laplacian,
    serialize,
)
from .quadrature import QuadratureDegreeWarning, gauss_hermite, integrate_gaussian, tensor_rule
from .monogenics import MonogenicBasis, build_basis, monogenic_dimension, sphere_pairing, verify_monogenic
from .hermite import (
    BasisCombination,
    BasisIndex,
    HermiteFunction,
    gamma,
    gram_matrix,
    hermite_poly,
    l2_inner,
    l2_norm,
    phi,
    random_combination,
)
from .bargmann import (
    DictionaryExpansion,
    expand,
    fock_inner,
    fock_norm,
    fock_norm_homogeneous,
    isometry_check,
    kernel_closed,
    kernel_series,
    stft,
    stft_bargmann_check,
    tail_bound,
    transform_exact,
    transform_numeric,
)

__version__ = "0.1.0"

__all__ = [
    "Multivector",
    "bar",
    "blade_mask",
    "blade_product",
    "dagger",
    "inner0",
    "multiply",
    "norm0",
    "CliffordPolynomial",
    "DegreeCapError",
    "dirac",
    "evaluate",
    "gaussian_dirac_power",
    "laplacian",
    "serialize",
    "QuadratureDegreeWarning",
    "gauss_hermite",
    "integrate_gaussian",
    "tensor_rule",
    "MonogenicBasis",
    "build_basis",
    "monogenic_dimension",
    "sphere_pairing",
    "verify_monogenic",
    "BasisCombination",
    "BasisIndex",
    "HermiteFunction",
    "gamma",
    "gram_matrix",
    "hermite_poly",
    "l2_inner",
    "l2_norm",
    "phi",
    "random_combination",
    "DictionaryExpansion",
    "expand",
    "fock_inner",
    "fock_norm",
    "fock_norm_homogeneous",
    "isometry_check",
    "kernel_closed",
    "kernel_series",
    "stft",
    "stft_bargmann_check",
    "tail_bound",
    "transform_exact",
    "transform_numeric",
]
