"""Exact arithmetic for supersymmetric and Laurent supersymmetric polynomials
over a two-block signature (m|n), plus the geometry of their orbit closures."""

from .exprparse import ParseError, parse_poly
from .geometry import (
    AffineSubspace,
    GridEntry,
    IsotropicRoot,
    NonConvergenceError,
    NullstellensatzReport,
    SuperalgebraicSet,
    atypical_roots,
    closure,
    is_superalgebraic,
    isotropic_roots,
    make_point,
    member,
    nullstellensatz_check,
    pairing,
    point_ideal_basis,
    positive_isotropic_roots,
    root_hyperplane,
    vanishing_basis,
)
from .linalg import Matrix, Scalar, format_scalar, kernel_basis, parse_scalar, rref
from .membership import (
    Verdict,
    berezinian,
    convert_convention,
    graded_basis,
    is_supersymmetric_additive,
    is_supersymmetric_laurent,
    laurent_cancellation_test,
    power_sum,
)
from .poly import (
    LAURENT,
    POLYNOMIAL,
    LaurentPoly,
    Signature,
    divisible_by_root_binomial,
    isotropic_pairs,
    root_derivation,
)
from .symmetry import WeylElement, apply, is_w_invariant, symmetrize

__version__ = "0.1.0"

__all__ = [
    "AffineSubspace",
    "GridEntry",
    "IsotropicRoot",
    "LAURENT",
    "LaurentPoly",
    "Matrix",
    "NonConvergenceError",
    "NullstellensatzReport",
    "POLYNOMIAL",
    "ParseError",
    "Scalar",
    "Signature",
    "SuperalgebraicSet",
    "Verdict",
    "WeylElement",
    "apply",
    "atypical_roots",
    "berezinian",
    "closure",
    "convert_convention",
    "divisible_by_root_binomial",
    "format_scalar",
    "graded_basis",
    "is_superalgebraic",
    "is_supersymmetric_additive",
    "is_supersymmetric_laurent",
    "is_w_invariant",
    "isotropic_pairs",
    "isotropic_roots",
    "kernel_basis",
    "laurent_cancellation_test",
    "make_point",
    "member",
    "nullstellensatz_check",
    "pairing",
    "parse_poly",
    "parse_scalar",
    "point_ideal_basis",
    "positive_isotropic_roots",
    "power_sum",
    "root_derivation",
    "root_hyperplane",
    "rref",
    "symmetrize",
    "vanishing_basis",
]
