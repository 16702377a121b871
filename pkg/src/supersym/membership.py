"""Membership tests for the two supersymmetric algebras over a signature (m|n).

Both algebras sit inside the ring of invariants of S_m x S_n:

  * additive picture (polynomial mode): a W-invariant polynomial belongs
    iff for every index pair (i, j) the substitution x_i := s, y_j := -s
    (all other variables symbolic) produces a result with no s-dependence.
    Equivalently, the polynomial is constant along every translation line
    through the pairing-zero locus of the corresponding isotropic root.

  * multiplicative picture (laurent mode): a W-invariant Laurent polynomial
    belongs iff for every pair (i, j) its root derivation lies in the ideal
    of the root binomial -- decided by the substitution x_i := y_j.  The
    independent cross-check substitutes x_i := t, y_j := t and requires the
    result to be free of t.

Non-invariant input fails with a `failed_invariance` verdict rather than a
root witness; the per-root scans run in canonical (i, j) order so verdicts
are deterministic.  Signatures with m = 0 or n = 0 have no index pairs, so
membership degenerates to plain invariance (a supported path, not an error).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, kernel_basis
from .poly import (
    LAURENT,
    POLYNOMIAL,
    LaurentPoly,
    Signature,
    isotropic_pairs,
    root_derivation,
    divisible_by_root_binomial,
)
from .symmetry import is_w_invariant


@dataclass(frozen=True)
class Verdict:
    """Outcome of a membership test, with a witness on failure."""

    member: bool
    failed_invariance: bool = False
    failing_root: tuple[int, int] | None = None
    residual: LaurentPoly | None = None

    def __post_init__(self) -> None:
        if self.member and (
            self.failed_invariance or self.failing_root is not None or self.residual is not None
        ):
            raise ValueError("a member verdict cannot carry failure witnesses")

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "failed_invariance": self.failed_invariance,
            "failing_root": list(self.failing_root) if self.failing_root else None,
            "residual": self.residual.render() if self.residual is not None else None,
        }


def _param_part(f: LaurentPoly, param_index: int) -> LaurentPoly:
    """Terms with a nonzero exponent on the given parameter slot."""
    dependent = {e: c for e, c in f.terms.items() if e[param_index] != 0}
    return LaurentPoly(f.signature, f.mode, dependent, f.params)


def additive_cancellation_residual(f: LaurentPoly, i: int, j: int) -> LaurentPoly:
    """The s-dependent part of f after x_i := s, y_j := -s; zero iff the pair passes."""
    if f.mode != POLYNOMIAL:
        raise ValueError("additive test requires polynomial mode")
    sig = f.signature
    s = LaurentPoly.variable(sig, POLYNOMIAL, sig.width, params=("s",))
    substituted = f.substitute({i - 1: s, sig.m + j - 1: -s}, signature=sig, params=("s",))
    return _param_part(substituted, sig.width)


def laurent_cancellation_residual(f: LaurentPoly, i: int, j: int) -> LaurentPoly:
    """The t-dependent part of f after x_i := t, y_j := t; zero iff the pair passes."""
    if f.mode != LAURENT:
        raise ValueError("laurent cancellation requires laurent mode")
    sig = f.signature
    t = LaurentPoly.variable(sig, LAURENT, sig.width, params=("t",))
    substituted = f.substitute({i - 1: t, sig.m + j - 1: t}, signature=sig, params=("t",))
    return _param_part(substituted, sig.width)


def _scan_pairs(f: LaurentPoly, residual_of) -> Verdict:
    if not is_w_invariant(f):
        return Verdict(member=False, failed_invariance=True)
    for i, j in isotropic_pairs(f.signature):
        residual = residual_of(f, i, j)
        if residual is not None and not residual.is_zero:
            return Verdict(member=False, failing_root=(i, j), residual=residual)
    return Verdict(member=True)


def is_supersymmetric_additive(f: LaurentPoly) -> Verdict:
    """Additive-picture membership; every index pair is checked (cheap self-check)."""
    if f.mode != POLYNOMIAL:
        raise ValueError("is_supersymmetric_additive requires polynomial mode")
    return _scan_pairs(f, additive_cancellation_residual)


def is_supersymmetric_laurent(f: LaurentPoly) -> Verdict:
    """Laurent-picture membership via root derivations and binomial divisibility."""
    if f.mode != LAURENT:
        raise ValueError("is_supersymmetric_laurent requires laurent mode")

    def residual_of(g: LaurentPoly, i: int, j: int) -> LaurentPoly | None:
        _, residual = divisible_by_root_binomial(root_derivation(g, i, j), i, j)
        return residual

    return _scan_pairs(f, residual_of)


def laurent_cancellation_test(f: LaurentPoly) -> Verdict:
    """Laurent-picture membership via the t-substitution characterization."""
    if f.mode != LAURENT:
        raise ValueError("laurent_cancellation_test requires laurent mode")
    return _scan_pairs(f, laurent_cancellation_residual)


def power_sum(r: int, signature: Signature, mode: str) -> LaurentPoly:
    """Standard generators of both algebras.

    Polynomial mode (r >= 1): sum of x_i^r plus (-1)^(r+1) times the sum of
    y_j^r.  Laurent mode (any nonzero r): sum of x_i^r minus the sum of y_j^r.
    """
    if r == 0:
        raise ValueError("power sum index must be nonzero")
    if mode == POLYNOMIAL and r < 0:
        raise ValueError("polynomial-mode power sums need a positive index")
    terms: dict[tuple[int, ...], Fraction] = {}
    width = signature.width
    for i in range(signature.m):
        expo = [0] * width
        expo[i] = r
        terms[tuple(expo)] = Fraction(1)
    y_sign = Fraction((-1) ** (r + 1)) if mode == POLYNOMIAL else Fraction(-1)
    for j in range(signature.n):
        expo = [0] * width
        expo[signature.m + j] = r
        terms[tuple(expo)] = y_sign
    return LaurentPoly(signature, mode, terms)


def berezinian(signature: Signature) -> LaurentPoly:
    """The distinguished unit: product of all x_i times the inverse of all y_j."""
    expo = (1,) * signature.m + (-1,) * signature.n
    return LaurentPoly.monomial(signature, LAURENT, expo)


def convert_convention(f: LaurentPoly) -> LaurentPoly:
    """Negate every y variable (the involution bridging the two sign conventions).

    Membership in the additive picture is equivalent to the converted
    polynomial passing the (t, t)-cancellation used in the laurent picture.
    """
    if f.mode != POLYNOMIAL:
        raise ValueError("convert_convention requires polynomial mode")
    m, n = f.signature.m, f.signature.n
    flipped = {
        expo: coeff * ((-1) ** sum(expo[m : m + n]))
        for expo, coeff in f.terms.items()
    }
    return LaurentPoly(f.signature, POLYNOMIAL, flipped, f.params)


def _degree_exponents(width: int, degree: int) -> list[tuple[int, ...]]:
    """All nonnegative exponent vectors of the given total degree."""
    if width == 0:
        return [()] if degree == 0 else []
    result: list[tuple[int, ...]] = []

    def build(position: int, remaining: int, prefix: list[int]) -> None:
        if position == width - 1:
            result.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining + 1):
            build(position + 1, remaining - e, prefix + [e])

    build(0, degree, [])
    return result


def _orbit_representative(signature: Signature, expo: tuple[int, ...]) -> tuple[int, ...]:
    m = signature.m
    return tuple(sorted(expo[:m], reverse=True)) + tuple(sorted(expo[m:], reverse=True))


def orbit_sum(signature: Signature, expo: tuple[int, ...], mode: str = POLYNOMIAL) -> LaurentPoly:
    """Sum of the distinct block-permutation images of a monomial (coefficient 1)."""
    m = signature.m
    images = {
        px + py
        for px in set(itertools.permutations(expo[:m]))
        for py in set(itertools.permutations(expo[m:]))
    }
    return LaurentPoly(signature, mode, {image: Fraction(1) for image in images})


def graded_basis(signature: Signature, degree: int) -> list[LaurentPoly]:
    """Basis of the supersymmetric polynomials homogeneous of exactly this degree.

    Works over the invariant orbit-sum basis of the degree, so invariance is
    structural; the cancellation constraints for every index pair become one
    exact linear system, and its kernel gives the basis.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    reps = sorted(
        {
            _orbit_representative(signature, expo)
            for expo in _degree_exponents(signature.width, degree)
        },
        key=lambda e: (sum(e), e),
        reverse=True,
    )
    if not reps:
        return []
    sums = [orbit_sum(signature, rep) for rep in reps]

    rows: dict[tuple[int, int, tuple[int, ...]], list[Fraction]] = {}
    for column, invariant in enumerate(sums):
        for i, j in isotropic_pairs(signature):
            residual = additive_cancellation_residual(invariant, i, j)
            for expo, coeff in residual.terms.items():
                row = rows.setdefault((i, j, expo), [Fraction(0)] * len(sums))
                row[column] = coeff
    constraint = Matrix.from_rows(
        [rows[key] for key in sorted(rows)], cols=len(sums)
    )
    basis: list[LaurentPoly] = []
    for vector in kernel_basis(constraint):
        element = LaurentPoly.zero(signature, POLYNOMIAL)
        for coeff, invariant in zip(vector, sums):
            if coeff != 0:
                element = element + invariant.scale(coeff)
        basis.append(element)
    return basis
