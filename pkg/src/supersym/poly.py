"""Sparse Laurent polynomials in two variable blocks, over exact rationals.

A polynomial lives over a signature (m|n): variables x1..xm form the even
block and y1..yn the odd block.  Terms are stored sparsely as a map from
exponent vectors (tuples of ints, x-block first) to nonzero Fraction
coefficients; the zero polynomial is the empty map.

Two modes are kept strictly separate:

  * "polynomial" -- exponents must be nonnegative.  This is the additive
    coordinate picture used for supersymmetry tests of the form
    "substitute x_i := s, y_j := -s and require no s-dependence".
  * "laurent"    -- exponents may be any integers.  This is the character
    ring picture, where a monomial x^a y^b is the character of the weight
    with those coordinates.

Some computations need fresh parameter variables (the "s"/"t" above).
These are carried as named slots appended after the y-block (`params`);
they never appear in user-facing signatures, only in substitution results
and failure residuals.

Equality, hashing and the canonical text rendering all use graded
lexicographic term order (total degree first, then the exponent vector,
x-block before y-block), highest term first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

POLYNOMIAL = "polynomial"
LAURENT = "laurent"
MODES = (POLYNOMIAL, LAURENT)

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Signature:
    """Variable counts of the two blocks: m even (x) and n odd (y) variables."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError("signature blocks must be nonnegative")

    @property
    def width(self) -> int:
        return self.m + self.n


def _term_key(exponents: Exponents) -> tuple[int, Exponents]:
    return (sum(exponents), exponents)


class LaurentPoly:
    """Immutable sparse polynomial over a signature, in one of the two modes."""

    __slots__ = ("signature", "mode", "params", "_terms")

    def __init__(
        self,
        signature: Signature,
        mode: str,
        terms: Mapping[Sequence[int], Fraction | int] | None = None,
        params: Sequence[str] = (),
    ) -> None:
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        object.__setattr__(self, "signature", signature)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "params", tuple(params))
        width = signature.width + len(self.params)
        cleaned: dict[Exponents, Fraction] = {}
        for raw_expo, raw_coeff in (terms or {}).items():
            coeff = Fraction(raw_coeff)
            if coeff == 0:
                continue
            expo = tuple(int(e) for e in raw_expo)
            if len(expo) != width:
                raise ValueError(
                    f"exponent vector {expo} has length {len(expo)}, expected {width}"
                )
            if mode == POLYNOMIAL and any(e < 0 for e in expo):
                raise ValueError(f"negative exponent in polynomial mode: {expo}")
            cleaned[expo] = cleaned.get(expo, Fraction(0)) + coeff
            if cleaned[expo] == 0:
                del cleaned[expo]
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, signature: Signature, mode: str, params: Sequence[str] = ()) -> "LaurentPoly":
        return cls(signature, mode, {}, params)

    @classmethod
    def constant(
        cls, signature: Signature, mode: str, value: Fraction | int, params: Sequence[str] = ()
    ) -> "LaurentPoly":
        width = signature.width + len(tuple(params))
        return cls(signature, mode, {(0,) * width: Fraction(value)}, params)

    @classmethod
    def monomial(
        cls,
        signature: Signature,
        mode: str,
        exponents: Sequence[int],
        coeff: Fraction | int = 1,
        params: Sequence[str] = (),
    ) -> "LaurentPoly":
        return cls(signature, mode, {tuple(exponents): Fraction(coeff)}, params)

    @classmethod
    def variable(
        cls, signature: Signature, mode: str, index: int, params: Sequence[str] = ()
    ) -> "LaurentPoly":
        """The variable at flat position `index` (x-block, then y-block, then params)."""
        width = signature.width + len(tuple(params))
        if not 0 <= index < width:
            raise ValueError(f"variable index {index} out of range for width {width}")
        expo = [0] * width
        expo[index] = 1
        return cls(signature, mode, {tuple(expo): Fraction(1)}, params)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def total_degree(self) -> int | None:
        """Highest term degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(e) == degree for e in self._terms)

    def var_name(self, index: int) -> str:
        m, n = self.signature.m, self.signature.n
        if index < m:
            return f"x{index + 1}"
        if index < m + n:
            return f"y{index - m + 1}"
        return self.params[index - m - n]

    # -- ring structure ----------------------------------------------------

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if self.signature != other.signature:
            raise ValueError("signature mismatch")
        if self.mode != other.mode:
            raise ValueError("mode mismatch")
        if self.params != other.params:
            raise ValueError("parameter-block mismatch")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_compatible(other)
        merged = dict(self._terms)
        for expo, coeff in other._terms.items():
            merged[expo] = merged.get(expo, Fraction(0)) + coeff
        return LaurentPoly(self.signature, self.mode, merged, self.params)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(
            self.signature, self.mode, {e: -c for e, c in self._terms.items()}, self.params
        )

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, value: Fraction | int) -> "LaurentPoly":
        factor = Fraction(value)
        return LaurentPoly(
            self.signature, self.mode, {e: factor * c for e, c in self._terms.items()}, self.params
        )

    def __mul__(self, other: "LaurentPoly | Fraction | int") -> "LaurentPoly":
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_compatible(other)
        product: dict[Exponents, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                expo = tuple(a + b for a, b in zip(ea, eb))
                product[expo] = product.get(expo, Fraction(0)) + ca * cb
        return LaurentPoly(self.signature, self.mode, product, self.params)

    def __rmul__(self, other: "Fraction | int") -> "LaurentPoly":
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if not isinstance(exponent, int):
            raise TypeError("polynomial powers must be integers")
        if exponent < 0:
            return self._unit_inverse() ** (-exponent)
        result = LaurentPoly.constant(self.signature, self.mode, 1, self.params)
        square = self
        k = exponent
        while k:
            if k & 1:
                result = result * square
            k >>= 1
            if k:
                square = square * square
        return result

    def _unit_inverse(self) -> "LaurentPoly":
        """Inverse of a unit: a single monomial with nonzero coefficient."""
        if len(self._terms) != 1:
            raise ValueError("only single-term units are invertible")
        (expo, coeff), = self._terms.items()
        inverse = tuple(-e for e in expo)
        return LaurentPoly(self.signature, self.mode, {inverse: 1 / coeff}, self.params)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (
            self.signature == other.signature
            and self.mode == other.mode
            and self.params == other.params
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash(
            (self.signature, self.mode, self.params, frozenset(self._terms.items()))
        )

    # -- substitution and evaluation ----------------------------------------

    def substitute(
        self,
        assignments: Mapping[int, "LaurentPoly"],
        signature: Signature | None = None,
        params: Sequence[str] | None = None,
    ) -> "LaurentPoly":
        """Substitute polynomials for variables, by flat variable index.

        Unassigned variables map to the same-named variable of the target,
        which may extend this polynomial's signature (larger blocks, extra
        parameter slots).  A variable occurring with a negative power can
        only receive a unit (single-term) replacement, which keeps the
        result inside the Laurent ring.
        """
        values = list(assignments.values())
        if signature is None:
            signature = values[0].signature if values else self.signature
        if params is None:
            params = values[0].params if values else self.params
        target_params = tuple(params)
        for value in values:
            if value.signature != signature or value.params != target_params:
                raise ValueError("substituted expressions must share the target signature")
            if value.mode != self.mode:
                raise ValueError("substituted expressions must share the mode")
        if signature.m < self.signature.m or signature.n < self.signature.n:
            raise ValueError("target signature cannot shrink the variable blocks")

        width = self.signature.width + len(self.params)
        replacements: dict[int, LaurentPoly] = {}
        for index, value in assignments.items():
            if not 0 <= index < width:
                raise ValueError(f"variable index {index} out of range")
            replacements[index] = value
        for index in range(width):
            if index in replacements:
                continue
            if index < self.signature.m:
                target_index = index
            elif index < width - len(self.params):
                target_index = signature.m + (index - self.signature.m)
            else:
                name = self.params[index - self.signature.width]
                if name not in target_params:
                    raise ValueError(f"parameter {name!r} missing from target")
                target_index = signature.width + target_params.index(name)
            replacements[index] = LaurentPoly.variable(
                signature, self.mode, target_index, target_params
            )

        power_cache: dict[tuple[int, int], LaurentPoly] = {}

        def power_of(index: int, exponent: int) -> LaurentPoly:
            key = (index, exponent)
            if key not in power_cache:
                base = replacements[index]
                if exponent < 0 and len(base._terms) != 1:
                    raise ValueError(
                        f"variable {self.var_name(index)} occurs with a negative power; "
                        "its replacement must be a single-term unit"
                    )
                power_cache[key] = base ** exponent
            return power_cache[key]

        result = LaurentPoly.zero(signature, self.mode, target_params)
        for expo, coeff in self._terms.items():
            term = LaurentPoly.constant(signature, self.mode, coeff, target_params)
            for index, e in enumerate(expo):
                if e != 0:
                    term = term * power_of(index, e)
            result = result + term
        return result

    def evaluate(self, coords: Sequence[Fraction | int]) -> Fraction:
        """Exact value at a rational point (one coordinate per variable)."""
        width = self.signature.width + len(self.params)
        if len(coords) != width:
            raise ValueError(f"expected {width} coordinates, got {len(coords)}")
        point = [Fraction(c) for c in coords]
        total = Fraction(0)
        for expo, coeff in self._terms.items():
            value = coeff
            for base, e in zip(point, expo):
                if e == 0:
                    continue
                if base == 0 and e < 0:
                    raise ValueError("negative power of a zero coordinate")
                value *= base ** e
            total += value
        return total

    # -- canonical text ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: _term_key(kv[0]), reverse=True)

    def render(self) -> str:
        """Canonical text: graded-lex term order, "p/q" coefficients, explicit '*'."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for position, (expo, coeff) in enumerate(self.sorted_terms()):
            factors = [
                self.var_name(k) if e == 1 else f"{self.var_name(k)}^{e}"
                for k, e in enumerate(expo)
                if e != 0
            ]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = str(magnitude) + "*" + "*".join(factors)
            if position == 0:
                if coeff < 0:
                    # A bare leading minus must not capture a following '^':
                    # "-x1^2" would parse as (-x1)^2.  Spell the unit out.
                    if factors and magnitude == 1 and "^" in factors[0]:
                        body = "1*" + body
                    pieces.append("-" + body)
                else:
                    pieces.append(body)
            else:
                pieces.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        sig = f"({self.signature.m}|{self.signature.n})"
        return f"LaurentPoly[{sig} {self.mode}] {self.render()}"


def isotropic_pairs(signature: Signature) -> list[tuple[int, int]]:
    """Index pairs (i, j) of the positive isotropic directions, canonical order."""
    return [(i, j) for i in range(1, signature.m + 1) for j in range(1, signature.n + 1)]


def _check_pair(f: LaurentPoly, i: int, j: int) -> None:
    if not 1 <= i <= f.signature.m:
        raise ValueError(f"x-index {i} out of range for m={f.signature.m}")
    if not 1 <= j <= f.signature.n:
        raise ValueError(f"y-index {j} out of range for n={f.signature.n}")


def root_derivation(f: LaurentPoly, i: int, j: int) -> LaurentPoly:
    """Derivation attached to the root pairing x_i vs y_j.

    Each term x^a y^b is scaled by a_i + b_j, the value of the invariant
    bilinear form on the term's weight against the isotropic root with
    those indices (the form is +1 on the x-block, -1 on the y-block).
    """
    _check_pair(f, i, j)
    xi = i - 1
    yj = f.signature.m + j - 1
    scaled = {
        expo: coeff * (expo[xi] + expo[yj])
        for expo, coeff in f.terms.items()
    }
    return LaurentPoly(f.signature, f.mode, scaled, f.params)


def divisible_by_root_binomial(f: LaurentPoly, i: int, j: int) -> tuple[bool, LaurentPoly | None]:
    """Is f in the ideal of the root binomial for the pair (i, j)?

    The binomial x_i*y_j^-1 - 1 differs from x_i - y_j by the unit y_j^-1,
    so in both modes membership is decided by the substitution x_i := y_j:
    divisible iff the result vanishes.  Returns the nonzero residual as the
    witness otherwise.
    """
    _check_pair(f, i, j)
    xi = i - 1
    yj_var = LaurentPoly.variable(f.signature, f.mode, f.signature.m + j - 1, f.params)
    residual = f.substitute({xi: yj_var})
    if residual.is_zero:
        return True, None
    return False, residual
