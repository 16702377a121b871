"""Weight-space geometry: the invariant form, isotropic roots, affine
subspaces, their groupoid-closure saturation, and vanishing ideals.

Points are coordinate tuples of length m+n (x-block values first).  The
invariant bilinear form is +1 on the x-block and -1 on the y-block, the
standard choice for two-block signatures; it makes every root of the shape
(x_i minus y_j) isotropic, and pairs a point p with that root to
p_i + p_{m+j}.

An affine subspace is kept in a unique canonical form: direction rows in
reduced row echelon form, and the base point reduced so its pivot
coordinates vanish.  Canonical forms make containment, equality and
deduplication exact, which is what the closure fixpoint needs.

The closure of a finite union of subspaces is the least fixpoint of a
saturation rule: wherever a subspace meets the pairing-zero locus of a
positive isotropic root, the met part translated along the root is added
(and, optionally, the images under the block-permutation generators).
Termination is enforced by a subspace cap with a distinct error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import Matrix, Vector, format_scalar, kernel_basis, parse_scalar, reduce_against, rref
from .membership import graded_basis
from .poly import LaurentPoly, Signature
from .symmetry import WeylElement, adjacent_transpositions

Point = Vector


class NonConvergenceError(RuntimeError):
    """Saturation exceeded the subspace cap before reaching a fixpoint."""

    def __init__(self, cap: int) -> None:
        super().__init__(f"closure did not converge within {cap} subspaces")
        self.cap = cap


def make_point(coords: Sequence[Fraction | int | str]) -> Point:
    return tuple(parse_scalar(c) if isinstance(c, str) else Fraction(c) for c in coords)


def pairing(signature: Signature, a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """The invariant form: +1 on the x-block, -1 on the y-block, blocks orthogonal."""
    if len(a) != signature.width or len(b) != signature.width:
        raise ValueError("vector length does not match the signature")
    m = signature.m
    total = sum((a[k] * b[k] for k in range(m)), Fraction(0))
    total -= sum((a[k] * b[k] for k in range(m, signature.width)), Fraction(0))
    return total


@dataclass(frozen=True)
class IsotropicRoot:
    """The root sign*(x_i - y_j) direction, which the form pairs to zero with itself."""

    i: int
    j: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.i < 1 or self.j < 1:
            raise ValueError("root indices are 1-based")

    def vector(self, signature: Signature) -> Vector:
        if self.i > signature.m or self.j > signature.n:
            raise ValueError(f"root ({self.i},{self.j}) out of range for ({signature.m}|{signature.n})")
        coords = [Fraction(0)] * signature.width
        coords[self.i - 1] = Fraction(self.sign)
        coords[signature.m + self.j - 1] = Fraction(-self.sign)
        return tuple(coords)

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "sign": self.sign}


def positive_isotropic_roots(signature: Signature) -> list[IsotropicRoot]:
    return [
        IsotropicRoot(i, j, 1)
        for i in range(1, signature.m + 1)
        for j in range(1, signature.n + 1)
    ]


def isotropic_roots(signature: Signature) -> list[IsotropicRoot]:
    """All 2mn signed roots; empty when either block is empty."""
    positives = positive_isotropic_roots(signature)
    return positives + [IsotropicRoot(r.i, r.j, -1) for r in positives]


def atypical_roots(signature: Signature, point: Point) -> list[IsotropicRoot]:
    """Positive roots pairing to zero with the point (negatives give the same lines)."""
    return [
        root
        for root in positive_isotropic_roots(signature)
        if pairing(signature, point, root.vector(signature)) == 0
    ]


def root_hyperplane(signature: Signature, root: IsotropicRoot) -> "AffineSubspace":
    """The locus pairing to zero with the root; the same for either sign.

    As a dot-product row the pairing functional carries +1 at both index
    slots (the y-block sign of the form cancels the root's minus), so the
    hyperplane is the kernel of that single row.
    """
    alpha = root.vector(signature)
    functional = tuple(
        alpha[k] if k < signature.m else -alpha[k] for k in range(signature.width)
    )
    dirs = kernel_basis(Matrix.from_rows([functional]))
    return AffineSubspace.canonical([Fraction(0)] * signature.width, dirs)


@dataclass(frozen=True)
class AffineSubspace:
    """Canonical affine subspace: RREF direction rows plus a reduced base point."""

    base: Point
    dirs: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.dirs)

    @property
    def width(self) -> int:
        return len(self.base)

    def pivots(self) -> tuple[int, ...]:
        return tuple(next(k for k, e in enumerate(row) if e != 0) for row in self.dirs)

    @classmethod
    def canonical(
        cls, base: Sequence[Fraction | int], dirs: Iterable[Sequence[Fraction | int]] = ()
    ) -> "AffineSubspace":
        """Canonicalize an arbitrary parametrization (spanning rows need not be a basis)."""
        point = make_point(base)
        rows = [tuple(Fraction(e) for e in row) for row in dirs]
        if any(len(row) != len(point) for row in rows):
            raise ValueError("direction length does not match the base point")
        if rows:
            reduced, pivot_cols = rref(Matrix.from_rows(rows))
            basis = tuple(reduced.row(r) for r in range(len(pivot_cols)))
        else:
            basis, pivot_cols = (), ()
        reduced_base = reduce_against(point, basis, pivot_cols)
        return cls(tuple(reduced_base), basis)

    def contains_point(self, point: Point) -> bool:
        if len(point) != self.width:
            raise ValueError("point length does not match the subspace")
        offset = tuple(p - b for p, b in zip(point, self.base))
        return all(e == 0 for e in reduce_against(offset, self.dirs, self.pivots()))

    def contains_subspace(self, other: "AffineSubspace") -> bool:
        pivots = self.pivots()
        if not self.contains_point(other.base):
            return False
        return all(
            all(e == 0 for e in reduce_against(row, self.dirs, pivots)) for row in other.dirs
        )

    def translate_span(self, direction: Vector) -> "AffineSubspace":
        """Enlarge by one direction (no-op if already in the span)."""
        return AffineSubspace.canonical(self.base, list(self.dirs) + [direction])

    def sort_key(self) -> tuple:
        return (self.dim, self.base, self.dirs)

    def to_json(self) -> dict:
        return {
            "base": [format_scalar(c) for c in self.base],
            "dirs": [[format_scalar(c) for c in row] for row in self.dirs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AffineSubspace":
        return cls.canonical(
            make_point(data["base"]), [make_point(row) for row in data.get("dirs", [])]
        )

    def describe(self) -> str:
        base = "(" + ", ".join(format_scalar(c) for c in self.base) + ")"
        dirs = ", ".join("(" + ", ".join(format_scalar(c) for c in row) + ")" for row in self.dirs)
        return f"dim {self.dim}: base {base}" + (f" + span[{dirs}]" if self.dirs else "")


@dataclass(frozen=True)
class SuperalgebraicSet:
    """Irredundant, canonically ordered finite union of affine subspaces."""

    signature: Signature
    subspaces: tuple[AffineSubspace, ...]

    @classmethod
    def from_subspaces(
        cls, signature: Signature, subspaces: Iterable[AffineSubspace]
    ) -> "SuperalgebraicSet":
        kept: list[AffineSubspace] = []
        for candidate in subspaces:
            if candidate.width != signature.width:
                raise ValueError("subspace width does not match the signature")
            if any(existing.contains_subspace(candidate) for existing in kept):
                continue
            kept = [s for s in kept if not candidate.contains_subspace(s)]
            kept.append(candidate)
        return cls(signature, tuple(sorted(kept, key=AffineSubspace.sort_key)))

    @classmethod
    def from_points(cls, signature: Signature, points: Iterable[Point]) -> "SuperalgebraicSet":
        return cls.from_subspaces(
            signature, [AffineSubspace.canonical(p) for p in points]
        )

    @property
    def is_empty(self) -> bool:
        return not self.subspaces

    def to_json(self) -> dict:
        return {
            "signature": {"m": self.signature.m, "n": self.signature.n},
            "subspaces": [s.to_json() for s in self.subspaces],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SuperalgebraicSet":
        sig = Signature(int(data["signature"]["m"]), int(data["signature"]["n"]))
        return cls.from_subspaces(
            sig, [AffineSubspace.from_json(s) for s in data.get("subspaces", [])]
        )


def member(s: SuperalgebraicSet, point: Point) -> bool:
    """Exact union membership: the point lies on some component subspace."""
    if len(point) != s.signature.width:
        raise ValueError("point length does not match the set's signature")
    return any(subspace.contains_point(point) for subspace in s.subspaces)


def _root_locus(
    signature: Signature, subspace: AffineSubspace, root: IsotropicRoot
) -> AffineSubspace | None:
    """The part of the subspace pairing to zero with the root.

    Restricting the linear functional to the parametrization leaves three
    cases: the whole subspace, a hyperplane of it, or nothing.
    """
    alpha = root.vector(signature)
    base_value = pairing(signature, subspace.base, alpha)
    dir_values = [pairing(signature, row, alpha) for row in subspace.dirs]
    pivot = next((k for k, v in enumerate(dir_values) if v != 0), None)
    if pivot is None:
        return subspace if base_value == 0 else None
    scale = dir_values[pivot]
    pivot_row = subspace.dirs[pivot]
    new_base = tuple(
        b - (base_value / scale) * d for b, d in zip(subspace.base, pivot_row)
    )
    new_dirs = [
        tuple(d - (dir_values[k] / scale) * p for d, p in zip(row, pivot_row))
        for k, row in enumerate(subspace.dirs)
        if k != pivot
    ]
    return AffineSubspace.canonical(new_base, new_dirs)


def _weyl_image(w: WeylElement, subspace: AffineSubspace, signature: Signature) -> AffineSubspace:
    m = signature.m

    def permute(v: Vector) -> Vector:
        image = [Fraction(0)] * len(v)
        for i in range(m):
            image[w.sigma[i] - 1] = v[i]
        for j in range(signature.n):
            image[m + w.tau[j] - 1] = v[m + j]
        return tuple(image)

    return AffineSubspace.canonical(permute(subspace.base), [permute(r) for r in subspace.dirs])


def _saturation_images(
    s: SuperalgebraicSet, subspace: AffineSubspace, include_weyl: bool
) -> list[AffineSubspace]:
    images: list[AffineSubspace] = []
    for root in positive_isotropic_roots(s.signature):
        locus = _root_locus(s.signature, subspace, root)
        if locus is not None:
            images.append(locus.translate_span(root.vector(s.signature)))
    if include_weyl:
        for w in adjacent_transpositions(s.signature):
            images.append(_weyl_image(w, subspace, s.signature))
    return images


def closure(
    s: SuperalgebraicSet, include_weyl: bool = True, max_subspaces: int = 1000
) -> SuperalgebraicSet:
    """Least saturated superset, by worklist iteration over canonical subspaces.

    A subspace already contained in a member is discarded; members contained
    in a newcomer are dropped (their saturation images are covered by the
    newcomer's).  Raises NonConvergenceError when the cap is exceeded --
    results are never silently truncated.
    """
    if max_subspaces < len(s.subspaces):
        raise ValueError("max_subspaces is smaller than the input set")
    current: list[AffineSubspace] = []
    queue: list[AffineSubspace] = []

    def insert(candidate: AffineSubspace) -> None:
        nonlocal current
        if any(existing.contains_subspace(candidate) for existing in current):
            return
        current = [e for e in current if not candidate.contains_subspace(e)]
        current.append(candidate)
        queue.append(candidate)
        if len(current) > max_subspaces:
            raise NonConvergenceError(max_subspaces)

    for subspace in s.subspaces:
        insert(subspace)
    while queue:
        subspace = queue.pop(0)
        if subspace not in current:
            continue  # superseded; its images are covered by the superseder's
        for image in _saturation_images(s, subspace, include_weyl):
            insert(image)
    return SuperalgebraicSet.from_subspaces(s.signature, current)


def is_superalgebraic(s: SuperalgebraicSet, include_weyl: bool = True) -> bool:
    """Does one saturation pass add nothing new?"""
    for subspace in s.subspaces:
        for image in _saturation_images(s, subspace, include_weyl):
            if not any(existing.contains_subspace(image) for existing in s.subspaces):
                return False
    return True


def _subspace_grid(subspace: AffineSubspace, degree: int) -> list[Point]:
    """Deterministic grid: parameter values 0..degree in each direction.

    A polynomial of total degree <= degree vanishing on this grid vanishes
    on the whole subspace (interpolate one parameter at a time).
    """
    points: list[Point] = []
    for values in itertools.product(range(degree + 1), repeat=subspace.dim):
        point = list(subspace.base)
        for value, row in zip(values, subspace.dirs):
            point = [p + value * d for p, d in zip(point, row)]
        points.append(tuple(point))
    return points


def graded_basis_through(signature: Signature, degree: int) -> list[LaurentPoly]:
    """Concatenated homogeneous bases of all degrees 0..degree."""
    basis: list[LaurentPoly] = []
    for d in range(degree + 1):
        basis.extend(graded_basis(signature, d))
    return basis


def vanishing_basis(s: SuperalgebraicSet, degree: int) -> list[LaurentPoly]:
    """Basis of the degree-truncated vanishing ideal within the supersymmetric algebra.

    Spanning set: homogeneous supersymmetric bases of degrees 0..degree.
    Vanishing identically on a component of dimension k is certified by
    vanishing on its (degree+1)^k sample grid, which is exact for total
    degree <= degree.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    basis = graded_basis_through(s.signature, degree)
    if not basis:
        return []
    rows: list[list[Fraction]] = []
    for subspace in s.subspaces:
        for point in _subspace_grid(subspace, degree):
            rows.append([b.evaluate(point) for b in basis])
    constraint = Matrix.from_rows(rows, cols=len(basis))
    combos: list[LaurentPoly] = []
    for vector in kernel_basis(constraint):
        element = LaurentPoly.zero(s.signature, basis[0].mode)
        for coeff, b in zip(vector, basis):
            if coeff != 0:
                element = element + b.scale(coeff)
        combos.append(element)
    return combos


def point_ideal_basis(signature: Signature, point: Point, degree: int) -> list[LaurentPoly]:
    """Degree-truncated ideal of supersymmetric functions vanishing at one point."""
    return vanishing_basis(SuperalgebraicSet.from_points(signature, [point]), degree)


@dataclass(frozen=True)
class GridEntry:
    point: Point
    vanishes: bool
    in_closure: bool

    @property
    def theorem_ok(self) -> bool:
        """The guaranteed direction: membership in the closure forces vanishing."""
        return self.vanishes or not self.in_closure

    @property
    def converse_gap(self) -> bool:
        """Vanishing without closure membership (expected at small degree)."""
        return self.vanishes and not self.in_closure

    def to_json(self) -> dict:
        return {
            "point": {"coords": [format_scalar(c) for c in self.point]},
            "vanishes": self.vanishes,
            "in_closure": self.in_closure,
            "theorem_ok": self.theorem_ok,
            "converse_gap": self.converse_gap,
        }


@dataclass(frozen=True)
class NullstellensatzReport:
    signature: Signature
    point: Point
    degree: int
    entries: tuple[GridEntry, ...]

    @property
    def violations(self) -> int:
        return sum(1 for e in self.entries if not e.theorem_ok)

    @property
    def converse_gaps(self) -> int:
        return sum(1 for e in self.entries if e.converse_gap)

    def to_json(self) -> dict:
        return {
            "signature": {"m": self.signature.m, "n": self.signature.n},
            "point": {"coords": [format_scalar(c) for c in self.point]},
            "degree": self.degree,
            "entries": [e.to_json() for e in self.entries],
            "violations": self.violations,
            "converse_gaps": self.converse_gaps,
        }


def nullstellensatz_check(
    signature: Signature,
    point: Point,
    degree: int,
    grid: Sequence[Point],
    include_weyl: bool = True,
    max_subspaces: int = 1000,
) -> NullstellensatzReport:
    """Desk check of the point's truncated ideal against its orbit closure.

    For every grid point: does the whole truncated ideal vanish there, and
    does it lie in the closure?  Closure membership must force vanishing
    (counted as violations); the converse only emerges as the degree grows,
    so gaps are reported, not errors.
    """
    for q in grid:
        if len(q) != signature.width:
            raise ValueError("grid point length does not match the signature")
    ideal = point_ideal_basis(signature, point, degree)
    orbit = closure(
        SuperalgebraicSet.from_points(signature, [point]),
        include_weyl=include_weyl,
        max_subspaces=max_subspaces,
    )
    entries = []
    for q in grid:
        vanishes = all(b.evaluate(q) == 0 for b in ideal)
        entries.append(GridEntry(tuple(q), vanishes, member(orbit, q)))
    return NullstellensatzReport(signature, tuple(point), degree, tuple(entries))


def point_to_json(point: Point) -> dict:
    return {"coords": [format_scalar(c) for c in point]}


def point_from_json(data: dict, signature: Signature | None = None) -> Point:
    point = make_point(data["coords"])
    if signature is not None and len(point) != signature.width:
        raise ValueError(
            f"point has {len(point)} coordinates, signature needs {signature.width}"
        )
    return point
