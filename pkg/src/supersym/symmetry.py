"""Action of the product of symmetric groups on the two variable blocks.

The symmetry group of a signature (m|n) is S_m x S_n, permuting the x and
y variables separately.  Elements are stored in one-line notation (the
tuple of 1-based images), which is also their serialized form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .poly import LaurentPoly, Signature


@dataclass(frozen=True)
class WeylElement:
    """A pair of permutations in one-line notation, e.g. sigma=(2, 1)."""

    sigma: tuple[int, ...]
    tau: tuple[int, ...]

    def __post_init__(self) -> None:
        for name, perm in (("sigma", self.sigma), ("tau", self.tau)):
            if sorted(perm) != list(range(1, len(perm) + 1)):
                raise ValueError(f"{name}={perm} is not a permutation in one-line notation")

    @property
    def is_identity(self) -> bool:
        return all(v == k + 1 for k, v in enumerate(self.sigma)) and all(
            v == k + 1 for k, v in enumerate(self.tau)
        )

    def to_json(self) -> dict:
        return {"sigma": list(self.sigma), "tau": list(self.tau)}

    @classmethod
    def from_json(cls, data: dict) -> "WeylElement":
        return cls(tuple(data["sigma"]), tuple(data["tau"]))


def identity(signature: Signature) -> WeylElement:
    return WeylElement(tuple(range(1, signature.m + 1)), tuple(range(1, signature.n + 1)))


def adjacent_transpositions(signature: Signature) -> list[WeylElement]:
    """The generating set: swaps (i, i+1) within each block."""
    generators: list[WeylElement] = []
    for i in range(1, signature.m):
        sigma = list(range(1, signature.m + 1))
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        generators.append(WeylElement(tuple(sigma), tuple(range(1, signature.n + 1))))
    for j in range(1, signature.n):
        tau = list(range(1, signature.n + 1))
        tau[j - 1], tau[j] = tau[j], tau[j - 1]
        generators.append(WeylElement(tuple(range(1, signature.m + 1)), tuple(tau)))
    return generators


def all_elements(signature: Signature) -> Iterator[WeylElement]:
    """All m!*n! group elements (desk scale only)."""
    for sigma in itertools.permutations(range(1, signature.m + 1)):
        for tau in itertools.permutations(range(1, signature.n + 1)):
            yield WeylElement(sigma, tau)


def group_order(signature: Signature) -> int:
    return math.factorial(signature.m) * math.factorial(signature.n)


def apply(w: WeylElement, f: LaurentPoly) -> LaurentPoly:
    """Relabel variables: x_i -> x_sigma(i), y_j -> y_tau(j).

    A ring automorphism; parameter slots are left fixed.
    """
    m, n = f.signature.m, f.signature.n
    if len(w.sigma) != m or len(w.tau) != n:
        raise ValueError(
            f"permutation sizes ({len(w.sigma)}, {len(w.tau)}) do not match signature ({m}|{n})"
        )
    width = m + n + len(f.params)
    relabeled = {}
    for expo, coeff in f.terms.items():
        image = [0] * width
        for i in range(m):
            image[w.sigma[i] - 1] = expo[i]
        for j in range(n):
            image[m + w.tau[j] - 1] = expo[m + j]
        for k in range(m + n, width):
            image[k] = expo[k]
        relabeled[tuple(image)] = coeff
    return LaurentPoly(f.signature, f.mode, relabeled, f.params)


def is_w_invariant(f: LaurentPoly) -> bool:
    """Invariance under the whole group, tested on the generating swaps."""
    return all(apply(w, f) == f for w in adjacent_transpositions(f.signature))


def symmetrize(f: LaurentPoly) -> LaurentPoly:
    """Average of the group orbit: the projection onto invariants."""
    total = LaurentPoly.zero(f.signature, f.mode, f.params)
    for w in all_elements(f.signature):
        total = total + apply(w, f)
    return total.scale(Fraction(1, group_order(f.signature)))
