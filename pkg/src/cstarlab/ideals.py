"""Closed ideals, quotients, and the maximal ideal space.

Every closed ideal in these models is the set of elements vanishing on a
subset of the characters, so an ideal is stored as its zero set of
character indices.  That makes the lattice operations set operations:
intersecting ideals unites zero sets, summing ideals intersects them.
Ideals with extra structure (non self-adjoint, non-closed) do not exist at
this scale and are deliberately not representable.

The quotient by an ideal is the function algebra on the zero set, with the
projection acting by restriction.  The quotient norm is computed in closed
form as the sup over the zero set; the definition as an infimum over coset
representatives is kept in the tests as the independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgebraElement,
    CommutativeAlgebra,
    FunctionAlgebra,
    StarHomomorphism,
)
from .errors import AlgebraMismatch, ImproperIdeal, NotContained
from .spaces import FiniteSpace
from .spectral import invertibility_tolerance

__all__ = [
    "Ideal",
    "MaximalIdeal",
    "QuotientAlgebra",
    "ideal_from_closed_set",
    "closed_set_from_ideal",
    "quotient",
    "factor_through_quotient",
    "max_ideals",
    "zariski_V",
    "kernel_ideal",
    "zero_ideal",
    "unit_ideal",
]


@dataclass(frozen=True)
class Ideal:
    """The ideal of all elements vanishing on a set of characters.

    An empty zero set puts no constraint on anything, so it encodes the
    whole algebra (the improper ideal); the full zero set encodes the zero
    ideal.  Properness is therefore literally "the zero set is nonempty".
    """

    algebra: CommutativeAlgebra
    zero_set: frozenset[int]

    def __post_init__(self):
        zs = frozenset(int(i) for i in self.zero_set)
        object.__setattr__(self, "zero_set", zs)
        bad = [i for i in zs if not 0 <= i < self.algebra.dim]
        if bad:
            raise ValueError(f"zero-set indices {bad!r} are out of range")

    @property
    def is_proper(self) -> bool:
        return len(self.zero_set) > 0

    @property
    def dimension(self) -> int:
        """Linear dimension: one free coordinate per non-vanishing character."""
        return self.algebra.dim - len(self.zero_set)

    def contains(self, a: AlgebraElement, tol: float | None = None) -> bool:
        if a.algebra != self.algebra:
            raise AlgebraMismatch("element belongs to a different algebra")
        if not self.zero_set:
            return True
        cutoff = invertibility_tolerance(a) if tol is None else tol
        worst = max(abs(complex(a.coords[i])) for i in self.zero_set)
        return worst <= cutoff

    def intersect(self, other: "Ideal") -> "Ideal":
        """Vanish on both zero sets: the zero sets unite."""
        self._check_same(other)
        return Ideal(self.algebra, self.zero_set | other.zero_set)

    def sum_with(self, other: "Ideal") -> "Ideal":
        """Sums vanish only where both summands must: zero sets intersect."""
        self._check_same(other)
        return Ideal(self.algebra, self.zero_set & other.zero_set)

    def _check_same(self, other: "Ideal") -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatch("ideals live in different algebras")

    def __repr__(self) -> str:
        pts = ",".join(
            self.algebra.character_label(i) for i in sorted(self.zero_set)
        )
        return f"Ideal(vanishing on {{{pts}}})"


@dataclass(frozen=True)
class MaximalIdeal(Ideal):
    """An ideal vanishing at exactly one character."""

    def __post_init__(self):
        super().__post_init__()
        if len(self.zero_set) != 1:
            raise ValueError("a maximal ideal vanishes at exactly one character")

    @property
    def point(self) -> int:
        return next(iter(self.zero_set))


@dataclass(frozen=True)
class QuotientAlgebra:
    """A quotient A/I presented as functions on the zero set of I."""

    base: CommutativeAlgebra
    ideal: Ideal
    space: FiniteSpace
    model: FunctionAlgebra

    @property
    def dim(self) -> int:
        return self.model.dim

    def quotient_norm(self, a: AlgebraElement) -> float:
        """Norm of the coset of ``a``: the sup over the zero set."""
        if a.algebra != self.base:
            raise AlgebraMismatch("element belongs to a different algebra")
        return float(np.max(np.abs(a.coords[sorted(self.ideal.zero_set)])))


def ideal_from_closed_set(algebra: CommutativeAlgebra, closed_set) -> Ideal:
    """The ideal of elements vanishing on the given characters.

    Members of ``closed_set`` may be character labels (point labels in the
    function model) or canonical indices; anything unknown raises
    :class:`InvalidSubset`.
    """
    indices = frozenset(algebra.resolve_character_key(k) for k in closed_set)
    return Ideal(algebra, indices)


def closed_set_from_ideal(ideal: Ideal) -> tuple[str, ...]:
    """The common zero set as character labels, in canonical order."""
    return tuple(
        ideal.algebra.character_label(i) for i in sorted(ideal.zero_set)
    )


def quotient(
    algebra: CommutativeAlgebra, ideal: Ideal
) -> tuple[QuotientAlgebra, StarHomomorphism]:
    """The quotient algebra and its projection, acting by restriction."""
    if ideal.algebra != algebra:
        raise AlgebraMismatch("ideal lives in a different algebra")
    if not ideal.is_proper:
        raise ImproperIdeal("cannot quotient by the whole algebra")
    indices = sorted(ideal.zero_set)
    labels = tuple(algebra.character_label(i) for i in indices)
    space = FiniteSpace(labels)
    model = FunctionAlgebra(space)
    projection = StarHomomorphism(algebra, model, tuple(indices))
    return QuotientAlgebra(algebra, ideal, space, model), projection


def factor_through_quotient(
    phi: StarHomomorphism, ideal: Ideal
) -> StarHomomorphism:
    """The unique map out of the quotient with psi . projection = phi.

    Requires the ideal to be contained in the kernel of ``phi``; a basis
    element of the ideal with a nonzero image is attached to the
    :class:`NotContained` error as a witness.
    """
    if ideal.algebra != phi.source:
        raise AlgebraMismatch("ideal lives in a different algebra")
    zero = ideal.zero_set
    for j, img in enumerate(phi.character_images):
        if img not in zero:
            coords = np.zeros(phi.source.dim, dtype=complex)
            coords[img] = 1.0
            witness = phi.source.element(coords)
            raise NotContained(
                f"ideal is not inside the kernel: the indicator at character "
                f"{phi.source.character_label(img)!r} belongs to the ideal "
                f"but target character {j} sees it",
                witness=witness,
            )
    indices = sorted(zero)
    position = {z: k for k, z in enumerate(indices)}
    q, _ = quotient(phi.source, ideal)
    images = tuple(position[img] for img in phi.character_images)
    return StarHomomorphism(q.model, phi.target, images)


def max_ideals(algebra: CommutativeAlgebra) -> tuple[MaximalIdeal, ...]:
    """All maximal ideals, one per character, in canonical order."""
    return tuple(
        MaximalIdeal(algebra, frozenset({i})) for i in range(algebra.dim)
    )


def zariski_V(ideal: Ideal) -> tuple[MaximalIdeal, ...]:
    """The maximal ideals containing the given ideal (a Zariski closed set)."""
    return tuple(
        MaximalIdeal(ideal.algebra, frozenset({i}))
        for i in sorted(ideal.zero_set)
    )


def kernel_ideal(phi: StarHomomorphism) -> Ideal:
    """The kernel of a pullback homomorphism, as an ideal of its source."""
    return Ideal(phi.source, frozenset(phi.character_images))


def zero_ideal(algebra: CommutativeAlgebra) -> Ideal:
    """The ideal {0}: elements vanishing at every character."""
    return Ideal(algebra, frozenset(range(algebra.dim)))


def unit_ideal(algebra: CommutativeAlgebra) -> Ideal:
    """The whole algebra as an (improper) ideal: empty zero set."""
    return Ideal(algebra, frozenset())
