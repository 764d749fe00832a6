"""Characters and the Gelfand transform.

A character is a nonzero multiplicative linear functional.  In the function
model these are exactly the point evaluations; in the normal-generator
model they are the evaluations at distinct eigenvalues.  Both are indexed
canonically, so a character is just an algebra reference plus an index.

The Gelfand transform sends an element to the function "evaluate every
character on it", which lands in the function algebra over the character
space.  Because elements are stored in character coordinates, the transform
is a relabelling and its inverse reads the coordinates back; the numerical
content of the isomorphism lives in the eigendecomposition done when a
matrix algebra is built.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraElement, CommutativeAlgebra, FunctionAlgebra
from .errors import AlgebraMismatch, SpaceMismatch
from .spaces import FiniteSpace

__all__ = [
    "Character",
    "CharacterSpace",
    "characters",
    "evaluate_character",
    "gelfand_transform",
    "gelfand_inverse",
]


@dataclass(frozen=True)
class Character:
    """Evaluation at one canonical character index."""

    algebra: CommutativeAlgebra
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.algebra.dim:
            raise ValueError(f"character index {self.index} out of range")

    @property
    def label(self) -> str:
        return self.algebra.character_label(self.index)

    def __call__(self, a: AlgebraElement) -> complex:
        return evaluate_character(self, a)


@dataclass(frozen=True)
class CharacterSpace:
    """All characters of an algebra, in canonical order."""

    algebra: CommutativeAlgebra
    members: tuple[Character, ...]

    @property
    def count(self) -> int:
        return len(self.members)

    def as_finite_space(self) -> FiniteSpace:
        """The character space as a finite space labelled by indices."""
        return FiniteSpace(tuple(str(i) for i in range(self.count)))

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> Character:
        return self.members[i]


def characters(algebra: CommutativeAlgebra) -> CharacterSpace:
    """Enumerate the characters of an algebra in canonical order."""
    members = tuple(Character(algebra, i) for i in range(algebra.dim))
    return CharacterSpace(algebra, members)


def evaluate_character(phi: Character, a: AlgebraElement) -> complex:
    """Apply a character to an element of its own algebra."""
    if a.algebra != phi.algebra:
        raise AlgebraMismatch("character and element belong to different algebras")
    return complex(a.coords[phi.index])


def transform_target(algebra: CommutativeAlgebra) -> FunctionAlgebra:
    """The function algebra over the character space of ``algebra``."""
    return FunctionAlgebra(characters(algebra).as_finite_space())


def gelfand_transform(a: AlgebraElement) -> AlgebraElement:
    """The function phi |-> phi(a) on the character space of a's algebra."""
    return transform_target(a.algebra).element(np.array(a.coords))


def gelfand_inverse(algebra: CommutativeAlgebra, f_hat: AlgebraElement) -> AlgebraElement:
    """The element of ``algebra`` whose transform is ``f_hat``.

    ``f_hat`` must live on the character space of ``algebra``; anything else
    raises :class:`SpaceMismatch`.
    """
    target = transform_target(algebra)
    if f_hat.algebra != target:
        raise SpaceMismatch(
            "function does not live on the character space of the algebra"
        )
    return algebra.element(np.array(f_hat.coords))
