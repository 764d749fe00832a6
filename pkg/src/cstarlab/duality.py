"""The contravariant functors between algebras and spaces, with verifiers.

One functor sends an algebra to its character space and a homomorphism to
the pullback map of characters; the other sends a space to its function
algebra and a point map to precomposition.  The two natural transformations
(evaluation into the double dual on each side) are computed by probing with
indicator elements rather than assumed, so an indexing bug shows up as a
failed probe instead of a silently commuting square.

Reports carry measured defects.  For honest probes the defects are exact
zeros or machine-size floats; the verifiers exist to certify that, not to
put a green checkmark on an approximation.
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
from .errors import DualityViolation, NotACharacter
from .gelfand import characters, gelfand_inverse, gelfand_transform, transform_target
from .spaces import ContinuousMap, FiniteSpace

__all__ = [
    "CheckRecord",
    "NaturalitySquareReport",
    "EquivalenceReport",
    "functor_F_object",
    "functor_F_morphism",
    "functor_G_object",
    "functor_G_morphism",
    "tau",
    "mu",
    "verify_naturality_tau",
    "verify_naturality_mu",
    "verify_equivalence",
]

PROBE_TOL = 1e-10


@dataclass(frozen=True)
class CheckRecord:
    """One verified law instance: what was checked, how wrong, verdict."""

    law: str
    instance: str
    defect: float
    passed: bool


@dataclass(frozen=True)
class NaturalitySquareReport:
    kind: str
    morphism: str
    max_defect: float
    commutes: bool


@dataclass(frozen=True)
class EquivalenceReport:
    subject: str
    checks: tuple[CheckRecord, ...]

    @property
    def max_defect(self) -> float:
        return max((c.defect for c in self.checks), default=0.0)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _indicator(algebra: CommutativeAlgebra, i: int) -> AlgebraElement:
    coords = np.zeros(algebra.dim, dtype=complex)
    coords[i] = 1.0
    return algebra.element(coords)


def functor_F_object(algebra: CommutativeAlgebra) -> FiniteSpace:
    """The character space of an algebra as a finite space."""
    return characters(algebra).as_finite_space()


def functor_F_morphism(phi, tol: float = PROBE_TOL) -> ContinuousMap:
    """Pull back characters along a homomorphism: psi goes to psi . phi.

    The point map is recovered from the action of ``phi`` on the indicator
    basis: a functional is a character exactly when it sends exactly one
    indicator to 1 and the rest to 0.  A composite failing that pattern
    raises :class:`NotACharacter`, which means ``phi`` was not actually a
    unital *-homomorphism.
    """
    source_space = functor_F_object(phi.target)
    target_space = functor_F_object(phi.source)
    images = np.column_stack(
        [phi(_indicator(phi.source, i)).coords for i in range(phi.source.dim)]
    )
    assignment = []
    for j in range(phi.target.dim):
        row = images[j]
        best = int(np.argmax(np.abs(row)))
        defect = max(
            abs(row[best] - 1.0),
            float(np.max(np.abs(np.delete(row, best)))) if len(row) > 1 else 0.0,
        )
        if defect > tol:
            raise NotACharacter(
                f"character {j} of the target pulls back to a functional "
                f"that is not a character (defect {defect:.3e})"
            )
        assignment.append(str(best))
    return ContinuousMap(source_space, target_space, tuple(assignment))


def functor_G_object(space: FiniteSpace) -> FunctionAlgebra:
    """The function algebra over a finite space."""
    return FunctionAlgebra(space)


def functor_G_morphism(h: ContinuousMap) -> StarHomomorphism:
    """Precomposition with a point map, as a homomorphism of function algebras.

    A map h from S to T induces C(T) -> C(S) by g |-> g . h.
    """
    source = FunctionAlgebra(h.target)
    target = FunctionAlgebra(h.source)
    images = tuple(h.image_index(i) for i in range(h.source.size))
    return StarHomomorphism(source, target, images)


def tau(algebra: CommutativeAlgebra) -> StarHomomorphism:
    """Evaluation of the algebra inside functions on its character space.

    This is the Gelfand transform packaged as a homomorphism; the i-th
    character of the function side evaluates through the i-th character of
    the algebra, so the index map is the identity.
    """
    return StarHomomorphism(
        algebra, transform_target(algebra), tuple(range(algebra.dim))
    )


def mu(space: FiniteSpace, tol: float = PROBE_TOL) -> ContinuousMap:
    """Evaluation of a space inside the character space of its functions.

    Each point goes to the unique character sending that point's indicator
    function to 1.  The probe finding no character, several, or a
    non-bijective overall assignment raises :class:`DualityViolation`.
    """
    algebra = FunctionAlgebra(space)
    chars = characters(algebra)
    double_dual = chars.as_finite_space()
    assignment = []
    for i in range(space.size):
        probe = _indicator(algebra, i)
        hits = [
            j for j, chi in enumerate(chars) if abs(chi(probe) - 1.0) <= tol
        ]
        if len(hits) != 1:
            raise DualityViolation(
                f"indicator of point {space.points[i]!r} is sent to 1 by "
                f"{len(hits)} characters; expected exactly one"
            )
        assignment.append(str(hits[0]))
    result = ContinuousMap(space, double_dual, tuple(assignment))
    if not result.is_bijection():
        raise DualityViolation("point-to-character map is not a bijection")
    return result


def verify_naturality_tau(
    phi: StarHomomorphism, tol: float = PROBE_TOL
) -> NaturalitySquareReport:
    """Check the square comparing phi with its double-dual along tau.

    Both paths from the source algebra to functions on the target's
    character space are applied to every indicator basis element, and the
    defect is the largest coordinate gap (equivalently, the worst character
    evaluation).
    """
    A, B = phi.source, phi.target
    tau_A, tau_B = tau(A), tau(B)
    double_dual = functor_G_morphism(functor_F_morphism(phi))
    max_defect = 0.0
    for i in range(A.dim):
        u = _indicator(A, i)
        left = double_dual(tau_A(u))
        right = tau_B(phi(u))
        max_defect = max(max_defect, (left - right).norm())
    return NaturalitySquareReport(
        kind="tau",
        morphism=f"{A.describe()} -> {B.describe()}",
        max_defect=max_defect,
        commutes=max_defect <= tol,
    )


def verify_naturality_mu(
    f: ContinuousMap, tol: float = PROBE_TOL
) -> NaturalitySquareReport:
    """Check the square comparing f with its double-dual along mu.

    The two composite point maps are compared by probing with every
    indicator function on the target space, so the defect is 0.0 when they
    agree pointwise and 1.0 at any disagreeing point.
    """
    X, Y = f.source, f.target
    path_forward = f.then(mu(Y))
    path_dual = mu(X).then(functor_F_morphism(functor_G_morphism(f)))
    target_algebra = FunctionAlgebra(Y)
    chars_Y = characters(target_algebra).as_finite_space()
    max_defect = 0.0
    for i in range(X.size):
        j_forward = chars_Y.index(path_forward.assignment[i])
        j_dual = chars_Y.index(path_dual.assignment[i])
        for g in range(target_algebra.dim):
            probe = _indicator(target_algebra, g).coords
            max_defect = max(
                max_defect, abs(probe[j_forward] - probe[j_dual])
            )
    return NaturalitySquareReport(
        kind="mu",
        morphism=f"{X!r} -> {Y!r}",
        max_defect=max_defect,
        commutes=max_defect <= tol,
    )


def verify_equivalence(subject, tol: float = PROBE_TOL) -> EquivalenceReport:
    """Certify the equivalence data on one object.

    For a finite space: mu is a bijection.  For an algebra: tau is an
    isometric isomorphism, checked as injectivity (round trip through the
    transform), surjectivity (dimension count), isometry, and
    multiplicativity with involution preservation on a basis family.
    """
    if isinstance(subject, FiniteSpace):
        return _verify_space(subject, tol)
    if isinstance(subject, CommutativeAlgebra):
        return _verify_algebra(subject, tol)
    raise TypeError(f"cannot verify {subject!r}")


def _verify_space(space: FiniteSpace, tol: float) -> EquivalenceReport:
    name = repr(space)
    checks = []
    try:
        point_map = mu(space)
        bijective = point_map.is_bijection()
        checks.append(
            CheckRecord("mu_bijection", name, 0.0 if bijective else 1.0, bijective)
        )
        sizes_match = point_map.target.size == space.size
        checks.append(
            CheckRecord(
                "double_dual_size",
                name,
                float(abs(point_map.target.size - space.size)),
                sizes_match,
            )
        )
    except DualityViolation:
        checks.append(CheckRecord("mu_bijection", name, 1.0, False))
    square = verify_naturality_mu(ContinuousMap.identity(space), tol)
    checks.append(
        CheckRecord("mu_identity_square", name, square.max_defect, square.commutes)
    )
    return EquivalenceReport(name, tuple(checks))


def _verify_algebra(algebra: CommutativeAlgebra, tol: float) -> EquivalenceReport:
    name = algebra.describe()
    checks = []
    dual = transform_target(algebra)
    checks.append(
        CheckRecord(
            "tau_surjective_dimension",
            name,
            float(abs(dual.dim - algebra.dim)),
            dual.dim == algebra.dim,
        )
    )

    # A deterministic element family: basis indicators, the unit, and a
    # generic combination with distinct coordinate values.
    family = [_indicator(algebra, i) for i in range(algebra.dim)]
    family.append(algebra.unit())
    generic = algebra.element(
        np.arange(1, algebra.dim + 1) * (0.7 - 0.3j) / algebra.dim
    )
    family.append(generic)

    round_trip = max(
        (gelfand_inverse(algebra, gelfand_transform(a)) - a).norm() for a in family
    )
    checks.append(
        CheckRecord("tau_injective_round_trip", name, round_trip, round_trip <= tol)
    )
    isometry = max(abs(gelfand_transform(a).norm() - a.norm()) for a in family)
    checks.append(CheckRecord("tau_isometry", name, isometry, isometry <= tol))

    mult = 0.0
    star_defect = 0.0
    for a in family:
        star_defect = max(
            star_defect,
            (gelfand_transform(a.star()) - gelfand_transform(a).star()).norm(),
        )
        for b in family:
            mult = max(
                mult,
                (
                    gelfand_transform(a * b)
                    - gelfand_transform(a) * gelfand_transform(b)
                ).norm(),
            )
    checks.append(CheckRecord("tau_multiplicative", name, mult, mult <= tol))
    checks.append(
        CheckRecord("tau_star_preserving", name, star_defect, star_defect <= tol)
    )
    return EquivalenceReport(name, tuple(checks))
