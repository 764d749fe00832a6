"""Two concrete models of a finite commutative unital C*-algebra.

Both models keep elements in character coordinates: one complex number per
character of the algebra.  For functions on a finite space the characters
are point evaluations, so the coordinates are simply the function values.
For the algebra generated by a single normal matrix the characters are
evaluations at the distinct eigenvalues, so an element is a function on the
spectrum and its dense n-by-n form is materialized only on demand.

With that representation addition, multiplication, and the involution act
coordinatewise and the norm is the largest coordinate modulus.  All the
analytic content of the matrix model sits in the eigendecomposition done
once at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AlgebraMismatch,
    DecompositionFailure,
    InvalidPointMap,
    InvalidSubset,
    NotNormal,
)
from .spaces import FiniteSpace
from .spectra import SpectrumSet, dedup_points

__all__ = [
    "CommutativeAlgebra",
    "FunctionAlgebra",
    "NormalGeneratorAlgebra",
    "AlgebraElement",
    "StarHomomorphism",
    "make_function_algebra",
    "make_normal_generator_algebra",
    "make_star_homomorphism",
    "restriction_homomorphism",
    "DEFAULT_NORMALITY_TOL",
    "DEFAULT_EIGENVALUE_MERGE_TOL",
]

DEFAULT_NORMALITY_TOL = 1e-10
DEFAULT_EIGENVALUE_MERGE_TOL = 1e-8


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class CommutativeAlgebra:
    """Shared surface of both algebra models."""

    dim: int

    def element(self, coords) -> "AlgebraElement":
        arr = np.asarray(coords, dtype=complex).reshape(-1)
        if arr.shape[0] != self.dim:
            raise ValueError(
                f"expected {self.dim} coordinates, got {arr.shape[0]}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("coordinates must be finite")
        return AlgebraElement(self, _readonly(arr.copy()))

    def unit(self) -> "AlgebraElement":
        return self.element(np.ones(self.dim))

    def zero(self) -> "AlgebraElement":
        return self.element(np.zeros(self.dim))

    def character_label(self, i: int) -> str:
        raise NotImplementedError

    def resolve_character_key(self, key) -> int:
        """Turn a character label or index into a canonical index."""
        if isinstance(key, bool):
            raise InvalidSubset(f"cannot use {key!r} as a character key")
        if isinstance(key, (int, np.integer)):
            i = int(key)
            if not 0 <= i < self.dim:
                raise InvalidSubset(f"character index {i} out of range")
            return i
        if isinstance(key, str):
            for i in range(self.dim):
                if self.character_label(i) == key:
                    return i
        raise InvalidSubset(f"{key!r} does not name a character of {self!r}")

    def describe(self) -> str:
        raise NotImplementedError


class FunctionAlgebra(CommutativeAlgebra):
    """C(X): all complex functions on a finite space with the sup norm."""

    def __init__(self, space: FiniteSpace):
        if not isinstance(space, FiniteSpace):
            space = FiniteSpace(tuple(space))
        self.space = space
        self.dim = space.size

    def character_label(self, i: int) -> str:
        return self.space.points[i]

    def describe(self) -> str:
        return f"C({{{','.join(self.space.points)}}})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FunctionAlgebra) and self.space == other.space

    def __hash__(self) -> int:
        return hash(("FunctionAlgebra", self.space.points))

    def __repr__(self) -> str:
        return self.describe()


class NormalGeneratorAlgebra(CommutativeAlgebra):
    """The unital algebra generated by one normal matrix inside M_n(C).

    Construction checks normality, jointly diagonalizes the Hermitian and
    anti-Hermitian parts (they commute exactly when the generator is
    normal), deduplicates the eigenvalues, and stores the unitary change of
    basis.  Elements are functions on the distinct spectrum; ``materialize``
    turns coordinates back into a dense matrix.
    """

    def __init__(
        self,
        matrix,
        *,
        normality_tol: float = DEFAULT_NORMALITY_TOL,
        eigenvalue_merge_tol: float = DEFAULT_EIGENVALUE_MERGE_TOL,
    ):
        M = np.asarray(matrix, dtype=complex)
        if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
            raise ValueError("generator must be a square matrix with n >= 1")
        if not np.all(np.isfinite(M)):
            raise ValueError("generator entries must be finite")
        n = M.shape[0]
        Mstar = M.conj().T
        fro = float(np.linalg.norm(M))
        commutator_defect = float(np.linalg.norm(M @ Mstar - Mstar @ M))
        normality_bound = normality_tol * fro * fro
        if commutator_defect > normality_bound:
            raise NotNormal(commutator_defect, normality_bound)

        U, eigs = _joint_diagonalize(M)
        unitary_defect = float(np.linalg.norm(U.conj().T @ U - np.eye(n)))
        if unitary_defect > 1e-12 * n:
            raise DecompositionFailure(
                f"change of basis is not unitary: defect {unitary_defect:.3e}"
            )
        recon_defect = float(np.linalg.norm((U * eigs) @ U.conj().T - M))
        recon_bound = 1e-8 * n * max(1.0, fro) + commutator_defect
        if recon_defect > recon_bound:
            raise DecompositionFailure(
                f"diagonalization does not reproduce the generator: "
                f"defect {recon_defect:.3e} exceeds {recon_bound:.3e}"
            )

        reps, assign = dedup_points(eigs, eigenvalue_merge_tol)
        self.dimension_n = n
        self.generator = _readonly(M.copy())
        self.eigenvalues = tuple(complex(v) for v in eigs)
        self.eigenvectors = _readonly(U)
        self.distinct_spectrum = SpectrumSet(reps, eigenvalue_merge_tol)
        self.multiplicity_map = assign
        self.normality_defect = commutator_defect
        self.reconstruction_defect = recon_defect
        self.dim = len(reps)

    def character_label(self, i: int) -> str:
        return str(i)

    def describe(self) -> str:
        return f"Alg(N) with n={self.dimension_n}, {self.dim} spectrum points"

    def generator_element(self) -> "AlgebraElement":
        """The generator itself, i.e. the identity function on the spectrum."""
        return self.element(np.asarray(self.distinct_spectrum.points))

    def materialize(self, a: "AlgebraElement") -> np.ndarray:
        """Dense n-by-n form U diag(f(lambda)) U* of an element."""
        if a.algebra != self:
            raise AlgebraMismatch("element belongs to a different algebra")
        diag = a.coords[np.asarray(self.multiplicity_map, dtype=int)]
        U = self.eigenvectors
        return (U * diag) @ U.conj().T

    def project_matrix(self, matrix) -> tuple["AlgebraElement", float]:
        """Nearest element of the algebra to a raw matrix.

        Returns the element together with the Frobenius residual; a residual
        at machine scale certifies membership.
        """
        A = np.asarray(matrix, dtype=complex)
        if A.shape != (self.dimension_n, self.dimension_n):
            raise ValueError("matrix has the wrong shape for this algebra")
        U = self.eigenvectors
        diag = np.diag(U.conj().T @ A @ U)
        mult = np.asarray(self.multiplicity_map, dtype=int)
        coords = np.zeros(self.dim, dtype=complex)
        for k in range(self.dim):
            coords[k] = diag[mult == k].mean()
        element = self.element(coords)
        residual = float(np.linalg.norm(self.materialize(element) - A))
        return element, residual

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NormalGeneratorAlgebra)
            and self.dimension_n == other.dimension_n
            and np.array_equal(self.generator, other.generator)
            and self.distinct_spectrum.merge_tol == other.distinct_spectrum.merge_tol
        )

    def __hash__(self) -> int:
        return hash(("NormalGeneratorAlgebra", self.dimension_n, self.generator.tobytes()))

    def __repr__(self) -> str:
        return self.describe()


def _joint_diagonalize(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unitary U and eigenvalue vector of a normal matrix.

    Diagonalizes the Hermitian part, then fixes the basis inside clusters of
    nearly equal eigenvalues by diagonalizing the anti-Hermitian part there.
    Clusters are needed because eigenvectors of nearly degenerate Hermitian
    eigenvalues are individually ill-conditioned even though their span is
    stable.
    """
    n = M.shape[0]
    H = (M + M.conj().T) / 2
    K = (M - M.conj().T) / 2j
    w, U = np.linalg.eigh(H)
    U = U.astype(complex)
    scale = max(1.0, float(np.max(np.abs(w))) if n else 1.0)
    gap_tol = 2e-8 * scale
    start = 0
    for stop in range(1, n + 1):
        if stop < n and w[stop] - w[stop - 1] <= gap_tol:
            continue
        if stop - start > 1:
            block = U[:, start:stop]
            Kblock = block.conj().T @ K @ block
            Kblock = (Kblock + Kblock.conj().T) / 2
            _, Q = np.linalg.eigh(Kblock)
            U[:, start:stop] = block @ Q
        start = stop
    eigs = np.diag(U.conj().T @ M @ U).copy()
    return U, eigs


class AlgebraElement:
    """An element in character coordinates; one value per character.

    Supports ``+``, ``-``, ``*`` (both scalar and element), ``star`` and
    ``norm``.  Mixing elements of different algebras raises
    :class:`AlgebraMismatch`.
    """

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: CommutativeAlgebra, coords: np.ndarray):
        self.algebra = algebra
        self.coords = coords

    @property
    def values(self) -> np.ndarray:
        """Alias for ``coords``; in C(X) these are the function values."""
        return self.coords

    def _check_same(self, other: "AlgebraElement") -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected an algebra element, got {other!r}")
        if other.algebra != self.algebra:
            raise AlgebraMismatch(
                f"operands live in different algebras: "
                f"{self.algebra.describe()} vs {other.algebra.describe()}"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_same(other)
        return self.algebra.element(self.coords + other.coords)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_same(other)
        return self.algebra.element(self.coords - other.coords)

    def __neg__(self) -> "AlgebraElement":
        return self.algebra.element(-self.coords)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_same(other)
            return self.algebra.element(self.coords * other.coords)
        if isinstance(other, (int, float, complex, np.number)):
            return self.algebra.element(self.coords * complex(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return self.algebra.element(complex(other) * self.coords)
        return NotImplemented

    def star(self) -> "AlgebraElement":
        """The involution: coordinatewise complex conjugation."""
        return self.algebra.element(np.conj(self.coords))

    def norm(self) -> float:
        """Sup norm: the largest coordinate modulus."""
        return float(np.max(np.abs(self.coords)))

    def __repr__(self) -> str:
        vals = ", ".join(f"{v:.6g}" for v in self.coords[:6])
        tail = ", ..." if self.coords.shape[0] > 6 else ""
        return f"<element [{vals}{tail}] of {self.algebra.describe()}>"


@dataclass(frozen=True)
class StarHomomorphism:
    """A unital *-homomorphism between the two models, as a pullback.

    ``character_images[j]`` is the index of the source character obtained by
    composing the j-th target character with the map.  Applying the map to
    an element reindexes its coordinates, so units go to units and all the
    algebraic laws hold by construction.
    """

    source: CommutativeAlgebra
    target: CommutativeAlgebra
    character_images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.character_images)
        object.__setattr__(self, "character_images", images)
        if len(images) != self.target.dim:
            raise InvalidPointMap(
                f"need {self.target.dim} character images, got {len(images)}"
            )
        bad = [i for i in images if not 0 <= i < self.source.dim]
        if bad:
            raise InvalidPointMap(f"character indices {bad!r} are out of range")

    @classmethod
    def identity(cls, algebra: CommutativeAlgebra) -> "StarHomomorphism":
        return cls(algebra, algebra, tuple(range(algebra.dim)))

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        if a.algebra != self.source:
            raise AlgebraMismatch("element does not belong to the source algebra")
        return self.target.element(a.coords[list(self.character_images)])

    def then(self, other: "StarHomomorphism") -> "StarHomomorphism":
        """Composite ``other . self`` (apply self first)."""
        if other.source != self.target:
            raise AlgebraMismatch("composition needs matching middle algebra")
        images = tuple(
            self.character_images[j] for j in other.character_images
        )
        return StarHomomorphism(self.source, other.target, images)

    def __repr__(self) -> str:
        return (
            f"StarHomomorphism({self.source.describe()} -> "
            f"{self.target.describe()}, images={self.character_images})"
        )


def make_function_algebra(space: FiniteSpace) -> FunctionAlgebra:
    """The algebra of all complex functions on a nonempty finite space."""
    return FunctionAlgebra(space)


def make_normal_generator_algebra(
    matrix,
    *,
    normality_tol: float = DEFAULT_NORMALITY_TOL,
    eigenvalue_merge_tol: float = DEFAULT_EIGENVALUE_MERGE_TOL,
) -> NormalGeneratorAlgebra:
    """The commutative algebra generated by one normal matrix."""
    return NormalGeneratorAlgebra(
        matrix,
        normality_tol=normality_tol,
        eigenvalue_merge_tol=eigenvalue_merge_tol,
    )


def make_star_homomorphism(
    point_map, source: CommutativeAlgebra, target: CommutativeAlgebra
) -> StarHomomorphism:
    """Build the pullback homomorphism from a map of character indices.

    ``point_map[j]`` is the source character index that the j-th target
    character evaluates through.
    """
    return StarHomomorphism(source, target, tuple(point_map))


def restriction_homomorphism(source: FunctionAlgebra, labels) -> StarHomomorphism:
    """Restriction C(X) -> C(Y) for a subset Y of the points of X."""
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise InvalidPointMap(f"restriction labels must be distinct: {labels!r}")
    images = tuple(source.space.index(lab) for lab in labels)
    return StarHomomorphism(source, FunctionAlgebra(FiniteSpace(labels)), images)
