"""Finite spectra as deduplicated complex point sets.

A spectrum is stored with a merge tolerance: values closer than the
tolerance are considered one point.  Set comparisons go through the
Hausdorff distance, which is the canonical equality predicate for
spectra throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_MERGE_TOL = 1e-9


def canonical_order(values) -> list[complex]:
    """Sort complex values by (real, imaginary) lexicographic order."""
    return sorted((complex(v) for v in values), key=lambda z: (z.real, z.imag))


def dedup_points(values, merge_tol: float) -> tuple[tuple[complex, ...], tuple[int, ...]]:
    """Greedy merge of near-coincident values in canonical order.

    Returns the representatives (each one an actual input value) and, for
    every input value, the index of the representative it merged into.
    Representatives are pairwise farther apart than ``merge_tol`` because a
    value only becomes a representative when no existing one is within
    tolerance.
    """
    vals = [complex(v) for v in values]
    order = sorted(range(len(vals)), key=lambda i: (vals[i].real, vals[i].imag))
    reps: list[complex] = []
    assign = [0] * len(vals)
    for i in order:
        v = vals[i]
        best, best_dist = -1, merge_tol
        for k, r in enumerate(reps):
            d = abs(v - r)
            if d <= best_dist:
                best, best_dist = k, d
        if best < 0:
            reps.append(v)
            best = len(reps) - 1
        assign[i] = best
    return tuple(reps), tuple(assign)


@dataclass(frozen=True)
class SpectrumSet:
    """A finite set of spectrum points in canonical (Re, Im) order."""

    points: tuple[complex, ...]
    merge_tol: float = DEFAULT_MERGE_TOL

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(complex(p) for p in self.points))

    @classmethod
    def from_values(cls, values, merge_tol: float = DEFAULT_MERGE_TOL) -> "SpectrumSet":
        reps, _ = dedup_points(values, merge_tol)
        return cls(reps, merge_tol)

    @property
    def size(self) -> int:
        return len(self.points)

    def radius(self) -> float:
        """Largest modulus over the points."""
        return max(abs(p) for p in self.points) if self.points else 0.0

    def hausdorff(self, other: "SpectrumSet | tuple | list") -> float:
        pts = other.points if isinstance(other, SpectrumSet) else tuple(other)
        return hausdorff_distance(self.points, pts)

    def close_to(self, other, tol: float = DEFAULT_MERGE_TOL) -> bool:
        return self.hausdorff(other) <= tol

    def __iter__(self):
        return iter(self.points)

    def __repr__(self) -> str:
        inside = ", ".join(f"{p:.6g}" for p in self.points)
        return f"SpectrumSet({{{inside}}}, merge_tol={self.merge_tol:g})"


def hausdorff_distance(a, b) -> float:
    """Hausdorff distance between two finite nonempty complex point sets."""
    pa = np.asarray(list(a), dtype=complex)
    pb = np.asarray(list(b), dtype=complex)
    if pa.size == 0 or pb.size == 0:
        raise ValueError("Hausdorff distance needs nonempty sets")
    gaps = np.abs(pa[:, None] - pb[None, :])
    return float(max(gaps.min(axis=1).max(), gaps.min(axis=0).max()))
