"""Spectral calculus: series inversion, spectra, radii, classification.

The geometric series drives everything here.  Truncated series are summed
with honest algebra operations and their residuals are measured, never
assumed; the closed-form coordinatewise answers exist too, but they are
kept in the test suite as independent oracles.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraElement
from .errors import (
    DomainError,
    NormTooLarge,
    NotInvertible,
    Overflow,
    PerturbationTooLarge,
    SpectrumHit,
    Unconverged,
)
from .spectra import DEFAULT_MERGE_TOL, SpectrumSet

__all__ = [
    "NeumannReport",
    "RadiusEstimate",
    "ClassificationReport",
    "neumann_inverse",
    "perturbation_inverse",
    "is_invertible",
    "invert",
    "resolvent",
    "spectrum",
    "spectral_radius_exact",
    "spectral_radius_limit",
    "operator_norm",
    "apply_polynomial",
    "apply_function",
    "classify_element",
    "inversion_delta",
    "invertibility_tolerance",
]


@dataclass(frozen=True)
class NeumannReport:
    """Statistics of a truncated geometric series.

    ``terms_used`` counts the summed powers (so the highest power is
    ``terms_used - 1``), ``residual`` is the measured defect of the partial
    sum as an inverse, and ``a_priori_bound`` is the geometric tail bound
    for that truncation point.
    """

    terms_used: int
    residual: float
    a_priori_bound: float


@dataclass(frozen=True)
class RadiusEstimate:
    """Successive-squaring estimate of the spectral radius with its trace."""

    estimate: float
    trace: tuple[float, ...]


@dataclass(frozen=True)
class ClassificationReport:
    """Which of the four classical element classes an element belongs to.

    ``witness_tolerances`` records the measured defect of each defining
    identity; a flag is set when its defect is within tolerance.  When
    positivity fails, ``positive_offender`` is a character value that is
    not a nonnegative real.
    """

    flags: dict[str, bool]
    witness_tolerances: dict[str, float]
    positive_offender: complex | None = None
    tol: float = field(default=0.0)


def invertibility_tolerance(a: AlgebraElement) -> float:
    """Scale-relative cutoff below which a character value counts as zero."""
    return 1e-10 * (1.0 + a.norm())


def neumann_inverse(
    a: AlgebraElement, tol: float = 1e-10, max_terms: int = 1000
) -> tuple[AlgebraElement, NeumannReport]:
    """Invert ``e - a`` by summing the geometric series in the algebra.

    Requires ``norm(a) < 1``.  Terms are accumulated until the measured
    residual ``norm((e - a) * s - e)`` drops to ``tol``; running past
    ``max_terms`` raises :class:`Unconverged` carrying the best partial sum.
    """
    norm_a = a.norm()
    if norm_a >= 1.0:
        raise NormTooLarge(
            f"geometric series needs norm(a) < 1, got {norm_a:.6g}"
        )
    e = a.algebra.unit()
    one_minus_a = e - a

    def tail_bound(terms: int) -> float:
        return norm_a**terms / (1.0 - norm_a)

    total = e
    term = e
    terms = 1
    residual = (one_minus_a * total - e).norm()
    while residual > tol:
        if terms >= max_terms:
            report = NeumannReport(terms, residual, tail_bound(terms))
            raise Unconverged(
                f"residual {residual:.3e} after {terms} terms (tol {tol:.3e})",
                partial=total,
                report=report,
            )
        term = term * a
        total = total + term
        terms += 1
        residual = (one_minus_a * total - e).norm()
    return total, NeumannReport(terms, residual, tail_bound(terms))


def perturbation_inverse(
    a: AlgebraElement,
    b: AlgebraElement,
    tol: float = 1e-10,
    max_terms: int = 1000,
) -> AlgebraElement:
    """Invert ``b`` by perturbing off a known invertible ``a``.

    Sums ``(a_inv * (a - b))^n * a_inv``, which converges whenever
    ``norm(a - b) < 1 / norm(a_inv)``; outside that ball the call raises
    :class:`PerturbationTooLarge` rather than returning a doubtful sum.
    """
    a_inv = invert(a)
    gap = (a - b).norm()
    radius = 1.0 / a_inv.norm()
    if gap >= radius:
        raise PerturbationTooLarge(
            f"norm(a - b) = {gap:.6g} is not below 1/norm(a_inv) = {radius:.6g}"
        )
    e = a.algebra.unit()
    ratio = a_inv * (a - b)
    total = a_inv
    term = a_inv
    terms = 1
    residual = (b * total - e).norm()
    while residual > tol:
        if terms >= max_terms:
            raise Unconverged(
                f"residual {residual:.3e} after {terms} terms (tol {tol:.3e})",
                partial=total,
                report=NeumannReport(terms, residual, float("nan")),
            )
        term = ratio * term
        total = total + term
        terms += 1
        residual = (b * total - e).norm()
    return total


def is_invertible(a: AlgebraElement, tol: float | None = None) -> bool:
    """Whether every character value stays clear of zero.

    The default cutoff is scale-relative so that rescaling an element does
    not flip the verdict for well-separated spectra.
    """
    cutoff = invertibility_tolerance(a) if tol is None else tol
    return bool(np.min(np.abs(a.coords)) > cutoff)


def invert(a: AlgebraElement, tol: float | None = None) -> AlgebraElement:
    """Exact inverse via reciprocal character values."""
    if not is_invertible(a, tol):
        smallest = float(np.min(np.abs(a.coords)))
        raise NotInvertible(
            f"character value with modulus {smallest:.3e} is numerically zero"
        )
    return a.algebra.element(1.0 / a.coords)


def resolvent(
    a: AlgebraElement, lam: complex, merge_tol: float = DEFAULT_MERGE_TOL
) -> AlgebraElement:
    """The inverse of ``lam * e - a`` for lam outside the spectrum."""
    lam = complex(lam)
    gaps = np.abs(lam - a.coords)
    nearest = int(np.argmin(gaps))
    if gaps[nearest] <= merge_tol:
        raise SpectrumHit(
            f"{lam} is within {merge_tol:g} of spectrum point "
            f"{complex(a.coords[nearest])}"
        )
    return a.algebra.element(1.0 / (lam - a.coords))


def spectrum(a: AlgebraElement, merge_tol: float = DEFAULT_MERGE_TOL) -> SpectrumSet:
    """The set of character values of ``a`` with near-duplicates merged."""
    return SpectrumSet.from_values(a.coords, merge_tol)


def spectral_radius_exact(a: AlgebraElement) -> float:
    """Largest modulus over the spectrum.

    The characters exhaust the spectrum in these models, so this is the
    largest character-value modulus, prior to any deduplication.
    """
    return float(np.max(np.abs(a.coords)))


def spectral_radius_limit(a: AlgebraElement, n_max: int = 20) -> RadiusEstimate:
    """Estimate the spectral radius as the limit of norm(a^(2^k))^(1/2^k).

    Powers are formed by repeated squaring in the algebra.  Each square is
    renormalized and the scale is tracked in log space, so the trace equals
    the mathematical sequence without overflow for any finite element; a
    non-finite intermediate still raises :class:`Overflow` defensively.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    norm0 = a.norm()
    if norm0 == 0.0:
        return RadiusEstimate(0.0, (0.0,) * (n_max + 1))
    log_scale = math.log(norm0)
    b = np.asarray(a.coords) / norm0
    trace = [norm0]
    for k in range(1, n_max + 1):
        b = b * b
        m = float(np.max(np.abs(b)))
        if m == 0.0 or not math.isfinite(m):
            raise Overflow(
                "power iteration left the floating range; rescale by norm(a)"
            )
        b = b / m
        log_scale = 2.0 * log_scale + math.log(m)
        trace.append(math.exp(log_scale / 2.0**k))
    return RadiusEstimate(trace[-1], tuple(trace))


def operator_norm(matrix) -> float:
    """Largest singular value of a raw square complex matrix.

    Computed as sqrt of the spectral radius of M* M, with the radius taken
    as the limit of Frobenius norms of repeated squares.  The Frobenius
    norm overestimates by at most a dimension factor that dies under the
    2^k-th root, so the iteration converges geometrically from above.
    """
    M = np.asarray(matrix, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise ValueError("operator_norm expects a square matrix")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite")
    G = M.conj().T @ M
    f = float(np.linalg.norm(G))
    if f == 0.0:
        return 0.0
    log_scale = math.log(f)
    B = G / f
    previous = None
    estimate = f
    for k in range(1, 64):
        B = B @ B
        B = (B + B.conj().T) / 2
        m = float(np.linalg.norm(B))
        if m == 0.0 or not math.isfinite(m):
            raise Overflow("squaring left the floating range")
        B = B / m
        log_scale = 2.0 * log_scale + math.log(m)
        estimate = math.exp(log_scale / 2.0**k)
        if previous is not None and abs(estimate - previous) <= 1e-13 * max(
            1.0, estimate
        ):
            break
        previous = estimate
    return math.sqrt(estimate)


def apply_polynomial(coefficients, a: AlgebraElement) -> AlgebraElement:
    """Evaluate a polynomial (ascending coefficients) on an element.

    Horner's scheme in the algebra: ``p(a) = c0*e + a*(c1*e + a*(...))``.
    """
    coeffs = [complex(c) for c in coefficients]
    if not coeffs:
        coeffs = [0j]
    algebra = a.algebra
    acc = algebra.element(np.full(algebra.dim, coeffs[-1]))
    for c in reversed(coeffs[:-1]):
        acc = acc * a + algebra.element(np.full(algebra.dim, c))
    return acc


def apply_function(g, a: AlgebraElement) -> AlgebraElement:
    """Apply a scalar function to an element through its character values.

    ``g`` must be defined on every spectrum point; a raised exception or a
    non-finite value surfaces as :class:`DomainError` naming the point.
    """
    out = np.empty(a.algebra.dim, dtype=complex)
    for i, v in enumerate(a.coords):
        v = complex(v)
        try:
            w = complex(g(v))
        except DomainError:
            raise
        except Exception as exc:
            raise DomainError(
                f"function failed on spectrum point {v}: {exc}", point=v
            ) from exc
        if not (math.isfinite(w.real) and math.isfinite(w.imag)):
            raise DomainError(
                f"function is not finite on spectrum point {v}", point=v
            )
        out[i] = w
    return a.algebra.element(out)


def classify_element(a: AlgebraElement, tol: float = 1e-9) -> ClassificationReport:
    """Test the four defining identities and report measured defects.

    self-adjoint: a = a*;  unitary: a* a = e;  projection: a^2 = a and
    a = a*;  positive: a = b b* for the principal square root b of a.
    """
    e = a.algebra.unit()
    sa_defect = (a - a.star()).norm()
    un_defect = (a.star() * a - e).norm()
    pr_defect = max((a * a - a).norm(), sa_defect)
    root = apply_function(cmath.sqrt, a)
    pos_gap = np.abs((root * root.star() - a).coords)
    pos_defect = float(np.max(pos_gap))
    offender = None
    if pos_defect > tol:
        offender = complex(a.coords[int(np.argmax(pos_gap))])
    defects = {
        "self_adjoint": sa_defect,
        "unitary": un_defect,
        "projection": pr_defect,
        "positive": pos_defect,
    }
    flags = {name: defect <= tol for name, defect in defects.items()}
    return ClassificationReport(flags, defects, offender, tol)


def inversion_delta(a_inverse_norm: float, eps: float) -> float:
    """Perturbation radius guaranteeing the inverse moves by at most eps.

    With eps1 = eps / norm(a_inv), any b with norm(a - b) below
    eps1 / ((1 + eps1) * norm(a_inv)) is invertible, and the geometric
    series bound on the inverse difference telescopes to
    norm(a_inv) * eps1, which equals eps.  Scaling eps1 the other way
    (eps times the inverse norm) only bounds the error by
    eps * norm(a_inv)**2, which is weaker whenever that norm exceeds one.
    """
    if a_inverse_norm <= 0 or eps <= 0:
        raise ValueError("need positive inverse norm and eps")
    eps1 = eps / a_inverse_norm
    return eps1 / ((1.0 + eps1) * a_inverse_norm)
