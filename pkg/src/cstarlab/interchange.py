"""The JSON interchange format for algebras and elements.

Two document kinds are accepted:

* ``{"kind": "function_algebra", "points": [...], "values": [[re, im], ...]}``
  describes a function on a finite space, one value per point.
* ``{"kind": "normal_matrix", "n": k, "entries": [[re, im], ...]}`` gives a
  square matrix row-major; the element denoted is the generator of the
  algebra it spans.

Complex numbers are always [re, im] pairs of finite decimal floats.
Anything malformed raises :class:`InvalidDocument`; a non-normal matrix
surfaces as :class:`NotNormal` from the algebra constructor.
"""

from __future__ import annotations

import json
import math
from typing import Any

import numpy as np

from .algebra import (
    AlgebraElement,
    FunctionAlgebra,
    NormalGeneratorAlgebra,
)
from .errors import CstarError, InvalidDocument
from .spaces import FiniteSpace

__all__ = [
    "load_document",
    "load_path",
    "dump_element",
    "document_to_json",
]


def _as_complex(pair: Any, what: str) -> complex:
    if (
        not isinstance(pair, (list, tuple))
        or len(pair) != 2
        or any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in pair)
    ):
        raise InvalidDocument(f"{what} must be a [re, im] pair, got {pair!r}")
    re, im = float(pair[0]), float(pair[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise InvalidDocument(f"{what} must be finite, got {pair!r}")
    return complex(re, im)


def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def load_document(
    text: str, *, eigenvalue_merge_tol: float | None = None
) -> AlgebraElement:
    """Parse an interchange document into an element of its algebra."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDocument(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidDocument("document must be a JSON object")
    kind = doc.get("kind")
    if kind == "function_algebra":
        return _load_function_algebra(doc)
    if kind == "normal_matrix":
        return _load_normal_matrix(doc, eigenvalue_merge_tol)
    raise InvalidDocument(f"unknown document kind {kind!r}")


def _load_function_algebra(doc: dict) -> AlgebraElement:
    points = doc.get("points")
    values = doc.get("values")
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise InvalidDocument("'points' must be a list of strings")
    if not isinstance(values, list):
        raise InvalidDocument("'values' must be a list of [re, im] pairs")
    if len(values) != len(points):
        raise InvalidDocument(
            f"{len(points)} points but {len(values)} values"
        )
    try:
        space = FiniteSpace(tuple(points))
    except CstarError as exc:
        raise InvalidDocument(str(exc)) from exc
    coords = [_as_complex(v, f"values[{i}]") for i, v in enumerate(values)]
    return FunctionAlgebra(space).element(coords)


def _load_normal_matrix(
    doc: dict, eigenvalue_merge_tol: float | None
) -> AlgebraElement:
    n = doc.get("n")
    entries = doc.get("entries")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidDocument("'n' must be a positive integer")
    if not isinstance(entries, list) or len(entries) != n * n:
        raise InvalidDocument(f"'entries' must hold exactly n*n = {n * n} pairs")
    flat = [_as_complex(v, f"entries[{i}]") for i, v in enumerate(entries)]
    matrix = np.array(flat, dtype=complex).reshape(n, n)
    kwargs = {}
    if eigenvalue_merge_tol is not None:
        kwargs["eigenvalue_merge_tol"] = eigenvalue_merge_tol
    algebra = NormalGeneratorAlgebra(matrix, **kwargs)
    return algebra.generator_element()


def load_path(path: str, **kwargs) -> AlgebraElement:
    with open(path, "r", encoding="utf-8") as handle:
        return load_document(handle.read(), **kwargs)


def dump_element(a: AlgebraElement) -> dict:
    """Serialize an element back into a document of the matching kind."""
    algebra = a.algebra
    if isinstance(algebra, FunctionAlgebra):
        return {
            "kind": "function_algebra",
            "points": list(algebra.space.points),
            "values": [_pair(v) for v in a.coords],
        }
    if isinstance(algebra, NormalGeneratorAlgebra):
        dense = algebra.materialize(a)
        return {
            "kind": "normal_matrix",
            "n": algebra.dimension_n,
            "entries": [_pair(v) for v in dense.reshape(-1)],
        }
    raise TypeError(f"cannot serialize elements of {algebra!r}")


def document_to_json(doc: dict) -> str:
    """Canonical single-line JSON for golden-file comparisons."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
