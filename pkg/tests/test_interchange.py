"""JSON interchange documents."""

import json

import numpy as np
import pytest

from cstarlab import (
    FunctionAlgebra,
    InvalidDocument,
    NotNormal,
    dump_element,
    load_document,
    load_path,
    make_function_algebra,
    spectrum,
)
from cstarlab.interchange import document_to_json


FUNCTION_DOC = json.dumps(
    {
        "kind": "function_algebra",
        "points": ["a", "b", "c"],
        "values": [[1.5, 0.0], [0.0, -2.0], [3.0, 0.0]],
    }
)

MATRIX_DOC = json.dumps(
    {
        "kind": "normal_matrix",
        "n": 2,
        "entries": [[0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [0.0, 0.0]],
    }
)


def test_function_document_round_trip():
    f = load_document(FUNCTION_DOC)
    assert isinstance(f.algebra, FunctionAlgebra)
    assert f.algebra.space.points == ("a", "b", "c")
    assert np.array_equal(f.coords, np.array([1.5, -2j, 3.0]))
    assert load_document(json.dumps(dump_element(f))).coords.tolist() == f.coords.tolist()


def test_matrix_document_builds_the_generator():
    g = load_document(MATRIX_DOC)
    assert spectrum(g).close_to([-1.0, 1.0])


def test_matrix_dump_reloads_to_the_same_spectrum():
    g = load_document(MATRIX_DOC)
    again = load_document(json.dumps(dump_element(g)))
    assert spectrum(again).hausdorff(spectrum(g)) <= 1e-8


def test_merge_tolerance_passes_through():
    doc = json.dumps(
        {
            "kind": "normal_matrix",
            "n": 2,
            "entries": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0 + 5e-10, 0.0]],
        }
    )
    assert load_document(doc).algebra.dim == 1
    assert load_document(doc, eigenvalue_merge_tol=1e-12).algebra.dim == 2


def test_load_path_reads_files(tmp_path):
    p = tmp_path / "element.json"
    p.write_text(FUNCTION_DOC)
    assert load_path(str(p)).norm() == 3.0


@pytest.mark.parametrize(
    "text",
    [
        "not json at all",
        '"just a string"',
        '{"points": ["a"], "values": [[1, 0]]}',
        '{"kind": "mystery"}',
        '{"kind": "function_algebra", "points": ["a", "b"], "values": [[1, 0]]}',
        '{"kind": "function_algebra", "points": ["a"], "values": [1.0]}',
        '{"kind": "function_algebra", "points": ["a"], "values": [[1, 0, 0]]}',
        '{"kind": "function_algebra", "points": ["a"], "values": [[true, false]]}',
        '{"kind": "function_algebra", "points": ["a"], "values": [[Infinity, 0]]}',
        '{"kind": "function_algebra", "points": [], "values": []}',
        '{"kind": "normal_matrix", "n": 2, "entries": [[0, 0]]}',
        '{"kind": "normal_matrix", "n": "two", "entries": []}',
    ],
)
def test_malformed_documents_are_rejected(text):
    with pytest.raises(InvalidDocument):
        load_document(text)


def test_non_normal_matrix_is_reported_as_such():
    doc = json.dumps(
        {
            "kind": "normal_matrix",
            "n": 2,
            "entries": [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
        }
    )
    with pytest.raises(NotNormal):
        load_document(doc)


def test_json_encoding_is_canonical():
    assert document_to_json({"b": 1, "a": [2]}) == '{"a":[2],"b":1}'


def test_function_dump_shape():
    f = make_function_algebra(("p",)).element([2.5 + 0.5j])
    assert dump_element(f) == {
        "kind": "function_algebra",
        "points": ["p"],
        "values": [[2.5, 0.5]],
    }
