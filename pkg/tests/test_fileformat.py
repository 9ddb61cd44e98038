"""On-disk JSON format: canonical serialization, strict parsing, DOT export."""

import json

import pytest
from hypothesis import given

from fuzzydom.fileformat import (
    FileFormatError,
    ValidationFailedError,
    document_of,
    dumps,
    export_dot,
    graph_of_document,
    load,
    save,
)
from fuzzydom.product import direct_product

from .conftest import graphs


def test_roundtrip_preserves_everything(p3_mixed, tmp_path):
    path = tmp_path / "g.fg"
    save(p3_mixed, str(path))
    assert load(str(path)) == p3_mixed


def test_product_roundtrip_keeps_the_tag(example_product, tmp_path):
    path = tmp_path / "p.fg"
    save(example_product, str(path))
    back = load(str(path))
    assert back == example_product
    assert back.product_tag.factors == example_product.product_tag.factors


def test_serialization_is_byte_stable(example_product):
    assert dumps(example_product) == dumps(example_product)
    assert dumps(example_product).endswith("\n")


def test_weights_are_minimal_decimal_strings(k2_low):
    doc = document_of(k2_low)
    assert doc["vertices"][0]["sigma"] == "0.15"
    assert doc["edges"][0]["mu"] == "0.15"


def test_document_rejects_float_weights():
    doc = {"name": "g", "vertices": [{"id": "a", "sigma": 0.5}], "edges": []}
    with pytest.raises(FileFormatError, match="decimal strings"):
        graph_of_document(doc)


def test_document_rejects_extra_keys():
    doc = {"name": "g", "vertices": [], "edges": [], "comment": "hi"}
    with pytest.raises(FileFormatError, match="unexpected keys"):
        graph_of_document(doc)


def test_document_rejects_missing_keys():
    with pytest.raises(FileFormatError, match="missing keys"):
        graph_of_document({"name": "g", "vertices": []})


def test_invalid_graph_is_refused_with_violations(tmp_path):
    doc = {
        "name": "bad",
        "vertices": [{"id": "a", "sigma": "0.2"}, {"id": "b", "sigma": "0.3"}],
        "edges": [{"u": "a", "v": "b", "mu": "0.25"}],
    }
    path = tmp_path / "bad.fg"
    path.write_text(json.dumps(doc))
    with pytest.raises(ValidationFailedError) as info:
        load(str(path))
    assert info.value.violations == ["mu exceeds min sigma on (a,b)"]
    assert str(path) in str(info.value)


def test_parse_error_reports_position(tmp_path):
    path = tmp_path / "broken.fg"
    path.write_text('{"name": "g",,}')
    with pytest.raises(FileFormatError, match=r"parse error at line 1, column"):
        load(str(path))


def test_product_ids_must_split_on_the_separator():
    doc = {
        "name": "p",
        "vertices": [{"id": "ab", "sigma": "0.5"}],
        "edges": [],
        "product_of": {"left": "g", "right": "h", "separator": "|"},
    }
    with pytest.raises(FileFormatError, match="exactly once"):
        graph_of_document(doc)


def test_loaded_product_supports_fibers(example_product, tmp_path):
    from fuzzydom.product import fiber_left

    path = tmp_path / "p.fg"
    save(example_product, str(path))
    assert fiber_left(load(str(path)), "g2") == ("g2|h1", "g2|h2")


def test_export_dot_styles_effectiveness(p3_mixed, tmp_path):
    path = tmp_path / "g.dot"
    export_dot(p3_mixed, str(path))
    text = path.read_text()
    assert '"g1" [label="g1 (0.2)"];' in text
    assert '"g1" -- "g2" [label="0.1", style=dashed];' in text
    assert '"g2" -- "g3" [label="0.15", style=solid];' in text
    assert text.startswith('graph "p3-mixed" {')


@given(graphs())
def test_generated_graphs_roundtrip(g):
    doc = json.loads(dumps(g))
    assert graph_of_document(doc) == g


@given(graphs(max_vertices=3), graphs(max_vertices=3))
def test_generated_products_roundtrip(g, h):
    p = direct_product(g, h)
    assert graph_of_document(json.loads(dumps(p))) == p
