"""Graph files, canonical serialization, and DOT export.

The on-disk format is a strict JSON document with membership degrees kept
as decimal strings, never floats, so values survive a round trip exactly:

    {
      "name": "G",
      "vertices": [{"id": "g1", "sigma": "0.15"}, ...],
      "edges": [{"u": "g1", "v": "g2", "mu": "0.15"}, ...],
      "product_of": {"left": "G", "right": "H", "separator": "|"}
    }

product_of is present only on product graphs; each vertex id of such a
document must contain the separator exactly once so the factor pair of
every vertex can be reconstructed by splitting.

Serialization is canonical: vertices in input order, edges sorted by
(min id, max id), weights printed with minimal digits. Saving the same
graph twice is byte-identical, which the determinism tests rely on.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .core import FuzzyGraph, GraphError, ProductTag, is_effective, validate
from .weights import WeightError, format_weight, is_decimal_exact, parse_weight


class FileFormatError(ValueError):
    """Malformed document: bad JSON, bad schema, or bad weight literals."""


class ValidationFailedError(FileFormatError):
    """The document parsed but describes an invalid fuzzy graph."""

    def __init__(self, message: str, violations: list[str]):
        self.violations = violations
        super().__init__(message)


def _require_keys(obj: dict, required: set[str], optional: set[str],
                  where: str) -> None:
    keys = set(obj)
    missing = required - keys
    extra = keys - required - optional
    if missing:
        raise FileFormatError(f"{where}: missing keys {sorted(missing)}")
    if extra:
        raise FileFormatError(f"{where}: unexpected keys {sorted(extra)}")


def _weight_string(value: Any, where: str) -> Fraction:
    if not isinstance(value, str):
        raise FileFormatError(
            f"{where}: weights must be decimal strings, got {type(value).__name__}")
    try:
        return parse_weight(value)
    except WeightError as exc:
        raise FileFormatError(f"{where}: {exc}") from exc


def document_of(g: FuzzyGraph) -> dict:
    """JSON-ready dict for a graph; weights must have exact decimal forms."""
    for label, value in [(f"sigma({v})", s) for v, s in zip(g.vertices, g.sigma)] + \
                        [(f"mu({u},{v})", mu) for u, v, mu in g.edges]:
        if not is_decimal_exact(value):
            raise FileFormatError(
                f"{label} = {value} has no exact decimal form of at most six "
                "digits and cannot be serialized")
    doc: dict = {
        "name": g.name,
        "vertices": [{"id": v, "sigma": format_weight(s)}
                     for v, s in zip(g.vertices, g.sigma)],
        "edges": [{"u": u, "v": v, "mu": format_weight(mu)}
                  for u, v, mu in g.edges],
    }
    if g.product_tag is not None:
        doc["product_of"] = {
            "left": g.product_tag.left_name,
            "right": g.product_tag.right_name,
            "separator": g.product_tag.separator,
        }
    return doc


def graph_of_document(doc: Any) -> FuzzyGraph:
    """Parse and validate a document dict; refuses invalid graphs."""
    if not isinstance(doc, dict):
        raise FileFormatError("document root must be a JSON object")
    _require_keys(doc, {"name", "vertices", "edges"}, {"product_of"}, "document")
    name = doc["name"]
    if not isinstance(name, str):
        raise FileFormatError("name must be a string")
    if not isinstance(doc["vertices"], list) or not isinstance(doc["edges"], list):
        raise FileFormatError("vertices and edges must be arrays")

    vertices = []
    for i, entry in enumerate(doc["vertices"]):
        if not isinstance(entry, dict):
            raise FileFormatError(f"vertices[{i}] must be an object")
        _require_keys(entry, {"id", "sigma"}, set(), f"vertices[{i}]")
        if not isinstance(entry["id"], str):
            raise FileFormatError(f"vertices[{i}].id must be a string")
        vertices.append((entry["id"], _weight_string(entry["sigma"],
                                                     f"vertices[{i}].sigma")))
    edges = []
    for i, entry in enumerate(doc["edges"]):
        if not isinstance(entry, dict):
            raise FileFormatError(f"edges[{i}] must be an object")
        _require_keys(entry, {"u", "v", "mu"}, set(), f"edges[{i}]")
        if not isinstance(entry["u"], str) or not isinstance(entry["v"], str):
            raise FileFormatError(f"edges[{i}] endpoints must be strings")
        edges.append((entry["u"], entry["v"],
                      _weight_string(entry["mu"], f"edges[{i}].mu")))

    tag = None
    if "product_of" in doc:
        block = doc["product_of"]
        if not isinstance(block, dict):
            raise FileFormatError("product_of must be an object")
        _require_keys(block, {"left", "right", "separator"}, set(), "product_of")
        separator = block["separator"]
        if not isinstance(separator, str) or not separator:
            raise FileFormatError("product_of.separator must be a nonempty string")
        factors = []
        for vid, _ in vertices:
            if vid.count(separator) != 1:
                raise FileFormatError(
                    f"product vertex id {vid!r} must contain the separator "
                    f"{separator!r} exactly once")
            left_id, right_id = vid.split(separator)
            if not left_id or not right_id:
                raise FileFormatError(
                    f"product vertex id {vid!r} has an empty factor side")
            factors.append((left_id, right_id))
        if not isinstance(block["left"], str) or not isinstance(block["right"], str):
            raise FileFormatError("product_of factor names must be strings")
        tag = ProductTag(left_name=block["left"], right_name=block["right"],
                         separator=separator, factors=tuple(factors))

    try:
        graph = FuzzyGraph.build(name=name, vertices=vertices, edges=edges,
                                 product_tag=tag)
    except GraphError as exc:
        raise FileFormatError(str(exc)) from exc
    violations = validate(graph)
    if violations:
        raise ValidationFailedError(
            f"graph {name!r} is invalid: " + "; ".join(violations), violations)
    return graph


def dumps(g: FuzzyGraph) -> str:
    return json.dumps(document_of(g), indent=2) + "\n"


def save(g: FuzzyGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(g))


def load(path: str) -> FuzzyGraph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(
            f"{path}: parse error at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from exc
    try:
        return graph_of_document(doc)
    except ValidationFailedError as exc:
        raise ValidationFailedError(f"{path}: {exc}", exc.violations) from exc
    except FileFormatError as exc:
        raise FileFormatError(f"{path}: {exc}") from exc


def _dot_quote(token: str) -> str:
    return '"' + token.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: FuzzyGraph, path: str) -> None:
    """Undirected DOT drawing: solid edges are effective, dashed are not."""
    lines = [f"graph {_dot_quote(g.name)} {{"]
    for vid, s in zip(g.vertices, g.sigma):
        label = f"{vid} ({format_weight(s)})"
        lines.append(f"  {_dot_quote(vid)} [label={_dot_quote(label)}];")
    for u, v, mu in g.edges:
        style = "solid" if is_effective(g, u, v) else "dashed"
        lines.append(
            f"  {_dot_quote(u)} -- {_dot_quote(v)} "
            f"[label={_dot_quote(format_weight(mu))}, style={style}];")
    lines.append("}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
