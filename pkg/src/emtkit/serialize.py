"""Strict JSON input and canonical JSON output.

Space documents: ``{"points": [...], "opens": [[...names]], "dist": [[...values]]}``
with point-name order defining indices, distance entries as ``"p/q"``,
``"p"`` or ``"inf"`` strings.  Diagram documents add a category tag,
objects, and named arrows whose maps send point names to point names.
Schema violations raise :class:`~emtkit.errors.ParseError` with a
JSON-pointer-style path; mathematical invalidity is reported separately by
the validators.  Emission is canonical, so parse-emit round-trips are
byte-identical.
"""
from __future__ import annotations

import json
from typing import Any

from .category import Arrow, ConeCert, Diagram, TAGS
from .errors import DomainError, ParseError
from .foundations import FinMap, parse_value
from .functors import FunctorResult
from .metric import ExtPseudoMetric, validate_pseudometric
from .spaces import CSMorphism, Space, validate_space
from .topology import FiniteTopology, mask_of, validate_opens
from .verdicts import Verdict


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _expect(doc, kind, path):
    if not isinstance(doc, kind):
        raise ParseError(path, f"expected {kind.__name__}, got {type(doc).__name__}")
    return doc


def _point_indices(doc, path) -> dict[str, int]:
    points = _expect(doc.get("points"), list, f"{path}/points")
    index: dict[str, int] = {}
    for i, name in enumerate(points):
        _expect(name, str, f"{path}/points/{i}")
        if name in index:
            raise ParseError(f"{path}/points/{i}", f"duplicate point name {name!r}")
        index[name] = i
    return index


def parse_space_parts(doc: dict, path: str = ""):
    """Schema-check a space document into raw parts without validating the math."""
    _expect(doc, dict, path or "/")
    index = _point_indices(doc, path)
    n = len(index)
    opens_doc = _expect(doc.get("opens"), list, f"{path}/opens")
    masks = []
    for i, open_doc in enumerate(opens_doc):
        _expect(open_doc, list, f"{path}/opens/{i}")
        members = []
        for j, name in enumerate(open_doc):
            _expect(name, str, f"{path}/opens/{i}/{j}")
            if name not in index:
                raise ParseError(f"{path}/opens/{i}/{j}", f"unknown point name {name!r}")
            members.append(index[name])
        masks.append(mask_of(members))
    dist_doc = _expect(doc.get("dist"), list, f"{path}/dist")
    if len(dist_doc) != n:
        raise ParseError(f"{path}/dist", f"expected {n} rows, got {len(dist_doc)}")
    rows = []
    for i, row_doc in enumerate(dist_doc):
        _expect(row_doc, list, f"{path}/dist/{i}")
        if len(row_doc) != n:
            raise ParseError(f"{path}/dist/{i}", f"expected {n} entries, got {len(row_doc)}")
        row = []
        for j, text in enumerate(row_doc):
            _expect(text, str, f"{path}/dist/{i}/{j}")
            try:
                row.append(parse_value(text))
            except DomainError as exc:
                raise ParseError(f"{path}/dist/{i}/{j}", str(exc)) from None
        rows.append(tuple(row))
    names = tuple(sorted(index, key=index.get))
    return names, masks, ExtPseudoMetric(n, tuple(rows))


def validate_space_doc(doc: dict, path: str = "") -> Verdict:
    """Mathematical verdict for a schema-valid document."""
    names, masks, metric = parse_space_parts(doc, path)
    vt = validate_opens(len(names), masks)
    if not vt:
        return Verdict.failed(f"opens: {vt.detail}", vt.witness)
    vm = validate_pseudometric(metric)
    if not vm:
        return Verdict.failed(f"dist: {vm.detail}", vm.witness)
    space = Space(names, FiniteTopology.from_opens(len(names), masks), metric)
    return validate_space(space)


def space_from_doc(doc: dict, path: str = "") -> Space:
    names, masks, metric = parse_space_parts(doc, path)
    topology = FiniteTopology.from_opens(len(names), masks)
    space = Space(names, topology, metric)
    v = validate_space(space)
    if not v:
        raise DomainError(f"invalid space: {v.detail}")
    return space


def parse_space(text: str) -> Space:
    """Strict parse of a space document from JSON text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("/", f"not JSON: {exc}") from None
    return space_from_doc(_expect(doc, dict, "/"))


def emit_space(s: Space, opens_cap: int | None = None) -> str:
    """Canonical JSON text; parse-emit round-trips are byte-identical."""
    return dumps(space_to_doc(s, opens_cap))


def space_to_doc(s: Space, opens_cap: int | None = None) -> dict:
    opens = s.topology.opens(opens_cap)
    return {
        "points": list(s.names),
        "opens": [[s.names[x] for x in range(s.n_points) if o >> x & 1] for o in opens],
        "dist": [[str(v) for v in row] for row in s.metric.rows],
    }


def map_from_doc(doc: dict, src: Space, dst: Space, path: str) -> FinMap:
    mapping = _expect(doc.get("map"), dict, f"{path}/map")
    if set(mapping) != set(src.names):
        raise ParseError(f"{path}/map", "map keys must be exactly the source point names")
    image = []
    for name in src.names:
        value = _expect(mapping[name], str, f"{path}/map/{name}")
        if value not in dst.names:
            raise ParseError(f"{path}/map/{name}", f"unknown target point {value!r}")
        image.append(dst.index(value))
    return FinMap(src.n_points, dst.n_points, tuple(image))


def map_to_doc(phi: CSMorphism) -> dict:
    return {"map": {phi.source.names[x]: phi.target.names[phi.map.image[x]]
                    for x in range(phi.source.n_points)}}


def diagram_from_doc(doc: dict) -> Diagram:
    _expect(doc, dict, "/")
    tag = _expect(doc.get("category"), str, "/category")
    if tag not in TAGS:
        raise ParseError("/category", f"unknown category {tag!r}; one of {', '.join(TAGS)}")
    objects_doc = _expect(doc.get("objects"), list, "/objects")
    objects = tuple(space_from_doc(_expect(o, dict, f"/objects/{i}"), f"/objects/{i}")
                    for i, o in enumerate(objects_doc))
    arrows = []
    for i, arrow_doc in enumerate(_expect(doc.get("arrows", []), list, "/arrows")):
        _expect(arrow_doc, dict, f"/arrows/{i}")
        name = _expect(arrow_doc.get("name", f"a{i}"), str, f"/arrows/{i}/name")
        src = _expect(arrow_doc.get("src"), int, f"/arrows/{i}/src")
        dst = _expect(arrow_doc.get("dst"), int, f"/arrows/{i}/dst")
        if not (0 <= src < len(objects) and 0 <= dst < len(objects)):
            raise ParseError(f"/arrows/{i}", "src/dst index a missing object")
        fmap = map_from_doc(arrow_doc, objects[src], objects[dst], f"/arrows/{i}")
        arrows.append(Arrow(name, src, dst, fmap))
    return Diagram(tag, objects, tuple(arrows))


def functor_result_to_doc(res: FunctorResult, opens_cap: int | None = None) -> dict:
    doc = {
        "tag": res.tag,
        "object": space_to_doc(res.object, opens_cap),
        "unit": map_to_doc(res.unit),
    }
    if res.notes:
        doc["notes"] = list(res.notes)
    return doc


def cone_cert_to_doc(cert: ConeCert, opens_cap: int | None = None) -> dict:
    return {
        "side": cert.side,
        "apex": space_to_doc(cert.apex, opens_cap),
        "legs": [map_to_doc(leg) for leg in cert.legs],
    }
