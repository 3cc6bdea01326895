"""Curve spec JSON grammar and the divisor string grammar.

Spec documents look like

    {"components": ["c0"],
     "singularities": [{"branches": [{"component": "c0", "point": "0"}],
                        "jet_order": 6, "conductor": 3,
                        "algebra_basis": [["1","0","0","0","0","0"], ...]}],
     "marked": [{"component": "c0", "point": "1", "tangent": "1", "weight": 2}]}

Points and scalars are decimal-free rational literals "p/q" or "inf";
algebra basis vectors list jet coefficients branch by branch, degree
ascending.  Divisor strings follow  INT "*" POINT_ID ("+"|"-" ...)  as in
"2*p0" or "3*p1-1*p0".
"""

from __future__ import annotations

import json
import re

from .curves import (
    INF,
    Branch,
    CurveModel,
    Divisor,
    MarkedPoint,
    SingularPoint,
    format_point,
    validate,
)
from .errors import ValidationError
from .rational import format_rational, parse_rational


def parse_point(text: str):
    if not isinstance(text, str):
        raise ValidationError(f"point must be a string literal, got {text!r}")
    if text.strip() == "inf":
        return INF
    return parse_rational(text)


def _require(cond, message):
    if not cond:
        raise ValidationError(message)


def curve_from_jsonable(doc) -> CurveModel:
    """Build and validate a CurveModel from a parsed spec document."""
    _require(isinstance(doc, dict), "curve spec must be a JSON object")
    for key in ("components", "singularities", "marked"):
        _require(key in doc, f"curve spec missing key {key!r}")
    comps = doc["components"]
    _require(isinstance(comps, list) and all(isinstance(c, str) for c in comps),
             "components must be a list of labels")
    sings = []
    for entry in doc["singularities"]:
        _require(isinstance(entry, dict), "singularity entries must be objects")
        branches = []
        for br in entry.get("branches", []):
            _require(isinstance(br, dict) and "component" in br and "point" in br,
                     "branch entries need component and point")
            branches.append(Branch(br["component"], parse_point(br["point"])))
        _require(isinstance(entry.get("jet_order"), int), "jet_order must be an integer")
        _require(isinstance(entry.get("conductor"), int), "conductor must be an integer")
        basis = []
        for vec in entry.get("algebra_basis", []):
            _require(isinstance(vec, list), "algebra basis vectors must be lists")
            basis.append(tuple(parse_rational(x) for x in vec))
        sings.append(SingularPoint(tuple(branches), entry["jet_order"], entry["conductor"], tuple(basis)))
    marked = []
    for entry in doc["marked"]:
        _require(isinstance(entry, dict) and "component" in entry and "point" in entry,
                 "marked entries need component and point")
        tangent = parse_rational(entry.get("tangent", "1"))
        weight = entry.get("weight")
        _require(weight is None or isinstance(weight, int), "weight must be an integer when present")
        marked.append(MarkedPoint(entry["component"], parse_point(entry["point"]), tangent, weight))
    return validate(CurveModel(tuple(comps), tuple(sings), tuple(marked)))


def curve_to_jsonable(curve: CurveModel) -> dict:
    sings = []
    for s in curve.singularities:
        sings.append({
            "branches": [{"component": b.component, "point": format_point(b.point)} for b in s.branches],
            "jet_order": s.jet_order,
            "conductor": s.conductor,
            "algebra_basis": [[format_rational(x) for x in vec] for vec in s.algebra_basis],
        })
    marked = []
    for mp in curve.marked_points:
        entry = {
            "component": mp.component,
            "point": format_point(mp.point),
            "tangent": format_rational(mp.tangent),
        }
        if mp.weight is not None:
            entry["weight"] = mp.weight
        marked.append(entry)
    return {"components": list(curve.components), "singularities": sings, "marked": marked}


def load_curve(path: str) -> CurveModel:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON in {path}: {exc}") from exc
    return curve_from_jsonable(doc)


def dump_curve(curve: CurveModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(curve_to_jsonable(curve), fh, indent=2, sort_keys=True)
        fh.write("\n")


_DIVISOR_TERM = re.compile(r"^(-?\d+)\*(p(?:\d+|inf))$")


def parse_divisor(text: str, curve: CurveModel) -> Divisor:
    """Parse INT "*" POINT_ID ("+"|"-" ...), e.g. "2*p0" or "3*p0-1*p1"."""
    _require(isinstance(text, str) and text.strip(), "empty divisor spec")
    compact = text.replace(" ", "")
    chunks = re.split(r"(?<=[0-9a-z])([+-])(?=\d)", compact)
    mapping: dict = {}
    sign = 1
    for chunk in chunks:
        if chunk == "+":
            sign = 1
            continue
        if chunk == "-":
            sign = -1
            continue
        m = _DIVISOR_TERM.match(chunk)
        _require(m is not None, f"bad divisor term {chunk!r}")
        n = sign * int(m.group(1))
        pid = f"p{curve.point_index(m.group(2))}"
        mapping[pid] = mapping.get(pid, 0) + n
        sign = 1
    return Divisor.of(mapping)
