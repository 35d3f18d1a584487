"""JSON documents for actions and algebra elements.

All documents are strict: unknown keys are rejected, scalars travel as
strings ("5/6", "3") so no float ever enters the pipeline, and serialization
orders everything deterministically (carrier order for points, identity
first then encoding order for group elements).
"""

from __future__ import annotations

import json

from .actions import PartialAction, Relation, validate_partial_action
from .errors import DocumentError, SkewRelError, ValidationFailure
from .fields import FieldSpec, PRIME_FIELD, RATIONALS
from .funalg import FunAlgElement, InducedAlgebraAction
from .groups import GroupSpec
from .relalg import RelElement
from .skew import SkewElement


def _require_keys(obj: dict, required, optional=(), what="object"):
    if not isinstance(obj, dict):
        raise DocumentError("%s must be a JSON object" % what)
    missing = [k for k in required if k not in obj]
    unknown = [k for k in obj if k not in required and k not in optional]
    if missing:
        raise DocumentError("%s is missing keys %s" % (what, missing))
    if unknown:
        raise DocumentError("%s has unknown keys %s" % (what, unknown))


def parse_field(obj) -> FieldSpec:
    _require_keys(obj, ["kind"], ["modulus"], "field")
    try:
        if obj["kind"] == RATIONALS:
            return FieldSpec(RATIONALS)
        if obj["kind"] == PRIME_FIELD:
            return FieldSpec(PRIME_FIELD, obj.get("modulus"))
    except SkewRelError as exc:
        raise DocumentError(str(exc)) from exc
    raise DocumentError("unknown field kind %r" % obj["kind"])


def field_doc(field: FieldSpec) -> dict:
    if field.kind == RATIONALS:
        return {"kind": RATIONALS}
    return {"kind": PRIME_FIELD, "modulus": field.modulus}


def parse_group(obj) -> GroupSpec:
    _require_keys(obj, ["kind"], ["n", "elements", "identity", "table"], "group")
    kind = obj.get("kind")
    try:
        if kind == "cyclic":
            _require_keys(obj, ["kind", "n"], (), "cyclic group")
            return GroupSpec.cyclic(obj["n"])
        if kind == "integers":
            _require_keys(obj, ["kind"], (), "integers group")
            return GroupSpec.integers()
        if kind == "table":
            _require_keys(obj, ["kind", "elements", "identity", "table"], (), "table group")
            return GroupSpec.from_table(obj["elements"], obj["identity"], obj["table"])
    except SkewRelError as exc:
        raise DocumentError(str(exc)) from exc
    raise DocumentError("unknown group kind %r" % kind)


def group_doc(group: GroupSpec) -> dict:
    if group.kind == "cyclic":
        return {"kind": "cyclic", "n": group.order}
    if group.kind == "integers":
        return {"kind": "integers"}
    return {
        "kind": "table",
        "elements": list(group.names),
        "identity": group.names[group.identity_index],
        "table": [[group.names[v] for v in row] for row in group.table],
    }


def parse_action_document(doc) -> tuple[FieldSpec, PartialAction]:
    """Parse and validate; raises ValidationFailure with the axiom report."""
    _require_keys(doc, ["field", "group", "set", "maps"], (), "action document")
    field = parse_field(doc["field"])
    group = parse_group(doc["group"])
    if not isinstance(doc["set"], list) or not all(isinstance(x, str) for x in doc["set"]):
        raise DocumentError("set must be a list of labels")
    maps = {}
    if not isinstance(doc["maps"], list):
        raise DocumentError("maps must be a list")
    for entry in doc["maps"]:
        _require_keys(entry, ["t", "pairs"], (), "map entry")
        try:
            t = group.parse(entry["t"])
        except SkewRelError as exc:
            raise DocumentError(str(exc)) from exc
        pairs = {}
        for pair in entry["pairs"]:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise DocumentError("map pair must be [x, y]")
            if pair[0] in pairs:
                raise DocumentError("duplicate source %r in h_%s" % (pair[0], t))
            pairs[pair[0]] = pair[1]
        if t in maps:
            raise DocumentError("duplicate map entry for t=%s" % t)
        maps[t] = pairs
    try:
        action = PartialAction(group, doc["set"], maps)
    except SkewRelError as exc:
        raise DocumentError(str(exc)) from exc
    report = validate_partial_action(action)
    if not report.ok:
        failure = ValidationFailure("; ".join(report.render()))
        failure.report = report
        raise failure
    return field, action


def load_action(path) -> tuple[FieldSpec, PartialAction]:
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc)) from exc
    return parse_action_document(doc)


def action_doc(field: FieldSpec, action: PartialAction) -> dict:
    return {
        "field": field_doc(field),
        "group": group_doc(action.group),
        "set": list(action.carrier),
        "maps": [
            {"t": str(t),
             "pairs": [[x, action.maps[t][x]] for x in action.sort_labels(action.maps[t])]}
            for t in action.listed()
        ],
    }


def parse_funalg(field: FieldSpec, carrier, obj) -> FunAlgElement:
    if not isinstance(obj, dict):
        raise DocumentError("function element must be an object label -> scalar")
    coeffs = {}
    for label, text in obj.items():
        if label not in carrier:
            raise DocumentError("unknown point %r" % label)
        try:
            coeffs[label] = field.parse(text)
        except SkewRelError as exc:
            raise DocumentError(str(exc)) from exc
    return FunAlgElement(field, carrier, coeffs)


def funalg_doc(f: FunAlgElement) -> dict:
    return {x: str(f.coeffs[x]) for x in f.support()}


def parse_skew(alpha: InducedAlgebraAction, doc) -> SkewElement:
    if not isinstance(doc, list):
        raise DocumentError("skew element must be a list of terms")
    terms = {}
    for entry in doc:
        _require_keys(entry, ["t", "coeffs"], (), "skew term")
        try:
            t = alpha.action.group.parse(entry["t"])
        except SkewRelError as exc:
            raise DocumentError(str(exc)) from exc
        if t in terms:
            raise DocumentError("duplicate term for t=%s" % t)
        terms[t] = parse_funalg(alpha.field, alpha.carrier, entry["coeffs"])
    try:
        return SkewElement(alpha, terms)
    except SkewRelError as exc:
        raise DocumentError(str(exc)) from exc


def skew_doc(u: SkewElement) -> list:
    return [{"t": str(t), "coeffs": funalg_doc(a)} for t, a in u.sorted_terms()]


def parse_rel(field: FieldSpec, rel: Relation, doc) -> RelElement:
    if not isinstance(doc, list):
        raise DocumentError("relation element must be a list of entries")
    coeffs = {}
    for entry in doc:
        _require_keys(entry, ["x", "y", "value"], (), "relation entry")
        key = (entry["x"], entry["y"])
        if key not in rel:
            raise DocumentError("pair (%s, %s) is not in R" % key)
        if key in coeffs:
            raise DocumentError("duplicate entry for (%s, %s)" % key)
        try:
            coeffs[key] = field.parse(entry["value"])
        except SkewRelError as exc:
            raise DocumentError(str(exc)) from exc
    return RelElement(field, rel, coeffs)


def rel_doc(f: RelElement) -> list:
    return [{"x": x, "y": y, "value": str(f.coeffs[(x, y)])} for (x, y) in f.support()]


def load_json(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc)) from exc


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False)
