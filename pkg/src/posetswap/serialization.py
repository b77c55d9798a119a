"""Document formats: poset JSON, DOT export, trace streams, arrangement lists.

The poset document is deliberately strict: exactly the keys ``elements``
(list of labels) and ``relations`` (list of two-element label lists, each
meaning the first strictly precedes the second). Unknown keys are
rejected so golden files stay honest. Writing emits the cover relations,
whose closure reproduces the original order, so parse(write(p)) == p.
"""

from __future__ import annotations

import json
from typing import Sequence

from .engine import Arrangement, SwapTrace, check_arrangement
from .errors import SchemaError
from .poset import ElementId, Poset


def parse_poset(text: str) -> Poset:
    """Build a poset from document text; construction errors propagate."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("document must be an object")
    unknown = sorted(set(doc) - {"elements", "relations"})
    if unknown:
        raise SchemaError(f"unknown keys {unknown}")
    for key in ("elements", "relations"):
        if key not in doc:
            raise SchemaError(f"missing key {key!r}")

    elements = doc["elements"]
    if not isinstance(elements, list):
        raise SchemaError("must be a list of labels", location="$.elements")
    for i, el in enumerate(elements):
        if not isinstance(el, str) or not el:
            raise SchemaError("label must be nonempty text", location=f"$.elements[{i}]")

    relations = doc["relations"]
    if not isinstance(relations, list):
        raise SchemaError("must be a list of [left, right] pairs", location="$.relations")
    for i, pair in enumerate(relations):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(p, str) for p in pair)
        ):
            raise SchemaError("must be a [left, right] pair of labels", location=f"$.relations[{i}]")

    return Poset(elements, [tuple(pair) for pair in relations])


def write_poset(poset: Poset) -> str:
    """Document text for a poset; relations are its cover pairs."""
    doc = {
        "elements": list(poset.elements),
        "relations": [[a, b] for a, b in poset.cover_relations()],
    }
    return json.dumps(doc, indent=2) + "\n"


def export_dot(poset: Poset) -> str:
    """DOT digraph of the order diagram: a node per element, an edge per cover."""
    lines = ["digraph poset {"]
    for el in poset.elements:
        lines.append(f"  {_dot_quote(el)};")
    for a, b in poset.cover_relations():
        lines.append(f"  {_dot_quote(a)} -> {_dot_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_trace(trace: SwapTrace, verbose: bool = False) -> str:
    """Line-delimited JSON: one record per event, then a summary line.

    With ``verbose``, each event also carries the full arrangement after
    it was applied.
    """
    lines = []
    states = trace.replay()
    for ev, after in zip(trace.events, states[1:]):
        record: dict[str, object] = {
            "step": ev.step,
            "index": ev.index,
            "left": ev.left,
            "right": ev.right,
        }
        if verbose:
            record["after"] = list(after)
        lines.append(json.dumps(record))
    lines.append(json.dumps({"terminal": list(trace.final), "count": len(trace.events)}))
    return "\n".join(lines) + "\n"


def parse_arrangement(text: str, poset: Poset) -> Arrangement:
    """Parse a comma-separated element list into an arrangement of ``poset``.

    Whitespace around commas is ignored. Labels containing commas cannot
    be written in this syntax and are rejected outright.
    """
    if any("," in el for el in poset.elements):
        raise SchemaError(
            "poset has element labels containing commas; "
            "they cannot be written as a comma-separated list",
            location="arrangement",
        )
    stripped = text.strip()
    tokens = [t.strip() for t in stripped.split(",")] if stripped else []
    return check_arrangement(poset, tokens)


def format_arrangement(arr: Sequence[ElementId]) -> str:
    """The inverse of :func:`parse_arrangement` for display."""
    return ",".join(arr)
