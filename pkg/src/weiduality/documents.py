"""JSON input documents: one object per file, dispatched on ``"type"``.

Rank tables are arrays of length ``2**n`` indexed by subset mask, bit ``i``
(least significant first) standing for element ``i``.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path

import jsonschema

from .bits import mask_from_indices
from .codes import LinearCode
from .core import DemiMatroid, GroundSet, build_demimatroid
from .errors import InputError
from .gf import make_field
from .graphs import Multigraph, cycle_matroid
from .matroid import Matroid, matroid_from_bases, to_demimatroid, uniform_matroid
from .transversal import SetSystem, transversal_matroid

TYPES = ("demimatroid", "matroid-bases", "uniform", "graph", "setsystem", "code")

_nat = {"type": "integer", "minimum": 0}
_labels = {"type": "array", "items": {"type": "string"}}
_index_lists = {"type": "array", "items": {"type": "array", "items": _nat}}

SCHEMAS = {
    "demimatroid": {
        "type": "object",
        "required": ["type", "n", "s", "t"],
        "properties": {"n": _nat, "s": {"type": "array", "items": {"type": "integer"}},
                       "t": {"type": "array", "items": {"type": "integer"}}, "labels": _labels},
    },
    "matroid-bases": {
        "type": "object",
        "required": ["type", "n", "bases"],
        "properties": {"n": _nat, "bases": _index_lists, "labels": _labels, "verify": {"type": "boolean"}},
    },
    "uniform": {
        "type": "object",
        "required": ["type", "n", "k"],
        "properties": {"n": _nat, "k": _nat, "labels": _labels},
    },
    "graph": {
        "type": "object",
        "required": ["type", "vertices", "edges"],
        "properties": {"vertices": _nat,
                       "edges": {"type": "array",
                                 "items": {"type": "array", "items": _nat, "minItems": 2, "maxItems": 2}},
                       "labels": _labels},
    },
    "setsystem": {
        "type": "object",
        "required": ["type", "n", "sets"],
        "properties": {"n": _nat, "sets": _index_lists, "labels": _labels},
    },
    "code": {
        "type": "object",
        "required": ["type", "field", "generator"],
        "properties": {
            "field": {"type": "object", "required": ["p"],
                      "properties": {"p": {"type": "integer", "minimum": 2}, "m": {"type": "integer", "minimum": 1}}},
            "generator": {"type": "array", "items": {"type": "array", "items": _nat}},
            "n": _nat,
            "labels": _labels,
        },
    },
}


@dataclass
class Document:
    """A parsed input; exactly the fields relevant to ``type`` are set."""
    type: str
    n: int
    labels: tuple[str, ...] | None = None
    demimatroid: DemiMatroid | None = None
    matroid: Matroid | None = None
    graph: Multigraph | None = None
    setsystem: SetSystem | None = None
    code: LinearCode | None = None
    verify_bases: bool = False

    def to_demimatroid(self, max_n: int | None = None) -> DemiMatroid:
        if self.demimatroid is not None:
            return self.demimatroid
        if self.code is not None:
            from .codes import code_demimatroid

            D = code_demimatroid(self.code, max_n)
        else:
            D = to_demimatroid(self.matroid)
        if self.labels is not None:
            D = DemiMatroid(GroundSet(D.n, self.labels), D.s, D.t, validate=False, max_n=D.n)
        return D


def read_json(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return doc


def parse_document(doc: dict, max_n: int | None = None) -> Document:
    if not isinstance(doc, dict) or doc.get("type") not in TYPES:
        raise InputError(f"document must be an object with type in {list(TYPES)}")
    kind = doc["type"]
    try:
        jsonschema.validate(doc, SCHEMAS[kind])
    except jsonschema.ValidationError as exc:
        raise InputError(f"{kind} document: {exc.message}") from exc
    labels = tuple(doc["labels"]) if "labels" in doc else None

    if kind == "demimatroid":
        D = build_demimatroid(doc["n"], doc["s"], doc["t"], labels, max_n=max_n)
        return Document(kind, D.n, labels, demimatroid=D)
    if kind == "matroid-bases":
        n = doc["n"]
        _check_indices(doc["bases"], n, "basis")
        M = matroid_from_bases(n, [mask_from_indices(b) for b in doc["bases"]], labels=labels,
                               verify=doc.get("verify", False), max_n=max_n)
        return Document(kind, n, labels, matroid=M, verify_bases=doc.get("verify", False))
    if kind == "uniform":
        M = uniform_matroid(doc["n"], doc["k"], max_n=max_n)
        _check_labels(labels, doc["n"])
        return Document(kind, doc["n"], labels, matroid=M)
    if kind == "graph":
        G = Multigraph(doc["vertices"], tuple(tuple(e) for e in doc["edges"]))
        _check_labels(labels, G.n)
        return Document(kind, G.n, labels, graph=G, matroid=cycle_matroid(G, max_n))
    if kind == "setsystem":
        n = doc["n"]
        _check_indices(doc["sets"], n, "set")
        A = SetSystem(GroundSet(n, labels), tuple(mask_from_indices(a) for a in doc["sets"]))
        return Document(kind, n, labels, setsystem=A, matroid=transversal_matroid(A, max_n))
    field = doc["field"]
    F = make_field(field["p"], field.get("m", 1))
    rows = doc["generator"]
    n = doc.get("n", len(rows[0]) if rows else None)
    if n is None:
        raise InputError("a code with no generator rows needs an explicit n")
    C = LinearCode.from_rows(F, rows, n)
    _check_labels(labels, C.n)
    from .codes import vector_matroid

    return Document(kind, C.n, labels, code=C, matroid=vector_matroid(C, max_n))


def load_document(path: str, max_n: int | None = None) -> Document:
    return parse_document(read_json(path), max_n)


def _check_indices(lists, n: int, what: str) -> None:
    for xs in lists:
        for x in xs:
            if x >= n:
                raise InputError(f"{what} mentions element {x}, outside 0..{n - 1}")


def _check_labels(labels, n: int) -> None:
    if labels is not None:
        GroundSet(n, labels)


def demimatroid_document(D: DemiMatroid) -> dict:
    doc = {"type": "demimatroid", "n": D.n, "s": [int(v) for v in D.s], "t": [int(v) for v in D.t]}
    if D.ground.labels is not None:
        doc["labels"] = list(D.ground.labels)
    return doc
