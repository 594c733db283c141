"""Edge-list documents and versioned JSON reports.

Edge-list format::

    # comment
    n 5          optional header; otherwise n = 1 + largest vertex id
    0 1
    1 2

Vertices are 0-indexed unless ``one_indexed`` is set.
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterable

import jsonschema

from .alliance import AllianceKind, check_alliance
from .bounds import BoundRecord, Profile, evaluate_all_bounds
from .errors import AllianceError, CapacityError, DomainError, InputError, ParseError
from .graph import Graph

SCHEMA_VERSION = 1


def parse_edge_list(text: str, one_indexed: bool = False) -> Graph:
    shift = 1 if one_indexed else 0
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None or edges:
                raise ParseError("header 'n <count>' must come first and only once", lineno)
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise ParseError(f"malformed header {raw.strip()!r}", lineno)
            declared = int(parts[1])
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            u, v = (int(x) - shift for x in parts)
        except ValueError:
            raise ParseError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {raw.strip()!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u + shift}", lineno)
        if declared is not None and max(u, v) >= declared:
            raise ParseError(f"vertex {max(u, v) + shift} >= declared n={declared}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u + shift} {v + shift}", lineno)
        seen.add(key)
        edges.append(key)
        max_id = max(max_id, u, v)
    n = declared if declared is not None else max_id + 1
    if n < 1:
        raise ParseError("document declares no vertices")
    return Graph(n, edges)


def format_edge_list(g: Graph, one_indexed: bool = False) -> str:
    shift = 1 if one_indexed else 0
    lines = [f"n {g.n}"] + [f"{u + shift} {v + shift}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# -- report documents -----------------------------------------------------------

_NULLABLE_INT = {"type": ["integer", "null"]}
_WITNESSED = {
    "type": ["object", "null"],
    "additionalProperties": False,
    "required": ["value", "witness"],
    "properties": {"value": {"type": "integer"},
                   "witness": {"type": "array", "items": {"type": "integer"}}},
}
_ALLIANCE = {
    "type": ["object", "null"],
    "additionalProperties": False,
    "required": ["kind", "connected", "value", "witness"],
    "properties": {"kind": {"enum": [k.value for k in AllianceKind]},
                   "connected": {"type": "boolean"},
                   "value": {"type": "integer"},
                   "witness": {"type": "array", "items": {"type": "integer"}}},
}
_NUM = {"type": ["number", "null"]}
REPORT_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "graph", "parameters", "alliances", "bounds"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "graph": {
            "type": "object",
            "additionalProperties": False,
            "required": ["n", "m", "min_degree", "max_degree", "connected", "diameter", "edges"],
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "m": {"type": "integer", "minimum": 0},
                "min_degree": {"type": "integer"},
                "max_degree": {"type": "integer"},
                "connected": {"type": "boolean"},
                "diameter": _NULLABLE_INT,
                "edges": {"type": "array",
                          "items": {"type": "array", "items": {"type": "integer"},
                                    "minItems": 2, "maxItems": 2}},
            },
        },
        "parameters": {
            "type": "object",
            "additionalProperties": False,
            "required": ["alpha", "gamma", "gamma_2", "gamma_c", "mu"],
            "properties": {
                "alpha": _WITNESSED, "gamma": _WITNESSED, "gamma_2": _WITNESSED,
                "gamma_c": _WITNESSED,
                "mu": {"type": "object", "additionalProperties": False,
                       "required": ["value", "tolerance"],
                       "properties": {"value": {"type": "number"},
                                      "tolerance": {"type": "number"}}},
            },
        },
        "alliances": {
            "type": "object",
            "additionalProperties": False,
            "properties": {key: _ALLIANCE for key in
                           ("a_o", "a_o_hat", "gamma_o", "gamma_o_hat", "gamma_co", "gamma_co_hat")},
        },
        "bounds": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "description", "sense", "hypothesis_met", "evaluable",
                             "bound_value", "exact_value", "holds", "tight", "detail"],
                "properties": {
                    "id": {"type": "string"}, "description": {"type": "string"},
                    "sense": {"enum": ["upper", "lower"]},
                    "hypothesis_met": {"type": "boolean"}, "evaluable": {"type": "boolean"},
                    "bound_value": _NUM, "exact_value": _NUM,
                    "holds": {"type": ["boolean", "null"]},
                    "tight": {"type": ["boolean", "null"]},
                    "detail": {"type": ["string", "null"]},
                },
            },
        },
    },
}

ALLIANCE_KEYS = {
    "a_o": (AllianceKind.OFFENSIVE, False),
    "a_o_hat": (AllianceKind.STRONG_OFFENSIVE, False),
    "gamma_o": (AllianceKind.GLOBAL_OFFENSIVE, False),
    "gamma_o_hat": (AllianceKind.GLOBAL_STRONG_OFFENSIVE, False),
    "gamma_co": (AllianceKind.GLOBAL_OFFENSIVE, True),
    "gamma_co_hat": (AllianceKind.GLOBAL_STRONG_OFFENSIVE, True),
}


def _witnessed(compute) -> dict | None:
    try:
        value, witness = compute()
    except (CapacityError, DomainError):
        return None
    return {"value": value, "witness": sorted(witness)}


def build_report(g: Graph, records: Iterable[BoundRecord] | None = None,
                 alliances: Iterable[str] = tuple(ALLIANCE_KEYS)) -> dict:
    """Full report: graph summary, parameters, alliance numbers, bound catalog."""
    p = Profile(g)
    connected = p.connected
    doc = {
        "schema_version": SCHEMA_VERSION,
        "graph": {"n": g.n, "m": g.m, "min_degree": p.delta, "max_degree": p.Delta,
                  "connected": connected, "diameter": p.diameter if connected else None,
                  "edges": [list(e) for e in g.edges]},
        "parameters": {
            "alpha": _witnessed(lambda: p.alpha),
            "gamma": _witnessed(lambda: p.gamma_k(1)),
            "gamma_2": _witnessed(lambda: p.gamma_k(2)),
            "gamma_c": _witnessed(lambda: p.gamma_c),
            "mu": {"value": p.spectral.mu, "tolerance": p.spectral.tolerance},
        },
        "alliances": {},
        "bounds": [],
    }
    for key in alliances:
        kind, conn = ALLIANCE_KEYS[key]
        try:
            res = p.connected_alliance(kind) if conn else p.alliance(kind)
            doc["alliances"][key] = res.to_dict()
        except (CapacityError, DomainError):
            doc["alliances"][key] = None
    if records is None:
        records = evaluate_all_bounds(g, p)
    doc["bounds"] = [r.to_dict() for r in records]
    return doc


_NUMERIC_ARRAY = re.compile(r"\[\s*((?:-?[\d.eE+-]+|null)(?:,\s*(?:-?[\d.eE+-]+|null))*)\s*\]")


def dump_report(doc: dict) -> str:
    """Indented JSON with purely numeric arrays kept on one line."""
    text = json.dumps(doc, indent=2)
    text = _NUMERIC_ARRAY.sub(lambda mt: "[" + ", ".join(
        t.strip() for t in mt.group(1).split(",")) + "]", text)
    return text + "\n"


class ReportError(AllianceError):
    """A report document failed schema validation or witness re-verification."""


def load_report(text: str) -> dict:
    """Parse, schema-check and re-verify every witness in a report document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportError(f"not JSON: {exc}") from None
    try:
        jsonschema.validate(doc, REPORT_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ReportError(f"schema violation: {exc.message}") from None
    info = doc["graph"]
    try:
        g = Graph(info["n"], [tuple(e) for e in info["edges"]])
    except InputError as exc:
        raise ReportError(f"bad graph: {exc}") from None
    if g.m != info["m"]:
        raise ReportError(f"edge count {g.m} disagrees with m={info['m']}")
    for key, entry in doc["alliances"].items():
        if entry is None:
            continue
        kind, conn = ALLIANCE_KEYS[key]
        if entry["kind"] != kind.value or entry["connected"] != conn:
            raise ReportError(f"{key}: kind/connectivity mismatch")
        if len(entry["witness"]) != entry["value"]:
            raise ReportError(f"{key}: witness size disagrees with value")
        cert = check_alliance(g, entry["witness"], kind)
        if not cert.satisfied:
            raise ReportError(f"{key}: witness fails re-verification ({cert.violator})")
        if conn and not g.mask_is_connected(g.mask(entry["witness"])):
            raise ReportError(f"{key}: witness does not induce a connected subgraph")
    return doc


def report_graph(doc: dict) -> Graph:
    info = doc["graph"]
    return Graph(info["n"], [tuple(e) for e in info["edges"]])
