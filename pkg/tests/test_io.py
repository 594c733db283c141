import json

import pytest

from offalliance import generators as gen
from offalliance.errors import ParseError
from offalliance.graph import Graph
from offalliance.io import (build_report, dump_report, format_edge_list, load_report,
                            parse_edge_list)
from offalliance.io import ReportError


def test_parse_examples():
    assert parse_edge_list("0 1\n1 2") == gen.path(3)
    g = parse_edge_list("n 4\n0 1")
    assert (g.n, g.m, g.degree(2), g.degree(3)) == (4, 1, 0, 0)
    assert parse_edge_list("# triangle\n0 1  # first\n\n1 2\n0 2\n") == gen.complete(3)
    assert parse_edge_list("1 2\n2 3", one_indexed=True) == gen.path(3)


@pytest.mark.parametrize("text, line, msg", [
    ("0 0", 1, "self-loop"),
    ("0 1\n1 0", 2, "duplicate"),
    ("0 1\n1 2 3", 2, "expected"),
    ("0 x", 1, "non-integer"),
    ("0 -1", 1, "negative"),
    ("n 3\n0 3", 2, "declared"),
    ("0 1\nn 3", 2, "first"),
    ("n 0", 1, "malformed"),
])
def test_parse_errors_carry_line_numbers(text, line, msg):
    with pytest.raises(ParseError, match=msg) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_empty_document_is_rejected():
    with pytest.raises(ParseError):
        parse_edge_list("# nothing\n")


@pytest.mark.parametrize("family, params", [
    ("complete", (5,)), ("empty", (3,)), ("complete_multipartite", (2, 3, 1)),
    ("complete_bipartite", (3, 3)), ("cocktail_party", (3,)), ("star", (6,)),
    ("path", (4,)), ("cycle", (5,)), ("hypercube", (3,)), ("petersen", ()),
    ("prism", (3,)), ("join_complete_with_empty", (3, 8)),
])
@pytest.mark.parametrize("one_indexed", [False, True])
def test_round_trip(family, params, one_indexed):
    g = gen.named(family, *params)
    assert parse_edge_list(format_edge_list(g, one_indexed), one_indexed) == g


def test_isolated_vertices_survive_round_trip():
    g = Graph(5, [(0, 1)])
    assert parse_edge_list(format_edge_list(g)) == g


def test_report_round_trip_and_reverification():
    text = dump_report(build_report(gen.petersen()))
    doc = load_report(text)
    assert doc["schema_version"] == 1
    assert doc["alliances"]["gamma_o"]["value"] == 4
    assert doc["parameters"]["mu"]["value"] == pytest.approx(5)
    assert doc["graph"]["diameter"] == 2


def test_report_rejects_unknown_fields():
    doc = build_report(gen.cycle(5))
    doc["extra"] = 1
    with pytest.raises(ReportError, match="schema"):
        load_report(json.dumps(doc))
    doc = build_report(gen.cycle(5))
    doc["bounds"][0]["note"] = "x"
    with pytest.raises(ReportError, match="schema"):
        load_report(json.dumps(doc))
    doc = build_report(gen.cycle(5))
    doc["schema_version"] = 2
    with pytest.raises(ReportError):
        load_report(json.dumps(doc))


def test_report_detects_tampered_witness():
    doc = build_report(gen.cycle(5))
    doc["alliances"]["gamma_o"]["witness"] = [0, 1, 2]
    with pytest.raises(ReportError, match="re-verification"):
        load_report(json.dumps(doc))
    doc = build_report(gen.cycle(5))
    doc["alliances"]["gamma_co"]["witness"] = [0, 2, 3, 4]
    load_report(json.dumps(doc))  # 2-3-4-0 is a path, still valid
    doc["alliances"]["gamma_co"]["value"] = 3
    with pytest.raises(ReportError, match="size"):
        load_report(json.dumps(doc))


def test_report_disconnected_graph():
    doc = build_report(Graph(4, [(0, 1), (2, 3)]))
    assert doc["graph"]["diameter"] is None
    assert doc["alliances"]["gamma_co"] is None
    assert doc["parameters"]["gamma_c"] is None
    load_report(dump_report(doc))


def test_report_over_capacity(monkeypatch):
    monkeypatch.setenv("OFFALLIANCE_MAX_EXACT_N", "5")
    doc = build_report(gen.petersen())
    assert doc["alliances"]["gamma_o"] is None
    assert any(not r["evaluable"] for r in doc["bounds"])
    load_report(dump_report(doc))


def test_dump_keeps_numeric_arrays_inline():
    text = dump_report(build_report(gen.path(3)))
    assert "[0, 1]" in text
    assert json.loads(text) == build_report(gen.path(3))
