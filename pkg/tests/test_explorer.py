import json

import jsonschema
import pytest

from lscrystal.cartan import LAMBDA, CartanMatrix, Weight
from lscrystal.explorer import (
    character,
    connectivity_audit,
    explore,
    export,
    extremal_scan,
    from_json,
    orbit_injectivity_check,
    to_dot,
    weight_multiplicities,
)
from lscrystal.paths import parse_path, straight
from lscrystal.weyl import act, orbit, words

CM = CartanMatrix(3, 3)

SCHEMA = {
    "type": "object",
    "required": ["cartan", "shape", "depth", "nodes", "edges", "tallies"],
    "properties": {
        "cartan": {"type": "object", "required": ["a1", "a2"]},
        "shape": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        "depth": {"type": "integer", "minimum": 0},
        "nodes": {"type": "array", "items": {
            "type": "object", "required": ["id", "path", "wt"],
            "properties": {"id": {"type": "integer"}, "path": {"type": "string"},
                           "wt": {"type": "array", "items": {"type": "integer"}}}}},
        "edges": {"type": "array", "items": {
            "type": "object", "required": ["src", "i", "dst"],
            "properties": {"i": {"enum": [1, 2]}}}},
        "tallies": {"type": "array", "items": {"type": "object", "required": ["wt", "count"]}},
    },
}


def graph(a, depth, shape=LAMBDA):
    cm = CartanMatrix(*a)
    return explore(cm, straight(cm, shape, shape), depth)


def test_explore_examples():
    g = graph((1, 1), 6)
    assert len(g.nodes) == 3
    assert set(g.weight_tally) == {Weight(1, -1), Weight(0, 1), Weight(-1, 0)}
    assert len(graph((0, 0), 4).nodes) == 4
    assert graph((3, 3), 0).nodes == (straight(CM, LAMBDA),)


def test_weight_multiplicities_examples():
    for d in (2, 3, 5):
        assert weight_multiplicities(graph((3, 3), d))[LAMBDA] == 1
    assert weight_multiplicities(graph((3, 3), 0)) == {LAMBDA: 1}
    assert set(weight_multiplicities(graph((1, 1), 6)).values()) == {1}
    assert character(graph((1, 1), 6))[0] == (Weight(-1, 0), 1)


@pytest.mark.parametrize("a", [(1, 1), (1, 2), (2, 1), (1, 3), (0, 0)])
def test_finite_type_terminates(a):
    small, large = graph(a, 12), graph(a, 40)
    assert (small.nodes, small.edges) == (large.nodes, large.edges)
    # every straight node sits on the Weyl orbit of the shape
    orb = set(orbit(CartanMatrix(*a), LAMBDA, 12).weights)
    assert {p.dirs[0] for p in small.nodes if p.is_straight} == orb


def test_extremal_scan_examples():
    g = graph((3, 3), 4)
    scan = extremal_scan(g, 4)
    assert scan.ok and all(p.is_straight for p in scan.paths)
    straights = {p for p in g.nodes if p.is_straight}
    assert set(scan.paths) == straights
    assert {p.dirs[0] for p in straights} <= {act(CM, w, LAMBDA) for w in words(CM, 4)}
    assert extremal_scan(graph((3, 3), 0), 4).paths == [straight(CM, LAMBDA)]
    finite = extremal_scan(graph((1, 1), 6), 3)
    assert len(finite.paths) == 3 and finite.ok


def test_orbit_injectivity_examples():
    assert orbit_injectivity_check(CM, 5)
    assert orbit_injectivity_check(CM, 0)
    assert orbit_injectivity_check(CartanMatrix(0, 0), 3)
    assert orbit_injectivity_check(CartanMatrix(1, 1), 4)


def test_edge_biconditional_and_closure():
    g = graph((3, 3), 6)
    index = g.index()
    edges = set(g.edges)
    for k, p in enumerate(g.nodes):
        for i in (1, 2):
            q = p.f(i)
            if q in index:
                assert (k, i, index[q]) in edges
            r = p.e(i)
            if r in index:
                assert (index[r], i, k) in edges
    for s, i, d in g.edges:
        assert g.nodes[s].f(i) == g.nodes[d] and g.nodes[d].e(i) == g.nodes[s]
    assert connectivity_audit(g) == []


def test_nodes_sorted_by_text():
    g = graph((3, 3), 5)
    texts = [p.text() for p in g.nodes]
    assert texts == sorted(texts)


def test_export_examples():
    g0 = graph((3, 3), 0)
    doc0 = json.loads(export(g0))
    assert len(doc0["nodes"]) == 1 and doc0["edges"] == []
    g1 = graph((3, 3), 1)
    doc1 = json.loads(export(g1))
    jsonschema.validate(doc1, SCHEMA)
    assert len(doc1["nodes"]) == 3 and len(doc1["edges"]) == 2
    paths = {n["path"] for n in doc1["nodes"]}
    assert paths == {"dirs=[(1,-1)];cuts=[0,1]", "dirs=[(-1,2)];cuts=[0,1]", "dirs=[(-2,1)];cuts=[0,1]"}


@pytest.mark.parametrize("a,depth", [((3, 3), 0), ((3, 3), 6), ((1, 2), 8), ((2, 5), 5)])
def test_json_round_trip(a, depth):
    g = graph(a, depth)
    data = export(g, "json")
    jsonschema.validate(json.loads(data), SCHEMA)
    back = from_json(data.decode())
    assert back == g
    assert export(back, "json") == data


def test_dot_output():
    g = graph((3, 3), 2)
    dot = to_dot(g)
    assert dot.startswith("digraph crystal {") and dot.rstrip().endswith("}")
    assert dot.count("->") == len(g.edges)
    assert export(g, "dot") == dot.encode()
    with pytest.raises(ValueError):
        export(g, "xml")


def test_non_default_seed():
    seed = parse_path(CM, LAMBDA, "dirs=[(5,-2),(-1,2)];cuts=[0,1/2,1]")
    g = explore(CM, seed, 3)
    assert seed in g.nodes and connectivity_audit(g) == []
    with pytest.raises(ValueError):
        explore(CartanMatrix(1, 1), seed, 1)


def test_validation_audit():
    g = explore(CM, straight(CM, LAMBDA), 6, validate_every=1)
    assert g.audit_failures == []
