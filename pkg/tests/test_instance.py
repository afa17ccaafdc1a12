import json

import pytest
from hypothesis import given, strategies as st

from brokenset.instance import (
    PAPER_H,
    Instance,
    InstanceError,
    builtin,
    family_from_labels,
    load_instance,
    parse_instance,
    render_instance,
)


@pytest.mark.parametrize("name", ["paper_hypergraph.json", "paper_path5.json", "paper_p4.json"])
def test_fixtures_parse_and_round_trip(fixtures_dir, name):
    inst = load_instance(fixtures_dir / name)
    assert parse_instance(render_instance(inst)) == inst
    assert inst == builtin(inst.name)


def test_paper_h_fixture(fixtures_dir):
    inst = load_instance(fixtures_dir / "paper_hypergraph.json")
    h = inst.hypergraph()
    assert h.edge_labels == ("123", "345", "234", "126")
    assert inst.edge_order == ("123", "345", "234", "126")


@pytest.mark.parametrize("doc,msg", [
    ("{", "line 1"),
    ('{"edges": []}', "vertices"),
    ('{"vertices": ["a", "b"], "edges": [["a"]]}', r"edges\[0\]"),
    ('{"vertices": ["a", "b"], "edges": [["a", "z"]]}', "undeclared vertex 'z'"),
    ('{"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]}', "duplicate"),
    ('{"vertices": ["a", "b"], "edges": [["a", "b"]], "edge_order": ["x"]}', "edge_order"),
    ('{"vertices": ["a", "b"], "vertex_order": ["b"]}', "vertex_order"),
    ('{"vertices": ["a"], "pairs": [{"B": ["a"]}]}', r"pairs\[0\]"),
    ('{"vertices": ["a"], "colour": 1}', "unknown field"),
])
def test_parse_errors(doc, msg):
    with pytest.raises(InstanceError, match=msg):
        parse_instance(doc)


def test_pairs_resolution():
    h = PAPER_H.hypergraph()
    fam = family_from_labels(PAPER_H.pairs, h.edge_universe)
    assert [(p.b_set, p.b_star) for p in fam.pairs] == [(0b0011, 0b0100), (0b1100, 0b0001)]
    with pytest.raises(InstanceError, match="unknown element"):
        family_from_labels([(("999",), ("123",))], h.edge_universe)
    with pytest.raises(InstanceError, match="disjoint"):
        family_from_labels([(("123",), ("123",))], h.edge_universe)


def test_builtins():
    assert builtin("path:5").hypergraph().edge_labels == ("e1", "e2", "e3", "e4")
    assert builtin("cycle:4").hypergraph().m == 4
    assert builtin("star:3").hypergraph().n == 4
    assert builtin("complete:4").hypergraph().m == 6
    assert builtin("empty:3").hypergraph().m == 0
    with pytest.raises(InstanceError):
        builtin("petersen")


labels = st.text(alphabet="abcdefgh", min_size=1, max_size=3)


@st.composite
def instances(draw):
    vs = draw(st.lists(labels, min_size=2, max_size=6, unique=True))
    pairs = draw(st.lists(st.lists(st.sampled_from(vs), min_size=2, max_size=3, unique=True)
                          .map(frozenset), unique=True, max_size=5))
    edges = tuple(tuple(sorted(e)) for e in pairs)
    elabels = tuple(f"e{i}" for i in range(len(edges)))
    vorder = tuple(draw(st.permutations(vs))) if draw(st.booleans()) else None
    eorder = tuple(draw(st.permutations(elabels))) if draw(st.booleans()) else None
    return Instance(tuple(vs), edges, elabels, eorder, vorder,
                    ((tuple(vs[:1]), tuple(vs[1:2])),) if draw(st.booleans()) else None,
                    draw(st.one_of(st.none(), labels)))


@given(instances())
def test_round_trip(inst):
    assert parse_instance(render_instance(inst)) == inst
    json.loads(render_instance(inst))
