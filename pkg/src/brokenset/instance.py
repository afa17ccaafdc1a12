"""Instance files (JSON) and the built-in fixture set.

Schema::

    {
      "name": "paper-h",                      optional
      "vertices": ["1", "2", ...],
      "edges": [["1", "2", "3"], ...],         each with >= 2 vertex labels
      "edge_labels": ["123", ...],             optional, one per edge
      "edge_order": ["123", "345", ...],       optional permutation of edge labels
      "vertex_order": ["v1", "v4", ...],       optional permutation of vertices
      "pairs": [{"B": [...], "Bstar": [...]}]  optional, labels of the index universe
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from brokenset.engine import BrokenPair, CancellationFamily, FamilyError
from brokenset.graph import Hypergraph, default_edge_label
from brokenset.subsets import IndexUniverse


class InstanceError(ValueError):
    """Malformed instance; the message names the offending field or line."""


@dataclass(frozen=True)
class Instance:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, ...], ...]
    edge_labels: tuple[str, ...] | None = None
    edge_order: tuple[str, ...] | None = None
    vertex_order: tuple[str, ...] | None = None
    pairs: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...] | None = None
    name: str | None = None

    def hypergraph(self) -> Hypergraph:
        index = {v: i for i, v in enumerate(self.vertices)}
        return Hypergraph.from_edges(
            len(self.vertices),
            [[index[v] for v in e] for e in self.edges],
            self.vertices,
            self.edge_labels or (),
        )

    def labels_of_edges(self) -> tuple[str, ...]:
        if self.edge_labels is not None:
            return self.edge_labels
        return tuple(default_edge_label(list(e)) for e in self.edges)


def _str_list(value: Any, where: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(s, (str, int)) for s in value):
        raise InstanceError(f"{where}: expected a list of labels")
    return tuple(str(s) for s in value)


def _check_perm(order: tuple[str, ...], labels: Sequence[str], where: str) -> None:
    if sorted(order) != sorted(labels):
        raise InstanceError(f"{where}: must be a permutation of {list(labels)}")


def instance_from_dict(doc: Any) -> Instance:
    if not isinstance(doc, dict):
        raise InstanceError("top level: expected an object")
    unknown = set(doc) - {
        "name", "vertices", "edges", "edge_labels", "edge_order", "vertex_order", "pairs"
    }
    if unknown:
        raise InstanceError(f"top level: unknown field(s) {sorted(unknown)}")
    if "vertices" not in doc:
        raise InstanceError("vertices: field is required")
    vertices = _str_list(doc["vertices"], "vertices")
    if len(set(vertices)) != len(vertices):
        raise InstanceError("vertices: labels must be distinct")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise InstanceError("edges: expected a list")
    vset = set(vertices)
    edges = []
    seen = set()
    for k, e in enumerate(raw_edges):
        labels = _str_list(e, f"edges[{k}]")
        if len(set(labels)) < 2:
            raise InstanceError(f"edges[{k}]: an edge needs at least two distinct vertices")
        missing = [v for v in labels if v not in vset]
        if missing:
            raise InstanceError(f"edges[{k}]: undeclared vertex {missing[0]!r}")
        if frozenset(labels) in seen:
            raise InstanceError(f"edges[{k}]: duplicate edge")
        seen.add(frozenset(labels))
        edges.append(labels)
    edge_labels = None
    if "edge_labels" in doc:
        edge_labels = _str_list(doc["edge_labels"], "edge_labels")
        if len(edge_labels) != len(edges) or len(set(edge_labels)) != len(edges):
            raise InstanceError("edge_labels: need one distinct label per edge")
    inst = Instance(vertices, tuple(edges), edge_labels, name=doc.get("name"))
    all_edge_labels = inst.labels_of_edges()
    if len(set(all_edge_labels)) != len(all_edge_labels):
        raise InstanceError("edges: default edge labels collide; give edge_labels explicitly")
    edge_order = vertex_order = None
    if "edge_order" in doc:
        edge_order = _str_list(doc["edge_order"], "edge_order")
        _check_perm(edge_order, all_edge_labels, "edge_order")
    if "vertex_order" in doc:
        vertex_order = _str_list(doc["vertex_order"], "vertex_order")
        _check_perm(vertex_order, vertices, "vertex_order")
    pairs = None
    if "pairs" in doc:
        pairs = parse_pairs(doc["pairs"])
    return Instance(vertices, tuple(edges), edge_labels, edge_order, vertex_order, pairs,
                    doc.get("name"))


def parse_pairs(raw: Any) -> tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]:
    if not isinstance(raw, list):
        raise InstanceError("pairs: expected a list")
    out = []
    for k, item in enumerate(raw):
        if not isinstance(item, dict) or set(item) != {"B", "Bstar"}:
            raise InstanceError(f"pairs[{k}]: expected an object with keys B and Bstar")
        out.append((_str_list(item["B"], f"pairs[{k}].B"),
                    _str_list(item["Bstar"], f"pairs[{k}].Bstar")))
    return tuple(out)


def parse_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return instance_from_dict(doc)


def instance_to_dict(inst: Instance) -> dict:
    doc: dict[str, Any] = {}
    if inst.name is not None:
        doc["name"] = inst.name
    doc["vertices"] = list(inst.vertices)
    doc["edges"] = [list(e) for e in inst.edges]
    if inst.edge_labels is not None:
        doc["edge_labels"] = list(inst.edge_labels)
    if inst.edge_order is not None:
        doc["edge_order"] = list(inst.edge_order)
    if inst.vertex_order is not None:
        doc["vertex_order"] = list(inst.vertex_order)
    if inst.pairs is not None:
        doc["pairs"] = [{"B": list(b), "Bstar": list(s)} for b, s in inst.pairs]
    return doc


def render_instance(inst: Instance) -> str:
    return json.dumps(instance_to_dict(inst), indent=2) + "\n"


def load_instance(path: str | Path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(text)


def family_from_labels(
    pairs: Sequence[tuple[Sequence[str], Sequence[str]]], u: IndexUniverse
) -> CancellationFamily:
    out = []
    for k, (b, star) in enumerate(pairs):
        try:
            out.append(BrokenPair(u.mask(b).bits, u.mask(star).bits))
        except KeyError as exc:
            raise InstanceError(f"pairs[{k}]: {exc.args[0]}") from None
        except FamilyError as exc:
            raise InstanceError(f"pairs[{k}]: {exc}") from None
    return CancellationFamily(u.size, tuple(out))


def order_from_labels(labels: Sequence[str], u: IndexUniverse) -> tuple[int, ...]:
    if sorted(labels) != sorted(u.labels):
        raise InstanceError(f"order must be a permutation of {list(u.labels)}")
    return tuple(u.index(s) for s in labels)


# built-ins ---------------------------------------------------------------

def _path(n: int) -> Instance:
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    return Instance(vs, tuple((vs[i], vs[i + 1]) for i in range(n - 1)),
                    tuple(f"e{i}" for i in range(1, n)), name=f"path:{n}")


def _cycle(n: int) -> Instance:
    if n < 3:
        raise InstanceError("cycle: need at least 3 vertices")
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    return Instance(vs, tuple((vs[i], vs[(i + 1) % n]) for i in range(n)),
                    tuple(f"e{i}" for i in range(1, n + 1)), name=f"cycle:{n}")


def _star(k: int) -> Instance:
    leaves = tuple(f"l{i}" for i in range(1, k + 1))
    return Instance(("c",) + leaves, tuple(("c", s) for s in leaves),
                    tuple(f"c-{s}" for s in leaves), name=f"star:{k}")


def _complete(n: int) -> Instance:
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    return Instance(vs, tuple((vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)),
                    name=f"complete:{n}")


def _empty(n: int) -> Instance:
    return Instance(tuple(f"v{i}" for i in range(1, n + 1)), (), name=f"empty:{n}")


PAPER_H = Instance(
    vertices=("1", "2", "3", "4", "5", "6"),
    edges=(("1", "2", "3"), ("3", "4", "5"), ("2", "3", "4"), ("1", "2", "6")),
    edge_order=("123", "345", "234", "126"),
    pairs=((("123", "345"), ("234",)), (("234", "126"), ("123",))),
    name="paper-h",
)

PAPER_PATH = Instance(
    vertices=("v1", "v2", "v3", "v4", "v5"),
    edges=(("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5")),
    edge_labels=("e1", "e2", "e3", "e4"),
    edge_order=("e1", "e3", "e2", "e4"),
    pairs=((("e1", "e3"), ("e2",)), (("e2", "e4"), ("e3",))),
    name="paper-path",
)

PAPER_P4 = Instance(
    vertices=("v1", "v2", "v3", "v4"),
    edges=(("v1", "v2"), ("v2", "v3"), ("v3", "v4")),
    edge_labels=("e1", "e2", "e3"),
    vertex_order=("v1", "v4", "v3", "v2"),
    pairs=(
        (("v1", "v3"), ("v2",)),
        (("v1", "v4"), ("v2",)),
        (("v2", "v4"), ("v3",)),
    ),
    name="paper-p4",
)

_FIXED = {"paper-h": PAPER_H, "paper-path": PAPER_PATH, "paper-p4": PAPER_P4}
_SIZED = {"path": _path, "cycle": _cycle, "star": _star, "complete": _complete,
          "empty": _empty}

BUILTIN_NAMES = sorted(_FIXED) + [f"{k}:N" for k in sorted(_SIZED)]


def builtin(name: str) -> Instance:
    if name in _FIXED:
        return _FIXED[name]
    kind, _, arg = name.partition(":")
    if kind in _SIZED and arg.isdigit():
        return _SIZED[kind](int(arg))
    raise InstanceError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
