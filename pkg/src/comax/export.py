"""JSON, DOT and GraphML serialisation of the co-maximal graph, the hypergraph
and its incidence graph.  All writers are byte-deterministic."""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from typing import Literal

from .hypergraph import CoMaximalGraph, Hypergraph, IncidenceGraph, incidence_graph
from .lattice import Subgroup

What = Literal["hypergraph", "comax-graph", "incidence"]
Format = Literal["json", "dot", "graphml"]

WHATS = ("hypergraph", "comax-graph", "incidence")
FORMATS = ("json", "dot", "graphml")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# --- JSON ----------------------------------------------------------------------


def comax_graph_to_json(g: CoMaximalGraph) -> dict:
    return {
        "n": g.n,
        "vertices": [v.to_json() for v in g.vertices],
        "edges": [list(e) for e in g.edges()],
    }


def comax_graph_from_json(obj: dict) -> CoMaximalGraph:
    verts = tuple(Subgroup.from_json(v) for v in obj["vertices"])
    nbrs: list[set[int]] = [set() for _ in verts]
    for u, v in obj["edges"]:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return CoMaximalGraph(obj["n"], verts, tuple(frozenset(s) for s in nbrs))


def incidence_to_json(h: Hypergraph, inc: IncidenceGraph | None = None) -> dict:
    inc = incidence_graph(h) if inc is None else inc
    return {
        "n": h.n,
        "vertices": [v.to_json() for v in h.vertices],
        "hyperedges": [list(e) for e in h.hyperedges],
        "edges": [list(e) for e in inc.edges],
    }


def incidence_from_json(obj: dict) -> IncidenceGraph:
    h = Hypergraph.from_json(obj)
    inc = incidence_graph(h)
    if [list(e) for e in inc.edges] != [list(e) for e in obj["edges"]]:
        raise ValueError("incidence edges do not match the hyperedge list")
    return inc


# --- DOT -------------------------------------------------------------------------


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def comax_graph_to_dot(g: CoMaximalGraph) -> str:
    lines = [f"graph comax_D{g.n} {{", "  node [shape=circle];"]
    for i, v in enumerate(g.vertices):
        lines.append(f"  v{i} [label={_q(str(v))}];")
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def incidence_to_dot(h: Hypergraph, inc: IncidenceGraph | None = None) -> str:
    inc = incidence_graph(h) if inc is None else inc
    lines = [f"graph incidence_D{h.n} {{"]
    for i, v in enumerate(h.vertices):
        lines.append(f"  v{i} [shape=circle, label={_q(str(v))}];")
    for j in range(h.num_hyperedges):
        lines.append(f"  e{j} [shape=box, label={_q(f'e{j}')}];")
    for v, j in inc.edges:
        lines.append(f"  v{v} -- e{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- GraphML ---------------------------------------------------------------------


_GRAPHML_NS = "http://graphml.graphdrawing.org/xmlns"


def _graphml(graph_id: str, nodes: list[tuple[str, str, str]], edges: list[tuple[str, str]]) -> str:
    root = ET.Element("graphml", {"xmlns": _GRAPHML_NS})
    ET.SubElement(root, "key", {"id": "label", "for": "node", "attr.name": "label", "attr.type": "string"})
    ET.SubElement(root, "key", {"id": "kind", "for": "node", "attr.name": "kind", "attr.type": "string"})
    graph = ET.SubElement(root, "graph", {"id": graph_id, "edgedefault": "undirected"})
    for node_id, label, kind in nodes:
        node = ET.SubElement(graph, "node", {"id": node_id})
        ET.SubElement(node, "data", {"key": "label"}).text = label
        ET.SubElement(node, "data", {"key": "kind"}).text = kind
    for src, dst in edges:
        ET.SubElement(graph, "edge", {"source": src, "target": dst})
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def comax_graph_to_graphml(g: CoMaximalGraph) -> str:
    nodes = [(f"v{i}", str(v), "vertex") for i, v in enumerate(g.vertices)]
    edges = [(f"v{u}", f"v{v}") for u, v in g.edges()]
    return _graphml(f"comax_D{g.n}", nodes, edges)


def incidence_to_graphml(h: Hypergraph, inc: IncidenceGraph | None = None) -> str:
    inc = incidence_graph(h) if inc is None else inc
    nodes = [(f"v{i}", str(v), "vertex") for i, v in enumerate(h.vertices)]
    nodes += [(f"e{j}", f"e{j}", "hyperedge") for j in range(h.num_hyperedges)]
    edges = [(f"v{v}", f"e{j}") for v, j in inc.edges]
    return _graphml(f"incidence_D{h.n}", nodes, edges)


def render(what: What, fmt: Format, g: CoMaximalGraph, h: Hypergraph) -> str:
    """Serialise one of the three graph views.

    A hypergraph has no native DOT/GraphML form, so for those formats it is
    written as its incidence graph.
    """
    if what not in WHATS:
        raise ValueError(f"unknown export target {what!r}")
    if fmt not in FORMATS:
        raise ValueError(f"unknown export format {fmt!r}")
    if what == "comax-graph":
        return {"json": lambda: dumps(comax_graph_to_json(g)),
                "dot": lambda: comax_graph_to_dot(g),
                "graphml": lambda: comax_graph_to_graphml(g)}[fmt]()
    if fmt == "json":
        return dumps(h.to_json() if what == "hypergraph" else incidence_to_json(h))
    return incidence_to_dot(h) if fmt == "dot" else incidence_to_graphml(h)
