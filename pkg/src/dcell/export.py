"""Edge-list, DOT and JSON encodings of a materialized topology."""
from __future__ import annotations

import json

from .core import Params, Topology, format_label, parse_label

FORMATS = ("edgelist", "dot", "json")


def _rows(topology: Topology):
    labels = topology.labels
    for x, y, lev in topology.edges().tolist():
        yield format_label(labels[x]), format_label(labels[y]), lev


def to_edgelist(topology: Topology) -> str:
    return "".join(f"{a}\t{b}\t{lev}\n" for a, b, lev in _rows(topology))


def to_dot(topology: Topology) -> str:
    p = topology.params
    name = f"D_{p.k}_{p.n}" if p else "G"
    lines = [f'graph "{name}" {{']
    lines += [f'  "{format_label(lab)}";' for lab in topology.labels]
    lines += [f'  "{a}" -- "{b}" [level={lev}];' for a, b, lev in _rows(topology)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(topology: Topology) -> str:
    p = topology.params
    doc = {
        "params": {"k": p.k, "n": p.n} if p else None,
        "t": topology.num_vertices,
        "vertices": [format_label(lab) for lab in topology.labels],
        "edges": [[a, b, lev] for a, b, lev in _rows(topology)],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def dumps(topology: Topology, fmt: str) -> str:
    try:
        writer = {"edgelist": to_edgelist, "dot": to_dot, "json": to_json}[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}") from None
    return writer(topology)


def _assemble(vertices, edges, params) -> Topology:
    labels = sorted(set(vertices) | {x for e in edges for x in e[:2]})
    return Topology.from_edges(labels, edges, params)


def read_edgelist(text: str, params: Params | None = None) -> Topology:
    edges = []
    for line in text.splitlines():
        if not line.strip():
            continue
        a, b, lev = line.split("\t")
        edges.append((parse_label(a), parse_label(b), int(lev)))
    return _assemble((), edges, params)


def read_dot(text: str, params: Params | None = None) -> Topology:
    vertices, edges = [], []
    for line in text.splitlines():
        line = line.strip()
        if "--" in line:
            ends, attr = line.split("[")
            a, b = (s.strip().strip('"') for s in ends.split("--"))
            lev = int(attr.split("=")[1].rstrip("];"))
            edges.append((parse_label(a), parse_label(b), lev))
        elif line.startswith('"') and line.endswith('";'):
            vertices.append(parse_label(line[1:-2]))
    return _assemble(vertices, edges, params)


def read_json(text: str) -> Topology:
    doc = json.loads(text)
    params = Params(**doc["params"]) if doc.get("params") else None
    vertices = [parse_label(s) for s in doc["vertices"]]
    edges = [(parse_label(a), parse_label(b), lev) for a, b, lev in doc["edges"]]
    return _assemble(vertices, edges, params)
