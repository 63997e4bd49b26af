"""Byte-stable DOT / JSON / CSV serialisation of graphs."""

from __future__ import annotations

import csv
import io
import json

from .graphs import Graph

GRAPH_FORMATS = ("dot", "json", "csv", "text")


def _edge_rows(g: Graph):
    for u, v in sorted(g.edges):
        yield u, v, g.weight(u, v)


def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v} [label={_dot_id(g.label(v))}];")
    for u, v, w in _edge_rows(g):
        attr = f" [weight={w}]" if g.is_weighted else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> str:
    doc = {
        "weighted": g.is_weighted,
        "nodes": [g.label(v) for v in range(g.n)],
        "edges": [[u, v, w] for u, v, w in _edge_rows(g)],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def to_csv(g: Graph) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["u", "v", "w"])
    writer.writerows(_edge_rows(g))
    return buf.getvalue()


def to_text(g: Graph) -> str:
    lines = [f"vertices {g.n}", f"edges {len(g.edges)}"]
    for v in range(g.n):
        nbrs = sorted(g.adjacency[v])
        if g.is_weighted:
            body = " ".join(f"{g.label(u)}({g.weight(u, v)})" for u in nbrs)
        else:
            body = " ".join(g.label(u) for u in nbrs)
        lines.append(f"{g.label(v)}: {body}".rstrip())
    return "\n".join(lines) + "\n"


def export_graph(g: Graph, fmt: str) -> str:
    writers = {"dot": to_dot, "json": to_json, "csv": to_csv, "text": to_text}
    if fmt not in writers:
        raise ValueError(f"unsupported graph format {fmt!r}")
    return writers[fmt](g)


def graph_from_json(text: str) -> Graph:
    doc = json.loads(text)
    edges = [(u, v) for u, v, _ in doc["edges"]]
    weights = {(u, v): w for u, v, w in doc["edges"]}
    weighted = doc.get("weighted", any(w != 1 for w in weights.values()))
    return Graph(len(doc["nodes"]), frozenset(edges), weights if weighted else None, doc["nodes"])
