"""Graphviz DOT serialization. Output order is always ascending node id."""

from __future__ import annotations

import re
from collections.abc import Mapping

from .netmodel import BinaryDigraph, CoauthorGraph, WeightedDigraph

_BARE_ID = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")
_KEYWORDS = {"node", "edge", "graph", "digraph", "subgraph", "strict"}


def string(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def quote(ident: str) -> str:
    """Bare identifier when DOT allows it, quoted string otherwise."""
    if _BARE_ID.match(ident) and ident.lower() not in _KEYWORDS:
        return ident
    return string(ident)


def _doc(kind: str, name: str, body: list[str]) -> str:
    return "\n".join([f"{kind} {quote(name)} {{", *body, "}"]) + "\n"


def undirected_dot(g: CoauthorGraph, name: str = "coauthors") -> str:
    body = [f"  {quote(lbl)};" for lbl in g.labels]
    body += [f"  {quote(g.labels[i])} -- {quote(g.labels[j])};" for i, j in g.edges()]
    return _doc("graph", name, body)


def binary_digraph_dot(g: BinaryDigraph, name: str = "endorsements") -> str:
    body = [f"  {quote(lbl)};" for lbl in g.labels]
    body += [f"  {quote(g.labels[i])} -> {quote(g.labels[j])};" for i, j in g.arcs()]
    return _doc("digraph", name, body)


def weighted_dot(g: WeightedDigraph, min_weight: float = 0.0, name: str = "weighted") -> str:
    """Arcs below ``min_weight`` are left out; weights printed to 4 decimals."""
    body = [f"  {quote(lbl)};" for lbl in g.labels]
    body += [
        f"  {quote(g.labels[i])} -> {quote(g.labels[j])} [label={w:.4f}];"
        for i, j, w in g.arcs()
        if w >= min_weight
    ]
    return _doc("digraph", name, body)


def weighted_edges_dot(nodes: list[str], edges: Mapping[tuple[str, str], int | float],
                       name: str = "countries") -> str:
    body = [f"  {quote(v)};" for v in nodes]
    body += [f"  {quote(a)} -- {quote(b)} [label={edges[a, b]}];" for a, b in sorted(edges)]
    return _doc("graph", name, body)
