"""Binary undirected, binary directed and weighted directed co-authorship graphs.

Node ``i`` of every graph corresponds to author id ``i``; ``labels[i]`` is the
author's canonical name. Adjacency is stored sparsely as per-node sorted
neighbour tuples (binary graphs) or per-node ``{target: weight}`` dicts.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

from .corpus import Publication

ROW_SUM_TOL = 1e-9


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def _resolve_labels(n: int, labels: Sequence[str] | None) -> tuple[str, ...]:
    if labels is None:
        return _default_labels(n)
    if len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")
    return tuple(labels)


@dataclass(frozen=True)
class CoauthorGraph:
    labels: tuple[str, ...]
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> CoauthorGraph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop on node {i}")
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(_resolve_labels(n, labels), tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, i: int) -> int:
        return len(self.adj[i])

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, nb in enumerate(self.adj):
            for j in nb:
                if i < j:
                    yield i, j

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]


@dataclass(frozen=True)
class BinaryDigraph:
    labels: tuple[str, ...]
    out: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.out)

    @property
    def arc_count(self) -> int:
        return sum(len(o) for o in self.out)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for i, o in enumerate(self.out):
            for j in o:
                yield i, j

    def out_degree(self, i: int) -> int:
        return len(self.out[i])


@dataclass(frozen=True)
class CoweightAccumulator:
    """Symmetric sparse co-authorship frequencies; ``rows[i][j] == rows[j][i]``."""

    labels: tuple[str, ...]
    rows: tuple[dict[int, float], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def get(self, i: int, j: int) -> float:
        return self.rows[i].get(j, 0.0)

    def pairs(self) -> Iterator[tuple[int, int, float]]:
        for i, row in enumerate(self.rows):
            for j in sorted(row):
                if i < j:
                    yield i, j, row[j]


@dataclass(frozen=True)
class WeightedDigraph:
    labels: tuple[str, ...]
    out: tuple[dict[int, float], ...]

    @property
    def n(self) -> int:
        return len(self.out)

    @property
    def arc_count(self) -> int:
        return sum(len(o) for o in self.out)

    def weight(self, i: int, j: int) -> float:
        return self.out[i].get(j, 0.0)

    def out_sums(self) -> tuple[float, ...]:
        return tuple(sum(o.values()) for o in self.out)

    def arcs(self) -> Iterator[tuple[int, int, float]]:
        for i, o in enumerate(self.out):
            for j in sorted(o):
                yield i, j, o[j]

    def is_row_stochastic(self, tol: float = ROW_SUM_TOL) -> bool:
        return all(not o or abs(sum(o.values()) - 1.0) < tol for o in self.out)


def build_undirected(pubs: Iterable[Publication], n: int,
                     labels: Sequence[str] | None = None) -> CoauthorGraph:
    """One unit edge per author pair that shares at least one byline."""
    return CoauthorGraph.from_edges(
        n, (pair for p in pubs for pair in combinations(p.authors, 2)), labels
    )


def build_directed_binary(g: CoauthorGraph) -> BinaryDigraph:
    return BinaryDigraph(g.labels, g.adj)


def exclusivity(pub: Publication, i: int, j: int) -> float:
    """Per-article pair credit ``1 / (authors - 1)``."""
    if i == j:
        raise ValueError("exclusivity needs two distinct authors")
    if i not in pub.authors or j not in pub.authors:
        raise ValueError(f"authors {i}, {j} are not both on {pub.pub_id!r}")
    return 1.0 / (pub.n_authors - 1)


def cofrequency(pubs: Iterable[Publication], n: int | None = None,
                labels: Sequence[str] | None = None) -> CoweightAccumulator:
    """Sum exclusivity credits per author pair over all shared articles.

    Single-author articles add nothing. ``n`` defaults to one past the
    largest author id seen.
    """
    pubs = list(pubs)
    if n is None:
        n = len(labels) if labels is not None else 1 + max((a for p in pubs for a in p.authors), default=-1)
    rows: list[dict[int, float]] = [{} for _ in range(n)]
    for p in pubs:
        if p.n_authors < 2:
            continue
        g = 1.0 / (p.n_authors - 1)
        for i, j in combinations(p.authors, 2):
            rows[i][j] = rows[i].get(j, 0.0) + g
            rows[j][i] = rows[j].get(i, 0.0) + g
    return CoweightAccumulator(_resolve_labels(n, labels), tuple(rows))


def normalize_weights(c: CoweightAccumulator) -> WeightedDigraph:
    out = []
    for row in c.rows:
        total = sum(row[j] for j in sorted(row))
        if total > 0:
            out.append({j: row[j] / total for j in sorted(row)})
        else:
            out.append({})
    return WeightedDigraph(c.labels, tuple(out))


def build_weighted(pubs: Iterable[Publication], n: int | None = None,
                   labels: Sequence[str] | None = None) -> WeightedDigraph:
    return normalize_weights(cofrequency(pubs, n, labels))


def uniform_weights(g: CoauthorGraph) -> WeightedDigraph:
    """Weighted digraph that spreads each node's weight evenly, ``1/degree``."""
    return WeightedDigraph(
        g.labels, tuple({j: 1.0 / len(nb) for j in nb} for nb in g.adj)
    )
