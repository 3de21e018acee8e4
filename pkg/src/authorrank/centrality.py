"""Degree, closeness and betweenness centrality on the binary undirected graph."""

from __future__ import annotations

import csv
from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass, field

from .netmodel import CoauthorGraph
from .topology import GraphError, bfs_distances


@dataclass(frozen=True)
class RankVector:
    """Scores keyed by author name.

    ``ranking()`` orders by descending score, ties by ascending name.
    The iteration fields are only meaningful for power-iteration metrics.
    """

    label: str
    scores: Mapping[str, float]
    converged: bool = True
    iterations: int = 0
    deltas: tuple[float, ...] = field(default=(), repr=False)

    def __len__(self) -> int:
        return len(self.scores)

    def __getitem__(self, name: str) -> float:
        return self.scores[name]

    def ranking(self) -> list[tuple[str, float]]:
        return sorted(self.scores.items(), key=lambda kv: (-kv[1], kv[0]))

    def top(self, k: int) -> list[str]:
        return [name for name, _ in self.ranking()[:k]]

    def normalized(self) -> RankVector:
        total = sum(self.scores.values())
        if total == 0:
            return self
        return RankVector(self.label, {k: v / total for k, v in self.scores.items()},
                          self.converged, self.iterations, self.deltas)


def write_ranking_csv(rv: RankVector, out, top: int | None = None) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["rank", "author", "score"])
    rows = rv.ranking()
    if top is not None:
        rows = rows[:top]
    for r, (name, score) in enumerate(rows, start=1):
        w.writerow([r, name, f"{score:.6f}"])


def _vector(label: str, g: CoauthorGraph, values) -> RankVector:
    return RankVector(label, dict(zip(g.labels, (float(v) for v in values))))


def degree_centrality(g: CoauthorGraph) -> RankVector:
    return _vector("degree", g, (len(a) for a in g.adj))


def closeness_centrality(g: CoauthorGraph) -> RankVector:
    """``(n - 1) / sum of distances`` per node; needs a connected graph."""
    if g.n == 0:
        return RankVector("closeness", {})
    scores = []
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            raise GraphError("closeness needs a connected graph; pass a single component")
        total = sum(dist)
        scores.append((g.n - 1) / total if total else 0.0)
    return _vector("closeness", g, scores)


def betweenness_centrality(g: CoauthorGraph) -> RankVector:
    """Brandes accumulation; each unordered pair counted once, fractional credit."""
    n = g.n
    cb = [0.0] * n
    for s in range(n):
        stack = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s] = 1
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in g.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                cb[w] += delta[w]
    return _vector("betweenness", g, (c / 2.0 for c in cb))
