"""Components, small-world statistics and degree distribution of a co-authorship graph."""

from __future__ import annotations

import random
from bisect import bisect_right
from collections import Counter, deque
from dataclasses import dataclass

from .netmodel import CoauthorGraph

DEFAULT_BASELINE_SEEDS = 20


class GraphError(ValueError):
    """Graph does not satisfy a metric's precondition."""


@dataclass(frozen=True)
class ComponentLabeling:
    """``component[v]`` is the component id of node v.

    Ids are ordered by descending size (ties: smallest member first), so
    component 0 is always the largest.
    """

    component: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sizes)

    def members(self, cid: int) -> list[int]:
        if not 0 <= cid < len(self.sizes):
            raise KeyError(f"unknown component id {cid}")
        return [v for v, c in enumerate(self.component) if c == cid]


def bfs_distances(g: CoauthorGraph, source: int) -> list[int]:
    """Hop distance from ``source``; -1 for unreachable nodes."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in g.adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


def components(g: CoauthorGraph) -> ComponentLabeling:
    raw = [-1] * g.n
    groups: list[list[int]] = []
    for s in range(g.n):
        if raw[s] >= 0:
            continue
        raw[s] = len(groups)
        group = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if raw[w] < 0:
                    raw[w] = raw[s]
                    group.append(w)
                    queue.append(w)
        groups.append(group)
    # groups are discovered in order of smallest member, so a stable sort keeps that tie-break
    order = sorted(range(len(groups)), key=lambda k: -len(groups[k]))
    relabel = {old: new for new, old in enumerate(order)}
    return ComponentLabeling(
        tuple(relabel[c] for c in raw), tuple(len(groups[k]) for k in order)
    )


def is_connected(g: CoauthorGraph) -> bool:
    return g.n > 0 and components(g).count == 1


def extract_component(g: CoauthorGraph, labeling: ComponentLabeling,
                      cid: int) -> tuple[CoauthorGraph, tuple[int, ...]]:
    """Induced subgraph on one component plus the back-map ``new id -> old id``."""
    members = labeling.members(cid)
    fwd = {old: new for new, old in enumerate(members)}
    adj = tuple(tuple(fwd[w] for w in g.adj[old]) for old in members)
    return CoauthorGraph(tuple(g.labels[v] for v in members), adj), tuple(members)


def largest_component(g: CoauthorGraph) -> tuple[CoauthorGraph, tuple[int, ...]]:
    if g.n == 0:
        raise GraphError("empty graph has no components")
    return extract_component(g, components(g), 0)


def local_clustering(g: CoauthorGraph, v: int) -> float:
    nb = g.adj[v]
    k = len(nb)
    if k < 2:
        return 0.0
    nbset = set(nb)
    links = sum(1 for a in nb for b in g.adj[a] if b in nbset) // 2
    return links / (k * (k - 1) / 2)


def clustering_coefficient(g: CoauthorGraph) -> float:
    """Mean local clustering; nodes of degree < 2 count as 0."""
    if g.n < 3:
        raise GraphError(f"clustering coefficient needs at least 3 nodes, got {g.n}")
    return sum(local_clustering(g, v) for v in range(g.n)) / g.n


def characteristic_path_length(g: CoauthorGraph) -> float:
    """Mean geodesic distance over all unordered pairs of a connected graph."""
    if g.n < 2:
        raise GraphError(f"path length needs at least 2 nodes, got {g.n}")
    total = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            raise GraphError("graph is disconnected; pass a single component")
        total += sum(dist)
    # each unordered pair was counted from both ends
    return total / (g.n * (g.n - 1))


def _pair_offsets(n: int) -> list[int]:
    # offsets[i] = rank of pair (i, i+1) in the row-major listing of i < j pairs
    return [i * (2 * n - i - 1) // 2 for i in range(n)]


def sample_gnm(n: int, m: int, rng: random.Random) -> CoauthorGraph:
    """Uniform simple graph with exactly ``n`` nodes and ``m`` distinct edges."""
    total = n * (n - 1) // 2
    if m > total:
        raise GraphError(f"{m} edges do not fit in a simple graph on {n} nodes")
    offsets = _pair_offsets(n)
    edges = []
    for k in sorted(rng.sample(range(total), m)):
        i = bisect_right(offsets, k) - 1
        edges.append((i, i + 1 + k - offsets[i]))
    return CoauthorGraph.from_edges(n, edges)


@dataclass(frozen=True)
class Baseline:
    clustering: float
    path_length: float
    seeds: int


def random_baseline(n: int, m: int, seeds: int = DEFAULT_BASELINE_SEEDS,
                    rng_seed: int = 0) -> Baseline:
    """Mean CC and path length over the largest components of G(n, m) samples."""
    if m > n * (n - 1) // 2:
        raise GraphError(f"{m} edges do not fit in a simple graph on {n} nodes")
    if n < 3 or m < n - 1:
        raise GraphError(f"baseline needs n >= 3 and m >= n - 1, got n={n}, m={m}")
    if seeds < 1:
        raise ValueError("seeds must be >= 1")
    rng = random.Random(rng_seed)
    ccs, lens = [], []
    for _ in range(seeds):
        sub, _ = largest_component(sample_gnm(n, m, rng))
        ccs.append(clustering_coefficient(sub))
        lens.append(characteristic_path_length(sub))
    return Baseline(sum(ccs) / seeds, sum(lens) / seeds, seeds)


@dataclass(frozen=True)
class SmallWorldReport:
    clustering: float
    path_length: float
    baseline_clustering: float
    baseline_path_length: float
    seeds: int


def small_world(g: CoauthorGraph, seeds: int = DEFAULT_BASELINE_SEEDS,
                rng_seed: int = 0) -> SmallWorldReport:
    if not is_connected(g):
        raise GraphError("small-world analysis needs a connected graph")
    base = random_baseline(g.n, g.m, seeds, rng_seed)
    return SmallWorldReport(
        clustering_coefficient(g), characteristic_path_length(g),
        base.clustering, base.path_length, seeds,
    )


def degree_histogram(g: CoauthorGraph) -> dict[int, int]:
    return dict(sorted(Counter(len(a) for a in g.adj).items()))
