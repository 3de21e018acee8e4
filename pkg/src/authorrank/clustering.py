"""Average-linkage agglomerative clustering of authors by their weighted-graph rows."""

from __future__ import annotations

import csv
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .dot import quote, string
from .netmodel import WeightedDigraph


@dataclass(frozen=True)
class AuthorVectorSpace:
    """Row ``k`` is author ``labels[k]``'s weight vector over the same authors.

    Authors are held in ascending name order so results do not depend on
    input ordering. ``nodes[k]`` is the graph node id behind row ``k``.
    """

    labels: tuple[str, ...]
    nodes: tuple[int, ...]
    rows: tuple[dict[int, float], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def dense(self) -> np.ndarray:
        mat = np.zeros((self.size, self.size))
        for k, row in enumerate(self.rows):
            for j, w in row.items():
                mat[k, j] = w
        return mat


def author_vectors(g: WeightedDigraph, component: Iterable[int],
                   self_weight: float = 0.0) -> AuthorVectorSpace:
    """Restrict each component author's weight row to the component.

    ``self_weight`` fills the author's own coordinate. At 0 (the default)
    cosine similarity only sees shared co-authors, so two authors who only
    publish with each other look orthogonal; a positive value also makes
    direct collaborators similar.
    """
    if self_weight < 0:
        raise ValueError("self_weight must be non-negative")
    nodes = sorted(set(component), key=lambda v: (g.labels[v], v))
    pos = {v: k for k, v in enumerate(nodes)}
    rows = []
    for v in nodes:
        row = {}
        for j, w in g.out[v].items():
            if j not in pos:
                raise ValueError(f"node {v} has an arc leaving the component")
            row[pos[j]] = w
        if self_weight > 0:
            row[pos[v]] = self_weight
        rows.append(row)
    return AuthorVectorSpace(tuple(g.labels[v] for v in nodes), tuple(nodes), tuple(rows))


def pair_similarity(u: Sequence[float], v: Sequence[float]) -> float:
    """Cosine similarity; 0 when either vector is zero."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    dot = math.fsum(a * b for a, b in zip(u, v))
    nu = math.sqrt(math.fsum(a * a for a in u))
    nv = math.sqrt(math.fsum(b * b for b in v))
    if nu == 0 or nv == 0:
        return 0.0
    return min(1.0, max(0.0, dot / (nu * nv)))


def similarity_matrix(space: AuthorVectorSpace) -> np.ndarray:
    mat = space.dense()
    norms = np.linalg.norm(mat, axis=1)
    safe = np.where(norms > 0, norms, 1.0)
    unit = mat / safe[:, None]
    sim = np.clip(unit @ unit.T, 0.0, 1.0)
    sim[norms == 0, :] = 0.0
    sim[:, norms == 0] = 0.0
    return sim


@dataclass(frozen=True)
class Merge:
    step: int
    a: int
    b: int
    level: float
    new_id: int
    size: int


@dataclass(frozen=True)
class Dendrogram:
    """Leaves are ids ``0..n-1`` (rows of the vector space); merge ``s`` creates id ``n + s``."""

    labels: tuple[str, ...]
    merges: tuple[Merge, ...]

    @property
    def n_leaves(self) -> int:
        return len(self.labels)

    def leaves_of(self, cid: int) -> list[int]:
        n = self.n_leaves
        if cid < n:
            return [cid]
        m = self.merges[cid - n]
        return sorted(self.leaves_of(m.a) + self.leaves_of(m.b))

    def cut(self, level: float) -> list[list[str]]:
        """Clusters formed by every merge at similarity >= ``level``."""
        parent = list(range(self.n_leaves + len(self.merges)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for m in self.merges:
            if m.level >= level:
                parent[find(m.a)] = m.new_id
                parent[find(m.b)] = m.new_id
        groups: dict[int, list[str]] = {}
        for leaf in range(self.n_leaves):
            groups.setdefault(find(leaf), []).append(self.labels[leaf])
        return sorted(groups.values())


def agglomerate(space: AuthorVectorSpace) -> Dendrogram:
    """Repeatedly merge the pair of clusters with the highest mean pairwise similarity.

    Ties go to the lexicographically smallest ``(cluster_a, cluster_b)`` id pair.
    Cluster-to-cluster similarity is updated with the Lance-Williams rule for
    average linkage.
    """
    n = space.size
    if n < 2:
        raise ValueError(f"agglomeration needs at least 2 authors, got {n}")
    sim = similarity_matrix(space)
    np.fill_diagonal(sim, -np.inf)
    slot_id = list(range(n))  # cluster id currently living in each matrix slot
    sizes = np.ones(n)
    active = np.ones(n, dtype=bool)
    merges = []
    for step in range(n - 1):
        best = sim.max()
        cand = np.argwhere(sim == best)
        a_slot, b_slot = min(
            ((int(i), int(j)) for i, j in cand if i < j),
            key=lambda ij: tuple(sorted((slot_id[ij[0]], slot_id[ij[1]]))),
        )
        ca, cb = sorted((slot_id[a_slot], slot_id[b_slot]))
        new_id = n + step
        na, nb = sizes[a_slot], sizes[b_slot]
        merges.append(Merge(step, ca, cb, float(best), new_id, int(na + nb)))

        row = (na * sim[a_slot] + nb * sim[b_slot]) / (na + nb)
        sim[a_slot, :] = row
        sim[:, a_slot] = row
        sim[a_slot, a_slot] = -np.inf
        sim[b_slot, :] = -np.inf
        sim[:, b_slot] = -np.inf
        sim[~active, a_slot] = -np.inf
        sim[a_slot, ~active] = -np.inf
        active[b_slot] = False
        sizes[a_slot] = na + nb
        slot_id[a_slot] = new_id
    return Dendrogram(space.labels, tuple(merges))


def write_dendrogram_csv(dg: Dendrogram, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["step", "cluster_a", "cluster_b", "level", "size"])
    for m in dg.merges:
        w.writerow([m.step, m.a, m.b, f"{m.level:.6f}", m.size])


def write_leaves_csv(dg: Dendrogram, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["cluster_id", "author"])
    for k, name in enumerate(dg.labels):
        w.writerow([k, name])


def dendrogram_dot(dg: Dendrogram, name: str = "dendrogram") -> str:
    """Tree with one node per cluster; internal nodes labelled by merge level."""
    lines = [f"digraph {quote(name)} {{", "  node [shape=box];"]
    for k, lbl in enumerate(dg.labels):
        lines.append(f"  c{k} [label={string(lbl)}];")
    for m in dg.merges:
        lines.append(f'  c{m.new_id} [shape=point, xlabel="{m.level:.4f}"];')
        lines.append(f"  c{m.new_id} -> c{m.a};")
        lines.append(f"  c{m.new_id} -> c{m.b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
