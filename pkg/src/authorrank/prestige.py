"""PageRank on the binary directed graph and AuthorRank on the weighted one.

Both solve ``R(i) = (1 - d) + d * sum_j R(j) * t(j, i)`` by synchronous
power iteration from ``R = 1``. PageRank uses ``t(j, i) = 1 / outdeg(j)``;
AuthorRank uses the normalized co-authorship weight ``w(j, i)``. Nodes
without out-arcs pass nothing on; there is no teleport term for them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .centrality import RankVector
from .netmodel import BinaryDigraph, WeightedDigraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankConfig:
    damping: float = 0.85
    tol: float = 1e-10  # max absolute per-node change between iterations
    max_iter: int = 1000

    def __post_init__(self):
        if not 0 < self.damping < 1:
            raise ValueError(f"damping must lie in (0, 1), got {self.damping}")
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")


def power_iterate(n: int, src: np.ndarray, dst: np.ndarray, w: np.ndarray,
                  cfg: RankConfig) -> tuple[np.ndarray, bool, list[float]]:
    """Jacobi iteration over arcs ``src -> dst`` carrying fraction ``w``.

    Returns the score vector, whether ``tol`` was reached, and the max
    absolute change recorded at every iteration.
    """
    d = cfg.damping
    scores = np.ones(n)
    deltas: list[float] = []
    for _ in range(cfg.max_iter):
        new = (1.0 - d) + d * np.bincount(dst, weights=scores[src] * w, minlength=n)
        delta = float(np.max(np.abs(new - scores))) if n else 0.0
        deltas.append(delta)
        scores = new
        if delta < cfg.tol:
            return scores, True, deltas
    logger.warning("power iteration stopped at max_iter=%d, last change %.3g", cfg.max_iter, deltas[-1])
    return scores, False, deltas


def _result(label: str, labels, scores, converged, deltas) -> RankVector:
    return RankVector(label, dict(zip(labels, scores.tolist())), converged, len(deltas), tuple(deltas))


def pagerank(g: BinaryDigraph, cfg: RankConfig = RankConfig()) -> RankVector:
    src = np.fromiter((i for i, _ in g.arcs()), dtype=np.int64, count=g.arc_count)
    dst = np.fromiter((j for _, j in g.arcs()), dtype=np.int64, count=g.arc_count)
    outdeg = np.array([len(o) for o in g.out], dtype=float)
    w = 1.0 / outdeg[src] if len(src) else np.zeros(0)
    scores, ok, deltas = power_iterate(g.n, src, dst, w, cfg)
    return _result("pagerank", g.labels, scores, ok, deltas)


def authorrank(g: WeightedDigraph, cfg: RankConfig = RankConfig()) -> RankVector:
    arcs = list(g.arcs())
    src = np.array([a[0] for a in arcs], dtype=np.int64)
    dst = np.array([a[1] for a in arcs], dtype=np.int64)
    w = np.array([a[2] for a in arcs], dtype=float)
    scores, ok, deltas = power_iterate(g.n, src, dst, w, cfg)
    return _result("authorrank", g.labels, scores, ok, deltas)


def deltas_monotone(deltas, after: int = 5, rtol: float = 1e-12) -> bool:
    """Diagnostic: per-iteration changes never grow after the first ``after`` steps."""
    tail = deltas[after:]
    return all(b <= a * (1 + rtol) + 1e-300 for a, b in zip(tail, tail[1:]))
