"""Metric comparison: Spearman correlation, committee overlap, country collaboration."""

from __future__ import annotations

import csv
import math
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .centrality import RankVector
from .corpus import UNKNOWN_COUNTRY, AuthorTable, Publication, normalize_name


def average_ranks(values: Sequence[float]) -> list[float]:
    """1-based ranks with tied values sharing the mean of their positions."""
    order = sorted(range(len(values)), key=lambda k: values[k])
    ranks = [0.0] * len(values)
    start = 0
    while start < len(order):
        stop = start
        while stop + 1 < len(order) and values[order[stop + 1]] == values[order[start]]:
            stop += 1
        mean = (start + stop) / 2 + 1
        for k in order[start:stop + 1]:
            ranks[k] = mean
        start = stop + 1
    return ranks


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    n = len(x)
    mx = math.fsum(x) / n
    my = math.fsum(y) / n
    dx = [a - mx for a in x]
    dy = [b - my for b in y]
    sxx = math.fsum(a * a for a in dx)
    syy = math.fsum(b * b for b in dy)
    if sxx == 0 or syy == 0:
        return math.nan
    r = math.fsum(a * b for a, b in zip(dx, dy)) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def spearman(a: RankVector, b: RankVector) -> float:
    """Rank correlation over the authors both vectors score.

    NaN when either side is constant over the shared authors.
    """
    shared = sorted(set(a.scores) & set(b.scores))
    if len(shared) < 2:
        raise ValueError(f"spearman needs >= 2 shared authors, got {len(shared)}")
    ra = average_ranks([a.scores[k] for k in shared])
    rb = average_ranks([b.scores[k] for k in shared])
    return pearson(ra, rb)


def read_roster(stream: Iterable[str]) -> list[str]:
    """One name per line; blank lines and ``#`` comments are skipped."""
    names = []
    for line in stream:
        line = line.split("#", 1)[0]
        name = normalize_name(line)
        if name:
            names.append(name)
    return names


def _match_key(name: str) -> str:
    return normalize_name(name).casefold()


@dataclass(frozen=True)
class ValidationCurve:
    label: str
    matches: tuple[int, ...]  # matches[k-1] = rostered authors among the top k
    unmatched_roster: tuple[str, ...] = field(default=())

    def at(self, k: int) -> int:
        return self.matches[k - 1]


def committee_overlap(r: RankVector, roster: Sequence[str], K: int) -> ValidationCurve:
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if not roster:
        raise ValueError("committee roster is empty")
    members = {_match_key(n) for n in roster}
    ranked = [_match_key(n) for n in r.top(K)]
    curve, hits = [], 0
    for k in range(K):
        if k < len(ranked) and ranked[k] in members:
            hits += 1
        curve.append(hits)
    known = {_match_key(n) for n in r.scores}
    unmatched = tuple(sorted({normalize_name(n) for n in roster if _match_key(n) not in known}))
    return ValidationCurve(r.label, tuple(curve), unmatched)


def write_curves_csv(curves: Iterable[ValidationCurve], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["k", "matches", "metric"])
    for c in curves:
        for k, hits in enumerate(c.matches, start=1):
            w.writerow([k, hits, c.label])


@dataclass(frozen=True)
class CountryGraph:
    edges: dict[tuple[str, str], int]  # (country_a, country_b), a < b
    authors: dict[str, int]  # country -> authors
    same_country_pairs: int
    skipped_pairs: int  # at least one side without a known country

    @property
    def cross_country_pairs(self) -> int:
        return sum(self.edges.values())

    @property
    def cross_share(self) -> float:
        known = self.cross_country_pairs + self.same_country_pairs
        return self.cross_country_pairs / known if known else 0.0

    @property
    def countries(self) -> list[str]:
        nodes = set(self.authors)
        for a, b in self.edges:
            nodes.update((a, b))
        return sorted(nodes)


def country_network(pubs: Iterable[Publication], table: AuthorTable) -> CountryGraph:
    edges: Counter[tuple[str, str]] = Counter()
    same = skipped = 0
    for p in pubs:
        for i, j in combinations(p.authors, 2):
            ci, cj = table.country_of(i), table.country_of(j)
            if UNKNOWN_COUNTRY in (ci, cj):
                skipped += 1
            elif ci == cj:
                same += 1
            else:
                edges[min(ci, cj), max(ci, cj)] += 1
    authors = Counter(table.country.values())
    return CountryGraph(dict(sorted(edges.items())), dict(sorted(authors.items())), same, skipped)


def write_country_csv(cg: CountryGraph, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["country_a", "country_b", "pairs"])
    for (a, b), c in cg.edges.items():
        w.writerow([a, b, c])


def write_spearman_csv(labels: Sequence[str], vectors: Sequence[RankVector], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["metric", *labels])
    for la, va in zip(labels, vectors):
        w.writerow([la, *(f"{spearman(va, vb):.6f}" for vb in vectors)])
