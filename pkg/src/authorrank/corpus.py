"""Bibliographic input: JSON-lines parsing, author interning and corpus statistics."""

from __future__ import annotations

import csv
import json
import logging
import re
import unicodedata
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import IO

logger = logging.getLogger(__name__)

# Country code treated as domestic when counting international authors.
HOME_COUNTRY = "us"
UNKNOWN_COUNTRY = "unknown"

_WS_RUN = re.compile(r"\s+")


class CorpusError(ValueError):
    """Malformed bibliographic input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def normalize_name(raw: str) -> str:
    """Canonical orthographic form: NFC, trimmed, inner whitespace collapsed."""
    return _WS_RUN.sub(" ", unicodedata.normalize("NFC", raw)).strip()


@dataclass(frozen=True)
class Publication:
    pub_id: str
    year: int
    venue: str
    authors: tuple[int, ...]

    def __post_init__(self):
        if not self.authors:
            raise ValueError(f"publication {self.pub_id!r} has no authors")
        if len(set(self.authors)) != len(self.authors):
            raise ValueError(f"publication {self.pub_id!r} repeats an author")
        if self.year <= 0:
            raise ValueError(f"publication {self.pub_id!r} has non-positive year {self.year}")

    @property
    def n_authors(self) -> int:
        return len(self.authors)


@dataclass
class AuthorTable:
    """Bidirectional canonical-name <-> dense id map with optional metadata."""

    names: list[str] = field(default_factory=list)
    index: dict[str, int] = field(default_factory=dict)
    country: dict[int, str] = field(default_factory=dict)
    affiliation: dict[int, str] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return normalize_name(name) in self.index

    def intern(self, raw: str) -> int:
        name = normalize_name(raw)
        if not name:
            raise ValueError("empty author name")
        aid = self.index.get(name)
        if aid is None:
            aid = len(self.names)
            self.names.append(name)
            self.index[name] = aid
        return aid

    def id_of(self, name: str) -> int:
        return self.index[normalize_name(name)]

    def name_of(self, aid: int) -> str:
        return self.names[aid]

    def country_of(self, aid: int) -> str:
        return self.country.get(aid, UNKNOWN_COUNTRY)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.names)


@dataclass
class Corpus:
    publications: list[Publication]
    authors: AuthorTable
    duplicate_authors: int = 0  # repeated names dropped from a byline
    rejected: int = 0  # records without any usable author


def _lines(stream: IO[bytes] | IO[str] | Iterable[str | bytes]):
    for lineno, line in enumerate(stream, start=1):
        if isinstance(line, bytes):
            try:
                line = line.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise CorpusError(f"invalid UTF-8 ({exc.reason})", lineno) from None
        yield lineno, line


def parse_publications(stream, table: AuthorTable | None = None) -> Corpus:
    """Read one publication per JSON line.

    Records are ``{"id": str, "year": int, "venue": str, "authors": [str, ...]}``.
    Blank lines are ignored. A record whose author list is empty after
    normalization is rejected and counted, not raised.
    """
    table = AuthorTable() if table is None else table
    pubs: list[Publication] = []
    seen_ids: set[str] = set()
    duplicates = rejected = 0

    for lineno, line in _lines(stream):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"malformed JSON ({exc.msg})", lineno) from None
        if not isinstance(rec, dict):
            raise CorpusError("record is not a JSON object", lineno)

        pub_id = rec.get("id")
        year = rec.get("year")
        venue = rec.get("venue", "")
        raw_authors = rec.get("authors")
        if not isinstance(pub_id, str) or not pub_id:
            raise CorpusError("missing or non-string 'id'", lineno)
        if isinstance(year, bool) or not isinstance(year, int) or year <= 0:
            raise CorpusError(f"'year' must be a positive integer, got {year!r}", lineno)
        if not isinstance(venue, str):
            raise CorpusError("'venue' must be a string", lineno)
        if not isinstance(raw_authors, list) or not all(isinstance(a, str) for a in raw_authors):
            raise CorpusError("'authors' must be a list of strings", lineno)
        if pub_id in seen_ids:
            raise CorpusError(f"duplicate publication id {pub_id!r}", lineno)
        seen_ids.add(pub_id)

        names: list[str] = []
        for raw in raw_authors:
            name = normalize_name(raw)
            if not name:
                continue
            if name in names:
                duplicates += 1
                logger.warning("line %d: duplicate author %r dropped", lineno, name)
                continue
            names.append(name)
        if not names:
            rejected += 1
            logger.warning("line %d: record %r has no authors, skipped", lineno, pub_id)
            continue

        authors = tuple(table.intern(n) for n in names)
        pubs.append(Publication(pub_id, year, venue, authors))

    return Corpus(pubs, table, duplicates, rejected)


def load_affiliations(stream, table: AuthorTable) -> int:
    """Attach country/affiliation metadata to interned authors.

    Lines are ``{"author": str, "country": str, "affiliation": str}``.
    Returns the number of lines naming authors absent from ``table``.
    """
    unmatched = 0
    for lineno, line in _lines(stream):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"malformed JSON ({exc.msg})", lineno) from None
        if not isinstance(rec, dict) or not isinstance(rec.get("author"), str):
            raise CorpusError("record needs a string 'author'", lineno)
        name = normalize_name(rec["author"])
        aid = table.index.get(name)
        if aid is None:
            unmatched += 1
            continue
        country = rec.get("country")
        if isinstance(country, str) and country.strip():
            table.country[aid] = country.strip().lower()
        affiliation = rec.get("affiliation")
        if isinstance(affiliation, str) and affiliation.strip():
            table.affiliation[aid] = affiliation.strip()
    return unmatched


@dataclass(frozen=True)
class YearRow:
    year: int
    publications: int
    authors: int
    new_authors: int
    international_authors: int
    unknown_country_authors: int


@dataclass(frozen=True)
class CorpusStats:
    n_publications: int
    n_authors: int
    years: tuple[YearRow, ...]
    authors_per_paper: dict[int, int]  # byline length -> publications
    pubs_per_author: dict[str, int]  # author -> publications
    pubs_per_author_hist: dict[int, int]  # publication count -> authors

    @property
    def mean_authors_per_paper(self) -> float:
        total = sum(k * v for k, v in self.authors_per_paper.items())
        return total / self.n_publications


def corpus_stats(pubs: list[Publication], table: AuthorTable) -> CorpusStats:
    if not pubs:
        raise ValueError("corpus_stats needs at least one publication")

    per_author = Counter(a for p in pubs for a in p.authors)
    first_year: dict[int, int] = {}
    for p in pubs:
        for a in p.authors:
            if a not in first_year or p.year < first_year[a]:
                first_year[a] = p.year

    by_year: dict[int, list[Publication]] = {}
    for p in pubs:
        by_year.setdefault(p.year, []).append(p)
    new_by_year = Counter(first_year.values())

    rows = []
    for year in sorted(by_year):
        year_pubs = by_year[year]
        active = {a for p in year_pubs for a in p.authors}
        countries = [table.country_of(a) for a in active]
        rows.append(
            YearRow(
                year=year,
                publications=len(year_pubs),
                authors=len(active),
                new_authors=new_by_year.get(year, 0),
                international_authors=sum(c not in (HOME_COUNTRY, UNKNOWN_COUNTRY) for c in countries),
                unknown_country_authors=sum(c == UNKNOWN_COUNTRY for c in countries),
            )
        )

    return CorpusStats(
        n_publications=len(pubs),
        n_authors=len(per_author),
        years=tuple(rows),
        authors_per_paper=dict(sorted(Counter(p.n_authors for p in pubs).items())),
        pubs_per_author={table.name_of(a): c for a, c in sorted(per_author.items())},
        pubs_per_author_hist=dict(sorted(Counter(per_author.values()).items())),
    )


def write_stats_csv(stats: CorpusStats, out) -> None:
    """Long-format CSV ``statistic,key,value``; each statistic is a contiguous block.

    Blocks, in order: ``summary`` (publications, authors, mean_authors_per_paper),
    ``year_<field>`` keyed by year, ``authors_per_paper`` keyed by byline length,
    ``pubs_per_author_hist`` keyed by publication count, ``pubs_per_author``
    keyed by author name.
    """
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["statistic", "key", "value"])
    w.writerow(["summary", "publications", stats.n_publications])
    w.writerow(["summary", "authors", stats.n_authors])
    w.writerow(["summary", "mean_authors_per_paper", f"{stats.mean_authors_per_paper:.6f}"])
    for fname in ("publications", "authors", "new_authors", "international_authors",
                  "unknown_country_authors"):
        for row in stats.years:
            w.writerow([f"year_{fname}", row.year, getattr(row, fname)])
    for k, v in stats.authors_per_paper.items():
        w.writerow(["authors_per_paper", k, v])
    for k, v in stats.pubs_per_author_hist.items():
        w.writerow(["pubs_per_author_hist", k, v])
    for name, v in stats.pubs_per_author.items():
        w.writerow(["pubs_per_author", name, v])
