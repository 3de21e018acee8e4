import io
import json
import unicodedata

import pytest
from hypothesis import given, strategies as st

from authorrank.corpus import (AuthorTable, CorpusError, Publication, corpus_stats, load_affiliations,
                               normalize_name, parse_publications, write_stats_csv)
from conftest import TWO_ARTICLES, jsonl


def parse(records):
    return parse_publications(io.StringIO(jsonl(records)))


def test_example_parses_to_two_pubs_three_authors(two_article_corpus):
    assert len(two_article_corpus.publications) == 2
    assert len(two_article_corpus.authors) == 3
    assert two_article_corpus.publications[0].authors == (0, 1, 2)


def test_empty_stream():
    c = parse_publications(io.BytesIO(b""))
    assert c.publications == [] and len(c.authors) == 0


def test_duplicate_author_in_byline_dropped():
    c = parse([{"id": "p", "year": 2001, "venue": "DL", "authors": ["X", "X"]}])
    assert c.publications[0].authors == (0,)
    assert c.duplicate_authors == 1


def test_bytes_input_and_blank_lines():
    data = (jsonl(TWO_ARTICLES) + "\n\n").encode("utf-8")
    assert len(parse_publications(io.BytesIO(data)).publications) == 2


def test_malformed_line_names_line_number():
    text = jsonl(TWO_ARTICLES[:1]) + "{not json\n"
    with pytest.raises(CorpusError, match="line 2"):
        parse_publications(io.StringIO(text))


@pytest.mark.parametrize("bad", [
    {"year": 2000, "authors": ["a"]},
    {"id": "x", "year": "2000", "authors": ["a"]},
    {"id": "x", "year": 0, "authors": ["a"]},
    {"id": "x", "year": 2000, "authors": "a"},
    [1, 2],
])
def test_schema_violations(bad):
    with pytest.raises(CorpusError, match="line 1"):
        parse_publications(io.StringIO(json.dumps(bad) + "\n"))


def test_pub_id_collision_is_error():
    with pytest.raises(CorpusError, match="duplicate publication id"):
        parse([TWO_ARTICLES[0], dict(TWO_ARTICLES[1], id="a1")])


def test_empty_author_list_rejected_and_counted():
    c = parse([{"id": "e", "year": 2000, "venue": "DL", "authors": ["  "]}, TWO_ARTICLES[0]])
    assert c.rejected == 1
    assert len(c.publications) == 1


def test_invalid_utf8():
    with pytest.raises(CorpusError, match="line 1"):
        parse_publications(io.BytesIO(b"\xff\xfe\n"))


@pytest.mark.parametrize("raw, expected", [
    ("  Edward  A. Fox ", "Edward A. Fox"),
    ("Hsinchun Chen", "Hsinchun Chen"),
    ("J.Alfredo Sánchez", "J.Alfredo Sánchez"),
    ("\tA\n B ", "A B"),
    ("MiXeD case", "MiXeD case"),
])
def test_normalize_name(raw, expected):
    assert normalize_name(raw) == expected


@given(st.text())
def test_normalize_idempotent(raw):
    once = normalize_name(raw)
    assert normalize_name(once) == once
    assert unicodedata.is_normalized("NFC", once)


@given(st.lists(st.text(min_size=1).filter(lambda s: normalize_name(s)), max_size=30))
def test_interning_is_bijection(raws):
    table = AuthorTable()
    ids = [table.intern(r) for r in raws]
    assert sorted(set(ids)) == list(range(len(table)))
    for r, i in zip(raws, ids):
        assert table.id_of(table.name_of(i)) == i
        assert table.name_of(i) == normalize_name(r)


def test_publication_invariants():
    with pytest.raises(ValueError):
        Publication("p", 2000, "DL", ())
    with pytest.raises(ValueError):
        Publication("p", 2000, "DL", (1, 1))
    with pytest.raises(ValueError):
        Publication("p", -1, "DL", (1,))


def test_example_stats(two_article_corpus):
    s = corpus_stats(two_article_corpus.publications, two_article_corpus.authors)
    assert s.authors_per_paper == {2: 1, 3: 1}
    assert s.pubs_per_author == {"v1": 2, "v2": 2, "v3": 1}
    assert s.pubs_per_author_hist == {1: 1, 2: 2}
    assert s.n_publications == 2 and s.n_authors == 3
    assert s.mean_authors_per_paper == 2.5
    assert [(r.year, r.publications, r.authors, r.new_authors) for r in s.years] == [
        (2000, 1, 3, 3), (2001, 1, 2, 0)]
    assert all(r.unknown_country_authors == r.authors for r in s.years)


def test_stats_require_publications():
    with pytest.raises(ValueError):
        corpus_stats([], AuthorTable())


def test_international_counts(two_article_corpus):
    t = two_article_corpus.authors
    aff = jsonl([{"author": "v1", "country": "US", "affiliation": "ODU"},
                 {"author": "v3", "country": "uk"},
                 {"author": "nobody", "country": "de"}])
    assert load_affiliations(io.StringIO(aff), t) == 1
    assert t.country_of(t.id_of("v1")) == "us"
    s = corpus_stats(two_article_corpus.publications, t)
    y2000 = s.years[0]
    assert (y2000.international_authors, y2000.unknown_country_authors) == (1, 1)


pubs_strategy = st.lists(
    st.tuples(st.integers(1990, 2010), st.lists(st.integers(0, 15), min_size=1, max_size=6, unique=True)),
    min_size=1, max_size=25)


@given(pubs_strategy)
def test_stats_invariants(rows):
    records = [{"id": f"p{k}", "year": y, "venue": "DL", "authors": [f"a{a}" for a in au]}
               for k, (y, au) in enumerate(rows)]
    c = parse(records)
    s = corpus_stats(c.publications, c.authors)
    assert sum(s.authors_per_paper.values()) == s.n_publications
    assert sum(s.pubs_per_author_hist.values()) == s.n_authors
    assert sum(k * v for k, v in s.authors_per_paper.items()) == sum(len(a) for _, a in rows)
    assert sum(r.new_authors for r in s.years) == s.n_authors


def test_stats_csv_blocks(two_article_corpus):
    buf = io.StringIO()
    write_stats_csv(corpus_stats(two_article_corpus.publications, two_article_corpus.authors), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "statistic,key,value"
    assert "summary,publications,2" in lines and "summary,authors,3" in lines
    blocks = [ln.split(",")[0] for ln in lines[1:]]
    # each statistic forms one contiguous block
    seen = []
    for b in blocks:
        if not seen or seen[-1] != b:
            assert b not in seen
            seen.append(b)
