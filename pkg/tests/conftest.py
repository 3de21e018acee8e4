import io
import json

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from authorrank.corpus import parse_publications
from authorrank.netmodel import CoauthorGraph

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

TWO_ARTICLES = [
    {"id": "a1", "year": 2000, "venue": "JCDL", "authors": ["v1", "v2", "v3"]},
    {"id": "a2", "year": 2001, "venue": "JCDL", "authors": ["v1", "v2"]},
]


def jsonl(records):
    return "".join(json.dumps(r) + "\n" for r in records)


@pytest.fixture
def two_article_corpus():
    return parse_publications(io.StringIO(jsonl(TWO_ARTICLES)))


@st.composite
def graphs(draw, min_nodes=1, max_nodes=8, connected=False):
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = set(draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else [])
    if connected:
        # random spanning tree keeps the sample connected
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
    return CoauthorGraph.from_edges(n, sorted(edges))


# --- acceptance reporting: one PASS/FAIL line per criterion ---------------

_results: dict[int, list[str]] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "_acceptance", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results.setdefault(marker, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("acceptance")
    if mark is not None:
        outcome.get_result()._acceptance = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        outcomes = _results[n]
        if any(o == "failed" for o in outcomes):
            verdict = "FAIL"
        elif all(o == "skipped" for o in outcomes):
            verdict = "SKIP"
        else:
            verdict = "PASS"
        terminalreporter.write_line(f"criterion {n}: {verdict} ({len(outcomes)} checks)")
