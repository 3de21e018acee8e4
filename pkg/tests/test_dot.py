from authorrank.dot import quote, undirected_dot, weighted_dot, weighted_edges_dot
from authorrank.netmodel import CoauthorGraph, WeightedDigraph, build_weighted


def test_quote():
    assert quote("v1") == "v1"
    assert quote("Edward A. Fox") == '"Edward A. Fox"'
    assert quote('say "hi"') == '"say \\"hi\\""'
    assert quote("node") == '"node"'


def test_example_weighted_line(two_article_corpus):
    w = build_weighted(two_article_corpus.publications, 3, two_article_corpus.authors.labels)
    text = weighted_dot(w)
    assert "  v1 -> v2 [label=0.7500];" in text.splitlines()
    lines = [ln for ln in weighted_dot(w, min_weight=0.4).splitlines() if "->" in ln]
    assert len(lines) == 4 and all("0.2500" not in ln for ln in lines)


def test_empty_documents():
    assert undirected_dot(CoauthorGraph.from_edges(0, [])) == "graph coauthors {\n}\n"
    assert weighted_dot(WeightedDigraph((), ())) == "digraph weighted {\n}\n"


def test_undirected_and_country():
    g = CoauthorGraph.from_edges(3, [(0, 1), (1, 2)], labels=["A B", "c", "d"])
    assert undirected_dot(g).splitlines()[4] == '  "A B" -- c;'
    text = weighted_edges_dot(["uk", "us"], {("uk", "us"): 3})
    assert "  uk -- us [label=3];" in text
