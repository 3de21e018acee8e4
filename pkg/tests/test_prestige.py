import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from authorrank.netmodel import (CoauthorGraph, WeightedDigraph, build_directed_binary, build_undirected,
                                 build_weighted, uniform_weights)
from authorrank.prestige import RankConfig, authorrank, deltas_monotone, pagerank
from authorrank.topology import is_connected
from conftest import graphs

# closed form of x = 0.15 + 0.85 (0.75 x + 0.5 y), y = 0.15 + 0.85 * 0.5 x
AR_V1 = 0.21375 / 0.181875
AR_V3 = 0.15 + 0.425 * AR_V1


def test_closed_form_constants():
    assert AR_V1 == pytest.approx(1.17526, abs=1e-5)
    assert AR_V3 == pytest.approx(0.64949, abs=1e-5)


def test_example_pagerank_uniform(two_article_corpus):
    t = two_article_corpus.authors
    g = build_undirected(two_article_corpus.publications, len(t), t.labels)
    pr = pagerank(build_directed_binary(g))
    assert pr.converged
    assert all(v == pytest.approx(1.0, abs=1e-9) for v in pr.scores.values())


def test_example_authorrank(two_article_corpus):
    t = two_article_corpus.authors
    ar = authorrank(build_weighted(two_article_corpus.publications, len(t), t.labels))
    assert ar.converged
    assert ar["v1"] == pytest.approx(AR_V1, abs=1e-9)
    assert ar["v2"] == pytest.approx(AR_V1, abs=1e-9)
    assert ar["v3"] == pytest.approx(AR_V3, abs=1e-9)
    assert ar.top(3)[-1] == "v3"


def test_isolated_node_gets_baseline():
    g = build_directed_binary(CoauthorGraph.from_edges(1, []))
    assert pagerank(g).scores == {"0": pytest.approx(0.15)}
    w = WeightedDigraph(("a",), ({},))
    assert authorrank(w, RankConfig(damping=0.5)).scores == {"a": 0.5}


def test_non_convergence_flag():
    g = build_directed_binary(CoauthorGraph.from_edges(3, [(0, 1), (1, 2)]))
    rv = pagerank(g, RankConfig(max_iter=3))
    assert not rv.converged and rv.iterations == 3


@pytest.mark.parametrize("kwargs", [{"damping": 0}, {"damping": 1}, {"tol": 0}, {"max_iter": 0}])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        RankConfig(**kwargs)


@given(graphs(max_nodes=9), st.floats(0.05, 0.95))
def test_pagerank_equals_authorrank_with_uniform_weights(g, d):
    cfg = RankConfig(damping=d)
    pr = pagerank(build_directed_binary(g), cfg)
    ar = authorrank(uniform_weights(g), cfg)
    for k in pr.scores:
        assert abs(pr.scores[k] - ar.scores[k]) < 1e-9


def random_weighted(rnd, g):
    out = []
    for i in range(g.n):
        raw = {j: rnd.uniform(0.1, 5.0) for j in g.adj[i]}
        s = sum(raw.values())
        out.append({j: v / s for j, v in raw.items()})
    return WeightedDigraph(g.labels, tuple(out))


@given(graphs(max_nodes=8), st.randoms(use_true_random=False))
def test_authorrank_solves_linear_system(g, rnd):
    w = random_weighted(rnd, g)
    ar = authorrank(w, RankConfig(tol=1e-13))
    exact = oracles.fixed_point_solve(g.n, list(w.arcs()), 0.85)
    assert [ar.scores[str(v)] for v in range(g.n)] == pytest.approx(exact.tolist(), abs=1e-9)


@given(graphs(min_nodes=2, max_nodes=8, connected=True), st.randoms(use_true_random=False))
def test_mass_conserved_on_connected_graphs(g, rnd):
    cfg = RankConfig(tol=1e-13)
    ar = authorrank(random_weighted(rnd, g), cfg)
    assert is_connected(g)
    assert sum(ar.scores.values()) == pytest.approx(g.n, abs=1e-9 * g.n)


@given(graphs(max_nodes=8), st.randoms(use_true_random=False))
def test_permutation_equivariance(g, rnd):
    w = random_weighted(rnd, g)
    perm = list(range(g.n))
    rnd.shuffle(perm)
    out = [None] * g.n
    for i in range(g.n):
        out[perm[i]] = {perm[j]: v for j, v in w.out[i].items()}
    wp = WeightedDigraph(g.labels, tuple(out))
    a, b = authorrank(w), authorrank(wp)
    for v in range(g.n):
        assert a.scores[str(v)] == pytest.approx(b.scores[str(perm[v])], abs=1e-9)


def test_monotone_diagnostic():
    assert deltas_monotone([5, 4, 3, 2, 1, 0.5, 0.4, 0.3])
    assert not deltas_monotone([5, 4, 3, 2, 1, 0.5, 0.4, 0.6])


def test_example_deltas_monotone(two_article_corpus):
    ar = authorrank(build_weighted(two_article_corpus.publications))
    assert len(ar.deltas) == ar.iterations
    assert deltas_monotone(ar.deltas)


def test_synchronous_update_order_independent():
    # same graph with reversed node order yields the reversed vector exactly
    g = CoauthorGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    h = CoauthorGraph.from_edges(4, [(3, 2), (2, 1), (1, 0)])
    a = np.array(list(pagerank(build_directed_binary(g)).scores.values()))
    assert np.allclose(a, a[::-1], atol=1e-12)
    b = np.array(list(pagerank(build_directed_binary(h)).scores.values()))
    assert np.allclose(a, b, atol=1e-12)
