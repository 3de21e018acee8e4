"""Compare a DL/JCDL bibliography extract against its reference numbers.

Usage:
    python scripts/replicate.py --input dl_jcdl.jsonl [--affiliations aff.jsonl]
        [--roster pc.txt] [--seeds 20]

Prints one line per quantity: reference value, observed value, and whether it
is a hard target. Values that depend on undocumented definitions (closeness
constant, random-graph model, similarity measure) are shown for context only.
"""

import argparse
import logging

from authorrank.centrality import betweenness_centrality, closeness_centrality, degree_centrality
from authorrank.corpus import corpus_stats, load_affiliations, parse_publications
from authorrank.evaluation import committee_overlap, country_network, read_roster, spearman
from authorrank.netmodel import build_directed_binary, build_undirected, build_weighted
from authorrank.prestige import authorrank, pagerank
from authorrank.topology import components, largest_component, small_world

TOP2 = {"Hsinchun Chen", "Edward A. Fox"}


def row(name, reference, observed, target):
    flag = ""
    if target is not None:
        flag = "ok" if target else "MISMATCH"
    print(f"{name:<42} {str(reference):>14} {str(observed):>14}  {flag}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--input", required=True)
    p.add_argument("--affiliations")
    p.add_argument("--roster")
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    logging.basicConfig(level=logging.WARNING)

    with open(args.input, "rb") as fh:
        corpus = parse_publications(fh)
    table, pubs = corpus.authors, corpus.publications
    if args.affiliations:
        with open(args.affiliations, "rb") as fh:
            load_affiliations(fh, table)

    stats = corpus_stats(pubs, table)
    g = build_undirected(pubs, len(table), table.labels)
    sizes = components(g).sizes
    lcc, _ = largest_component(g)

    print(f"{'quantity':<42} {'reference':>14} {'observed':>14}")
    row("authors", 1567, stats.n_authors, stats.n_authors == 1567)
    row("publications", 759, stats.n_publications, stats.n_publications == 759)
    row("co-authorship pairs", 3401, g.m, g.m == 3401)
    row("mean authors per paper", 3.02, round(stats.mean_authors_per_paper, 2),
        abs(stats.mean_authors_per_paper - 3.02) < 0.005)
    row("single-author papers", 149, stats.authors_per_paper.get(1, 0), stats.authors_per_paper.get(1, 0) == 149)
    row("largest component", 599, sizes[0], sizes[0] == 599)
    row("second component", 31, sizes[1] if len(sizes) > 1 else "-", len(sizes) > 1 and sizes[1] == 31)
    row("largest component links", 1897, lcc.m, lcc.m == 1897)

    sw = small_world(lcc, args.seeds, args.seed)
    row("clustering coefficient", 0.89, round(sw.clustering, 3), None)
    row("characteristic path length", 6.58, round(sw.path_length, 3), None)
    row("random clustering coefficient", 0.31, round(sw.baseline_clustering, 3), None)
    row("random path length", 3.66, round(sw.baseline_path_length, 3), None)

    deg = degree_centrality(g)
    pr = pagerank(build_directed_binary(g))
    ar = authorrank(build_weighted(pubs, len(table), table.labels))
    bc = betweenness_centrality(g)
    cl = closeness_centrality(lcc)
    for rv in (deg, pr, ar):
        top = rv.top(2)
        row(f"top-2 {rv.label}", "Chen/Fox", "/".join(n.split()[-1] for n in top), set(top) == TOP2)
    row("top degree score", 59, deg.ranking()[0][1], None)
    row("authors with positive betweenness", 153, sum(v > 0 for v in bc.scores.values()), None)
    row("spearman degree/pagerank", 0.52, round(spearman(deg, pr), 3), None)
    row("spearman degree/authorrank", 0.30, round(spearman(deg, ar), 3), None)
    r = spearman(pr, ar)
    row("spearman pagerank/authorrank", "0.75+-0.05", round(r, 3), abs(r - 0.75) <= 0.05)
    row("top closeness", "-", cl.top(1)[0], None)

    if args.affiliations:
        cg = country_network(pubs, table)
        us = cg.authors.get("us", 0)
        row("US-affiliated authors", 1133, us, None)
        row("cross-country share", "~7%", f"{100 * cg.cross_share:.1f}%", None)
    if args.roster:
        with open(args.roster, encoding="utf-8") as fh:
            roster = read_roster(fh)
        for rv in (deg, cl, bc, pr, ar):
            curve = committee_overlap(rv, roster, 5)
            row(f"committee top-5 {rv.label}", ">=4", curve.at(5), None)


if __name__ == "__main__":
    main()
