"""Command-line front end: ``authorrank {stats,rank,analyze,cluster,validate,export}``.

Every option may also come from a JSON object passed with ``--config``
(keys are the long option names with dashes as underscores); explicit
flags win over the file. Exit status: 0 success, 2 bad usage or input,
1 internal error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import clustering, dot, evaluation, netmodel, topology
from .centrality import (RankVector, betweenness_centrality, closeness_centrality,
                         degree_centrality, write_ranking_csv)
from .corpus import Corpus, CorpusError, corpus_stats, load_affiliations, parse_publications, write_stats_csv
from .prestige import RankConfig, authorrank, pagerank

logger = logging.getLogger("authorrank")

METRICS = ("degree", "closeness", "betweenness", "pagerank", "authorrank")
DEFAULTS = {
    "metrics": "all",
    "damping": 0.85,
    "tol": 1e-10,
    "max_iter": 1000,
    "top": None,
    "seed": 0,
    "baseline_seeds": topology.DEFAULT_BASELINE_SEEDS,
    "min_weight": 0.0,
    "normalize": False,
    "curve_k": 20,
    "skip_overlap": False,
    "self_weight": 1.0,
    "affiliations": None,
    "roster": None,
}


class UsageError(Exception):
    """Bad flags, missing files or unusable input; exit status 2."""


@dataclass
class RunConfig:
    command: str
    input: Path
    out: Path
    affiliations: Path | None = None
    roster: Path | None = None
    metrics: tuple[str, ...] = METRICS
    rank: RankConfig = field(default_factory=RankConfig)
    seed: int = 0
    baseline_seeds: int = topology.DEFAULT_BASELINE_SEEDS
    top: int | None = None
    min_weight: float = 0.0
    normalize: bool = False
    curve_k: int = 20
    skip_overlap: bool = False
    self_weight: float = 1.0

    def validate(self) -> None:
        for p in (self.input, self.affiliations, self.roster):
            if p is not None and not p.is_file():
                raise UsageError(f"input file not found: {p}")
        try:
            self.out.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise UsageError(f"cannot create output directory {self.out}: {exc.strerror}") from None
        if self.top is not None and self.top < 1:
            raise UsageError("--top must be >= 1")
        if self.baseline_seeds < 1:
            raise UsageError("--baseline-seeds must be >= 1")
        if self.self_weight < 0:
            raise UsageError("--self-weight must be >= 0")
        if self.curve_k < 1:
            raise UsageError("--curve-k must be >= 1")


def parse_metrics(text: str, allow_repeats: bool = False) -> tuple[str, ...]:
    if text.strip() == "all":
        return METRICS
    names = tuple(m.strip() for m in text.split(",") if m.strip())
    unknown = [m for m in names if m not in METRICS]
    if unknown or not names:
        raise UsageError(f"unknown metric(s) {unknown or text!r}; choose from {', '.join(METRICS)} or 'all'")
    if not allow_repeats:
        names = tuple(dict.fromkeys(names))
    return names


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", type=Path, help="bibliography, JSON lines")
    common.add_argument("--affiliations", type=Path, help="author metadata, JSON lines")
    common.add_argument("--roster", type=Path, help="committee roster, one name per line")
    common.add_argument("--out", type=Path, help="output directory")
    common.add_argument("--config", type=Path, help="JSON file of option defaults")
    common.add_argument("--metrics", help=f"comma list of {','.join(METRICS)} or 'all'")
    common.add_argument("--damping", type=float)
    common.add_argument("--tol", type=float)
    common.add_argument("--max-iter", type=int)
    common.add_argument("--top", type=int, help="keep only the top K rows of each ranking")
    common.add_argument("--seed", type=int, help="random-baseline seed")
    common.add_argument("--baseline-seeds", type=int, help="random graphs per baseline")
    common.add_argument("--min-weight", type=float, help="omit weighted arcs below this in DOT")
    common.add_argument("--self-weight", type=float,
                        help="own-coordinate value in clustering vectors (default 1)")
    common.add_argument("--curve-k", type=int, help="length of committee overlap curves")
    common.add_argument("--normalize", action="store_true", default=None,
                        help="divide prestige scores by their sum")
    common.add_argument("--skip-overlap", action="store_true", default=None,
                        help="validate: Spearman only, no committee roster")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="authorrank", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in [
        ("stats", "corpus statistics"),
        ("rank", "one ranking CSV per metric"),
        ("analyze", "components, small-world, degree histogram, countries"),
        ("cluster", "hierarchical clustering of the largest component"),
        ("validate", "Spearman matrix and committee overlap curves"),
        ("export", "DOT files for every graph"),
    ]:
        sub.add_parser(name, parents=[common], help=text)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    file_cfg = {}
    if ns.config is not None:
        if not ns.config.is_file():
            raise UsageError(f"config file not found: {ns.config}")
        try:
            file_cfg = json.loads(ns.config.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file {ns.config}: {exc}") from None
        if not isinstance(file_cfg, dict):
            raise UsageError(f"config file {ns.config} must hold a JSON object")

    def opt(key):
        value = getattr(ns, key, None)
        if value is not None:
            return value
        return file_cfg.get(key, DEFAULTS.get(key))

    def path(key):
        value = opt(key)
        return None if value is None else Path(value)

    if path("input") is None:
        raise UsageError("--input is required")
    if path("out") is None:
        raise UsageError("--out is required")
    try:
        rank = RankConfig(float(opt("damping")), float(opt("tol")), int(opt("max_iter")))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return RunConfig(
        command=ns.command,
        input=path("input"),
        out=path("out"),
        affiliations=path("affiliations"),
        roster=path("roster"),
        metrics=parse_metrics(str(opt("metrics")), allow_repeats=ns.command == "validate"),
        rank=rank,
        seed=int(opt("seed")),
        baseline_seeds=int(opt("baseline_seeds")),
        top=None if opt("top") is None else int(opt("top")),
        min_weight=float(opt("min_weight")),
        normalize=bool(opt("normalize")),
        curve_k=int(opt("curve_k")),
        skip_overlap=bool(opt("skip_overlap")),
        self_weight=float(opt("self_weight")),
    )


class Workspace:
    """Corpus plus lazily built graphs for one run."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        with cfg.input.open("rb") as fh:
            self.corpus: Corpus = parse_publications(fh)
        table = self.corpus.authors
        if cfg.affiliations is not None:
            with cfg.affiliations.open("rb") as fh:
                missing = load_affiliations(fh, table)
            if missing:
                logger.info("%d affiliation records name unknown authors", missing)
        if self.corpus.rejected:
            logger.warning("%d records rejected for lack of authors", self.corpus.rejected)
        self.pubs = self.corpus.publications
        self.graph = netmodel.build_undirected(self.pubs, len(table), table.labels)
        self._weighted = None

    @property
    def weighted(self) -> netmodel.WeightedDigraph:
        if self._weighted is None:
            table = self.corpus.authors
            self._weighted = netmodel.build_weighted(self.pubs, len(table), table.labels)
        return self._weighted

    def largest(self) -> tuple[netmodel.CoauthorGraph, tuple[int, ...]] | None:
        if self.graph.n == 0:
            return None
        sub, back = topology.largest_component(self.graph)
        logger.info("largest component: %d authors, %d links", sub.n, sub.m)
        return sub, back

    def metric(self, name: str) -> RankVector:
        cfg = self.cfg
        if name == "degree":
            return degree_centrality(self.graph)
        if name == "betweenness":
            return betweenness_centrality(self.graph)
        if name == "closeness":
            g = self.graph
            if g.n and not topology.is_connected(g):
                logger.info("closeness: graph is disconnected, using the largest component")
                g = self.largest()[0]
            return closeness_centrality(g)
        if name == "pagerank":
            rv = pagerank(netmodel.build_directed_binary(self.graph), cfg.rank)
        elif name == "authorrank":
            rv = authorrank(self.weighted, cfg.rank)
        else:
            raise UsageError(f"unknown metric {name!r}")
        if not rv.converged:
            logger.warning("%s did not converge in %d iterations", name, cfg.rank.max_iter)
        return rv.normalized() if cfg.normalize else rv


def _open(path: Path):
    return path.open("w", encoding="utf-8", newline="")


def cmd_stats(ws: Workspace) -> list[Path]:
    if not ws.pubs:
        raise UsageError(f"no publications in {ws.cfg.input}")
    stats = corpus_stats(ws.pubs, ws.corpus.authors)
    logger.info("%d publications, %d authors", stats.n_publications, stats.n_authors)
    path = ws.cfg.out / "stats.csv"
    with _open(path) as fh:
        write_stats_csv(stats, fh)
    return [path]


def cmd_rank(ws: Workspace) -> list[Path]:
    written = []
    for name in ws.cfg.metrics:
        path = ws.cfg.out / f"rank_{name}.csv"
        with _open(path) as fh:
            write_ranking_csv(ws.metric(name), fh, ws.cfg.top)
        written.append(path)
    return written


def cmd_analyze(ws: Workspace) -> list[Path]:
    out = ws.cfg.out
    labeling = topology.components(ws.graph)
    with _open(out / "components.csv") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["rank", "size"])
        w.writerows(enumerate(labeling.sizes, start=1))
    with _open(out / "degree_histogram.csv") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["degree", "count"])
        w.writerows(topology.degree_histogram(ws.graph).items())

    with _open(out / "small_world.csv") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["metric", "value", "baseline_mean", "seeds"])
        largest = ws.largest()
        if largest is None or largest[0].n < 3:
            logger.info("largest component has fewer than 3 authors; small-world analysis skipped")
        else:
            rep = topology.small_world(largest[0], ws.cfg.baseline_seeds, ws.cfg.seed)
            w.writerow(["clustering_coefficient", f"{rep.clustering:.6f}",
                        f"{rep.baseline_clustering:.6f}", rep.seeds])
            w.writerow(["characteristic_path_length", f"{rep.path_length:.6f}",
                        f"{rep.baseline_path_length:.6f}", rep.seeds])
    written = [out / "components.csv", out / "degree_histogram.csv", out / "small_world.csv"]

    if ws.cfg.affiliations is not None:
        cg = evaluation.country_network(ws.pubs, ws.corpus.authors)
        with _open(out / "countries.csv") as fh:
            evaluation.write_country_csv(cg, fh)
        with _open(out / "country_summary.csv") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["statistic", "value"])
            w.writerow(["cross_country_pairs", cg.cross_country_pairs])
            w.writerow(["same_country_pairs", cg.same_country_pairs])
            w.writerow(["skipped_pairs", cg.skipped_pairs])
            w.writerow(["cross_share", f"{cg.cross_share:.6f}"])
            for country, count in cg.authors.items():
                w.writerow([f"authors_{country}", count])
        written += [out / "countries.csv", out / "country_summary.csv"]
    return written


def _dendrogram(ws: Workspace) -> clustering.Dendrogram | None:
    largest = ws.largest()
    if largest is None or largest[0].n < 2:
        logger.info("largest component has fewer than 2 authors; nothing to cluster")
        return None
    space = clustering.author_vectors(ws.weighted, largest[1], ws.cfg.self_weight)
    return clustering.agglomerate(space)


def cmd_cluster(ws: Workspace) -> list[Path]:
    dg = _dendrogram(ws)
    out = ws.cfg.out
    if dg is None:
        return []
    with _open(out / "dendrogram.csv") as fh:
        clustering.write_dendrogram_csv(dg, fh)
    with _open(out / "dendrogram_leaves.csv") as fh:
        clustering.write_leaves_csv(dg, fh)
    (out / "dendrogram.dot").write_text(clustering.dendrogram_dot(dg), encoding="utf-8")
    return [out / "dendrogram.csv", out / "dendrogram_leaves.csv", out / "dendrogram.dot"]


def cmd_validate(ws: Workspace) -> list[Path]:
    cfg = ws.cfg
    if not cfg.skip_overlap and cfg.roster is None:
        raise UsageError("committee overlap needs --roster (or pass --skip-overlap)")
    if len(cfg.metrics) < 2:
        raise UsageError("validate needs at least two metrics for the Spearman matrix")
    cache = {m: ws.metric(m) for m in dict.fromkeys(cfg.metrics)}
    vectors = [cache[m] for m in cfg.metrics]
    written = [cfg.out / "spearman.csv"]
    try:
        with _open(written[0]) as fh:
            evaluation.write_spearman_csv(cfg.metrics, vectors, fh)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    if not cfg.skip_overlap:
        with cfg.roster.open(encoding="utf-8") as fh:
            roster = evaluation.read_roster(fh)
        if not roster:
            raise UsageError(f"roster {cfg.roster} lists no names")
        curves = [evaluation.committee_overlap(cache[m], roster, cfg.curve_k)
                  for m in dict.fromkeys(cfg.metrics)]
        with _open(cfg.out / "overlap.csv") as fh:
            evaluation.write_curves_csv(curves, fh)
        unmatched = curves[0].unmatched_roster
        (cfg.out / "roster_unmatched.txt").write_text(
            "".join(f"{n}\n" for n in unmatched), encoding="utf-8")
        if unmatched:
            logger.info("%d roster names not found among authors", len(unmatched))
        written += [cfg.out / "overlap.csv", cfg.out / "roster_unmatched.txt"]
    return written


def cmd_export(ws: Workspace) -> list[Path]:
    out = ws.cfg.out
    files = {
        "coauthors.dot": dot.undirected_dot(ws.graph),
        "endorsements.dot": dot.binary_digraph_dot(netmodel.build_directed_binary(ws.graph)),
        "weighted.dot": dot.weighted_dot(ws.weighted, ws.cfg.min_weight),
    }
    if ws.cfg.affiliations is not None:
        cg = evaluation.country_network(ws.pubs, ws.corpus.authors)
        files["countries.dot"] = dot.weighted_edges_dot(cg.countries, cg.edges)
    dg = _dendrogram(ws)
    if dg is not None:
        files["dendrogram.dot"] = clustering.dendrogram_dot(dg)
    for fname, text in files.items():
        (out / fname).write_text(text, encoding="utf-8")
    return [out / f for f in files]


COMMANDS = {
    "stats": cmd_stats,
    "rank": cmd_rank,
    "analyze": cmd_analyze,
    "cluster": cmd_cluster,
    "validate": cmd_validate,
    "export": cmd_export,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(ns)
        cfg.validate()
        written = COMMANDS[cfg.command](Workspace(cfg))
    except (UsageError, CorpusError) as exc:
        print(f"authorrank {ns.command}: {exc}", file=sys.stderr)
        return 2
    except Exception:
        logger.exception("internal error")
        return 1
    for path in written:
        logger.info("wrote %s", path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
