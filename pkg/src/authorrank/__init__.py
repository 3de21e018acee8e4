"""Co-authorship network construction, centrality and AuthorRank prestige metrics."""

from .centrality import RankVector, betweenness_centrality, closeness_centrality, degree_centrality
from .corpus import AuthorTable, Corpus, CorpusError, Publication, corpus_stats, normalize_name, parse_publications
from .netmodel import (BinaryDigraph, CoauthorGraph, CoweightAccumulator, WeightedDigraph, build_directed_binary,
                       build_undirected, build_weighted, cofrequency, exclusivity, normalize_weights)
from .prestige import RankConfig, authorrank, pagerank
from .topology import GraphError

__version__ = "0.1.0"
