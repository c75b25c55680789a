"""End-to-end extractive summarization of a single document."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import rankers
from .cliques import DEFAULT_CLIQUE_CAP, elect_representatives, maximal_cliques
from .graph import SentenceGraph, build_graph
from .similarity import METRICS, SimilarityScore, pairwise_similarities
from .textproc import Document


@dataclass(frozen=True)
class SummaryConfig:
    method: str = "pagerank"
    metric: str = "overlap"
    threshold: float = 0.5
    length: int = 5
    weighted_paths: bool = False
    clique_cap: int = DEFAULT_CLIQUE_CAP

    def __post_init__(self):
        if self.method not in rankers.METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.metric not in METRICS:
            raise ValueError(f"unknown metric {self.metric!r}")
        if self.length < 1:
            raise ValueError("summary length must be at least 1")


@dataclass(frozen=True)
class Summary:
    doc_id: str
    config: SummaryConfig
    selected: tuple[int, ...]
    sentences: tuple[str, ...]
    scores: tuple[float, ...]
    graph: SentenceGraph = field(repr=False)

    def text(self) -> str:
        return "\n".join(self.sentences)


def rank_sentences(g: SentenceGraph, config: SummaryConfig) -> tuple[float, ...]:
    """Per-sentence scores under the configured method.

    For the clusters method the scores are closeness values; selection
    additionally consults the clique structure, so rank_sentences alone
    does not determine the summary there.
    """
    if config.method == "pagerank":
        return rankers.pagerank(g).scores
    if config.method == "hits":
        return rankers.hits(g).scores
    if config.method == "closeness" or config.method == "clusters":
        return tuple(rankers.closeness(g, weighted=config.weighted_paths))
    if config.method == "betweenness":
        return tuple(rankers.betweenness(g, weighted=config.weighted_paths))
    if config.method == "degree":
        return tuple(rankers.degree(g))
    raise ValueError(f"unknown method {config.method!r}")


def select_sentences(g: SentenceGraph, scores: tuple[float, ...], config: SummaryConfig) -> list[int]:
    if config.method == "clusters":
        cliques = maximal_cliques(g, cap=config.clique_cap)
        return elect_representatives(cliques, list(scores), min(config.length, g.n))
    return rankers.select_top(scores, min(config.length, g.n))


def summarize(
    doc: Document,
    config: SummaryConfig = SummaryConfig(),
    scores: list[SimilarityScore] | None = None,
) -> Summary:
    """Summarize one document: similarity, graph, ranking, selection.

    Precomputed pairwise scores may be passed in when the caller sweeps
    several configurations over the same document.
    """
    if scores is None:
        scores = pairwise_similarities(doc, config.metric)
    g = build_graph(scores, len(doc), config.threshold)
    sentence_scores = rank_sentences(g, config)
    selected = select_sentences(g, sentence_scores, config)
    return Summary(
        doc_id=doc.id,
        config=config,
        selected=tuple(selected),
        sentences=tuple(doc.sentences[i].raw for i in selected),
        scores=sentence_scores,
        graph=g,
    )
