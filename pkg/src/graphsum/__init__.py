"""graphsum: graph-based extractive summarization with ROUGE evaluation."""

from .corpus import (
    ConlluToken,
    CorpusStats,
    StoryRecord,
    corpus_stats,
    find_sidecar,
    load_conllu_sidecar,
    load_story,
    write_story,
)
from .deptree import DepTree, TedTables, fallback_tree, prepare_ted_tables, tree_from_conllu
from .errors import (
    CliqueBudgetExceeded,
    ConlluParseError,
    CycleDetected,
    EmptyCorpus,
    EmptyReference,
    EmptySentence,
    EmptySummary,
    GraphSumError,
    HeadOutOfRange,
    InvalidThreshold,
    MalformedStory,
    MultipleRoots,
    NoRoot,
    TreeError,
)
from .evaluation import CSV_HEADER, EvalResult, EvalRow, evaluate_corpus, render_csv
from .graph import SentenceGraph, build_graph, graph_dot_export
from .cliques import elect_representatives, maximal_cliques
from .rankers import (
    METHODS,
    PageRankParams,
    PowerIterationResult,
    betweenness,
    closeness,
    degree,
    hits,
    pagerank,
    select_top,
)
from .rouge import RougeReport, RougeScore, rouge_l, rouge_n, score_summary
from .similarity import (
    METRICS,
    EditCostModel,
    SimilarityScore,
    UNIT_COSTS,
    overlap_similarity,
    pairwise_similarities,
    ted,
    ted_similarity,
)
from .summarizer import Summary, SummaryConfig, summarize
from .textproc import Document, Sentence, build_document, load_stopwords, normalize, segment, tokenize

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "CliqueBudgetExceeded",
    "ConlluParseError",
    "ConlluToken",
    "CorpusStats",
    "CycleDetected",
    "DepTree",
    "Document",
    "EditCostModel",
    "EmptyCorpus",
    "EmptyReference",
    "EmptySentence",
    "EmptySummary",
    "EvalResult",
    "EvalRow",
    "GraphSumError",
    "HeadOutOfRange",
    "InvalidThreshold",
    "MalformedStory",
    "METHODS",
    "METRICS",
    "MultipleRoots",
    "NoRoot",
    "PageRankParams",
    "PowerIterationResult",
    "RougeReport",
    "RougeScore",
    "Sentence",
    "SentenceGraph",
    "SimilarityScore",
    "StoryRecord",
    "Summary",
    "SummaryConfig",
    "TedTables",
    "TreeError",
    "UNIT_COSTS",
    "betweenness",
    "build_document",
    "build_graph",
    "closeness",
    "corpus_stats",
    "degree",
    "elect_representatives",
    "evaluate_corpus",
    "fallback_tree",
    "find_sidecar",
    "graph_dot_export",
    "hits",
    "load_conllu_sidecar",
    "load_story",
    "load_stopwords",
    "maximal_cliques",
    "normalize",
    "overlap_similarity",
    "pagerank",
    "pairwise_similarities",
    "prepare_ted_tables",
    "render_csv",
    "rouge_l",
    "rouge_n",
    "score_summary",
    "segment",
    "select_top",
    "summarize",
    "ted",
    "ted_similarity",
    "tokenize",
    "tree_from_conllu",
    "write_story",
]
