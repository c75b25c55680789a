"""Corpus-level evaluation: run method/metric combinations, average ROUGE.

Documents are processed one at a time (optionally across worker
processes); pairwise similarities are computed once per (document,
metric) and shared across methods. Per-row seconds count each combo's
own ranking and scoring time plus an even share of that shared
preparation, summed over documents.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import StoryRecord, load_conllu_sidecar
from .rouge import score_summary
from .summarizer import SummaryConfig, summarize
from .textproc import build_document
from .similarity import pairwise_similarities

log = logging.getLogger(__name__)

CSV_HEADER = (
    "method,metric,threshold,rouge1_r,rouge2_r,rougeL_r,"
    "rouge1_f,rouge2_f,rougeL_f,docs,seconds"
)


@dataclass(frozen=True)
class EvalRow:
    method: str
    metric: str
    threshold: float
    rouge1_r: float
    rouge2_r: float
    rougeL_r: float
    rouge1_f: float
    rouge2_f: float
    rougeL_f: float
    docs: int
    seconds: float


@dataclass(frozen=True)
class EvalResult:
    rows: tuple[EvalRow, ...]
    failures: int


def _evaluate_doc(args) -> tuple[str, dict | None, str | None]:
    """Evaluate every combo on one document.

    Returns (doc_id, {(method, metric): (6 rouge floats, seconds)}, error).
    Top-level so it can cross a process boundary.
    """
    record, combos, threshold, length, weighted_paths, clique_cap, conllu_dir, stopwords = args
    try:
        t0 = time.perf_counter()
        sidecar = None
        if conllu_dir is not None:
            candidate = Path(conllu_dir) / f"{record.id}.conllu"
            if candidate.exists():
                sidecar = load_conllu_sidecar(candidate)
        doc = build_document(record, sidecar=sidecar, stopwords=stopwords)
        doc_time = time.perf_counter() - t0

        metrics = sorted({metric for _, metric in combos})
        per_metric: dict[str, tuple[list, float]] = {}
        for metric in metrics:
            t0 = time.perf_counter()
            scores = pairwise_similarities(doc, metric)
            per_metric[metric] = (scores, time.perf_counter() - t0)

        cells: dict[tuple[str, str], tuple] = {}
        for method, metric in combos:
            scores, sim_time = per_metric[metric]
            config = SummaryConfig(
                method=method,
                metric=metric,
                threshold=threshold,
                length=length,
                weighted_paths=weighted_paths,
                clique_cap=clique_cap,
            )
            t0 = time.perf_counter()
            summary = summarize(doc, config, scores=scores)
            report = score_summary(summary.sentences, record.highlights)
            own = time.perf_counter() - t0
            methods_on_metric = sum(1 for _, m in combos if m == metric)
            seconds = own + sim_time / methods_on_metric + doc_time / len(combos)
            cells[(method, metric)] = (
                report.rouge1.recall,
                report.rouge2.recall,
                report.rougeL.recall,
                report.rouge1.f1,
                report.rouge2.f1,
                report.rougeL.f1,
                seconds,
            )
        return record.id, cells, None
    except Exception as exc:  # noqa: BLE001 - one bad story must not sink the run
        return record.id, None, f"{type(exc).__name__}: {exc}"


def evaluate_corpus(
    records: Sequence[StoryRecord],
    methods: Iterable[str],
    metrics: Iterable[str],
    threshold: float = 0.5,
    length: int = 5,
    weighted_paths: bool = False,
    clique_cap: int = 100_000,
    conllu_dir: str | Path | None = None,
    stopwords: frozenset[str] | None = None,
    jobs: int = 1,
) -> EvalResult:
    """Average ROUGE for every (method, metric) combination over a corpus.

    Documents that fail to process are excluded from every row and counted
    in `failures`. Results do not depend on worker count or scheduling:
    per-document outcomes are re-sorted by document id before aggregation.
    """
    combos = [(method, metric) for method in methods for metric in metrics]
    if not combos:
        raise ValueError("need at least one method and one metric")
    job_args = [
        (record, combos, threshold, length, weighted_paths, clique_cap,
         str(conllu_dir) if conllu_dir is not None else None, stopwords)
        for record in records
    ]

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_evaluate_doc, job_args))
    else:
        outcomes = [_evaluate_doc(args) for args in job_args]
    outcomes.sort(key=lambda item: item[0])

    failures = 0
    per_combo: dict[tuple[str, str], list[tuple]] = {combo: [] for combo in combos}
    for doc_id, cells, error in outcomes:
        if error is not None:
            failures += 1
            log.warning("skipping %s: %s", doc_id, error)
            continue
        for combo in combos:
            per_combo[combo].append(cells[combo])

    rows = []
    for method, metric in combos:
        values = per_combo[(method, metric)]
        docs = len(values)
        if docs == 0:
            rows.append(EvalRow(method, metric, threshold, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0, 0.0))
            continue
        sums = [sum(v[k] for v in values) for k in range(6)]
        seconds = sum(v[6] for v in values)
        rows.append(
            EvalRow(
                method,
                metric,
                threshold,
                *(s / docs for s in sums),
                docs,
                seconds,
            )
        )
    return EvalResult(tuple(rows), failures)


def render_csv(rows: Iterable[EvalRow]) -> str:
    """The delimited report: fixed header, one line per combination."""
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(
            f"{row.method},{row.metric},{format(row.threshold, 'g')},"
            f"{row.rouge1_r:.4f},{row.rouge2_r:.4f},{row.rougeL_r:.4f},"
            f"{row.rouge1_f:.4f},{row.rouge2_f:.4f},{row.rougeL_f:.4f},"
            f"{row.docs},{row.seconds:.3f}"
        )
    return "\n".join(lines) + "\n"
