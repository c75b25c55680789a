"""Command-line interface: summarize, evaluate, stats."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import rankers
from .corpus import corpus_stats, find_sidecar, load_conllu_sidecar, load_story
from .errors import GraphSumError
from .evaluation import evaluate_corpus, render_csv
from .graph import graph_dot_export
from .rouge import score_summary
from .similarity import METRICS
from .summarizer import SummaryConfig, summarize
from .textproc import build_document, load_stopwords, segment

_METHOD_CHOICES = rankers.METHODS + ("all",)
_METRIC_CHOICES = METRICS + ("all",)


def _load_corpus(corpus_dir: Path):
    paths = sorted(corpus_dir.glob("*.story"))
    return [load_story(path) for path in paths]


def _stopwords_option(path: str | None):
    return load_stopwords(path) if path else None


@click.group()
@click.version_option(package_name="graphsum")
def main():
    """Graph-based extractive summarization."""


@main.command()
@click.argument("story", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--metric", type=click.Choice(METRICS), default="overlap", show_default=True)
@click.option("--method", type=click.Choice(rankers.METHODS), default="pagerank", show_default=True)
@click.option("--threshold", "-t", type=float, default=0.5, show_default=True,
              help="Fraction of positive-similarity pairs kept as edges.")
@click.option("--length", "-n", type=int, default=5, show_default=True,
              help="Number of sentences in the summary.")
@click.option("--conllu-dir", type=click.Path(exists=True, file_okay=False, path_type=Path),
              help="Directory of .conllu sidecar parses, matched by file stem.")
@click.option("--stopwords", type=click.Path(exists=True, dir_okay=False),
              help="Replacement stopword list, one word per line.")
@click.option("--weighted-paths", is_flag=True,
              help="Use 1/weight distances for closeness and betweenness.")
@click.option("--clique-cap", type=int, default=100_000, show_default=True)
@click.option("--dump-graph", type=click.Path(dir_okay=False, path_type=Path),
              help="Write the sentence graph in DOT format.")
@click.option("--plot-graph", type=click.Path(dir_okay=False, path_type=Path),
              help="Render the sentence graph to an image file.")
@click.option("--gold", is_flag=True,
              help="Also report ROUGE against the story's own highlights.")
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path),
              help="Write the summary here instead of stdout.")
@click.option("--format", "fmt", type=click.Choice(("text", "json")), default="text",
              show_default=True)
def summarize_cmd(story, metric, method, threshold, length, conllu_dir, stopwords,
                  weighted_paths, clique_cap, dump_graph, plot_graph, gold, output, fmt):
    """Summarize one .story file."""
    try:
        record = load_story(story)
        sidecar_path = find_sidecar(story, conllu_dir)
        sidecar = load_conllu_sidecar(sidecar_path) if sidecar_path else None
        doc = build_document(record, sidecar=sidecar, stopwords=_stopwords_option(stopwords))
        config = SummaryConfig(
            method=method,
            metric=metric,
            threshold=threshold,
            length=length,
            weighted_paths=weighted_paths,
            clique_cap=clique_cap,
        )
        summary = summarize(doc, config)
    except GraphSumError as exc:
        raise click.ClickException(str(exc)) from exc

    if dump_graph:
        dump_graph.write_text(graph_dot_export(summary.graph), encoding="utf-8")
    if plot_graph:
        from .viz import plot_sentence_graph

        plot_sentence_graph(summary.graph, summary.scores, plot_graph, title=record.id)

    if fmt == "json":
        payload = {
            "id": summary.doc_id,
            "method": method,
            "metric": metric,
            "threshold": threshold,
            "selected": list(summary.selected),
            "sentences": list(summary.sentences),
            "scores": list(summary.scores),
        }
        rendered = json.dumps(payload, indent=2) + "\n"
    else:
        rendered = summary.text() + "\n"

    if gold:
        try:
            report = score_summary(summary.sentences, record.highlights)
        except GraphSumError as exc:
            raise click.ClickException(str(exc)) from exc
        gold_lines = (
            f"rouge1 r={report.rouge1.recall:.4f} p={report.rouge1.precision:.4f} f={report.rouge1.f1:.4f}\n"
            f"rouge2 r={report.rouge2.recall:.4f} p={report.rouge2.precision:.4f} f={report.rouge2.f1:.4f}\n"
            f"rougeL r={report.rougeL.recall:.4f} p={report.rougeL.precision:.4f} f={report.rougeL.f1:.4f}\n"
        )
        if fmt == "text":
            rendered += gold_lines
        else:
            payload["rouge"] = {
                "rouge1": [report.rouge1.recall, report.rouge1.precision, report.rouge1.f1],
                "rouge2": [report.rouge2.recall, report.rouge2.precision, report.rouge2.f1],
                "rougeL": [report.rougeL.recall, report.rougeL.precision, report.rougeL.f1],
            }
            rendered = json.dumps(payload, indent=2) + "\n"

    if output:
        output.write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)


main.add_command(summarize_cmd, name="summarize")


@main.command()
@click.argument("corpus_dir", type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--method", "methods", type=click.Choice(_METHOD_CHOICES), multiple=True,
              default=("pagerank",), show_default=True)
@click.option("--metric", "metrics", type=click.Choice(_METRIC_CHOICES), multiple=True,
              default=("overlap",), show_default=True)
@click.option("--threshold", "-t", type=float, default=0.5, show_default=True)
@click.option("--length", "-n", type=int, default=5, show_default=True)
@click.option("--conllu-dir", type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--stopwords", type=click.Path(exists=True, dir_okay=False))
@click.option("--weighted-paths", is_flag=True)
@click.option("--clique-cap", type=int, default=100_000, show_default=True)
@click.option("--jobs", "-j", type=int, default=1, show_default=True,
              help="Worker processes; results are identical for any value.")
@click.option("--figures-dir", type=click.Path(file_okay=False, path_type=Path),
              help="Also render recall/F1/timing charts into this directory.")
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path),
              help="Write the CSV report here instead of stdout.")
def evaluate(corpus_dir, methods, metrics, threshold, length, conllu_dir, stopwords,
             weighted_paths, clique_cap, jobs, figures_dir, output):
    """Evaluate method/metric combinations over a corpus of .story files."""
    if "all" in methods:
        methods = rankers.METHODS
    if "all" in metrics:
        metrics = METRICS
    try:
        records = _load_corpus(corpus_dir)
        result = evaluate_corpus(
            records,
            methods=methods,
            metrics=metrics,
            threshold=threshold,
            length=length,
            weighted_paths=weighted_paths,
            clique_cap=clique_cap,
            conllu_dir=conllu_dir,
            stopwords=_stopwords_option(stopwords),
            jobs=jobs,
        )
    except GraphSumError as exc:
        raise click.ClickException(str(exc)) from exc

    rendered = render_csv(result.rows)
    if output:
        output.write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    if result.failures:
        click.echo(f"skipped {result.failures} document(s) that failed to process", err=True)

    if figures_dir:
        from .viz import plot_rouge_bars, plot_timing

        figures_dir.mkdir(parents=True, exist_ok=True)
        plot_rouge_bars(result.rows, figures_dir / "rouge_recall.png", kind="recall")
        plot_rouge_bars(result.rows, figures_dir / "rouge_f1.png", kind="f1")
        plot_timing(result.rows, figures_dir / "timing.png")


@main.command()
@click.argument("corpus_dir", type=click.Path(exists=True, file_okay=False, path_type=Path))
def stats(corpus_dir):
    """Corpus statistics: size, sentence lengths, compression."""
    try:
        records = _load_corpus(corpus_dir)
        summary = corpus_stats(records, segment)
    except GraphSumError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(f"docs: {summary.doc_count}")
    click.echo(f"avg_doc_sentences: {summary.avg_doc_len_sentences:.2f}")
    click.echo(f"avg_summary_sentences: {summary.avg_summary_len_sentences:.2f}")
    click.echo(f"compression: {summary.avg_compression:.2f}")


if __name__ == "__main__":
    main()
