"""Figure rendering for graphs and evaluation reports.

Everything draws through the Agg backend and writes straight to files, so
these functions work headless.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402 - backend must be set first

from .evaluation import EvalRow
from .graph import SentenceGraph


def plot_sentence_graph(
    g: SentenceGraph,
    scores: Sequence[float] | None,
    path: str | Path,
    title: str | None = None,
) -> Path:
    """Draw the sentence graph on a circular layout and save it.

    Node area tracks the ranking score, edge width tracks similarity
    weight, and nodes are labeled with their sentence index.
    """
    path = Path(path)
    n = g.n
    angles = [2.0 * math.pi * v / n - math.pi / 2.0 for v in range(n)]
    xs = [math.cos(a) for a in angles]
    ys = [math.sin(a) for a in angles]

    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    if g.edges:
        w_max = max(w for _, _, w in g.edges)
        for i, j, w in g.edges:
            ax.plot(
                [xs[i], xs[j]],
                [ys[i], ys[j]],
                color="#607080",
                linewidth=0.5 + 2.5 * w / w_max,
                alpha=0.6,
                zorder=1,
            )
    if scores is not None and max(scores, default=0.0) > 0.0:
        s_max = max(scores)
        sizes = [120.0 + 480.0 * s / s_max for s in scores]
    else:
        sizes = [200.0] * n
    ax.scatter(xs, ys, s=sizes, color="#3465a4", edgecolors="white", zorder=2)
    for v in range(n):
        ax.annotate(
            str(v),
            (xs[v], ys[v]),
            color="white",
            ha="center",
            va="center",
            fontsize=8,
            zorder=3,
        )
    ax.set_xlim(-1.25, 1.25)
    ax.set_ylim(-1.25, 1.25)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_rouge_bars(rows: Iterable[EvalRow], path: str | Path, kind: str = "recall") -> Path:
    """Grouped ROUGE bars, one group per method/metric row."""
    if kind not in ("recall", "f1"):
        raise ValueError("kind must be 'recall' or 'f1'")
    rows = list(rows)
    if not rows:
        raise ValueError("no rows to plot")
    labels = [f"{r.method}\n{r.metric}" for r in rows]
    if kind == "recall":
        series = [
            ("ROUGE-1", [r.rouge1_r for r in rows]),
            ("ROUGE-2", [r.rouge2_r for r in rows]),
            ("ROUGE-L", [r.rougeL_r for r in rows]),
        ]
    else:
        series = [
            ("ROUGE-1", [r.rouge1_f for r in rows]),
            ("ROUGE-2", [r.rouge2_f for r in rows]),
            ("ROUGE-L", [r.rougeL_f for r in rows]),
        ]

    path = Path(path)
    width = 0.8 / len(series)
    fig, ax = plt.subplots(figsize=(max(6.0, 1.2 * len(rows)), 4.0))
    for k, (name, values) in enumerate(series):
        offsets = [i + (k - 1) * width for i in range(len(rows))]
        ax.bar(offsets, values, width=width, label=name)
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels(labels, fontsize=8)
    ax.set_ylabel(kind)
    ax.set_ylim(0.0, 1.0)
    ax.legend(fontsize=8)
    ax.grid(axis="y", alpha=0.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_timing(rows: Iterable[EvalRow], path: str | Path) -> Path:
    """Horizontal bars of total seconds per method/metric row."""
    rows = list(rows)
    if not rows:
        raise ValueError("no rows to plot")
    labels = [f"{r.method} / {r.metric}" for r in rows]
    seconds = [r.seconds for r in rows]

    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.0, 0.45 * len(rows) + 1.5))
    ax.barh(range(len(rows)), seconds, color="#73d216")
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    ax.grid(axis="x", alpha=0.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
