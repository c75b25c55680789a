"""Pairwise sentence similarity: normalized word overlap and tree edit
distance.

Overlap follows the TextRank-style normalization: shared content lemmas
divided by ln|A| + ln|B| (sizes are distinct content lemmas, matching the
set-based numerator). Tree edit distance is the Zhang-Shasha dynamic
program over keyroot pairs; similarity is 1 / (1 + distance).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .deptree import DepTree, TedTables, prepare_ted_tables
from .textproc import Document, Sentence


@dataclass(frozen=True)
class SimilarityScore:
    i: int
    j: int
    value: float


def unit_relabel(a: str, b: str) -> float:
    return 0.0 if a == b else 1.0


@dataclass(frozen=True)
class EditCostModel:
    insert_cost: float = 1.0
    delete_cost: float = 1.0
    relabel_cost: Callable[[str, str], float] = field(default=unit_relabel)

    def __post_init__(self):
        if self.insert_cost < 0 or self.delete_cost < 0:
            raise ValueError("edit costs must be non-negative")


UNIT_COSTS = EditCostModel()

METRICS = ("overlap", "ted")


def overlap_similarity(a: Sentence, b: Sentence) -> float:
    """Shared content lemmas over ln|A| + ln|B|; 0 when either is degenerate."""
    common = len(a.content_lemmas & b.content_lemmas)
    if common == 0:
        return 0.0
    denom = math.log(len(a.content_lemmas)) + math.log(len(b.content_lemmas))
    if denom <= 0.0:
        return 0.0
    return common / denom


def ted(
    t1: DepTree,
    t2: DepTree,
    costs: EditCostModel = UNIT_COSTS,
    tables1: TedTables | None = None,
    tables2: TedTables | None = None,
) -> float:
    """Minimal insert/delete/relabel cost transforming t1 into t2."""
    a = tables1 if tables1 is not None else prepare_ted_tables(t1)
    b = tables2 if tables2 is not None else prepare_ted_tables(t2)
    la = [t1.labels[node] for node in a.postorder]
    lb = [t2.labels[node] for node in b.postorder]
    alml, blml = a.lml, b.lml
    delete, insert, relabel = costs.delete_cost, costs.insert_cost, costs.relabel_cost

    m, n = len(la), len(lb)
    treedist = [[0.0] * n for _ in range(m)]

    for i in a.keyroots:
        for j in b.keyroots:
            # Forest distance over the subforests rooted at keyroots i and j;
            # index 0 is the empty forest.
            li, lj = alml[i], blml[j]
            rows, cols = i - li + 2, j - lj + 2
            fd = [[0.0] * cols for _ in range(rows)]
            for x in range(1, rows):
                fd[x][0] = fd[x - 1][0] + delete
            for y in range(1, cols):
                fd[0][y] = fd[0][y - 1] + insert
            for x in range(1, rows):
                ni = li + x - 1
                for y in range(1, cols):
                    nj = lj + y - 1
                    if alml[ni] == li and blml[nj] == lj:
                        fd[x][y] = min(
                            fd[x - 1][y] + delete,
                            fd[x][y - 1] + insert,
                            fd[x - 1][y - 1] + relabel(la[ni], lb[nj]),
                        )
                        treedist[ni][nj] = fd[x][y]
                    else:
                        fd[x][y] = min(
                            fd[x - 1][y] + delete,
                            fd[x][y - 1] + insert,
                            fd[alml[ni] - li][blml[nj] - lj] + treedist[ni][nj],
                        )

    return treedist[m - 1][n - 1]


def ted_similarity(
    t1: DepTree,
    t2: DepTree,
    costs: EditCostModel = UNIT_COSTS,
    tables1: TedTables | None = None,
    tables2: TedTables | None = None,
) -> float:
    """1 / (1 + distance): in (0, 1], and 1 exactly when the trees match."""
    return 1.0 / (1.0 + ted(t1, t2, costs, tables1, tables2))


def pairwise_similarities(doc: Document, metric: str = "overlap") -> list[SimilarityScore]:
    """All n*(n-1)/2 unordered pair scores, sorted by (i, j)."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}; expected one of {METRICS}")
    n = len(doc.sentences)
    scores: list[SimilarityScore] = []
    if metric == "overlap":
        for i in range(n):
            for j in range(i + 1, n):
                value = overlap_similarity(doc.sentences[i], doc.sentences[j])
                scores.append(SimilarityScore(i, j, value))
        return scores

    if doc.trees is None:
        raise ValueError("tree-edit-distance metric requires dependency trees")
    tables = [prepare_ted_tables(t) for t in doc.trees]
    for i in range(n):
        for j in range(i + 1, n):
            value = ted_similarity(
                doc.trees[i], doc.trees[j],
                tables1=tables[i], tables2=tables[j],
            )
            scores.append(SimilarityScore(i, j, value))
    return scores
