"""Thresholded sentence-similarity graph.

Candidate edges are the strictly positive similarity pairs; the top t
fraction (by value, deterministic tie-breaking on indices) become edges.
Zero-similarity pairs are never candidates: they carry no signal and
zero-weight edges would corrupt the weighted centralities.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import InvalidThreshold
from .similarity import SimilarityScore


class SentenceGraph:
    """Undirected weighted graph over sentence indices 0..n-1."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]]):
        if n < 0:
            raise ValueError("node count must be non-negative")
        normalized = []
        seen = set()
        for i, j, w in edges:
            if i == j:
                raise ValueError(f"self-loop on node {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) outside 0..{n - 1}")
            if w <= 0:
                raise ValueError(f"edge ({i}, {j}) has non-positive weight {w}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            normalized.append((key[0], key[1], float(w)))
        normalized.sort(key=lambda e: (e[0], e[1]))

        self.n = n
        self.edges: tuple[tuple[int, int, float], ...] = tuple(normalized)
        adjacency: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for i, j, w in self.edges:
            adjacency[i].append((j, w))
            adjacency[j].append((i, w))
        for nbrs in adjacency:
            nbrs.sort()
        self.adjacency: tuple[tuple[tuple[int, float], ...], ...] = tuple(
            tuple(nbrs) for nbrs in adjacency
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SentenceGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __repr__(self) -> str:
        return f"SentenceGraph(n={self.n}, edges={len(self.edges)})"

    def strength(self, v: int) -> float:
        return sum(w for _, w in self.adjacency[v])

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for i, j, _ in self.edges)


def build_graph(scores: Sequence[SimilarityScore], n: int, t: float) -> SentenceGraph:
    """Keep the ceil(t * |positive pairs|) highest-similarity pairs as edges.

    Ties at the cutoff break by (value desc, i asc, j asc) so repeated runs
    select identical edges.
    """
    if not (isinstance(t, (int, float)) and math.isfinite(t) and 0.0 <= t <= 1.0):
        raise InvalidThreshold(f"threshold must lie in [0, 1], got {t!r}")
    candidates = [s for s in scores if s.value > 0.0]
    candidates.sort(key=lambda s: (-s.value, s.i, s.j))
    keep = min(len(candidates), math.ceil(t * len(candidates)))
    return SentenceGraph(n, [(s.i, s.j, s.value) for s in candidates[:keep]])


def graph_dot_export(g: SentenceGraph) -> str:
    """DOT text with weights as edge attributes, for external rendering."""
    lines = ["graph sentences {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for i, j, w in g.edges:
        weight = format(w, "g")
        lines.append(f'  {i} -- {j} [weight={weight}, label="{weight}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
