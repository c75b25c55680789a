"""Centrality rankers over the sentence graph and top-N selection.

PageRank and HITS honor edge weights; closeness and betweenness run on hop
counts by default (weight-derived distances are opt-in via weighted=True,
using distance = 1/weight). Betweenness accumulates in exact rationals so
equal-score ties and oracle comparisons are reproducible bit-for-bit.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import SentenceGraph

METHODS = ("pagerank", "hits", "closeness", "betweenness", "degree", "clusters")


@dataclass(frozen=True)
class PageRankParams:
    damping: float = 0.85
    tol: float = 1e-8
    max_iter: int = 200

    def __post_init__(self):
        if not (0.0 < self.damping < 1.0):
            raise ValueError("damping must lie strictly between 0 and 1")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")


@dataclass(frozen=True)
class PowerIterationResult:
    scores: tuple[float, ...]
    converged: bool
    iterations: int


@dataclass(frozen=True)
class RankResult:
    method: str
    scores: tuple[float, ...]
    selected: tuple[int, ...]


def _weight_matrix(g: SentenceGraph) -> np.ndarray:
    mat = np.zeros((g.n, g.n))
    for i, j, w in g.edges:
        mat[i, j] = w
        mat[j, i] = w
    return mat


def pagerank(g: SentenceGraph, params: PageRankParams = PageRankParams()) -> PowerIterationResult:
    """Weighted PageRank; each undirected edge acts as two directed arcs.

    Transition probability out of a node is proportional to edge weight;
    dangling nodes redistribute uniformly. Scores sum to 1.
    """
    n = g.n
    if n < 1:
        raise ValueError("pagerank needs at least one node")
    w = _weight_matrix(g)
    strength = w.sum(axis=1)
    dangling = strength == 0.0
    transition = np.zeros_like(w)
    nonzero = ~dangling
    transition[nonzero] = w[nonzero] / strength[nonzero, None]

    d = params.damping
    x = np.full(n, 1.0 / n)
    converged = False
    iterations = 0
    for iterations in range(1, params.max_iter + 1):
        nxt = d * (transition.T @ x + x[dangling].sum() / n) + (1.0 - d) / n
        nxt /= nxt.sum()
        if np.abs(nxt - x).sum() < params.tol:
            x = nxt
            converged = True
            break
        x = nxt
    return PowerIterationResult(tuple(float(v) for v in x), converged, iterations)


def hits(g: SentenceGraph, tol: float = 1e-8, max_iter: int = 200) -> PowerIterationResult:
    """Principal eigenvector of the weighted adjacency, L2-normalized.

    On an undirected graph hub and authority scores coincide. The power
    iteration runs on A + c*I (c = max strength): the shift leaves the
    eigenvector unchanged but prevents the sign oscillation a bipartite
    adjacency would otherwise cause.
    """
    n = g.n
    if n < 1:
        raise ValueError("hits needs at least one node")
    a = _weight_matrix(g)
    uniform = tuple([1.0 / np.sqrt(n)] * n)
    if not g.edges:
        return PowerIterationResult(uniform, True, 0)

    shift = a.sum(axis=1).max()
    m = a + shift * np.eye(n)
    x = np.full(n, 1.0 / np.sqrt(n))
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        y = m @ x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return PowerIterationResult(uniform, True, iterations)
        y /= norm
        if np.abs(y - x).sum() < tol:
            x = y
            converged = True
            break
        x = y
    return PowerIterationResult(tuple(float(v) for v in x), converged, iterations)


def _hop_distances(g: SentenceGraph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u, _ in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _dijkstra(g: SentenceGraph, source: int) -> list[float]:
    """Shortest weighted distances with edge length 1/weight."""
    inf = float("inf")
    dist = [inf] * g.n
    dist[source] = 0.0
    heap = [(0.0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for u, w in g.adjacency[v]:
            nd = d + 1.0 / w
            if nd < dist[u]:
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return dist


def closeness(g: SentenceGraph, weighted: bool = False) -> list[float]:
    """Per-component closeness with Wasserman-Faust scaling.

    score(v) = ((r-1)/(n-1)) * ((r-1)/sum of distances), r = size of v's
    component; isolated nodes (and a single-node graph) score 0.
    """
    n = g.n
    if n < 1:
        raise ValueError("closeness needs at least one node")
    scores = [0.0] * n
    for v in range(n):
        dist = _dijkstra(g, v) if weighted else _hop_distances(g, v)
        reachable = [d for d in dist if (d >= 0 if not weighted else d < float("inf"))]
        r = len(reachable)
        total = sum(reachable)
        if r > 1 and total > 0 and n > 1:
            scores[v] = ((r - 1) / (n - 1)) * ((r - 1) / total)
    return scores


def betweenness(g: SentenceGraph, weighted: bool = False) -> list[float]:
    """Shortest-path betweenness (Brandes), unnormalized, each unordered
    pair counted once."""
    n = g.n
    if n < 1:
        raise ValueError("betweenness needs at least one node")
    acc = [Fraction(0)] * n

    for s in range(n):
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        sigma[s] = 1
        order: list[int] = []

        if weighted:
            inf = float("inf")
            dist = [inf] * n
            dist[s] = 0.0
            heap = [(0.0, s)]
            done = [False] * n
            while heap:
                d, v = heapq.heappop(heap)
                if done[v]:
                    continue
                done[v] = True
                order.append(v)
                for u, w in g.adjacency[v]:
                    nd = d + 1.0 / w
                    if nd < dist[u]:
                        dist[u] = nd
                        sigma[u] = sigma[v]
                        preds[u] = [v]
                        heapq.heappush(heap, (nd, u))
                    elif nd == dist[u] and not done[u]:
                        sigma[u] += sigma[v]
                        preds[u].append(v)
        else:
            dist = [-1] * n
            dist[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                order.append(v)
                for u, _ in g.adjacency[v]:
                    if dist[u] < 0:
                        dist[u] = dist[v] + 1
                        queue.append(u)
                    if dist[u] == dist[v] + 1:
                        sigma[u] += sigma[v]
                        preds[u].append(v)

        delta = [Fraction(0)] * n
        for w_node in reversed(order):
            for v in preds[w_node]:
                delta[v] += Fraction(sigma[v], sigma[w_node]) * (1 + delta[w_node])
            if w_node != s:
                acc[w_node] += delta[w_node]

    return [float(b / 2) for b in acc]


def degree(g: SentenceGraph) -> list[float]:
    """Weighted degree (strength): sum of incident edge weights."""
    return [g.strength(v) for v in range(g.n)]


def select_top(scores, n_select: int) -> list[int]:
    """Indices of the N best scores, ties to the lower index, returned in
    ascending (document) order."""
    if n_select < 1:
        raise ValueError("summary length must be at least 1")
    ranked = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    return sorted(ranked[:n_select])
