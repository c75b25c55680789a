import math
import random

import numpy as np
import pytest

from graphsum.graph import SentenceGraph
from graphsum.rankers import (
    PageRankParams,
    betweenness,
    closeness,
    degree,
    hits,
    pagerank,
    select_top,
)

from oracles import (
    betweenness_oracle,
    closeness_oracle,
    pagerank_dense,
    random_connected_graph,
    random_graph,
)

PATH3 = SentenceGraph(3, [(0, 1, 1.0), (1, 2, 1.0)])
STAR4 = SentenceGraph(4, [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)])
K4 = SentenceGraph(4, [(i, j, 1.0) for i in range(4) for j in range(i + 1, 4)])


class TestPageRank:
    def test_sums_to_one_and_positive(self):
        rng = random.Random(1)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 8), 0.4, weighted=True)
            r = pagerank(g)
            assert sum(r.scores) == pytest.approx(1.0, abs=1e-9)
            assert all(s >= (1 - 0.85) / g.n - 1e-12 for s in r.scores)

    def test_matches_dense_solve(self):
        rng = random.Random(2)
        for _ in range(50):
            g = random_connected_graph(rng, 8, weighted=True)
            r = pagerank(g)
            assert r.converged
            dense = pagerank_dense(g)
            assert np.abs(np.array(r.scores) - dense).max() < 1e-6

    def test_symmetric_star(self):
        r = pagerank(STAR4)
        assert r.scores[1] == pytest.approx(r.scores[2], abs=1e-12)
        assert r.scores[0] > r.scores[1]

    def test_empty_graph_uniform(self):
        r = pagerank(SentenceGraph(4, []))
        assert r.scores == pytest.approx((0.25,) * 4)

    def test_weight_scaling_preserves_order(self):
        rng = random.Random(3)
        g = random_connected_graph(rng, 7, weighted=True)
        scaled = SentenceGraph(g.n, [(i, j, 3.7 * w) for i, j, w in g.edges])
        a = np.argsort(pagerank(g).scores)
        b = np.argsort(pagerank(scaled).scores)
        assert list(a) == list(b)

    def test_params_validation(self):
        with pytest.raises(ValueError):
            PageRankParams(damping=1.0)
        with pytest.raises(ValueError):
            PageRankParams(tol=0.0)

    def test_nonconvergence_is_flagged_not_raised(self):
        g = random_connected_graph(random.Random(4), 8, weighted=True)
        r = pagerank(g, PageRankParams(tol=1e-300, max_iter=3))
        assert r.converged is False
        assert r.iterations == 3
        assert sum(r.scores) == pytest.approx(1.0, abs=1e-9)


class TestHits:
    def test_star_eigenvector(self):
        r = hits(STAR4)
        assert r.converged
        assert r.scores[0] == pytest.approx(1 / math.sqrt(2), abs=1e-6)
        for leaf in (1, 2, 3):
            assert r.scores[leaf] == pytest.approx(1 / math.sqrt(6), abs=1e-6)
        assert r.scores[0] > r.scores[1]

    def test_unit_norm(self):
        rng = random.Random(5)
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 8), 0.5, weighted=True)
            r = hits(g)
            assert sum(s * s for s in r.scores) == pytest.approx(1.0, abs=1e-9)
            assert all(s >= 0 for s in r.scores)

    def test_edgeless_graph_uniform(self):
        r = hits(SentenceGraph(3, []))
        assert r.scores == pytest.approx((1 / math.sqrt(3),) * 3)

    def test_weight_scaling_preserves_order(self):
        g = random_connected_graph(random.Random(6), 7, weighted=True)
        scaled = SentenceGraph(g.n, [(i, j, 0.31 * w) for i, j, w in g.edges])
        assert list(np.argsort(hits(g).scores)) == list(np.argsort(hits(scaled).scores))


class TestCloseness:
    def test_path_values(self):
        assert closeness(PATH3) == pytest.approx([2 / 3, 1.0, 2 / 3])

    def test_complete_graph(self):
        assert closeness(K4) == [1.0, 1.0, 1.0, 1.0]

    def test_isolated_node_scores_zero(self):
        g = SentenceGraph(3, [(0, 1, 1.0)])
        scores = closeness(g)
        assert scores[2] == 0.0
        assert scores[0] > 0.0

    def test_singleton_graph(self):
        assert closeness(SentenceGraph(1, [])) == [0.0]

    def test_weights_ignored_by_default(self):
        rng = random.Random(7)
        g = random_connected_graph(rng, 7, weighted=False)
        reweighted = SentenceGraph(g.n, [(i, j, rng.uniform(0.1, 2)) for i, j, w in g.edges])
        assert closeness(g) == closeness(reweighted)

    def test_weighted_paths_change_distances(self):
        # heavy edge = short distance; the direct hop 0-2 costs 10 while
        # the two-hop route through 1 costs 2
        g = SentenceGraph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 0.1)])
        hop = closeness(g)
        weighted = closeness(g, weighted=True)
        assert hop == [1.0, 1.0, 1.0]
        assert weighted[1] > weighted[0]


class TestBetweenness:
    def test_path_center(self):
        assert betweenness(PATH3) == [0.0, 1.0, 0.0]

    def test_star_center(self):
        k = 3
        assert betweenness(STAR4) == [k * (k - 1) / 2, 0.0, 0.0, 0.0]

    def test_complete_graph_zero(self):
        assert betweenness(K4) == [0.0, 0.0, 0.0, 0.0]

    def test_matches_enumeration_oracle(self):
        rng = random.Random(8)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 8), 0.45)
            assert betweenness(g) == betweenness_oracle(g)

    def test_closeness_matches_oracle(self):
        rng = random.Random(9)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 8), 0.45)
            got, want = closeness(g), closeness_oracle(g)
            assert got == pytest.approx(want, abs=1e-12)

    def test_weights_ignored_by_default(self):
        rng = random.Random(10)
        g = random_connected_graph(rng, 7)
        reweighted = SentenceGraph(g.n, [(i, j, rng.uniform(0.1, 2)) for i, j, w in g.edges])
        assert betweenness(g) == betweenness(reweighted)


def test_degree_is_strength():
    g = SentenceGraph(3, [(0, 1, 0.5), (0, 2, 0.25)])
    assert degree(g) == [0.75, 0.5, 0.25]


class TestSelectTop:
    def test_orders_by_score_then_index(self):
        assert select_top([0.1, 0.9, 0.5, 0.9], 2) == [1, 3]

    def test_output_ascending(self):
        assert select_top([0.0, 0.3, 0.2, 0.9], 3) == [1, 2, 3]

    def test_ties_go_to_lower_index(self):
        assert select_top([0.5, 0.5, 0.5], 2) == [0, 1]

    def test_duplicate_free_and_sorted(self):
        rng = random.Random(11)
        for _ in range(100):
            scores = [rng.choice([0.0, 0.25, 0.5]) for _ in range(10)]
            picked = select_top(scores, rng.randint(1, 10))
            assert picked == sorted(set(picked))

    def test_requires_positive_n(self):
        with pytest.raises(ValueError):
            select_top([1.0], 0)
