from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _graphs import cycle, path, star
from _oracles import betweenness as oracle_betweenness
from netresilience import (
    CentralityKind,
    EmptyGraph,
    NoEdges,
    betweenness_centrality,
    build_graph,
    closeness_centrality,
    degree_centrality,
    edge_betweenness,
    erdos_renyi,
)
from netresilience.centrality import compute


class TestDegree:
    def test_star_center(self):
        assert degree_centrality(star(4))[0] == 1.0

    def test_cycle(self):
        assert set(degree_centrality(cycle(5)).scores.values()) == {0.5}

    def test_isolated(self):
        g = build_graph([(0, 1)], isolated=[2])
        assert degree_centrality(g)[2] == 0.0

    def test_singleton_and_empty(self):
        assert degree_centrality(build_graph(isolated=[0])).scores == {0: 0.0}
        with pytest.raises(EmptyGraph):
            degree_centrality(build_graph())


class TestCloseness:
    def test_path3(self):
        s = closeness_centrality(path(3))
        assert s[1] == 1.0
        assert s[0] == pytest.approx(2 / 3, abs=1e-15)

    def test_two_disjoint_edges(self):
        s = closeness_centrality(build_graph([(0, 1), (2, 3)]))
        assert all(v == pytest.approx(1 / 3, abs=1e-15) for v in s.scores.values())

    def test_isolated_zero_connected_positive(self):
        g = build_graph([(0, 1), (1, 2)], isolated=[5])
        s = closeness_centrality(g)
        assert s[5] == 0.0
        assert all(s[u] > 0 for u in (0, 1, 2))
        assert all(s[u] > 0 for u in cycle(7).nodes for s in [closeness_centrality(cycle(7))])

    def test_matches_networkx(self):
        nx = pytest.importorskip("networkx")
        g = erdos_renyi(30, 0.08, 4)
        h = nx.Graph(g.edges)
        h.add_nodes_from(g.nodes)
        ref = nx.closeness_centrality(h)
        got = closeness_centrality(g).scores
        assert all(got[u] == pytest.approx(ref[u], abs=1e-12) for u in g.nodes)


class TestBetweenness:
    def test_path3(self):
        assert betweenness_centrality(path(3), normalized=True)[1] == 1.0

    def test_star(self):
        assert betweenness_centrality(star(4), normalized=False)[0] == 6.0
        assert betweenness_centrality(star(4))[0] == 1.0

    def test_cycle4(self):
        raw = betweenness_centrality(cycle(4), normalized=False)
        norm = betweenness_centrality(cycle(4))
        assert set(raw.scores.values()) == {0.5}
        assert all(v == pytest.approx(1 / 6, abs=1e-15) for v in norm.scores.values())

    def test_small_graphs_zero(self):
        assert betweenness_centrality(path(2)).scores == {0: 0.0, 1: 0.0}
        assert betweenness_centrality(build_graph(isolated=[4])).scores == {4: 0.0}

    def test_ranking_ties_by_id(self):
        assert betweenness_centrality(cycle(4)).ranking() == [0, 1, 2, 3]

    @pytest.mark.parametrize("seed", range(30))
    def test_oracle(self, seed):
        g = erdos_renyi(9, (0.2, 0.4, 0.6)[seed % 3], seed)
        nb, eb = oracle_betweenness(g.edges, g.nodes)
        got = betweenness_centrality(g, normalized=False).scores
        assert all(abs(got[u] - float(nb[u])) <= 1e-9 for u in g.nodes)
        if g.m:
            ge = edge_betweenness(g)
            assert ge.keys() == eb.keys()
            assert all(abs(ge[e] - float(eb[e])) <= 1e-9 for e in g.edges)

    @pytest.mark.parametrize("seed", range(15))
    def test_path_interior_identity(self, seed):
        from _oracles import adjacency, distances_from
        g = erdos_renyi(10, 0.45, seed)
        adj = adjacency(g.edges, g.nodes)
        expected = 0
        for s in g.nodes:
            d = distances_from(adj, s)
            expected += sum(dt - 1 for t, dt in d.items() if t > s)
        nb, _ = oracle_betweenness(g.edges, g.nodes)
        assert sum(nb.values()) == expected
        got = sum(betweenness_centrality(g, normalized=False).scores.values())
        assert got == pytest.approx(expected, abs=1e-9)

    def test_normalized_bounds(self):
        for seed in range(10):
            s = betweenness_centrality(erdos_renyi(15, 0.2, seed))
            assert all(0.0 <= v <= 1.0 + 1e-12 for v in s.scores.values())


class TestEdgeBetweenness:
    def test_path3(self):
        assert edge_betweenness(path(3)) == {(0, 1): 2.0, (1, 2): 2.0}

    def test_bridge(self, barbell):
        eb = edge_betweenness(barbell)
        assert eb[(2, 3)] == 9.0
        assert max(v for e, v in eb.items() if e != (2, 3)) <= 4.0

    def test_triangle(self):
        assert set(edge_betweenness(cycle(3)).values()) == {1.0}

    def test_no_edges(self):
        with pytest.raises(NoEdges):
            edge_betweenness(build_graph(isolated=[0, 1]))

    @pytest.mark.parametrize("a,b", [(1, 1), (2, 5), (4, 3), (6, 6)])
    def test_bridge_product(self, a, b):
        left = [(i, j) for i in range(a) for j in range(i + 1, a)]
        right = [(a + i, a + j) for i in range(b) for j in range(i + 1, b)]
        g = build_graph(left + right + [(0, a)])
        assert edge_betweenness(g)[(0, a)] == a * b


@given(st.integers(0, 2**32), st.permutations(range(10)))
@settings(max_examples=40, deadline=None)
def test_relabeling_equivariance(seed, perm):
    g = erdos_renyi(10, 0.35, seed)
    h = build_graph([(perm[u], perm[v]) for u, v in g.edges], isolated=perm)
    for kind in CentralityKind:
        a, b = compute(g, kind).scores, compute(h, kind).scores
        assert all(a[u] == pytest.approx(b[perm[u]], abs=1e-12) for u in g.nodes)
