"""Four-point condition, exhaustive hyperbolicity, Gromov products."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treelike.graphs import all_pairs_distances, cartesian_product, graph_from_edges, is_isometric_subset
from treelike.halfint import HalfInt
from treelike.hyperbolicity import (
    base_point_delta,
    farris_transform,
    four_point_delta,
    gromov_product,
    hyperbolicity,
)
from treelike.obstructions import catalog_entry

from .conftest import connected_graphs, cycle_graph, path_graph, seeded_connected


def cycle_delta_doubled(n):
    return 2 * (n // 4) - 1 if n % 4 == 1 else 2 * (n // 4)


class TestHalfInt:
    def test_rendering(self):
        assert str(HalfInt(4)) == "2"
        assert str(HalfInt(3)) == "3/2"
        assert str(HalfInt(0)) == "0"

    def test_ordering_and_rounding(self):
        assert HalfInt(3) < HalfInt(4)
        assert HalfInt(3).ceil() == 2 and HalfInt(3).floor() == 1
        assert HalfInt(4).ceil() == 2 == HalfInt(4).floor()
        assert HalfInt(3).as_fraction() == Fraction(3, 2)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            HalfInt(-1)


class TestFourPoint:
    def test_repeated_vertex_gives_zero(self):
        dm = all_pairs_distances(cycle_graph(5))
        assert four_point_delta(dm, 0, 0, 1, 3).doubled == 0
        assert four_point_delta(dm, 2, 1, 1, 3).doubled == 0

    def test_c4_opposite_pairs(self):
        dm = all_pairs_distances(cycle_graph(4))
        assert four_point_delta(dm, 0, 2, 1, 3) == HalfInt(2)

    def test_collinear_quadruple_zero(self):
        dm = all_pairs_distances(path_graph(7))
        assert four_point_delta(dm, 0, 2, 4, 6).doubled == 0

    @given(connected_graphs(max_n=8), st.data())
    @settings(max_examples=40, deadline=None)
    def test_invariance_under_all_24_orderings(self, g, data):
        dm = all_pairs_distances(g)
        quad = data.draw(st.lists(st.integers(0, g.n - 1), min_size=4, max_size=4))
        vals = {four_point_delta(dm, *perm).doubled for perm in itertools.permutations(quad)}
        assert len(vals) == 1


class TestHyperbolicity:
    def test_cycle_formula(self):
        for n in range(3, 25):
            g = cycle_graph(n)
            h = hyperbolicity(g, all_pairs_distances(g))
            assert h.delta_star.doubled == cycle_delta_doubled(n), n

    def test_c8_witness(self):
        h = hyperbolicity(cycle_graph(8), all_pairs_distances(cycle_graph(8)))
        assert h.delta_star == HalfInt(4)
        assert h.witness == (0, 2, 4, 6)

    def test_trees_are_zero(self):
        rng = random.Random(3)
        for _ in range(20):
            n = rng.randint(2, 10)
            edges = [(rng.randrange(i), i) for i in range(1, n)]
            g = graph_from_edges(n, edges)
            assert hyperbolicity(g, all_pairs_distances(g)).delta_star.doubled == 0

    def test_obstruction_patterns_are_one(self):
        for name in ["H1", "H2", "H3", "H4", "H5"]:
            e = catalog_entry(name)
            assert hyperbolicity(e.graph, e.dm).delta_star == HalfInt(2), name

    def test_grid_law(self):
        for m in range(2, 5):
            for n in range(2, 5):
                g = cartesian_product(path_graph(m), path_graph(n))
                h = hyperbolicity(g, all_pairs_distances(g))
                assert h.delta_star.doubled == 2 * (min(m, n) - 1)

    def test_small_graphs_zero(self):
        g = graph_from_edges(3, [(0, 1), (1, 2)])
        h = hyperbolicity(g, all_pairs_distances(g))
        assert h.delta_star.doubled == 0 and h.witness is None

    def test_witness_is_lexicographically_least(self):
        g = cycle_graph(8)
        dm = all_pairs_distances(g)
        h = hyperbolicity(g, dm)
        best = h.delta_star.doubled
        first = next(
            q
            for q in itertools.combinations(range(8), 4)
            if four_point_delta(dm, *q).doubled == best
        )
        assert h.witness == first

    def test_block_decomposition_agrees(self):
        rng = random.Random(9)
        for _ in range(200):
            g = seeded_connected(rng, rng.randint(4, 15), rng.uniform(0.15, 0.5))
            dm = all_pairs_distances(g)
            full = hyperbolicity(g, dm)
            blocked = hyperbolicity(g, dm, use_blocks=True)
            assert full.delta_star == blocked.delta_star

    def test_minimize_sum_refinement(self):
        g = cycle_graph(8)
        dm = all_pairs_distances(g)
        refined = hyperbolicity(g, dm, minimize_sum=True)
        plain = hyperbolicity(g, dm)
        assert refined.delta_star == plain.delta_star
        x, y, u, v = refined.witness
        d = dm.rows
        s = max(d[x][y] + d[u][v], d[x][u] + d[y][v], d[x][v] + d[y][u])
        for q in itertools.combinations(range(8), 4):
            if four_point_delta(dm, *q).doubled == plain.delta_star.doubled:
                a, b, c, e = q
                s2 = max(d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c])
                assert s <= s2

    @given(connected_graphs(max_n=8), st.data())
    @settings(max_examples=30, deadline=None)
    def test_isometric_subgraph_monotonicity(self, g, data):
        dm = all_pairs_distances(g)
        mask = data.draw(st.integers(1, (1 << g.n) - 1))
        members = [v for v in range(g.n) if mask >> v & 1]
        if len(members) < 4 or not is_isometric_subset(g, dm, mask):
            return
        sub = hyperbolicity(g, dm)  # host value
        vals = [
            four_point_delta(dm, *q).doubled for q in itertools.combinations(members, 4)
        ]
        assert max(vals) <= sub.delta_star.doubled


class TestGromovProduct:
    def test_degenerate_cases(self):
        dm = all_pairs_distances(cycle_graph(6))
        assert gromov_product(dm, 2, 2, 5).doubled == 2 * dm.dist(2, 5)
        assert gromov_product(dm, 4, 1, 4).doubled == 0

    def test_tree_product_is_distance_to_path(self):
        rng = random.Random(7)
        for _ in range(25):
            n = rng.randint(3, 10)
            edges = [(rng.randrange(i), i) for i in range(1, n)]
            g = graph_from_edges(n, edges)
            dm = all_pairs_distances(g)
            x, y, u = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            # brute-force the unique x-y path in the tree
            import networkx as nx

            G = nx.Graph(g.edges())
            G.add_nodes_from(range(n))
            path = nx.shortest_path(G, x, y)
            dist_to_path = min(dm.dist(u, w) for w in path)
            assert gromov_product(dm, x, y, u).doubled == 2 * dist_to_path


class TestBasePoint:
    def test_tree_zero(self):
        g = graph_from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
        dm = all_pairs_distances(g)
        assert all(base_point_delta(g, dm, u).doubled == 0 for u in range(6))

    def test_c4_every_base_is_one(self):
        g = cycle_graph(4)
        dm = all_pairs_distances(g)
        assert {base_point_delta(g, dm, u).doubled for u in range(4)} == {2}

    def test_max_over_bases_equals_delta_star(self):
        rng = random.Random(13)
        for _ in range(100):
            g = seeded_connected(rng, rng.randint(4, 10), rng.uniform(0.25, 0.7))
            dm = all_pairs_distances(g)
            ds = hyperbolicity(g, dm).delta_star.doubled
            per_u = [base_point_delta(g, dm, u).doubled for u in range(g.n)]
            assert ds == max(per_u)
            assert ds <= 2 * min(per_u)


class TestFarris:
    def test_base_row_is_rho(self):
        g = cycle_graph(5)
        dm = all_pairs_distances(g)
        t = farris_transform(dm, Fraction(3, 2), 2)
        for x in range(5):
            assert t[2][x] == Fraction(3, 2)
        assert t[2][2] == Fraction(3, 2)

    def test_zero_rho_diagonal(self):
        dm = all_pairs_distances(cycle_graph(5))
        t = farris_transform(dm, 0, 1)
        assert t[1][1] == 0

    def test_symmetry_and_p3_spot_value(self):
        g = path_graph(3)
        dm = all_pairs_distances(g)
        t = farris_transform(dm, 2, 1)
        # (0 . 2)_1 = (1 + 1 - 2)/2 = 0, so the entry is rho
        assert t[0][2] == 2 and t[2][0] == 2
        # (0 . 1)_1 = (1 + 0 - 1)/2 = 0
        assert t[0][1] == 2
        # (0 . 0)_1 = 1
        assert t[0][0] == 1
