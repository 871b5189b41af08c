"""Core graph type, parsing, metric primitives, constructions."""

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treelike.errors import DisconnectedGraphError, GraphFormatError, SizeCapError
from treelike.graphs import (
    all_pairs_distances,
    biconnected_components,
    canonical_key,
    cartesian_product,
    complement,
    diameter,
    graph_from_edge_list_text,
    graph_from_edges,
    graph_from_graph6,
    graph_power,
    graph_to_edge_list_text,
    graph_to_graph6,
    is_block_graph,
    is_connected,
    is_isomorphic,
    is_isometric_subset,
    parse_graph,
    subdivision,
    subdivision_label,
)

from .conftest import complete_graph, connected_graphs, cycle_graph, path_graph, seeded_connected


def nx_of(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


class TestParsing:
    def test_edge_list_path(self):
        g = graph_from_edge_list_text("0 1\n1 2")
        assert g.n == 3 and g.edges() == [(0, 1), (1, 2)]

    def test_edge_list_c4(self):
        g = graph_from_edge_list_text("0 1\n1 2\n2 3\n3 0")
        assert g.n == 4 and g.edge_count() == 4
        assert all(g.degree(v) == 2 for v in range(4))

    def test_comments_and_blanks(self):
        g = graph_from_edge_list_text("# header\n\n0 1  # trailing\n1 2\n")
        assert g.edges() == [(0, 1), (1, 2)]

    def test_duplicate_edge_warns(self):
        with pytest.warns(UserWarning, match="duplicate"):
            g = graph_from_edge_list_text("0 1\n1 0\n1 2")
        assert g.edge_count() == 2

    def test_self_loop_rejected(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            graph_from_edge_list_text("0 0")

    def test_empty_rejected(self):
        with pytest.raises(GraphFormatError, match="empty"):
            graph_from_edge_list_text("# nothing\n")

    def test_malformed_line(self):
        with pytest.raises(GraphFormatError, match="line 1"):
            graph_from_edge_list_text("0 1 2")

    def test_graph6_star_decoded_by_hand(self):
        # 'D?{': n=5, bits 000000 111100 -> only vertex 4 adjacent to all
        g = graph_from_graph6("D?{")
        assert g.n == 5
        assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]

    def test_graph6_header_tolerated(self):
        assert graph_from_graph6(">>graph6<<D?{").n == 5

    def test_graph6_roundtrip_vs_networkx(self):
        rng = random.Random(0)
        for _ in range(50):
            n = rng.randint(2, 14)
            edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
            g = graph_from_edges(n, edges)
            s = graph_to_graph6(g)
            assert sorted(nx.from_graph6_bytes(s.encode()).edges()) == g.edges()
            assert graph_from_graph6(nx.to_graph6_bytes(nx_of(g), header=False).decode().strip()).adj == g.adj

    def test_parse_auto_detect(self):
        assert parse_graph("0 1\n1 2").n == 3
        assert parse_graph("D?{").n == 5

    def test_edge_list_roundtrip(self):
        g = cycle_graph(7)
        assert parse_graph(graph_to_edge_list_text(g)).adj == g.adj


class TestDistances:
    def test_c4_metric(self):
        dm = all_pairs_distances(cycle_graph(4))
        assert dm.dist(0, 2) == 2 and dm.dist(1, 3) == 2
        assert dm.dist(0, 1) == 1

    def test_path_endpoints(self):
        for k in range(1, 8):
            dm = all_pairs_distances(path_graph(k + 1))
            assert dm.dist(0, k) == k

    def test_grid_corner(self):
        g = cartesian_product(path_graph(3), path_graph(3))
        dm = all_pairs_distances(g)
        assert diameter(g, dm) == 4 and dm.dist(0, 8) == 4

    def test_disconnected_names_vertices(self):
        g = graph_from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraphError) as e:
            all_pairs_distances(g)
        assert e.value.u == 0 and e.value.v in (2, 3)

    def test_size_cap(self):
        with pytest.raises(SizeCapError):
            all_pairs_distances(path_graph(10), cap=5)

    @given(connected_graphs(max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_triangle_inequality_and_edge_iff_one(self, g):
        dm = all_pairs_distances(g)
        n = g.n
        for u in range(n):
            for v in range(n):
                assert dm.dist(u, v) == dm.dist(v, u)
                assert (dm.dist(u, v) == 1) == g.has_edge(u, v)
                for w in range(n):
                    assert dm.dist(u, w) <= dm.dist(u, v) + dm.dist(v, w)


class TestIsometricSubsets:
    def test_diameter_two_subset_is_isometric(self):
        g = complete_graph(5)
        dm = all_pairs_distances(g)
        assert is_isometric_subset(g, dm, [0, 2, 4])

    def test_geodesic_is_isometric(self):
        g = cycle_graph(6)
        dm = all_pairs_distances(g)
        assert is_isometric_subset(g, dm, [0, 1, 2, 3])

    def test_two_disjoint_edges_in_c6_not_isometric(self):
        g = cycle_graph(6)
        dm = all_pairs_distances(g)
        assert not is_isometric_subset(g, dm, [0, 1, 3, 4])

    def test_shortcut_agrees_with_full_check(self):
        # the distance <= 2 skip can never flip a verdict
        rng = random.Random(42)
        checked = 0
        while checked < 1000:
            g = seeded_connected(rng, rng.randint(3, 9), 0.4)
            dm = all_pairs_distances(g)
            mask = rng.randrange(1, 1 << g.n)
            fast = is_isometric_subset(g, dm, mask)
            full = is_isometric_subset(g, dm, mask, skip_small=False)
            assert fast == full
            checked += 1


class TestConstructions:
    def test_k1_product_identity(self):
        g = cycle_graph(5)
        prod = cartesian_product(path_graph(1), g)
        assert prod.n == 5 and prod.edges() == g.edges()

    def test_p2_squared_is_c4(self):
        prod = cartesian_product(path_graph(2), path_graph(2))
        assert is_isomorphic(prod, cycle_graph(4))

    def test_product_distance_law(self):
        g1, g2 = path_graph(3), path_graph(4)
        prod = cartesian_product(g1, g2)
        dm = all_pairs_distances(prod)
        d1 = all_pairs_distances(g1)
        d2 = all_pairs_distances(g2)
        for a in range(3):
            for b in range(4):
                for c in range(3):
                    for e in range(4):
                        assert dm.dist(a * 4 + b, c * 4 + e) == d1.dist(a, c) + d2.dist(b, e)

    def test_product_cap(self):
        with pytest.raises(SizeCapError):
            cartesian_product(path_graph(100), path_graph(100), cap=4096)

    def test_subdivision_of_c4_is_long_cycle(self):
        for t in (1, 2, 3):
            s = subdivision(cycle_graph(4), t)
            assert is_isomorphic(s, cycle_graph(4 * t))

    def test_subdivision_identity(self):
        g = cycle_graph(5)
        assert subdivision(g, 1).adj == g.adj

    def test_subdivision_distance_law(self):
        g = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
        for t in (2, 3):
            s = subdivision(g, t)
            dm_g = all_pairs_distances(g)
            dm_s = all_pairs_distances(s)
            for u in range(g.n):
                for v in range(g.n):
                    assert dm_s.dist(u, v) == t * dm_g.dist(u, v)

    def test_subdivision_labels(self):
        g = cycle_graph(4)
        t = 3
        s = subdivision(g, t)
        for u, v in g.edges():
            assert subdivision_label(g, t, u, v, 0) == u
            assert subdivision_label(g, t, u, v, t) == v
            for p in range(t + 1):
                # the label is orientation-consistent
                assert subdivision_label(g, t, u, v, p) == subdivision_label(g, t, v, u, t - p)
            chain = [subdivision_label(g, t, u, v, p) for p in range(t + 1)]
            for a, b in zip(chain, chain[1:]):
                assert s.has_edge(a, b)

    def test_power(self):
        p3 = path_graph(3)
        assert graph_power(p3, 1).adj == p3.adj
        assert is_isomorphic(graph_power(p3, 2), complete_graph(3))
        c6sq = graph_power(cycle_graph(6), 2)
        assert all(c6sq.degree(v) == 4 for v in range(6))

    def test_complement(self):
        co_c4 = complement(cycle_graph(4))
        assert sorted(co_c4.edges()) == [(0, 2), (1, 3)]
        assert complement(complete_graph(4)).edge_count() == 0
        assert is_isomorphic(complement(cycle_graph(5)), cycle_graph(5))


class TestBlocks:
    def test_tree_blocks_are_edges(self):
        g = graph_from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
        blocks = biconnected_components(g)
        assert sorted(tuple(sorted(b.members())) for b in blocks) == [(0, 1), (1, 2), (1, 3), (3, 4)]

    def test_cycle_single_block(self):
        assert len(biconnected_components(cycle_graph(5))) == 1

    def test_two_triangles_sharing_vertex(self):
        g = graph_from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        blocks = biconnected_components(g)
        assert sorted(tuple(sorted(b.members())) for b in blocks) == [(0, 1, 2), (2, 3, 4)]

    @given(connected_graphs(max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_blocks_match_networkx_and_cover_edges(self, g):
        mine = sorted(tuple(sorted(b.members())) for b in biconnected_components(g))
        ref = sorted(tuple(sorted(c)) for c in nx.biconnected_components(nx_of(g)))
        assert mine == ref
        covered = set()
        for b in biconnected_components(g):
            mem = set(b.members())
            covered |= {(u, v) for u, v in g.edges() if u in mem and v in mem}
        assert covered == set(g.edges())

    def test_block_graph_detection(self):
        g = graph_from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        assert is_block_graph(g)
        assert not is_block_graph(cycle_graph(4))


class TestCanonicalForms:
    @given(connected_graphs(max_n=8), st.randoms(use_true_random=False))
    @settings(max_examples=50, deadline=None)
    def test_relabel_invariance(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        relabeled = graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_key(g) == canonical_key(relabeled)
        assert is_isomorphic(g, relabeled)

    def test_distinguishes_c6_from_two_triangles(self):
        two_tri = graph_from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert canonical_key(cycle_graph(6)) != canonical_key(two_tri)
