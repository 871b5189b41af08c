"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from treelike.graphs import Graph, graph_from_edges

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def path_graph(n: int) -> Graph:
    if n == 1:
        return Graph(1, (0,), "P1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 9, extra_edge_bias: float = 0.3):
    """Connected graph: a drawn spanning path under a random relabeling
    plus independently drawn extra edges."""
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(n)))
    edges = {(min(perm[i], perm[i + 1]), max(perm[i], perm[i + 1])) for i in range(n - 1)}
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and draw(st.booleans() if extra_edge_bias == 0.5 else st.sampled_from([True] + [False] * 2)):
                edges.add((i, j))
    return graph_from_edges(n, sorted(edges))


def seeded_connected(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        if not edges:
            continue
        g = graph_from_edges(n, edges)
        from treelike.graphs import is_connected

        if is_connected(g):
            return g


@pytest.fixture(scope="session")
def graph6_paths():
    paths = sorted(DATA_DIR.glob("connected_*.g6"))
    assert paths, "run scripts/enumerate_graphs.py to build the data files"
    return tuple(str(p) for p in paths)
