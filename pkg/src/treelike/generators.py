"""Deterministic graph family constructors and seeded random samplers.

Covers every family used to establish tightness: cycles, grids, the
chorded-cycle F family, the two subdivision-based extremal families
seeded by the inner-K4 obstruction and by F_2, plus seeded samplers for
verification campaigns.  Same spec and seed always reproduce identical
edge lists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .chordality import is_k_chordal
from .errors import BudgetExceeded
from .graphs import Graph, cartesian_product, graph_from_edges, is_connected, subdivision, subdivision_label


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}") if n > 1 else Graph(1, (0,), "P1")


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")


def gen_grid(*dims: int) -> Graph:
    """Grid graph as an iterated Cartesian product of paths."""
    if not dims or any(m < 1 for m in dims):
        raise ValueError("grid dimensions must be positive")
    g = gen_path(dims[0])
    for m in dims[1:]:
        g = cartesian_product(g, gen_path(m))
    return g.with_name("G_" + "x".join(str(m) for m in dims))


def gen_f(t: int) -> Graph:
    """4t-cycle with short chords at two antipodal spots; outerplanar,
    chordality 4t-2, hyperbolicity t - 1/2."""
    if t < 2:
        raise ValueError("F family needs t >= 2")
    n = 4 * t
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(0, 2), (2 * t, 2 * t + 2)]
    return graph_from_edges(n, edges, f"F{t}")


def _h2_seed() -> Graph:
    from .obstructions import catalog_entry

    return catalog_entry("H2").graph


# Attachment points for the planar extremal family: the new edges cut
# the four corners of the subdivided inner-K4 obstruction.  Labels as
# (tail, head, steps-from-tail) triples of the seed graph H2 with
# vertices x=0, y=1, u=2, v=3, a=4, b=5, c=6, d=7.
def _g4t_attachments(t: int, q: int):
    return {
        "u_a": (2, 4, q),
        "u_c": (6, 2, q - 1),
        "y_c": (1, 6, q),
        "y_d": (7, 1, q - 1),
        "v_d": (3, 7, q),
        "v_b": (5, 3, q - 1),
        "x_b": (0, 5, q),
        "x_a": (4, 0, q - 1),
    }


def gen_g4t(t: int, q: int) -> Graph:
    """Planar graph with chordality 4t and hyperbolicity t, built by
    subdividing the inner-K4 obstruction and shortcutting its corners."""
    if not 0 < q < t:
        raise ValueError("need 0 < q < t")
    h2 = _h2_seed()
    s = subdivision(h2, t)
    at = {k: subdivision_label(h2, t, *v) for k, v in _g4t_attachments(t, q).items()}
    extra = [
        (at["u_a"], at["u_c"]),
        (at["x_a"], at["x_b"]),
        (at["y_c"], at["y_d"]),
        (at["v_b"], at["v_d"]),
    ]
    edges = s.edges() + [(min(a, b), max(a, b)) for a, b in extra]
    return graph_from_edges(s.n, edges, f"G4t(t={t},q={q})")


def gen_g4t1(t: int, q: int) -> Graph:
    """The odd companion: one corner shortcut shifted by a single step,
    stretching the extremal cycle to length 4t+1."""
    if not 0 < q < t:
        raise ValueError("need 0 < q < t")
    h2 = _h2_seed()
    s = subdivision(h2, t)
    at = {k: subdivision_label(h2, t, *v) for k, v in _g4t_attachments(t, q).items()}
    y_d_new = subdivision_label(h2, t, 7, 1, q)
    extra = [
        (at["u_a"], at["u_c"]),
        (at["x_a"], at["x_b"]),
        (at["y_c"], y_d_new),
        (at["v_b"], at["v_d"]),
    ]
    edges = s.edges() + [(min(a, b), max(a, b)) for a, b in extra]
    return graph_from_edges(s.n, edges, f"G4t1(t={t},q={q})")


def gen_g6(t: int, q: int) -> Graph:
    """Outerplanar graph with chordality 6(2t+1) and hyperbolicity
    3t + 3/2: F_2 subdivided 2t+1 times with two corner shortcuts."""
    if not 0 < q < t:
        raise ValueError("need 0 < q < t")
    f2 = gen_f(2)
    s = subdivision(f2, 2 * t + 1)
    v21 = subdivision_label(f2, 2 * t + 1, 1, 0, q)
    v23 = subdivision_label(f2, 2 * t + 1, 2, 1, q - 1)
    v65 = subdivision_label(f2, 2 * t + 1, 5, 4, q)
    v67 = subdivision_label(f2, 2 * t + 1, 6, 5, q - 1)
    edges = s.edges() + [(min(v21, v23), max(v21, v23)), (min(v65, v67), max(v65, v67))]
    return graph_from_edges(s.n, edges, f"G6(t={t},q={q})")


def gen_g61(t: int, q: int) -> Graph:
    """The companion with chordality 6(2t+1)+1 and the same hyperbolicity."""
    if not 0 < q < t:
        raise ValueError("need 0 < q < t")
    f2 = gen_f(2)
    s = subdivision(f2, 2 * t + 1)
    v21 = subdivision_label(f2, 2 * t + 1, 1, 0, q)
    v23_new = subdivision_label(f2, 2 * t + 1, 2, 1, q)
    v65 = subdivision_label(f2, 2 * t + 1, 5, 4, q)
    v67 = subdivision_label(f2, 2 * t + 1, 6, 5, q - 1)
    edges = s.edges() + [(min(v21, v23_new), max(v21, v23_new)), (min(v65, v67), max(v65, v67))]
    return graph_from_edges(s.n, edges, f"G61(t={t},q={q})")


# ---------------------------------------------------------------------------
# seeded random samplers


def gen_random(n: int, p: float, seed: int, tries: int = 2000) -> Graph:
    """Connected Erdos-Renyi sample by rejection."""
    if n < 1 or not 0 <= p <= 1:
        raise ValueError("need n >= 1 and 0 <= p <= 1")
    rng = random.Random(seed)
    for _ in range(tries):
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        g = graph_from_edges(n, edges, f"gnp({n},{p},{seed})") if edges else Graph(n, (0,) * n)
        if is_connected(g):
            return g
    raise BudgetExceeded(f"no connected sample in {tries} tries for n={n}, p={p}")


def gen_tree_random(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n < 1:
        raise ValueError("need n >= 1")
    name = f"tree({n},{seed})"
    if n == 1:
        return Graph(1, (0,), name)
    if n == 2:
        return graph_from_edges(2, [(0, 1)], name)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, w), max(u, w)))
    return graph_from_edges(n, edges, name)


def gen_block_random(n: int, seed: int) -> Graph:
    """Random block graph: cliques glued at cut vertices (0-hyperbolic)."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return Graph(1, (0,), f"block({n},{seed})")
    rng = random.Random(seed)
    edges = []
    have = 1
    while have < n:
        attach = rng.randrange(have)
        size = rng.randint(1, min(3, n - have))
        clique = [attach] + list(range(have, have + size))
        edges += [(min(a, b), max(a, b)) for i, a in enumerate(clique) for b in clique[i + 1 :]]
        have += size
    return graph_from_edges(n, sorted(set(edges)), f"block({n},{seed})")


def gen_k_chordal_random(n: int, k: int, seed: int, tries: int = 400) -> Graph:
    """Rejection-sample a connected graph with no induced cycle beyond k.

    Uniformity is not claimed; densities vary across attempts to spread
    the accepted population.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    rng = random.Random(seed)
    for attempt in range(tries):
        p = rng.uniform(0.3, 0.8)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        if not edges:
            continue
        g = graph_from_edges(n, edges, f"kchordal({n},{k},{seed})")
        if not is_connected(g):
            continue
        ok, _ = is_k_chordal(g, k)
        if ok:
            return g
    raise BudgetExceeded(f"no {k}-chordal sample in {tries} tries for n={n}")


# ---------------------------------------------------------------------------
# family dispatch (CLI surface)

_FAMILIES = {
    "cycle": (gen_cycle, 1, False),
    "path": (gen_path, 1, False),
    "complete": (gen_complete, 1, False),
    "grid": (gen_grid, None, False),
    "f": (gen_f, 1, False),
    "g4t": (gen_g4t, 2, False),
    "g4t1": (gen_g4t1, 2, False),
    "g6": (gen_g6, 2, False),
    "g61": (gen_g61, 2, False),
    "gnp": (None, 2, True),
    "tree_random": (gen_tree_random, 1, True),
    "block_random": (gen_block_random, 1, True),
    "k_chordal_random": (gen_k_chordal_random, 2, True),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance; random families also carry a seed."""

    family: str
    params: tuple[int, ...] = ()
    seed: int | None = None

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; known: {sorted(_FAMILIES)}")
        _, arity, needs_seed = _FAMILIES[self.family]
        if arity is not None and len(self.params) != arity:
            raise ValueError(f"family {self.family} takes {arity} parameter(s)")
        if needs_seed and self.seed is None:
            raise ValueError(f"family {self.family} needs a seed")


def build_family(spec: FamilySpec) -> Graph:
    fn, _, needs_seed = _FAMILIES[spec.family]
    if spec.family == "gnp":
        n, p_percent = spec.params
        return gen_random(n, p_percent / 100.0, spec.seed)
    if needs_seed:
        return fn(*spec.params, spec.seed)
    return fn(*spec.params)
