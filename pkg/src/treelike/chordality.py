"""Chordality: longest induced cycle, k-chordality, chordal and AT-free tests.

The chordality of a graph is the length of its longest chordless cycle,
with the convention that forests have chordality 2.  The search grows
induced paths from each root with bit-set pruning; a subset-enumeration
brute force is kept alongside as an oracle for small graphs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BudgetExceeded
from .graphs import DistanceMatrix, Graph, bits, connected_components

DENSE_VERTEX_CAP = 24
SPARSE_VERTEX_CAP = 96


@dataclass(frozen=True)
class ChordalityResult:
    """Longest-chordless-cycle length with a canonical witness.

    ``witness_cycle`` starts at its least vertex, second entry smaller
    than the last; it is None exactly when the graph has no cycle
    (lc = 2 by convention).
    """

    lc: int
    witness_cycle: tuple[int, ...] | None


class _Budget:
    def __init__(self, node_budget: int | None, budget_ms: float | None):
        self.node_budget = node_budget
        self.deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise BudgetExceeded(f"induced-cycle search exceeded {self.node_budget} nodes")
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("induced-cycle search exceeded time budget")


def _check_caps(g: Graph, dense_cap: int, sparse_cap: int):
    if g.n > sparse_cap:
        raise BudgetExceeded(f"induced-cycle search cap: n={g.n} exceeds {sparse_cap}")
    if g.n > dense_cap and g.edge_count() > 3 * g.n:
        raise BudgetExceeded(
            f"induced-cycle search cap: dense graph with n={g.n} exceeds {dense_cap}"
        )


def induced_cycles(g: Graph, budget: _Budget | None = None):
    """Generate every induced cycle once, as a canonical vertex tuple.

    A cycle is reported rooted at its least vertex, with the second
    entry smaller than the last.  Same-length cycles arrive in
    lexicographic order of their canonical tuples.
    """
    if budget is None:
        budget = _Budget(None, None)
    n, adj = g.n, g.adj

    for r in range(n):
        above = -1 << (r + 1)
        adj_r = adj[r]

        # path state: induced path from r; mid_nbrs = union of the
        # neighborhoods of its interior vertices.  Extensions must avoid
        # N(r) (a neighbor of r can only close the cycle), closures must
        # hit it.
        def grow(path: list[int], path_mask: int, mid_nbrs: int):
            budget.tick()
            last = path[-1]
            gt_v1 = -1 << (path[1] + 1)
            closure = adj[last] & adj_r & above & ~(mid_nbrs | path_mask) & gt_v1
            for w in bits(closure):
                yield tuple(path) + (w,)
            ext = adj[last] & above & ~(adj_r | mid_nbrs | path_mask)
            for w in bits(ext):
                path.append(w)
                yield from grow(path, path_mask | (1 << w), mid_nbrs | adj[last])
                path.pop()

        for v1 in bits(adj_r & above):
            yield from grow([r, v1], (1 << r) | (1 << v1), 0)


def longest_induced_cycle(
    g: Graph,
    *,
    node_budget: int | None = None,
    budget_ms: float | None = None,
    dense_cap: int = DENSE_VERTEX_CAP,
    sparse_cap: int = SPARSE_VERTEX_CAP,
) -> ChordalityResult:
    """Exact chordality with witness; raises BudgetExceeded, never guesses."""
    _check_caps(g, dense_cap, sparse_cap)
    budget = _Budget(node_budget, budget_ms)
    best_len = 2
    best: tuple[int, ...] | None = None
    for cycle in induced_cycles(g, budget):
        if len(cycle) > best_len:
            best_len = len(cycle)
            best = cycle
    return ChordalityResult(best_len, best)


def is_k_chordal(
    g: Graph,
    k: int,
    *,
    node_budget: int | None = None,
    budget_ms: float | None = None,
    dense_cap: int = DENSE_VERTEX_CAP,
    sparse_cap: int = SPARSE_VERTEX_CAP,
) -> tuple[bool, tuple[int, ...] | None]:
    """Early-exit test for induced cycles longer than k; witness on failure."""
    if k < 2:
        raise ValueError("k-chordality needs k >= 2")
    _check_caps(g, dense_cap, sparse_cap)
    budget = _Budget(node_budget, budget_ms)
    for cycle in induced_cycles(g, budget):
        if len(cycle) > k:
            return False, cycle
    return True, None


def lc_subsets_oracle(g: Graph) -> int:
    """Brute-force chordality: test every vertex subset for being an
    induced cycle.  Exponential; the oracle for n <= 12."""
    n, adj = g.n, g.adj
    best = 2
    for mask in range(7, 1 << n):
        size = mask.bit_count()
        if size < 3 or size <= best:
            continue
        ok = True
        for v in bits(mask):
            if (adj[v] & mask).bit_count() != 2:
                ok = False
                break
        if not ok:
            continue
        # 2-regular induced subgraph: a disjoint union of cycles; it is a
        # single cycle iff connected
        start = (mask & -mask).bit_length() - 1
        seen = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        if seen == mask:
            best = size
    return best


def is_chordal(g: Graph) -> bool:
    """Chordal recognition by maximum-cardinality search + PEO verification.

    Tolerates disconnected input (each component is tested on its own).
    """
    for comp in connected_components(g):
        if not _component_chordal(g, comp):
            return False
    return True


def _component_chordal(g: Graph, comp: int) -> bool:
    adj = g.adj
    members = list(bits(comp))
    if len(members) <= 2:
        return True
    weight = {v: 0 for v in members}
    visit: list[int] = []
    unnumbered = set(members)
    while unnumbered:
        z = max(sorted(unnumbered), key=lambda v: weight[v])
        visit.append(z)
        unnumbered.remove(z)
        for w in bits(adj[z] & comp):
            if w in unnumbered:
                weight[w] += 1
    # visit order reversed is the elimination order to verify
    elim = visit[::-1]
    pos = {v: i for i, v in enumerate(elim)}
    later = {}
    later_mask = 0
    for v in reversed(elim):
        later[v] = later_mask
        later_mask |= 1 << v
    for v in elim:
        s = adj[v] & later[v]
        if not s:
            continue
        u = min(bits(s), key=lambda w: pos[w])
        rest = s & ~(1 << u)
        if rest & ~adj[u]:
            return False
    return True


def chordality_of_complement_pair(
    g: Graph, **search_opts
) -> tuple[ChordalityResult, ChordalityResult]:
    """(lc(G), lc(co-G)); weakly chordal means both values are <= 4."""
    from .graphs import complement

    return (
        longest_induced_cycle(g, **search_opts),
        longest_induced_cycle(complement(g), **search_opts),
    )


def is_weakly_chordal(g: Graph, **search_opts) -> bool:
    a, b = chordality_of_complement_pair(g, **search_opts)
    return a.lc <= 4 and b.lc <= 4


def is_at_free(g: Graph, dm: DistanceMatrix) -> tuple[bool, tuple[int, int, int] | None]:
    """Asteroidal-triple freeness; returns the least witness triple if any.

    Two vertices see each other past z when some path joins them while
    avoiding the closed neighborhood of z, i.e. they share a component
    of G - N[z].
    """
    n, adj = g.n, g.adj
    full = (1 << n) - 1
    comp_id = []
    for z in range(n):
        ball = adj[z] | (1 << z)
        labels = [-1] * n
        remaining = full & ~ball
        cid = 0
        while remaining:
            src = (remaining & -remaining).bit_length() - 1
            seen = 1 << src
            frontier = 1 << src
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= adj[v]
                nxt &= remaining & ~seen
                seen |= nxt
                frontier = nxt
            for v in bits(seen):
                labels[v] = cid
            cid += 1
            remaining &= ~seen
        comp_id.append(labels)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                la, lb, lc_ = comp_id[c], comp_id[b], comp_id[a]
                if (
                    la[a] >= 0
                    and la[a] == la[b]
                    and lb[a] >= 0
                    and lb[a] == lb[c]
                    and lc_[b] >= 0
                    and lc_[b] == lc_[c]
                ):
                    return False, (a, b, c)
    return True, None
