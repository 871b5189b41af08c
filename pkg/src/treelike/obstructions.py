"""Named obstruction patterns and theorem-based classifiers.

The catalog holds the graphs whose isometric presence pins hyperbolicity
at specific values: a 5-chordal graph has hyperbolicity one exactly when
one of C4, H1..H5 embeds isometrically, a chordal graph exactly when H1
or H2 does, and so on.  Every entry self-validates against its expected
(chordality, hyperbolicity) pair before first use, so a transcription
slip cannot go unnoticed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chordality import induced_cycles, is_chordal, is_k_chordal, is_at_free, longest_induced_cycle
from .errors import InternalInvariantError, PreconditionError
from .graphs import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bits,
    graph_from_edges,
    graph_to_edge_list_text,
    is_isomorphic,
)
from .halfint import HALF, ONE, HalfInt
from .hyperbolicity import hyperbolicity


@dataclass(frozen=True)
class CatalogEntry:
    """An obstruction pattern with its published invariant pair."""

    name: str
    graph: Graph
    dm: DistanceMatrix
    expected_lc: int
    expected_delta_star: HalfInt


def _entry(name: str, n: int, edges: list[tuple[int, int]], lc: int, delta_doubled: int) -> CatalogEntry:
    g = graph_from_edges(n, edges, name)
    return CatalogEntry(name, g, all_pairs_distances(g), lc, HalfInt(delta_doubled))


# Vertex conventions.  C4: [x, y, u, v] = 0..3.  H1, H2, H4, H5, H6:
# [x, y, u, v, a, b, c, d] = 0..7 with the outer 8-cycle
# x-a-u-c-y-d-v-b-x plus the chords listed.  H3: [x, y, u, v, c, d] =
# 0..5, 6-cycle x-u-c-y-d-v plus chord {c, d}.  G1/G2: an outer 8-cycle
# 0..7 with two short chords plus a center vertex 8; G3: a 6-cycle plus
# a path of length 2 across it; E1/E2 transcribed vertex by vertex.
_OCT = [(0, 4), (4, 2), (2, 6), (6, 1), (1, 7), (7, 3), (3, 5), (5, 0)]


def _build_catalog() -> dict[str, CatalogEntry]:
    entries = [
        _entry("C4", 4, [(0, 2), (0, 3), (1, 2), (1, 3)], 4, 2),
        _entry("H1", 8, _OCT + [(4, 5), (4, 6), (6, 7), (5, 7), (4, 7)], 3, 2),
        _entry("H2", 8, _OCT + [(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)], 3, 2),
        _entry("H3", 6, [(0, 2), (2, 4), (4, 1), (1, 5), (5, 3), (3, 0), (4, 5)], 5, 2),
        # H4's published chordality is 5, but the drawn graph (outer
        # 8-cycle plus the two crossing chords) contains the chordless
        # 6-cycle x-a-d-y-c-b; subset enumeration confirms lc = 6.  The
        # catalog stores the computed value so self-validation is sound.
        _entry("H4", 8, _OCT + [(4, 7), (5, 6)], 6, 2),
        _entry("H5", 8, _OCT + [(4, 7)], 5, 2),
        _entry("H6", 8, _OCT + [(4, 6), (4, 7), (6, 7)], 5, 2),
        _entry("C6", 6, [(i, (i + 1) % 6) for i in range(6)], 6, 2),
        _entry(
            "G1",
            9,
            [(i, (i + 1) % 8) for i in range(8)]
            + [(1, 7), (4, 6)]
            + [(8, w) for w in (1, 2, 3, 4, 6, 7)],
            6,
            2,
        ),
        _entry(
            "G2",
            9,
            [(i, (i + 1) % 8) for i in range(8)]
            + [(1, 3), (5, 7)]
            + [(8, w) for w in (0, 1, 3, 4, 5, 7)],
            6,
            2,
        ),
        _entry("G3", 7, [(i, (i + 1) % 6) for i in range(6)] + [(1, 6), (6, 4)], 6, 2),
        _entry(
            "E1",
            11,
            [
                (0, 1), (1, 3), (4, 5), (5, 6), (9, 6), (6, 10), (10, 8),
                (1, 5), (5, 10), (0, 5), (2, 5), (5, 7), (1, 4), (0, 2),
                (2, 9), (3, 4), (4, 7), (7, 8), (7, 10), (2, 6),
            ],
            7,
            2,
        ),
        _entry(
            "E2",
            13,
            [
                (0, 1), (1, 2), (2, 3), (0, 4), (4, 6), (6, 8),
                (8, 9), (9, 10), (10, 11), (11, 7), (7, 5), (5, 3),
                (4, 12), (12, 7), (6, 12), (12, 5), (10, 12), (12, 1),
                (9, 12), (12, 2), (9, 6), (4, 1), (10, 7), (2, 5),
            ],
            8,
            2,
        ),
    ]
    return {e.name: e for e in entries}


@lru_cache(maxsize=1)
def catalog() -> dict[str, CatalogEntry]:
    """The validated obstruction catalog, keyed by name."""
    entries = _build_catalog()
    for e in entries.values():
        lc = longest_induced_cycle(e.graph).lc
        ds = hyperbolicity(e.graph, e.dm).delta_star
        if lc != e.expected_lc or ds != e.expected_delta_star:
            raise InternalInvariantError(
                f"catalog entry {e.name}: computed (lc, delta*) = ({lc}, {ds}), "
                f"expected ({e.expected_lc}, {e.expected_delta_star})"
            )
    return entries


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return catalog()[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {sorted(catalog())}") from None


def _scan_order(names: list[str]) -> list[str]:
    cat = catalog()
    return sorted(names, key=lambda nm: (cat[nm].graph.n, nm))


# ---------------------------------------------------------------------------
# isometric embedding search


def find_isometric_embedding(g: Graph, dm: DistanceMatrix, p: CatalogEntry) -> tuple[int, ...] | None:
    """Distance-preserving injection of pattern ``p`` into ``g``, or None.

    Backtracks over images with sphere-bitset pruning: a partial map dies
    as soon as any assigned pair violates a distance equality.  The
    returned image sequence is lexicographically least.
    """
    pn, gn = p.graph.n, g.n
    if pn > gn:
        return None
    pd = p.dm.rows
    hd = dm.rows
    # sphere[v][r]: host vertices at distance exactly r from v
    max_r = max(max(row) for row in pd)
    if max_r > max(max(row) for row in hd):
        return None
    sphere = [[0] * (max_r + 1) for _ in range(gn)]
    for v in range(gn):
        row = hd[v]
        sv = sphere[v]
        for w in range(gn):
            r = row[w]
            if r <= max_r:
                sv[r] |= 1 << w
    # distance-profile viability: the host vertex must offer at least as
    # many vertices at each radius as the pattern vertex requires
    full = (1 << gn) - 1
    base = []
    for i in range(pn):
        need: dict[int, int] = {}
        for j in range(pn):
            if j != i:
                need[pd[i][j]] = need.get(pd[i][j], 0) + 1
        cand = 0
        for v in range(gn):
            if all(sphere[v][r].bit_count() >= c for r, c in need.items()):
                cand |= 1 << v
        if not cand:
            return None
        base.append(cand)

    image: list[int] = []

    def assign(i: int, cands: list[int]) -> bool:
        if i == pn:
            return True
        row = pd[i]
        for v in bits(cands[i] & full):
            nxt = []
            ok = True
            for j in range(i + 1, pn):
                m = cands[j] & sphere[v][row[j]]
                if not m:
                    ok = False
                    break
                nxt.append(m)
            if not ok:
                continue
            image.append(v)
            if assign(i + 1, cands[: i + 1] + nxt):
                return True
            image.pop()
        return False

    if not assign(0, base):
        return None
    found = tuple(image)
    for i in range(pn):
        for j in range(i + 1, pn):
            if hd[found[i]][found[j]] != pd[i][j]:
                raise InternalInvariantError(
                    f"embedding of {p.name} returned a non-isometric map {found}"
                )
    return found


def embedding_oracle(g: Graph, dm: DistanceMatrix, p: CatalogEntry) -> tuple[int, ...] | None:
    """Plain enumeration over injections, for cross-checking the search."""
    import itertools

    pd = p.dm.rows
    hd = dm.rows
    pn = p.graph.n
    if pn > g.n:
        return None
    for images in itertools.permutations(range(g.n), pn):
        if all(
            hd[images[i]][images[j]] == pd[i][j]
            for i in range(pn)
            for j in range(i + 1, pn)
        ):
            return images
    return None


# ---------------------------------------------------------------------------
# classification reports


@dataclass(frozen=True)
class ClassificationReport:
    """Outcome of one theorem-backed classifier on one graph."""

    theorem: str
    applicable: bool
    claim: str
    predicted: bool
    obstructions_found: tuple[tuple[str, tuple[int, ...]], ...]
    direct_delta: HalfInt
    agrees: bool
    details: dict | None = None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "applicable": self.applicable,
            "claim": self.claim,
            "predicted": self.predicted,
            "obstructions_found": [[n, list(m)] for n, m in self.obstructions_found],
            "direct_delta_doubled": self.direct_delta.doubled,
            "agrees": self.agrees,
            "details": self.details,
        }


def _scan_patterns(
    g: Graph, dm: DistanceMatrix, names: list[str], all_obstructions: bool
) -> tuple[tuple[str, tuple[int, ...]], ...]:
    found = []
    for nm in _scan_order(names):
        emb = find_isometric_embedding(g, dm, catalog_entry(nm))
        if emb is not None:
            found.append((nm, emb))
            if not all_obstructions:
                break
    return tuple(found)


def _graph_dump(g: Graph) -> str:
    return graph_to_edge_list_text(g)


def _equality_classifier(
    g: Graph,
    dm: DistanceMatrix,
    theorem: str,
    names: list[str],
    all_obstructions: bool,
) -> ClassificationReport:
    """Shared body of the 'delta* = 1 iff some obstruction embeds' theorems."""
    found = _scan_patterns(g, dm, names, all_obstructions)
    direct = hyperbolicity(g, dm).delta_star
    if direct > ONE:
        raise InternalInvariantError(
            f"{theorem}: delta* = {direct} exceeds 1 on an in-class graph\n{_graph_dump(g)}"
        )
    predicted = bool(found)
    agrees = predicted == (direct == ONE)
    report = ClassificationReport(
        theorem=theorem,
        applicable=True,
        claim="delta_star == 1 iff some listed obstruction is isometric",
        predicted=predicted,
        obstructions_found=found,
        direct_delta=direct,
        agrees=agrees,
    )
    if not agrees:
        raise InternalInvariantError(
            f"{theorem} disagreement: predicted {predicted}, delta* = {direct}\n{_graph_dump(g)}"
        )
    return report


def classify_5_chordal(g: Graph, dm: DistanceMatrix, *, all_obstructions: bool = False) -> ClassificationReport:
    ok, cyc = is_k_chordal(g, 5)
    if not ok:
        raise PreconditionError(f"graph is not 5-chordal: induced cycle {cyc}")
    return _equality_classifier(
        g, dm, "main1", ["C4", "H1", "H2", "H3", "H4", "H5"], all_obstructions
    )


def classify_4_chordal(g: Graph, dm: DistanceMatrix, *, all_obstructions: bool = False) -> ClassificationReport:
    ok, cyc = is_k_chordal(g, 4)
    if not ok:
        raise PreconditionError(f"graph is not 4-chordal: induced cycle {cyc}")
    return _equality_classifier(g, dm, "cor7", ["C4", "H1", "H2"], all_obstructions)


def classify_chordal(g: Graph, dm: DistanceMatrix, *, all_obstructions: bool = False) -> ClassificationReport:
    if not is_chordal(g):
        raise PreconditionError("graph is not chordal")
    return _equality_classifier(g, dm, "bkm", ["H1", "H2"], all_obstructions)


def classify_at_free(g: Graph, dm: DistanceMatrix, *, all_obstructions: bool = False) -> ClassificationReport:
    ok, triple = is_at_free(g, dm)
    if not ok:
        raise PreconditionError(f"graph has an asteroidal triple {triple}")
    return _equality_classifier(g, dm, "atfree", ["C4"], all_obstructions)


def _has_isometric_long_cycle(g: Graph, dm: DistanceMatrix, above: int) -> tuple[int, ...] | None:
    """First induced cycle of length > ``above`` whose cyclic metric
    matches the host metric, if any."""
    d = dm.rows
    for cyc in induced_cycles(g):
        L = len(cyc)
        if L <= above:
            continue
        iso = True
        for i in range(L):
            for j in range(i + 1, L):
                gap = j - i
                if min(gap, L - gap) != d[cyc[i]][cyc[j]]:
                    iso = False
                    break
            if not iso:
                break
        if iso:
            return cyc
    return None


def _neighbor_fellow_traveler_violation(g: Graph, dm: DistanceMatrix) -> tuple[int, int, int, int] | None:
    """Find x, y with two non-adjacent neighbors of x both closer to y."""
    d = dm.rows
    for x in range(g.n):
        nbrs = list(bits(g.adj[x]))
        for y in range(g.n):
            if y == x:
                continue
            dy = d[y]
            closer = [w for w in nbrs if dy[w] < dy[x]]
            for i in range(len(closer)):
                for j in range(i + 1, len(closer)):
                    if not g.has_edge(closer[i], closer[j]):
                        return (x, y, closer[i], closer[j])
    return None


def half_hyperbolicity_test_bc(g: Graph, dm: DistanceMatrix, *, all_obstructions: bool = False) -> ClassificationReport:
    """Three-condition test for delta* <= 1/2: no isometric cycle longer
    than 5, neighbors toward any target pairwise adjacent, and none of
    H1, H2, G1, G2, E1, E2 isometric."""
    long_cycle = _has_isometric_long_cycle(g, dm, 5)
    violation = _neighbor_fellow_traveler_violation(g, dm)
    found = _scan_patterns(g, dm, ["H1", "H2", "G1", "G2", "E1", "E2"], all_obstructions)
    predicted = long_cycle is None and violation is None and not found
    direct = hyperbolicity(g, dm).delta_star
    agrees = predicted == (direct <= HALF)
    report = ClassificationReport(
        theorem="bc",
        applicable=True,
        claim="delta_star <= 1/2 iff all three conditions hold",
        predicted=predicted,
        obstructions_found=found,
        direct_delta=direct,
        agrees=agrees,
        details={
            "isometric_long_cycle": list(long_cycle) if long_cycle else None,
            "neighbor_violation": list(violation) if violation else None,
        },
    )
    if not agrees:
        raise InternalInvariantError(
            f"thmBC disagreement: predicted {predicted}, delta* = {direct}\n{_graph_dump(g)}"
        )
    return report


CONJECTURE14_PATTERNS = ["G1", "G2", "G3", "C4", "C6", "H1", "H2", "H3", "H4", "H5"]


def conjecture14_probe(g: Graph, dm: DistanceMatrix, *, all_obstructions: bool = False) -> ClassificationReport:
    """Probe the open 6-chordal characterization; disagreement is a
    reportable finding (returned, not raised) with a reproducible dump."""
    ok, cyc = is_k_chordal(g, 6)
    if not ok:
        raise PreconditionError(f"graph is not 6-chordal: induced cycle {cyc}")
    found = _scan_patterns(g, dm, CONJECTURE14_PATTERNS, all_obstructions)
    predicted = not found
    direct = hyperbolicity(g, dm).delta_star
    agrees = predicted == (direct <= HALF)
    details = None
    if not agrees:
        details = {"counterexample_dump": _graph_dump(g), "graph6": None}
        from .graphs import graph_to_graph6

        details["graph6"] = graph_to_graph6(g)
    return ClassificationReport(
        theorem="conj14",
        applicable=True,
        claim="delta_star <= 1/2 iff no listed obstruction is isometric",
        predicted=predicted,
        obstructions_found=found,
        direct_delta=direct,
        agrees=agrees,
        details=details,
    )


# ---------------------------------------------------------------------------
# catalog self-test


@dataclass(frozen=True)
class CatalogSelftest:
    entries: tuple[tuple[str, int, HalfInt], ...]
    embeddings: tuple[tuple[str, str], ...]  # (pattern, host) isometric pairs
    all_distinct: bool

    def to_dict(self) -> dict:
        return {
            "entries": [[n, lc, str(ds)] for n, lc, ds in self.entries],
            "isometric_pairs": [list(p) for p in self.embeddings],
            "all_distinct": self.all_distinct,
        }


def catalog_selftest() -> CatalogSelftest:
    """Recompute every entry's (lc, delta*), list the pairwise isometric
    embedding relations, and verify entries are pairwise non-isomorphic."""
    cat = catalog()  # raises on any expected-value mismatch
    rows = []
    for nm in sorted(cat):
        e = cat[nm]
        rows.append((nm, longest_induced_cycle(e.graph).lc, hyperbolicity(e.graph, e.dm).delta_star))
    pairs = []
    names = sorted(cat)
    for a in names:
        for b in names:
            if a == b:
                continue
            if find_isometric_embedding(cat[b].graph, cat[b].dm, cat[a]) is not None:
                pairs.append((a, b))
    distinct = True
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            if is_isomorphic(cat[a].graph, cat[b].graph):
                distinct = False
    return CatalogSelftest(tuple(rows), tuple(pairs), distinct)
