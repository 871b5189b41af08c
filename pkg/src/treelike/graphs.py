"""Core graph representation and metric primitives.

Graphs are finite, simple, unweighted, with vertices 0..n-1 and
bit-packed adjacency rows (one Python int per vertex).  Everything is
immutable after construction and safe to share across threads.
Distances are exact hop counts from all-pairs BFS; metric operations
reject disconnected input.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import DisconnectedGraphError, GraphFormatError, SizeCapError

DEFAULT_SIZE_CAP = 4096


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class VertexSet:
    """A bit-packed subset of the vertices 0..n-1 of some graph."""

    mask: int

    @classmethod
    def from_iterable(cls, vertices: Iterable[int]) -> VertexSet:
        m = 0
        for v in vertices:
            m |= 1 << v
        return cls(m)

    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1 with bitset adjacency."""

    n: int
    adj: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError("graph must have at least one vertex")
        if len(self.adj) != self.n:
            raise GraphFormatError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphFormatError(f"adjacency row of {v} mentions out-of-range vertices")
            if row >> v & 1:
                raise GraphFormatError(f"self-loop at vertex {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphFormatError(f"asymmetric adjacency between {v} and {w}")

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def with_name(self, name: str) -> Graph:
        return Graph(self.n, self.adj, name)


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop distances between all vertex pairs of a connected graph."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def dist(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.rows[u]


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
    """Build a graph from an edge collection (duplicates collapse silently)."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u},{v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), name)


# ---------------------------------------------------------------------------
# parsing / serialization


def graph_from_edge_list_text(text: str, name: str = "") -> Graph:
    """Parse the canonical edge-list format.

    One edge per line as two whitespace-separated nonnegative integers;
    ``#`` starts a comment; blank lines are ignored; the vertex set is
    0..max-id.  Duplicate edges warn and collapse; self-loops are errors.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"line {lineno}: duplicate edge {key} ignored", stacklevel=2)
            continue
        seen.add(key)
        edges.append(key)
        max_id = max(max_id, u, v)
    if not edges:
        raise GraphFormatError("empty graph: no edges found")
    return graph_from_edges(max_id + 1, edges, name)


def graph_to_edge_list_text(g: Graph) -> str:
    lines = [f"# {g.name}"] if g.name else []
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


_G6_HEADER = ">>graph6<<"


def graph_from_graph6(line: str, cap: int = DEFAULT_SIZE_CAP) -> Graph:
    """Decode one graph6 line (standard packed upper-triangle encoding)."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphFormatError(f"invalid graph6 byte in {s!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        raise GraphFormatError("graph6 sizes above 258047 are not supported")
    if n < 1:
        raise GraphFormatError("graph6 encodes an empty graph")
    if n > cap:
        raise SizeCapError(f"graph6 graph has {n} vertices, exceeding cap {cap}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise GraphFormatError(f"graph6 body length {len(data) - pos}, expected {need}")
    stream = 0
    for b in data[pos:]:
        stream = (stream << 6) | b
    stream >>= (need * 6 - nbits)
    adj = [0] * n
    bit = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> bit & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit -= 1
    return Graph(n, tuple(adj))


def graph_to_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise SizeCapError("graph6 sizes above 258047 are not supported")
    stream = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            stream = (stream << 1) | (g.adj[i] >> j & 1)
    pad = (-nbits) % 6
    stream <<= pad
    body = []
    for k in range(((nbits + pad) // 6) - 1, -1, -1):
        body.append(chr(((stream >> (6 * k)) & 63) + 63))
    return head + "".join(body)


def read_graph6_stream(lines: Iterable[str], cap: int = DEFAULT_SIZE_CAP) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield graph_from_graph6(line, cap=cap)


def parse_graph(text: str, name: str = "") -> Graph:
    """Parse either edge-list text or a single graph6 line (auto-detected)."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 2 and all(p.isdigit() for p in parts):
            return graph_from_edge_list_text(text, name)
        return graph_from_graph6(line).with_name(name)
    raise GraphFormatError("empty graph: no content found")


# ---------------------------------------------------------------------------
# distances


def _bfs_dist(adj: tuple[int, ...], n: int, src: int, within: int | None = None) -> list[int]:
    """BFS distances from ``src``; -1 marks unreachable. ``within`` restricts
    the traversal to an induced vertex subset given as a bitmask."""
    allowed = (1 << n) - 1 if within is None else within
    dist = [-1] * n
    dist[src] = 0
    seen = 1 << src
    frontier = 1 << src
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        if not nxt:
            break
        seen |= nxt
        for v in bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    dist = _bfs_dist(g.adj, g.n, 0)
    return all(d >= 0 for d in dist)


def connected_components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by least member."""
    left = (1 << g.n) - 1
    comps = []
    while left:
        src = (left & -left).bit_length() - 1
        dist = _bfs_dist(g.adj, g.n, src, within=left)
        comp = 0
        for v, d in enumerate(dist):
            if d >= 0:
                comp |= 1 << v
        comps.append(comp)
        left &= ~comp
    return comps


def all_pairs_distances(g: Graph, cap: int = DEFAULT_SIZE_CAP) -> DistanceMatrix:
    """Exact hop distances via BFS per source; rejects disconnected input."""
    if g.n > cap:
        raise SizeCapError(f"distance matrix for n={g.n} exceeds cap {cap}")
    rows = []
    for src in range(g.n):
        dist = _bfs_dist(g.adj, g.n, src)
        if src == 0:
            for v, d in enumerate(dist):
                if d < 0:
                    raise DisconnectedGraphError(src, v)
        rows.append(tuple(dist))
    return DistanceMatrix(g.n, tuple(rows))


def diameter(g: Graph, dm: DistanceMatrix) -> int:
    return max(max(row) for row in dm.rows)


def induced_distances(g: Graph, s_mask: int) -> dict[int, list[int]]:
    """BFS distances inside the subgraph induced by ``s_mask``, per member."""
    return {v: _bfs_dist(g.adj, g.n, v, within=s_mask) for v in bits(s_mask)}


def is_isometric_subset(
    g: Graph, dm: DistanceMatrix, s: VertexSet | int | Iterable[int], *, skip_small: bool = True
) -> bool:
    """Whether the subgraph induced by ``s`` is isometric in ``g``.

    With ``skip_small`` (the default) pairs at induced distance <= 2 are
    not compared against the host metric: such pairs can never disagree,
    so it suffices to check pairs at induced distance >= 3.  Passing
    ``skip_small=False`` compares every pair; both modes must agree.
    """
    if isinstance(s, VertexSet):
        mask = s.mask
    elif isinstance(s, int):
        mask = s
    else:
        mask = VertexSet.from_iterable(s).mask
    if mask == 0:
        raise ValueError("vertex subset must be nonempty")
    if mask & ~((1 << g.n) - 1):
        raise ValueError("vertex subset out of range")
    members = list(bits(mask))
    first = members[0]
    threshold = 3 if skip_small else 1
    for v in members:
        dist = _bfs_dist(g.adj, g.n, v, within=mask)
        if v == first and any(dist[w] < 0 for w in members):
            return False  # induced subgraph is disconnected
        row = dm.rows[v]
        for w in members:
            if w <= v:
                continue
            dh = dist[w]
            if dh < 0:
                return False
            if dh >= threshold and dh != row[w]:
                return False
    return True


# ---------------------------------------------------------------------------
# constructions


def cartesian_product(g1: Graph, g2: Graph, cap: int = DEFAULT_SIZE_CAP) -> Graph:
    """Cartesian product; vertex (i, j) gets id i * n2 + j (row-major)."""
    n1, n2 = g1.n, g2.n
    if n1 * n2 > cap:
        raise SizeCapError(f"product has {n1 * n2} vertices, exceeding cap {cap}")
    adj = [0] * (n1 * n2)
    for i in range(n1):
        for j in range(n2):
            vid = i * n2 + j
            row = 0
            for jj in bits(g2.adj[j]):
                row |= 1 << (i * n2 + jj)
            for ii in bits(g1.adj[i]):
                row |= 1 << (ii * n2 + j)
            adj[vid] = row
    name = f"{g1.name or 'G1'}x{g2.name or 'G2'}"
    return Graph(n1 * n2, tuple(adj), name)


def subdivision(g: Graph, t: int) -> Graph:
    """Replace every edge by a path of length ``t`` through t-1 fresh vertices.

    Fresh vertices are numbered deterministically: edges sorted as
    (u, v) with u < v, each contributing ids n + idx*(t-1) .. in order
    from the u side.  ``subdivision_label`` recovers them.
    """
    if t < 1:
        raise ValueError("subdivision parameter must be >= 1")
    if t == 1:
        return g
    edge_list = g.edges()
    n_new = g.n + len(edge_list) * (t - 1)
    edges = []
    for idx, (u, v) in enumerate(edge_list):
        base = g.n + idx * (t - 1)
        chain = [u] + list(range(base, base + t - 1)) + [v]
        edges += list(zip(chain, chain[1:]))
    name = f"S^{t}({g.name})" if g.name else ""
    return graph_from_edges(n_new, edges, name)


def subdivision_label(g: Graph, t: int, u: int, v: int, p: int) -> int:
    """Vertex id of the p-th path vertex from ``u`` toward ``v`` in ``subdivision(g, t)``.

    p = 0 gives u itself and p = t gives v, so labels from the two edge
    ends agree: the p-th vertex from v equals the (t-p)-th from u.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    if not 0 <= p <= t:
        raise ValueError(f"path position {p} out of range 0..{t}")
    if p == 0:
        return u
    if p == t:
        return v
    if u > v:
        u, v, p = v, u, t - p
    idx = g.edges().index((u, v))
    return g.n + idx * (t - 1) + (p - 1)


def graph_power(g: Graph, k: int) -> Graph:
    """Same vertices; edge iff 0 < d_G(u, v) <= k. Requires connectivity."""
    if k < 1:
        raise ValueError("power must be >= 1")
    if k == 1:
        return g
    dm = all_pairs_distances(g)
    adj = [0] * g.n
    for u in range(g.n):
        row = 0
        for v in range(g.n):
            if u != v and dm.rows[u][v] <= k:
                row |= 1 << v
        adj[u] = row
    name = f"{g.name}^{k}" if g.name else ""
    return Graph(g.n, tuple(adj), name)


def complement(g: Graph) -> Graph:
    """Graph complement; the result may be disconnected."""
    full = (1 << g.n) - 1
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    name = f"co-{g.name}" if g.name else ""
    return Graph(g.n, adj, name)


# ---------------------------------------------------------------------------
# biconnected components


def biconnected_components(g: Graph) -> list[VertexSet]:
    """Blocks of a connected graph in deterministic DFS order.

    Cut vertices repeat across the blocks containing them; every edge
    lies in exactly one block.  A single-vertex graph has no blocks.
    """
    n = g.n
    visited = [False] * n
    depth = [0] * n
    low = [0] * n
    parent = [-1] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[VertexSet] = []
    visited[0] = True
    frames: list[tuple[int, Iterator[int]]] = [(0, bits(g.adj[0]))]
    while frames:
        v, it = frames[-1]
        descended = False
        for w in it:
            if not visited[w]:
                edge_stack.append((v, w))
                visited[w] = True
                parent[w] = v
                depth[w] = depth[v] + 1
                low[w] = depth[w]
                frames.append((w, bits(g.adj[w])))
                descended = True
                break
            elif w != parent[v] and depth[w] < depth[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], depth[w])
        if descended:
            continue
        frames.pop()
        if frames:
            u = frames[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= depth[u]:
                mask = 0
                while edge_stack:
                    a, b = edge_stack.pop()
                    mask |= (1 << a) | (1 << b)
                    if (a, b) == (u, v):
                        break
                blocks.append(VertexSet(mask))
    return blocks


def is_block_graph(g: Graph) -> bool:
    """Every biconnected block is a clique (the 0-hyperbolic graphs)."""
    for blk in biconnected_components(g):
        mem = blk.members()
        for v in mem:
            if (g.adj[v] & blk.mask) != blk.mask & ~(1 << v):
                return False
    return True


# ---------------------------------------------------------------------------
# canonical forms (small graphs)


def _refine_colors(g: Graph) -> list[int]:
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[w] for w in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Canonical form of a small graph: invariant under relabeling.

    Color-refine, then backtrack over orderings compatible with the
    color classes, minimizing the packed adjacency rows.  Intended for
    the n <= 13 catalog and exhaustive small-graph enumeration; cost can
    degenerate on large highly regular graphs.
    """
    n = g.n
    adj = g.adj
    colors = _refine_colors(g)
    required = sorted(colors)
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    best: list[int] | None = None
    order: list[int] = []

    def rec(pos: int, used: int, rows: list[int]):
        nonlocal best
        if pos == n:
            if best is None or rows < best:
                best = rows.copy()
            return
        for v in by_color[required[pos]]:
            if used >> v & 1:
                continue
            r = 0
            for u in order:
                r = (r << 1) | (adj[u] >> v & 1)
            rows.append(r)
            # prune orderings whose row prefix already exceeds the best
            if best is None or rows <= best[: pos + 1]:
                order.append(v)
                rec(pos + 1, used | (1 << v), rows)
                order.pop()
            rows.pop()

    rec(0, 0, [])
    assert best is not None
    return (n, tuple(best))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if sorted(g1.degree(v) for v in range(g1.n)) != sorted(g2.degree(v) for v in range(g2.n)):
        return False
    return canonical_key(g1) == canonical_key(g2)
