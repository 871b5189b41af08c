#!/usr/bin/env python3
"""Enumerate all connected graphs up to isomorphism, as graph6 streams.

Level-by-level vertex extension with canonical-form deduplication:
every graph on k vertices arises from some graph on k-1 vertices by
adding one vertex with an arbitrary neighbor set, so extending every
(k-1)-graph by every subset and keeping one representative per
canonical key enumerates everything.  Counts are validated against the
known sequences before anything is written.

Usage: python scripts/enumerate_graphs.py [--max-n N] [--out-dir data]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from treelike.graphs import Graph, canonical_key, graph_to_graph6, is_connected

# numbers of graphs / connected graphs on n >= 1 vertices, up to isomorphism
ALL_COUNTS = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668]
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853, 11117, 261080]


def extend_all(level: list[Graph]) -> list[Graph]:
    seen: dict = {}
    for g in level:
        n = g.n
        for subset in range(1 << n):
            adj = list(g.adj)
            adj.append(subset)
            for v in range(n):
                if subset >> v & 1:
                    adj[v] |= 1 << n
            h = Graph(n + 1, tuple(adj))
            key = canonical_key(h)
            if key not in seen:
                seen[key] = h
    return [seen[k] for k in sorted(seen)]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out-dir", type=Path, default=Path(__file__).resolve().parent.parent / "data")
    args = ap.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    level = [Graph(1, (0,))]
    for n in range(1, args.max_n + 1):
        if n > 1:
            level = extend_all(level)
        if len(level) != ALL_COUNTS[n - 1]:
            print(f"FATAL: {len(level)} graphs on {n} vertices, expected {ALL_COUNTS[n - 1]}")
            return 1
        connected = [g for g in level if is_connected(g)]
        if len(connected) != CONNECTED_COUNTS[n - 1]:
            print(f"FATAL: {len(connected)} connected on {n} vertices, expected {CONNECTED_COUNTS[n - 1]}")
            return 1
        out = args.out_dir / f"connected_{n}.g6"
        out.write_text("".join(graph_to_graph6(g) + "\n" for g in connected))
        print(f"n={n}: {len(level)} graphs, {len(connected)} connected -> {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
