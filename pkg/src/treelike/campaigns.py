"""Verification campaigns: replay the quantitative claims over instances.

Each campaign runs a property suite over enumerated graph6 streams,
seeded random samples, and the deterministic families, recording one
failure entry per violated claim (with a reproducible graph dump) and
counting budget skips separately.  Identical seed and caps give
byte-identical report bodies modulo the timing field.

Every hyperbolicity witness a campaign produces is pushed through the
geodesic-quadrangle diagnostics, so the side-distance and corner-gap
bounds are re-verified on every scanned instance.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from .chordality import is_chordal, longest_induced_cycle
from .errors import BudgetExceeded, InternalInvariantError, TreelikeError
from .generators import (
    gen_block_random,
    gen_cycle,
    gen_f,
    gen_g4t,
    gen_g4t1,
    gen_g6,
    gen_g61,
    gen_grid,
    gen_k_chordal_random,
    gen_random,
    gen_tree_random,
)
from .graphs import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    cartesian_product,
    diameter,
    graph_from_graph6,
    graph_to_edge_list_text,
    graph_to_graph6,
    is_block_graph,
)
from .halfint import HalfInt
from .hyperbolicity import HypResult, base_point_delta, hyperbolicity
from .obstructions import (
    catalog,
    catalog_selftest,
    classify_5_chordal,
    conjecture14_probe,
    half_hyperbolicity_test_bc,
)
from .chordality import is_k_chordal
from .quadrangle import quadrangle_diagnostics
from .treelength import tree_length_exact, tree_length_oracle

import random


@dataclass
class CampaignConfig:
    samples: int = 100
    seed: int = 0
    max_n: int = 12
    graph6_paths: tuple[str, ...] = ()
    parallel: int = 1
    budget_ms: float | None = None
    tl_cap: int = 12
    oracle_samples: int = 40

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "max_n": self.max_n,
            "graph6_paths": [str(p) for p in self.graph6_paths],
            "parallel": self.parallel,
            "budget_ms": self.budget_ms,
            "tl_cap": self.tl_cap,
            "oracle_samples": self.oracle_samples,
        }


@dataclass
class CampaignReport:
    campaign: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)
    skipped: int = 0
    findings: list[dict] = field(default_factory=list)
    diagnostics_checked: int = 0
    wall_time_ms: float = 0.0
    config: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, with_timing: bool = True) -> dict:
        body = {
            "campaign": self.campaign,
            "instances": self.instances,
            "failures": self.failures,
            "skipped": self.skipped,
            "findings": self.findings,
            "diagnostics_checked": self.diagnostics_checked,
            "config": self.config,
        }
        if with_timing:
            body["wall_time_ms"] = round(self.wall_time_ms, 3)
        return body

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_dict(with_timing), sort_keys=True, indent=2)

    def fail(self, instance: str, expected, got, graph: Graph | None = None):
        entry = {"instance": instance, "expected": str(expected), "got": str(got)}
        if graph is not None:
            entry["edges"] = graph_to_edge_list_text(graph)
        self.failures.append(entry)


def _checked_hyperbolicity(g: Graph, dm: DistanceMatrix, report: CampaignReport) -> HypResult:
    """Hyperbolicity plus diagnostics on the witness quadruple."""
    h = hyperbolicity(g, dm)
    if h.witness is not None:
        x, y, u, v = h.witness
        quadrangle_diagnostics(g, dm, x, y, u, v)
        report.diagnostics_checked += 1
    return h


def _stream_graphs(paths, max_n: int):
    for path in paths:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                g = graph_from_graph6(line)
                if g.n <= max_n:
                    yield g


def _cycle_delta_doubled(n: int) -> int:
    """Doubled hyperbolicity of the n-cycle: floor(n/4) minus a half
    exactly when n = 1 (mod 4)."""
    return 2 * (n // 4) - 1 if n % 4 == 1 else 2 * (n // 4)


def family_instances(include_large: bool = True) -> list[tuple[str, Graph, dict]]:
    """The deterministic family instances with their published values."""
    rows: list[tuple[str, Graph, dict]] = []
    for n in range(3, 25):
        rows.append((f"C{n}", gen_cycle(n), {"lc": n, "delta2": _cycle_delta_doubled(n)}))
    for m in range(2, 6):
        for n in range(m, 6):
            expect = {"delta2": 2 * (min(m, n) - 1)}
            if (m, n) == (3, 3):
                expect["tl"] = 2
            if m == 2 and n >= 3:
                expect["tl"] = 2
            rows.append((f"G_{m}x{n}", gen_grid(m, n), expect))
    for t in (2, 3):
        rows.append((f"F{t}", gen_f(t), {"lc": 4 * t - 2, "delta2": 2 * t - 1, **({"tl": 2} if t == 2 else {})}))
    if include_large:
        for t, q in ((2, 1), (3, 1), (3, 2)):
            rows.append((f"G4t(t={t},q={q})", gen_g4t(t, q), {"lc": 4 * t, "delta2": 2 * t}))
            rows.append((f"G4t1(t={t},q={q})", gen_g4t1(t, q), {"lc": 4 * t + 1, "delta2": 2 * t}))
        t, q = 2, 1
        rows.append((f"G6(t={t},q={q})", gen_g6(t, q), {"lc": 6 * (2 * t + 1), "delta2": 6 * t + 3}))
        rows.append((f"G61(t={t},q={q})", gen_g61(t, q), {"lc": 6 * (2 * t + 1) + 1, "delta2": 6 * t + 3}))
    return rows


# ---------------------------------------------------------------------------
# campaigns


def run_family_table(cfg: CampaignConfig) -> CampaignReport:
    """Criteria 1-5: every family instance reproduces its published
    (lc, delta*, tl where stated) values exactly."""
    report = CampaignReport("family-table", config=cfg.to_dict())
    t0 = time.monotonic()
    for name, g, expect in family_instances():
        report.instances += 1
        dm = all_pairs_distances(g)
        try:
            h = _checked_hyperbolicity(g, dm, report)
            if "delta2" in expect and h.delta_star.doubled != expect["delta2"]:
                report.fail(f"{name} delta*", HalfInt(expect["delta2"]), h.delta_star, g)
            if "lc" in expect:
                lc = longest_induced_cycle(g, budget_ms=cfg.budget_ms).lc
                if lc != expect["lc"]:
                    report.fail(f"{name} lc", expect["lc"], lc, g)
            if "tl" in expect:
                tl = tree_length_exact(g, dm, cap=cfg.tl_cap).tl
                if tl != expect["tl"]:
                    report.fail(f"{name} tl", expect["tl"], tl, g)
        except BudgetExceeded as e:
            report.skipped += 1
            report.findings.append({"instance": name, "skipped": str(e)})
        except InternalInvariantError as e:
            report.fail(name, "internal invariants", f"violated: {e}", g)
    report.wall_time_ms = 1000 * (time.monotonic() - t0)
    return report


SPEC_CATALOG_TABLE = {
    "C4": (4, 2), "H1": (3, 2), "H2": (3, 2), "H3": (5, 2), "H4": (5, 2),
    "H5": (5, 2), "H6": (5, 2), "G1": (6, 2), "G2": (6, 2), "G3": (6, 2),
    "C6": (6, 2), "E1": (7, 2), "E2": (8, 2),
}


def run_catalog(cfg: CampaignConfig) -> CampaignReport:
    """Criterion 6: the catalog table, asserted at its published values."""
    report = CampaignReport("catalog", config=cfg.to_dict())
    t0 = time.monotonic()
    selftest = catalog_selftest()
    if not selftest.all_distinct:
        report.fail("catalog pairwise non-isomorphic", True, False)
    computed = {name: (lc, ds.doubled) for name, lc, ds in selftest.entries}
    for name, (lc, d2) in sorted(SPEC_CATALOG_TABLE.items()):
        report.instances += 1
        got = computed[name]
        if got != (lc, d2):
            report.fail(
                f"{name} (lc, 2*delta*)", (lc, d2), got, catalog()[name].graph
            )
    report.wall_time_ms = 1000 * (time.monotonic() - t0)
    return report


def run_main_bound(cfg: CampaignConfig) -> CampaignReport:
    """Criterion 7: chordality bounds hyperbolicity on random and family
    instances: 2*delta* <= floor(lc/2) when lc >= 4, delta* <= 1 when
    chordal."""
    report = CampaignReport("main-bound", config=cfg.to_dict())
    t0 = time.monotonic()
    rng = random.Random(cfg.seed)
    instances: list[tuple[str, Graph]] = []
    for i in range(cfg.samples):
        n = rng.randint(4, cfg.max_n)
        p = rng.uniform(0.15, 0.75)
        instances.append((f"gnp-{i}", gen_random(n, p, rng.randrange(2**32))))
    instances += [(name, g) for name, g, _ in family_instances()]
    for name, g in instances:
        report.instances += 1
        dm = all_pairs_distances(g)
        try:
            lc = longest_induced_cycle(g, budget_ms=cfg.budget_ms).lc
        except BudgetExceeded as e:
            report.skipped += 1
            report.findings.append({"instance": name, "skipped": str(e)})
            continue
        try:
            h = _checked_hyperbolicity(g, dm, report)
        except InternalInvariantError as e:
            report.fail(name, "diagnostics pass", f"violated: {e}", g)
            continue
        d2 = h.delta_star.doubled
        if lc >= 4 and d2 > lc // 2:
            report.fail(f"{name} halved-chordality bound", f"2*delta*<= {lc // 2}", d2, g)
        if lc >= 3 and d2 > 2 * (lc // 2):
            report.fail(f"{name} floor(lc/2) bound", f"delta*<= {lc // 2}", h.delta_star, g)
        if lc <= 3 and d2 > 2:
            report.fail(f"{name} chordal bound", "delta* <= 1", h.delta_star, g)
    report.wall_time_ms = 1000 * (time.monotonic() - t0)
    return report


def _map_ordered(fn, items, parallel: int):
    """Map preserving input order; a worker pool when parallel > 1."""
    if parallel <= 1:
        return [fn(x) for x in items]
    from multiprocessing import Pool

    with Pool(parallel) as pool:
        return list(pool.imap(fn, items, chunksize=64))


def _main1_line_worker(line: str) -> dict:
    g = graph_from_graph6(line)
    ok, _ = is_k_chordal(g, 5)
    if not ok:
        return {"status": "na"}
    dm = all_pairs_distances(g)
    try:
        classify_5_chordal(g, dm)
        h = hyperbolicity(g, dm)
        diag = 0
        if h.witness is not None:
            quadrangle_diagnostics(g, dm, *h.witness)
            diag = 1
        return {"status": "ok", "diag": diag}
    except InternalInvariantError as e:
        return {"status": "fail", "detail": str(e), "g6": line}
    except BudgetExceeded as e:
        return {"status": "skip", "detail": str(e)}


def _bc_line_worker(line: str) -> dict:
    g = graph_from_graph6(line)
    dm = all_pairs_distances(g)
    try:
        half_hyperbolicity_test_bc(g, dm)
        h = hyperbolicity(g, dm)
        diag = 0
        if h.witness is not None:
            quadrangle_diagnostics(g, dm, *h.witness)
            diag = 1
        return {"status": "ok", "diag": diag}
    except InternalInvariantError as e:
        return {"status": "fail", "detail": str(e), "g6": line}
    except BudgetExceeded as e:
        return {"status": "skip", "detail": str(e)}


def _stream_lines(paths, max_n: int) -> list[str]:
    lines = []
    for path in paths:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if line and graph_from_graph6(line).n <= max_n:
                    lines.append(line)
    return lines


def _absorb_worker_results(report: CampaignReport, tag: str, results: list[dict]):
    for idx, res in enumerate(results):
        if res["status"] == "na":
            continue
        report.instances += 1
        if res["status"] == "ok":
            report.diagnostics_checked += res["diag"]
        elif res["status"] == "skip":
            report.skipped += 1
        else:
            report.failures.append(
                {"instance": f"{tag}-{idx}", "expected": "equivalence", "got": res["detail"], "graph6": res.get("g6")}
            )


def run_main1_equiv(cfg: CampaignConfig) -> CampaignReport:
    """Criterion 8: on every 5-chordal instance, delta* = 1 exactly when
    one of the six obstructions embeds isometrically."""
    report = CampaignReport("main1-equiv", config=cfg.to_dict())
    t0 = time.monotonic()
    lines = _stream_lines(cfg.graph6_paths, 8)
    _absorb_worker_results(report, "enum", _map_ordered(_main1_line_worker, lines, cfg.parallel))
    rng = random.Random(cfg.seed)
    random_lines = []
    for _ in range(cfg.samples):
        n = rng.randint(5, cfg.max_n)
        try:
            g = gen_k_chordal_random(n, 5, rng.randrange(2**32))
        except BudgetExceeded:
            report.skipped += 1
            continue
        random_lines.append(graph_to_graph6(g))
    _absorb_worker_results(
        report, "random", _map_ordered(_main1_line_worker, random_lines, cfg.parallel)
    )
    report.wall_time_ms = 1000 * (time.monotonic() - t0)
    return report


def run_bc_equiv(cfg: CampaignConfig) -> CampaignReport:
    """Criterion 9: the three-condition characterization of
    half-hyperbolicity agrees with the direct scan on every instance."""
    report = CampaignReport("bc-equiv", config=cfg.to_dict())
    t0 = time.monotonic()
    lines = _stream_lines(cfg.graph6_paths, 8)
    _absorb_worker_results(report, "enum", _map_ordered(_bc_line_worker, lines, cfg.parallel))
    report.wall_time_ms = 1000 * (time.monotonic() - t0)
    return report


def run_diam_bound(cfg: CampaignConfig) -> CampaignReport:
    """Half-diameter bound with the evenness condition at equality."""
    report = CampaignReport("diam-bound", config=cfg.to_dict())
    t0 = time.monotonic()
    rng = random.Random(cfg.seed)
    for i in range(cfg.samples):
        n = rng.randint(4, cfg.max_n)
        g = gen_random(n, rng.uniform(0.2, 0.8), rng.randrange(2**32))
        report.instances += 1
        dm = all_pairs_distances(g)
        d = diameter(g, dm)
        try:
            h = _checked_hyperbolicity(g, dm, report)
        except InternalInvariantError as e:
            report.fail(f"gnp-{i}", "diagnostics pass", f"violated: {e}", g)
            continue
        if h.delta_star.doubled > 2 * (d // 2):
            report.fail(f"gnp-{i} half-diameter", f"<= {d // 2}", h.delta_star, g)
        if h.delta_star.doubled == d and d % 2 == 1:
            report.fail(f"gnp-{i} evenness", "even diameter at delta* = diam/2", d, g)
    report.wall_time_ms = 1000 * (time.monotonic() - t0)
    return report


def run_block_zero(cfg: CampaignConfig) -> CampaignReport:
    """Criterion 12: block graphs are exactly the 0-hyperbolic graphs."""
    report = CampaignReport("block-zero", config=cfg.to_dict())
    t0 = time.monotonic()
    rng = random.Random(cfg.seed)
    for i in range(cfg.samples):
        n = rng.randint(2, cfg.max_n)
        g = gen_block_random(n, rng.randrange(2**32))
        report.instances += 1
        dm = all_pairs_distances(g)
        h = _checked_hyperbolicity(g, dm, report)
        if h.delta_star.doubled != 0:
            report.fail(f"block-{i}", "delta* = 0", h.delta_star, g)
    for idx, g in enumerate(_stream_graphs(cfg.graph6_paths, 7)):
        report.instances += 1
        dm = all_pairs_distances(g)
        h = _checked_hyperbolicity(g, dm, report)
        zero = h.delta_star.doubled == 0
        blocky = is_block_graph(g)
        if zero != blocky:
            report.fail(f"enum-{idx}", "delta*=0 iff block graph", (zero, blocky), g)
    report.wall_time_ms = 1000 * (time.monotonic() - t0)
    return report


def run_basepoint(cfg: CampaignConfig) -> CampaignReport:
    """Criterion 13: base-point hyperbolicity comparisons."""
    report = CampaignReport("basepoint", config=cfg.to_dict())
    t0 = time.monotonic()
    rng = random.Random(cfg.seed)
    for i in range(cfg.samples):
        n = rng.randint(4, cfg.max_n)
        g = gen_random(n, rng.uniform(0.2, 0.8), rng.randrange(2**32))
        report.instances += 1
        dm = all_pairs_distances(g)
        h = _checked_hyperbolicity(g, dm, report)
        per_u = [base_point_delta(g, dm, u).doubled for u in range(g.n)]
        if h.delta_star.doubled != max(per_u):
            report.fail(f"gnp-{i} max", h.delta_star, max(per_u), g)
        if h.delta_star.doubled > 2 * min(per_u):
            report.fail(f"gnp-{i} doubling", f"<= {2 * min(per_u)}", h.delta_star, g)
    report.wall_time_ms = 1000 * (time.monotonic() - t0)
    return report


def run_product_trees(cfg: CampaignConfig) -> CampaignReport:
    """Criterion 11: products of trees attain min of the diameters."""
    report = CampaignReport("product-trees", config=cfg.to_dict())
    t0 = time.monotonic()
    rng = random.Random(cfg.seed)
    for i in range(cfg.samples):
        t1 = gen_tree_random(rng.randint(2, 8), rng.randrange(2**32))
        t2 = gen_tree_random(rng.randint(2, 8), rng.randrange(2**32))
        g = cartesian_product(t1, t2)
        report.instances += 1
        dm = all_pairs_distances(g)
        d1 = diameter(t1, all_pairs_distances(t1))
        d2 = diameter(t2, all_pairs_distances(t2))
        h = _checked_hyperbolicity(g, dm, report)
        if h.delta_star.doubled != 2 * min(d1, d2):
            report.fail(f"pair-{i}", f"delta* = {min(d1, d2)}", h.delta_star, g)
    report.wall_time_ms = 1000 * (time.monotonic() - t0)
    return report


def run_bound_chain(cfg: CampaignConfig) -> CampaignReport:
    """Criterion 10: ceil(delta*) <= tl <= floor(lc/2) wherever the exact
    tree-length search completes, with oracle equality on a small-n
    subsample."""
    report = CampaignReport("bound-chain", config=cfg.to_dict())
    t0 = time.monotonic()
    instances: list[tuple[str, Graph, bool]] = []
    rng = random.Random(cfg.seed)
    small_pool = []
    for idx, g in enumerate(_stream_graphs(cfg.graph6_paths, 7)):
        instances.append((f"enum-{idx}", g, g.n <= 5))
        if g.n >= 6:
            small_pool.append(len(instances) - 1)
    for j in rng.sample(small_pool, min(cfg.oracle_samples, len(small_pool))):
        name, g, _ = instances[j]
        instances[j] = (name, g, True)
    for i in range(cfg.samples):
        n = rng.randint(4, min(cfg.max_n, 10))
        instances.append((f"gnp-{i}", gen_random(n, rng.uniform(0.2, 0.7), rng.randrange(2**32)), False))
    instances.append(("C6", gen_cycle(6), True))
    instances.append(("C7", gen_cycle(7), True))
    instances.append(("F2", gen_f(2), False))
    instances.append(("G_3x3", gen_grid(3, 3), False))
    for name, g, with_oracle in instances:
        report.instances += 1
        dm = all_pairs_distances(g)
        try:
            res = tree_length_exact(g, dm, cap=cfg.tl_cap)
        except BudgetExceeded:
            report.skipped += 1
            continue
        h = _checked_hyperbolicity(g, dm, report)
        lc = longest_induced_cycle(g).lc
        lower = max(1, h.delta_star.ceil())
        upper = max(1, lc // 2)
        if not lower <= res.tl <= upper:
            report.fail(f"{name} chain", f"{lower} <= tl <= {upper}", res.tl, g)
        hgraph = Graph(g.n, _adj_from_edges(g.n, res.witness_triangulation))
        if not is_chordal(hgraph):
            report.fail(f"{name} witness chordal", True, False, g)
        if with_oracle and tree_length_oracle(g, dm) != res.tl:
            report.fail(f"{name} oracle equality", tree_length_oracle(g, dm), res.tl, g)
    report.wall_time_ms = 1000 * (time.monotonic() - t0)
    return report


def _adj_from_edges(n: int, edges) -> tuple[int, ...]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(adj)


def run_conj14_scan(cfg: CampaignConfig) -> CampaignReport:
    """Finding-producing scan of the open 6-chordal characterization.

    Disagreements are findings, not failures; the campaign never fails
    unless the library itself misbehaves."""
    report = CampaignReport("conj14-scan", config=cfg.to_dict())
    t0 = time.monotonic()
    for idx, g in enumerate(_stream_graphs(cfg.graph6_paths, cfg.max_n)):
        ok, _ = is_k_chordal(g, 6)
        if not ok:
            continue
        report.instances += 1
        dm = all_pairs_distances(g)
        probe = conjecture14_probe(g, dm)
        if not probe.agrees:
            report.findings.append(
                {
                    "instance": f"enum-{idx}",
                    "graph6": graph_to_graph6(g),
                    "report": probe.to_dict(),
                }
            )
    report.wall_time_ms = 1000 * (time.monotonic() - t0)
    return report


CAMPAIGNS = {
    "family-table": run_family_table,
    "catalog": run_catalog,
    "main-bound": run_main_bound,
    "main1-equiv": run_main1_equiv,
    "bc-equiv": run_bc_equiv,
    "diam-bound": run_diam_bound,
    "block-zero": run_block_zero,
    "basepoint": run_basepoint,
    "product-trees": run_product_trees,
    "bound-chain": run_bound_chain,
    "conj14-scan": run_conj14_scan,
}


def run_campaign(name: str, cfg: CampaignConfig) -> CampaignReport:
    if name not in CAMPAIGNS:
        raise ValueError(f"unknown campaign {name!r}; known: {sorted(CAMPAIGNS)}")
    return CAMPAIGNS[name](cfg)


def default_graph6_paths(max_n: int = 8) -> tuple[str, ...]:
    """The committed enumeration streams, largest n first omitted."""
    base = Path(__file__).resolve().parent.parent.parent / "data"
    paths = []
    for n in range(1, max_n + 1):
        p = base / f"connected_{n}.g6"
        if p.exists():
            paths.append(str(p))
    return tuple(paths)
