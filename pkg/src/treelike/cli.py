"""Command-line surface: compute, classify, verify, gen, catalog,
treelength, diagnose.

Exit codes: 0 success, 1 usage or I/O error, 2 precondition or budget,
3 finding (a conjecture disagreement is reportable, not fatal),
4 internal invariant breach (a theorem-backed check failed: a bug).
Machine output never renders delta values as floats; JSON carries
doubled integers next to "k" / "k/2" strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .campaigns import CAMPAIGNS, CampaignConfig, default_graph6_paths, run_campaign
from .chordality import longest_induced_cycle
from .errors import (
    BudgetExceeded,
    DisconnectedGraphError,
    GraphFormatError,
    InternalInvariantError,
    PreconditionError,
    SizeCapError,
    TreelikeError,
)
from .generators import FamilySpec, build_family
from .graphs import (
    all_pairs_distances,
    diameter,
    graph_to_edge_list_text,
    graph_to_graph6,
    parse_graph,
)
from .hyperbolicity import hyperbolicity
from .obstructions import (
    catalog_entry,
    catalog_selftest,
    classify_4_chordal,
    classify_5_chordal,
    classify_at_free,
    classify_chordal,
    conjecture14_probe,
    half_hyperbolicity_test_bc,
)
from .quadrangle import quadrangle_diagnostics
from .treelength import sandwich_probe_question1, tree_length_exact

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_FINDING = 3
EXIT_INTERNAL = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _read_graph(path: str):
    text = Path(path).read_text()
    return parse_graph(text, name=Path(path).stem)


def _emit(payload: dict, as_json: bool):
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")


def _budget_ms(args) -> float | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("HYP_BUDGET_MS")
    return float(env) if env else None


def cmd_compute(args) -> int:
    g = _read_graph(args.file)
    dm = all_pairs_distances(g)
    h = hyperbolicity(g, dm)
    lic = longest_induced_cycle(g, budget_ms=_budget_ms(args))
    payload = {
        "delta_star_doubled": h.delta_star.doubled,
        "delta_star": str(h.delta_star),
        "witness": list(h.witness) if h.witness else None,
        "lc": lic.lc,
        "lc_witness": list(lic.witness_cycle) if lic.witness_cycle else None,
        "diameter": diameter(g, dm),
        "n": g.n,
        "m": g.edge_count(),
    }
    if args.tl:
        try:
            res = tree_length_exact(g, dm, cap=args.max_n or 12)
            payload["tree_length"] = res.tl
            payload["tree_length_exact"] = res.exact
        except BudgetExceeded as e:
            payload["tree_length"] = e.partial.tl if e.partial else None
            payload["tree_length_exact"] = False
    _emit(payload, args.json)
    return EXIT_OK


_CLASSIFIERS = {
    "main1": classify_5_chordal,
    "cor7": classify_4_chordal,
    "bkm": classify_chordal,
    "atfree": classify_at_free,
    "bc": half_hyperbolicity_test_bc,
    "conj14": conjecture14_probe,
}


def cmd_classify(args) -> int:
    g = _read_graph(args.file)
    dm = all_pairs_distances(g)
    report = _CLASSIFIERS[args.theorem](g, dm, all_obstructions=args.all)
    _emit(report.to_dict(), args.json)
    return EXIT_OK if report.agrees else EXIT_FINDING


def cmd_verify(args) -> int:
    paths = tuple(args.graph6_file) if args.graph6_file else default_graph6_paths(args.max_n or 8)
    cfg = CampaignConfig(
        samples=args.samples,
        seed=args.seed,
        max_n=args.max_n or 12,
        graph6_paths=paths,
        parallel=args.parallel,
        budget_ms=_budget_ms(args),
        tl_cap=args.tl_cap,
    )
    report = run_campaign(args.campaign, cfg)
    if args.json:
        print(report.to_json(with_timing=not args.no_timing))
    else:
        print(
            f"campaign {report.campaign}: {report.instances} instances, "
            f"{len(report.failures)} failures, {report.skipped} skipped, "
            f"{len(report.findings)} findings, "
            f"{report.diagnostics_checked} witness diagnostics"
        )
        for f in report.failures:
            print(f"  FAIL {f.get('instance')}: expected {f.get('expected')}, got {f.get('got')}")
        for f in report.findings:
            print(f"  NOTE {f}")
    if report.failures:
        return EXIT_INTERNAL
    if args.campaign == "conj14-scan" and report.findings:
        return EXIT_FINDING
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = FamilySpec(args.family, tuple(args.params), args.seed)
    g = build_family(spec)
    text = graph_to_graph6(g) + "\n" if args.graph6 else graph_to_edge_list_text(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.export:
        e = catalog_entry(args.export)
        text = graph_to_edge_list_text(e.graph)
        if args.output:
            Path(args.output).write_text(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    st = catalog_selftest()
    _emit(st.to_dict(), args.json)
    return EXIT_OK


def cmd_treelength(args) -> int:
    g = _read_graph(args.file)
    dm = all_pairs_distances(g)
    payload = {}
    try:
        res = tree_length_exact(g, dm, cap=args.cap)
        payload.update(
            tree_length=res.tl,
            exact=res.exact,
            witness_triangulation=[list(e) for e in res.witness_triangulation],
        )
    except BudgetExceeded as e:
        if e.partial is None:
            raise
        payload.update(
            tree_length=e.partial.tl,
            exact=False,
            witness_triangulation=[list(ed) for ed in e.partial.witness_triangulation],
            note="budget exceeded: greedy upper bound only",
        )
    if args.probe_q1:
        probe = sandwich_probe_question1(g, dm, cap=args.cap)
        payload["question1"] = {"lc": probe.lc, "k": probe.k, "feasible": probe.feasible}
    _emit(payload, args.json)
    if args.probe_q1 and not payload["question1"]["feasible"]:
        return EXIT_FINDING
    return EXIT_OK


def cmd_diagnose(args) -> int:
    g = _read_graph(args.file)
    dm = all_pairs_distances(g)
    rep = quadrangle_diagnostics(g, dm, args.x, args.y, args.u, args.v)
    _emit(rep.to_dict(), args.json)
    return EXIT_OK


def build_parser() -> _Parser:
    p = _Parser(prog="treelike", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--budget", type=float, default=None, help="search budget in ms (default env HYP_BUDGET_MS)")
        sp.add_argument("--max-n", type=int, default=None, help="size cap for expensive searches")

    sp = sub.add_parser("compute", help="delta*, witness, lc, diameter of a graph file")
    sp.add_argument("file")
    sp.add_argument("--tl", action="store_true", help="also compute tree-length")
    common(sp)
    sp.set_defaults(fn=cmd_compute)

    sp = sub.add_parser("classify", help="run a theorem-based classifier")
    sp.add_argument("file")
    sp.add_argument("--theorem", required=True, choices=sorted(_CLASSIFIERS))
    sp.add_argument("--all", action="store_true", help="report every obstruction, not just the first")
    common(sp)
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("verify", help="run a verification campaign")
    sp.add_argument("--campaign", required=True, choices=sorted(CAMPAIGNS))
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--graph6-file", action="append", help="enumerated graph6 stream (repeatable)")
    sp.add_argument("--parallel", type=int, default=1)
    sp.add_argument("--tl-cap", type=int, default=12)
    sp.add_argument("--no-timing", action="store_true", help="omit wall time from JSON")
    common(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("gen", help="emit a family instance")
    sp.add_argument("--family", required=True)
    sp.add_argument("--params", type=int, nargs="*", default=[])
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--graph6", action="store_true", help="emit graph6 instead of edge list")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(fn=cmd_gen)

    sp = sub.add_parser("catalog", help="obstruction catalog self-test / export")
    sp.add_argument("--selftest", action="store_true")
    sp.add_argument("--export", metavar="NAME", default=None)
    sp.add_argument("-o", "--output", default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_catalog)

    sp = sub.add_parser("treelength", help="exact tree-length with witness")
    sp.add_argument("file")
    sp.add_argument("--cap", type=int, default=12)
    sp.add_argument("--probe-q1", action="store_true", help="also probe the ceil(lc/3) sandwich")
    common(sp)
    sp.set_defaults(fn=cmd_treelength)

    sp = sub.add_parser("diagnose", help="geodesic quadrangle report for a quadruple")
    sp.add_argument("file")
    sp.add_argument("x", type=int)
    sp.add_argument("y", type=int)
    sp.add_argument("u", type=int)
    sp.add_argument("v", type=int)
    common(sp)
    sp.set_defaults(fn=cmd_diagnose)

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (FileNotFoundError, IsADirectoryError, GraphFormatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, DisconnectedGraphError, SizeCapError, BudgetExceeded) as e:
        print(f"precondition: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalInvariantError as e:
        print(f"internal invariant breach: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except TreelikeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
