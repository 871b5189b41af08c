"""Geodesic-quadrangle diagnostics for four-point witnesses.

For corners x, u, y, v we build one canonical geodesic per side
(P_a: x-u, P_b: x-v, P_c: y-u, P_d: y-v), then evaluate every
computable bound the theory guarantees for the quadruple: the defect
never exceeds any of the six pairwise distances nor half the diameter,
and when the x,y / u,v pairing attains the maximum sum it is also
bounded by the side-to-side distances and by the corner gap quantities
pi(a)..pi(d).  A failed check is a library bug and raises.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError, PreconditionError
from .graphs import DistanceMatrix, Graph, bits, diameter
from .halfint import HalfInt
from .hyperbolicity import four_point_delta


def canonical_geodesic(g: Graph, dm: DistanceMatrix, s: int, t: int) -> tuple[int, ...]:
    """The geodesic from s to t choosing the least next vertex at each hop."""
    d = dm.rows
    path = [s]
    cur = s
    while cur != t:
        want = d[cur][t] - 1
        nxt = min(w for w in bits(g.adj[cur]) if d[w][t] == want)
        path.append(nxt)
        cur = nxt
    return tuple(path)


@dataclass(frozen=True)
class QuadrangleReport:
    """Everything measured on one geodesic quadrangle.

    ``pi_doubled`` holds twice the corner gap quantities in side order
    (a, b, c, d); ``indices`` are the defining (i, j, l, m).  Every
    entry of ``bound_checks`` is (name, description, passed) and passed
    is always True for a report that was returned rather than raised.
    """

    corners: tuple[int, int, int, int]
    delta: HalfInt
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    side_c: tuple[int, ...]
    side_d: tuple[int, ...]
    d_ad: int
    d_bc: int
    indices: tuple[int, int, int, int]
    pi_doubled: tuple[int, int, int, int]
    a_edges: int
    h_edges: int
    ringel_holds: bool
    bound_checks: tuple[tuple[str, str, bool], ...]

    def to_dict(self) -> dict:
        return {
            "corners": list(self.corners),
            "delta_doubled": self.delta.doubled,
            "delta": str(self.delta),
            "sides": {
                "a": list(self.side_a),
                "b": list(self.side_b),
                "c": list(self.side_c),
                "d": list(self.side_d),
            },
            "d_ad": self.d_ad,
            "d_bc": self.d_bc,
            "indices_ijlm": list(self.indices),
            "pi_doubled": list(self.pi_doubled),
            "a_edges": self.a_edges,
            "h_edges": self.h_edges,
            "ringel_holds": self.ringel_holds,
            "bound_checks": [list(c) for c in self.bound_checks],
        }


def _cross_distance(dm: DistanceMatrix, side1: tuple[int, ...], side2: tuple[int, ...]) -> int:
    d = dm.rows
    return min(d[p][q] for p in side1 for q in side2)


def quadrangle_diagnostics(g: Graph, dm: DistanceMatrix, x: int, y: int, u: int, v: int) -> QuadrangleReport:
    """Build the quadrangle on (x, y, u, v) and verify all applicable bounds."""
    if len({x, y, u, v}) != 4:
        raise PreconditionError("quadrangle diagnostics needs four distinct vertices")
    d = dm.rows
    delta = four_point_delta(dm, x, y, u, v)

    pa = canonical_geodesic(g, dm, x, u)
    pb = canonical_geodesic(g, dm, x, v)
    pc = canonical_geodesic(g, dm, y, u)
    pd = canonical_geodesic(g, dm, y, v)
    for side, (s, t) in ((pa, (x, u)), (pb, (x, v)), (pc, (y, u)), (pd, (y, v))):
        if len(side) != d[s][t] + 1:
            raise InternalInvariantError(f"side {side} is not a geodesic from {s} to {t}")

    d_ad = _cross_distance(dm, pa, pd)
    d_bc = _cross_distance(dm, pb, pc)

    xy, uv = d[x][y], d[u][v]
    xu, yv = d[x][u], d[y][v]
    xv, yu = d[x][v], d[y][u]
    ringel = xy + uv >= max(xu + yv, xv + yu)

    # corner gap indices: j = last index where sides a and b stay within
    # distance 1 of each other, i = first index where side b reaches side
    # d, l and m symmetrically for the sides at y
    j = max(t for t in range(min(xu, xv) + 1) if d[pa[t]][pb[t]] <= 1)
    i = min(t for t in range(max(0, xv - yv), xv + 1) if d[pb[t]][pd[yv - xv + t]] <= 1)
    l = max(t for t in range(min(yu, yv) + 1) if d[pc[t]][pd[t]] <= 1)
    m = min(t for t in range(max(0, xu - yu), xu + 1) if d[pa[t]][pc[yu - xu + t]] <= 1)
    ab_j = d[pa[j]][pb[j]]
    bd_i = d[pb[i]][pd[yv - xv + i]]
    cd_l = d[pc[l]][pd[l]]
    ac_m = d[pa[m]][pc[yu - xu + m]]
    pi_a = 2 * (m - j) + ab_j + ac_m
    pi_b = 2 * (i - j) + ab_j + bd_i
    pi_c = 2 * ((yu - xu + m) - l) + ac_m + cd_l
    pi_d = 2 * ((yv - xv + i) - l) + bd_i + cd_l

    # edges joining two sides: through adjacent sides (sharing a corner)
    # or through opposite sides; edges inside a single side don't count
    sides = (set(pa), set(pb), set(pc), set(pd))
    quad_vertices = sides[0] | sides[1] | sides[2] | sides[3]
    opposite = ((0, 3), (1, 2))
    adjacent = ((0, 1), (0, 2), (1, 3), (2, 3))
    a_edges = 0
    h_edges = 0
    for p in quad_vertices:
        for q in bits(g.adj[p]):
            if q <= p or q not in quad_vertices:
                continue
            if any(p in s and q in s for s in sides):
                continue
            joins = lambda s1, s2: (p in s1 and q in s2) or (p in s2 and q in s1)
            if any(joins(sides[s1], sides[s2]) for s1, s2 in opposite):
                h_edges += 1
            if any(joins(sides[s1], sides[s2]) for s1, s2 in adjacent):
                a_edges += 1

    dd = delta.doubled
    diam = diameter(g, dm)
    checks = [
        (
            "six-distances",
            f"2*delta={dd} <= 2*min(six pairwise distances)={2 * min(uv, xy, xu, yv, yu, xv)}",
            dd <= 2 * min(uv, xy, xu, yv, yu, xv),
        ),
        (
            "half-diameter",
            f"2*delta={dd} <= 2*floor(diam/2)={2 * (diam // 2)}",
            dd <= 2 * (diam // 2),
        ),
        (
            "even-diameter-at-max",
            f"delta={dd}/2 equals diam/2 only when diam even",
            dd != diam or diam % 2 == 0,
        ),
    ]
    if ringel:
        checks.append(
            (
                "side-distances",
                f"2*delta={dd} <= 2*min(d_ad,d_bc)={2 * min(d_ad, d_bc)}",
                dd <= 2 * min(d_ad, d_bc),
            )
        )
        checks.append(
            (
                "corner-gaps",
                f"2*delta={dd} <= min(2*pi)={min(pi_a, pi_b, pi_c, pi_d)}",
                dd <= min(pi_a, pi_b, pi_c, pi_d),
            )
        )
        gap_bound = 2 + 2 * min(m - j, i - j, (yu - xu + m) - l, (yv - xv + i) - l)
        checks.append(
            (
                "corner-gaps-coarse",
                f"min(2*pi)={min(pi_a, pi_b, pi_c, pi_d)} <= 2 + 2*min(index gaps)={gap_bound}",
                min(pi_a, pi_b, pi_c, pi_d) <= gap_bound,
            )
        )

    report = QuadrangleReport(
        corners=(x, y, u, v),
        delta=delta,
        side_a=pa,
        side_b=pb,
        side_c=pc,
        side_d=pd,
        d_ad=d_ad,
        d_bc=d_bc,
        indices=(i, j, l, m),
        pi_doubled=(pi_a, pi_b, pi_c, pi_d),
        a_edges=a_edges,
        h_edges=h_edges,
        ringel_holds=ringel,
        bound_checks=tuple(checks),
    )
    bad = [c for c in checks if not c[2]]
    if bad:
        raise InternalInvariantError(
            "quadrangle bound violated on corners "
            f"{(x, y, u, v)}: {bad}\nreport: {report.to_dict()}\n"
            f"graph edges: {g.edges()}"
        )
    return report
