"""Independently coded correctness oracles and the SAT baseline.

Nothing here touches the GJK or subdistance modules; equivalence tests
between the two paths are only meaningful if they share no code. These
routines are O(n*m) or worse on purpose and, except for ``sat_intersects``
(which is also a benchmarked algorithm), intended for test-time use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .geometry import ConvexPolygon, Vec2


class ClosestFeature(Enum):
    VERTEX_VERTEX = "VertexVertex"
    VERTEX_EDGE = "VertexEdge"
    OVERLAP = "Overlap"


@dataclass(frozen=True)
class OracleReport:
    distance: float
    closest_feature: ClosestFeature


def sat_intersects(p_poly: ConvexPolygon, q_poly: ConvexPolygon) -> bool:
    """Separating-axis test over the edge normals of both polygons.

    Projection intervals are closed, so exact touching counts as
    intersecting. Returns False as soon as one axis separates.
    """
    pxs, pys = p_poly.xs, p_poly.ys
    qxs, qys = q_poly.xs, q_poly.ys
    np_ = len(pxs)
    nq = len(qxs)
    for xs, ys, n in ((pxs, pys, np_), (qxs, qys, nq)):
        for i in range(n):
            j = i + 1 if i + 1 < n else 0
            # outward normal of edge i (unnormalized; scale cancels)
            ax = ys[j] - ys[i]
            ay = xs[i] - xs[j]
            lo_p = hi_p = pxs[0] * ax + pys[0] * ay
            for k in range(1, np_):
                d = pxs[k] * ax + pys[k] * ay
                if d < lo_p:
                    lo_p = d
                elif d > hi_p:
                    hi_p = d
            lo_q = hi_q = qxs[0] * ax + qys[0] * ay
            for k in range(1, nq):
                d = qxs[k] * ax + qys[k] * ay
                if d < lo_q:
                    lo_q = d
                elif d > hi_q:
                    hi_q = d
            if lo_p > hi_q or lo_q > hi_p:
                return False
    return True


def point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> float:
    """Distance from p to segment [a, b] by clamped projection."""
    ux = b.x - a.x
    uy = b.y - a.y
    den = ux * ux + uy * uy
    if den > 0.0:
        t = ((p.x - a.x) * ux + (p.y - a.y) * uy) / den
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
    else:
        t = 0.0
    dx = p.x - (a.x + t * ux)
    dy = p.y - (a.y + t * uy)
    return math.sqrt(dx * dx + dy * dy)


def oracle_distance(p_poly: ConvexPolygon, q_poly: ConvexPolygon) -> OracleReport:
    """Ground-truth distance: SAT for overlap, else vertex-edge scan.

    For disjoint convex polygons the minimum distance is realized between
    a vertex of one and an edge (possibly an endpoint) of the other, so
    scanning all such pairs both ways is exact.
    """
    if sat_intersects(p_poly, q_poly):
        return OracleReport(0.0, ClosestFeature.OVERLAP)
    best_sq = math.inf
    at_endpoint = True
    for vxs, vys, exs, eys in (
        (p_poly.xs, p_poly.ys, q_poly.xs, q_poly.ys),
        (q_poly.xs, q_poly.ys, p_poly.xs, p_poly.ys),
    ):
        ne = len(exs)
        for i in range(ne):
            j = i + 1 if i + 1 < ne else 0
            ax = exs[i]
            ay = eys[i]
            ux = exs[j] - ax
            uy = eys[j] - ay
            den = ux * ux + uy * uy
            for px, py in zip(vxs, vys):
                t = ((px - ax) * ux + (py - ay) * uy) / den
                clamped = False
                if t <= 0.0:
                    t = 0.0
                    clamped = True
                elif t >= 1.0:
                    t = 1.0
                    clamped = True
                dx = px - (ax + t * ux)
                dy = py - (ay + t * uy)
                d_sq = dx * dx + dy * dy
                if d_sq < best_sq:
                    best_sq = d_sq
                    at_endpoint = clamped
    feature = ClosestFeature.VERTEX_VERTEX if at_endpoint else ClosestFeature.VERTEX_EDGE
    return OracleReport(math.sqrt(best_sq), feature)


def _hull(points):
    """Andrew's monotone chain; strict turns, CCW output."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and (
            (lower[-1][0] - lower[-2][0]) * (p[1] - lower[-2][1])
            - (lower[-1][1] - lower[-2][1]) * (p[0] - lower[-2][0])
        ) <= 0.0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and (
            (upper[-1][0] - upper[-2][0]) * (p[1] - upper[-2][1])
            - (upper[-1][1] - upper[-2][1]) * (p[0] - upper[-2][0])
        ) <= 0.0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def cso_contains_origin(
    p_poly: ConvexPolygon, q_poly: ConvexPolygon, strict: bool = False
) -> bool:
    """Origin-in-Minkowski-difference test via the explicit difference hull.

    Builds the convex hull of all pairwise vertex differences, making the
    configuration-space obstacle explicit, and half-plane-tests the
    origin against it. O(n*m log(n*m)); test-time use only.
    """
    diffs = [
        (px - qx, py - qy)
        for px, py in zip(p_poly.xs, p_poly.ys)
        for qx, qy in zip(q_poly.xs, q_poly.ys)
    ]
    hull = _hull(diffs)
    if len(hull) < 3:
        # Degenerate difference set: a point or a segment.
        if strict:
            return False
        if len(hull) == 1:
            return hull[0][0] == 0.0 and hull[0][1] == 0.0
        (ax, ay), (bx, by) = hull
        ux, uy = bx - ax, by - ay
        if ux * (0.0 - ay) - uy * (0.0 - ax) != 0.0:
            return False
        t = (-ax * ux - ay * uy)
        return 0.0 <= t <= ux * ux + uy * uy
    n = len(hull)
    for i in range(n):
        ax, ay = hull[i]
        bx, by = hull[(i + 1) % n]
        side = (bx - ax) * (0.0 - ay) - (by - ay) * (0.0 - ax)
        if strict:
            if side <= 0.0:
                return False
        elif side < 0.0:
            return False
    return True
