"""Support mappings over polygons and over their Minkowski difference.

A support query returns the vertex maximizing the dot product with a
direction. Two variants are provided: a brute-force scan and a
hill-climbing walk along the CCW vertex ring that is warm-started from a
previous query's result. Ties are broken deterministically: the brute
scan keeps the first (lowest-index) maximizer, and the hill climb stops
as soon as neither neighbor is strictly better.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Tuple

from .geometry import ConvexPolygon, Vec2


class SupportResult(NamedTuple):
    point: Vec2
    index: int


class SimplexVertex(NamedTuple):
    """One Minkowski-difference point w = p - q with its originating vertices."""

    w: Vec2
    p: Vec2
    q: Vec2
    ip: int
    iq: int


def _argmax_index(xs, ys, dx: float, dy: float) -> int:
    """Index of the first vertex maximizing the dot product with (dx, dy)."""
    best_i = 0
    best = xs[0] * dx + ys[0] * dy
    for i in range(1, len(xs)):
        d = xs[i] * dx + ys[i] * dy
        if d > best:
            best = d
            best_i = i
    return best_i


def _climb_index(xs, ys, dx: float, dy: float, start: int) -> int:
    """Ring walk from ``start`` while a neighbor strictly improves the dot."""
    n = len(xs)
    i = start
    best = xs[i] * dx + ys[i] * dy
    j = i + 1 if i + 1 < n else 0
    d = xs[j] * dx + ys[j] * dy
    if d > best:
        step = 1
    else:
        j = i - 1 if i > 0 else n - 1
        d = xs[j] * dx + ys[j] * dy
        if d > best:
            step = -1
        else:
            return i
    for _ in range(n):
        i = j
        best = d
        j = i + step
        if j == n:
            j = 0
        elif j < 0:
            j = n - 1
        d = xs[j] * dx + ys[j] * dy
        if d <= best:
            break
    return i


def support_brute(poly: ConvexPolygon, direction: Vec2) -> SupportResult:
    """First vertex attaining max dot(v, direction); index 0 for a zero direction."""
    i = _argmax_index(poly.xs, poly.ys, direction.x, direction.y)
    return SupportResult(poly.vertices[i], i)


def support_hill_climb(poly: ConvexPolygon, direction: Vec2, start: int) -> SupportResult:
    """Walk the vertex ring from ``start`` while a neighbor strictly improves.

    On a strictly convex polygon the dot products along the ring are
    cyclically unimodal, so the walk reaches a vertex whose support value
    equals the brute-force maximum in at most ``len(poly)`` steps.
    """
    i = _climb_index(poly.xs, poly.ys, direction.x, direction.y, start)
    return SupportResult(poly.vertices[i], i)


def _cso_support_xy(
    p_poly: ConvexPolygon,
    q_poly: ConvexPolygon,
    dx: float,
    dy: float,
    warm: Optional[Tuple[int, int]],
) -> SimplexVertex:
    if warm is None:
        ip = _argmax_index(p_poly.xs, p_poly.ys, dx, dy)
        iq = _argmax_index(q_poly.xs, q_poly.ys, -dx, -dy)
    else:
        ip = _climb_index(p_poly.xs, p_poly.ys, dx, dy, warm[0])
        iq = _climb_index(q_poly.xs, q_poly.ys, -dx, -dy, warm[1])
    p = p_poly.vertices[ip]
    q = q_poly.vertices[iq]
    return SimplexVertex(Vec2(p.x - q.x, p.y - q.y), p, q, ip, iq)


def cso_support(
    p_poly: ConvexPolygon,
    q_poly: ConvexPolygon,
    direction: Vec2,
    warm: Optional[Tuple[int, int]] = None,
) -> SimplexVertex:
    """Support of the Minkowski difference P - Q in ``direction``.

    ``warm`` carries the (index in P, index in Q) pair of a previous call;
    when present both per-polygon queries hill-climb from it, otherwise
    they scan brute force.
    """
    return _cso_support_xy(p_poly, q_poly, direction.x, direction.y, warm)


def initial_direction(p_poly: ConvexPolygon, q_poly: ConvexPolygon) -> Vec2:
    """Heuristic start direction: a point of the Minkowski difference.

    Uses the centroid difference, falling back to the first-vertex
    difference and finally to (1, 0) when the candidates are shorter than
    1e-12.
    """
    d = Vec2(
        p_poly.centroid.x - q_poly.centroid.x,
        p_poly.centroid.y - q_poly.centroid.y,
    )
    if d.x * d.x + d.y * d.y >= 1e-24:
        return d
    d = Vec2(
        p_poly.vertices[0].x - q_poly.vertices[0].x,
        p_poly.vertices[0].y - q_poly.vertices[0].y,
    )
    if d.x * d.x + d.y * d.y >= 1e-24:
        return d
    return Vec2(1.0, 0.0)
