"""GJK main loops: distance query with witness extraction, and a binary
collision subroutine with two extra early exits.

Both loops share the same skeleton: start from a heuristic direction,
pull Minkowski-difference support points toward the origin, and shrink
the working simplex with the subdistance solver. The binary variant adds
two exits that skip the remaining work as soon as the answer is decided:
a separating-hyperplane test (the new support point stays on the far
side of the origin, so the shapes cannot intersect) and a vertical-angle
test (the new support point lands in the angle vertically opposite the
current 2-simplex as seen from the origin, so the new triangle must
enclose the origin).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from .geometry import ConvexPolygon, Vec2
from .subdistance import Simplex, s1d, s2d
from .support import SimplexVertex, _cso_support_xy, initial_direction

# Squared proximity under which a new support point counts as a repeat.
_DUPLICATE_EPS_SQ = 1e-24


class Termination(Enum):
    CONVERGED = "Converged"
    SIMPLEX_FULL = "SimplexFull"
    CONTAINS_ORIGIN = "ContainsOrigin"
    MAX_ITERATIONS = "MaxIterations"


class CollisionExit(Enum):
    SEPARATING_HYPERPLANE = "SeparatingHyperplane"
    VERTICAL_ANGLE_ENCLOSURE = "VerticalAngleEnclosure"
    SUBDISTANCE_ENCLOSURE = "SubdistanceEnclosure"
    CONVERGED = "Converged"
    MAX_ITERATIONS = "MaxIterations"


@dataclass(frozen=True)
class QueryOptions:
    """Shared loop parameters.

    ``epsilon`` serves both roles it has in the loop: relative tolerance
    in the support-progress termination test and absolute threshold on
    the closest-point norm.
    """

    epsilon: float = 1e-10
    max_iterations: int = 64
    use_hill_climbing: bool = True

    def __post_init__(self):
        if not self.epsilon > 0.0:
            raise ValueError("epsilon must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


DEFAULT_OPTIONS = QueryOptions()


@dataclass(frozen=True)
class DistanceResult:
    distance: float
    witness_p: Vec2
    witness_q: Vec2
    separating_vector: Vec2
    iterations: int
    support_calls: int
    termination: Termination


@dataclass(frozen=True)
class CollisionResult:
    colliding: bool
    iterations: int
    support_calls: int
    exit: CollisionExit


def touching_or_overlapping(result: "DistanceResult", band: float = 1e-9) -> bool:
    """Convenience classifier over a distance result.

    The distance query reports a scalar; anything within ``band`` of zero
    is indistinguishable from contact at query precision.
    """
    return result.distance <= band


def witness_points(simplex: Simplex) -> Tuple[Vec2, Vec2]:
    """Witness pair (sum lambda_i * p_i, sum lambda_i * q_i) of a solved simplex."""
    px = py = qx = qy = 0.0
    for sv, lam in zip(simplex.verts, simplex.lambdas):
        px += lam * sv.p.x
        py += lam * sv.p.y
        qx += lam * sv.q.x
        qy += lam * sv.q.y
    return Vec2(px, py), Vec2(qx, qy)


def _is_duplicate(verts: List[SimplexVertex], w: SimplexVertex) -> bool:
    wx, wy = w.w
    for sv in verts:
        if sv.ip == w.ip and sv.iq == w.iq:
            return True
        dx = sv.w.x - wx
        dy = sv.w.y - wy
        if dx * dx + dy * dy < _DUPLICATE_EPS_SQ:
            return True
    return False


def distance(
    p_poly: ConvexPolygon,
    q_poly: ConvexPolygon,
    options: QueryOptions = DEFAULT_OPTIONS,
    norm_trace: Optional[List[float]] = None,
) -> DistanceResult:
    """Minimum distance between two convex polygons with witness points.

    The loop terminates when the support point cannot improve the current
    estimate (Converged), when the closest simplex point reaches the
    origin (ContainsOrigin), when the simplex fills up, which means the
    origin is enclosed (SimplexFull), or at the iteration cap
    (MaxIterations, reporting the best known estimate). A repeated
    support point is treated as convergence; it cannot make progress and
    would otherwise cycle. ``support_calls`` counts Minkowski-difference
    support evaluations. ``norm_trace``, when given, receives the
    closest-point norm after every solve.
    """
    eps = options.epsilon
    eps_sq = eps * eps
    hcs = options.use_hill_climbing
    support = _cso_support_xy
    solve_segment = s1d
    solve_triangle = s2d

    d0 = initial_direction(p_poly, q_poly)
    first = support(p_poly, q_poly, -d0.x, -d0.y, None)
    support_calls = 1
    warm = (first.ip, first.iq) if hcs else None
    verts = [first]
    lambdas = [1.0]
    vx, vy = first.w
    if norm_trace is not None:
        norm_trace.append(math.sqrt(vx * vx + vy * vy))

    k = 0
    termination = Termination.MAX_ITERATIONS
    while k < options.max_iterations:
        k += 1
        w = support(p_poly, q_poly, -vx, -vy, warm)
        support_calls += 1
        if hcs:
            warm = (w.ip, w.iq)
        v_sq = vx * vx + vy * vy
        v_dot_w = vx * w.w.x + vy * w.w.y
        if v_sq - v_dot_w <= eps_sq * v_sq:
            termination = Termination.CONVERGED
            break
        if _is_duplicate(verts, w):
            termination = Termination.CONVERGED
            break
        if len(verts) == 1:
            res = solve_segment(w, verts[0])
        else:
            res = solve_triangle(w, verts[0], verts[1])
        verts = res.simplex.verts
        lambdas = res.simplex.lambdas
        vx, vy = res.v
        if norm_trace is not None:
            norm_trace.append(math.sqrt(vx * vx + vy * vy))
        if vx * vx + vy * vy <= eps_sq:
            termination = Termination.CONTAINS_ORIGIN
            break
        if len(verts) == 3:
            termination = Termination.SIMPLEX_FULL
            break

    if termination in (Termination.CONTAINS_ORIGIN, Termination.SIMPLEX_FULL):
        dist = 0.0
        sep = Vec2(0.0, 0.0)
    else:
        dist = math.sqrt(vx * vx + vy * vy)
        sep = Vec2(vx, vy)
    wp, wq = witness_points(Simplex(verts, lambdas))
    return DistanceResult(dist, wp, wq, sep, k, support_calls, termination)


def intersects(
    p_poly: ConvexPolygon,
    q_poly: ConvexPolygon,
    options: QueryOptions = DEFAULT_OPTIONS,
) -> CollisionResult:
    """Binary collision test; same loop as ``distance`` plus two early exits.

    Never performs more support evaluations than ``distance`` on the same
    input and options: the loops visit identical states and every binary
    exit fires no later than the corresponding distance exit.
    """
    eps = options.epsilon
    eps_sq = eps * eps
    hcs = options.use_hill_climbing
    support = _cso_support_xy
    solve_segment = s1d
    solve_triangle = s2d

    d0 = initial_direction(p_poly, q_poly)
    first = support(p_poly, q_poly, -d0.x, -d0.y, None)
    support_calls = 1
    warm = (first.ip, first.iq) if hcs else None
    verts = [first]
    vx, vy = first.w

    k = 0
    while k < options.max_iterations:
        k += 1
        w = support(p_poly, q_poly, -vx, -vy, warm)
        support_calls += 1
        if hcs:
            warm = (w.ip, w.iq)
        wx, wy = w.w
        if vx * wx + vy * wy > 0.0:
            # A hyperplane through the origin perpendicular to v separates
            # the origin from the whole Minkowski difference.
            return CollisionResult(
                False, k, support_calls, CollisionExit.SEPARATING_HYPERPLANE
            )
        if len(verts) == 2:
            a = verts[0].w
            b = verts[1].w
            if (a.x * wy - a.y * wx) * (b.x * wy - b.y * wx) <= 0.0:
                # w lies in the vertical angle opposite cone(a, b), so
                # triangle (a, b, w) encloses the origin.
                return CollisionResult(
                    True, k, support_calls, CollisionExit.VERTICAL_ANGLE_ENCLOSURE
                )
        if _is_duplicate(verts, w):
            return CollisionResult(
                vx * vx + vy * vy < eps_sq, k, support_calls, CollisionExit.CONVERGED
            )
        if len(verts) == 1:
            res = solve_segment(w, verts[0])
        else:
            res = solve_triangle(w, verts[0], verts[1])
        verts = res.simplex.verts
        vx, vy = res.v
        if vx * vx + vy * vy <= eps_sq:
            return CollisionResult(
                True, k, support_calls, CollisionExit.SUBDISTANCE_ENCLOSURE
            )
        if len(verts) == 3:
            return CollisionResult(
                True, k, support_calls, CollisionExit.SUBDISTANCE_ENCLOSURE
            )
    return CollisionResult(
        vx * vx + vy * vy < eps_sq, k, support_calls, CollisionExit.MAX_ITERATIONS
    )
