"""Constructive hidden guard sets for orthogonal, monotone, and starshaped
polygons.

Orthogonal: all downward-facing horizontal edges (in the polygon's own
axis frame), open.  Monotone: the open mobile guards induced by a geodesic
between extreme vertices.  Starshaped: shoot rays from every reflex vertex
through a kernel point, locate a double wedge bounded by a consecutive
start/termination event pair, connect its two reflex vertices by a
geodesic, and append a boundary edge for each residual wedge the geodesic
leaves exposed.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from . import exact
from .exact import _AngKey, direction, hpoint
from .geometry import Point
from .geodesic import Geodesic, induced_guard_set, shortest_path
from .guards import Guard, GuardSet, Inclusion, edge_guard
from .polygon import Polygon, orthogonal_frame, monotone_direction
from .visibility import kernel_polygon

log = logging.getLogger(__name__)


class NotOrthogonal(ValueError):
    pass


class NotMonotone(ValueError):
    pass


class NotStarshaped(ValueError):
    pass


class NoDoubleWedge(RuntimeError):
    pass


class ConstructionFailed(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# orthogonal


def ortho_open_edge_guards(P: Polygon) -> GuardSet:
    """All edges that bound the interior from below, open.

    Works in the polygon's own perpendicular edge frame, so rotated
    orthogonal polygons need no coordinate change beyond projection.
    """
    frame = orthogonal_frame(P)
    if frame is None:
        raise NotOrthogonal("polygon edges do not span two perpendicular directions")
    (dx, dy), (px, py) = frame
    guards = []
    for i in range(P.n):
        a, b = P.edge(i)
        ua = a.x * dx + a.y * dy
        ub = b.x * dx + b.y * dy
        va = a.x * px + a.y * py
        vb = b.x * px + b.y * py
        # horizontal in-frame edge pointing +u has the interior above it
        if va == vb and ub > ua:
            guards.append(edge_guard(P, i, Inclusion.OPEN))
    return GuardSet(tuple(guards))


# ---------------------------------------------------------------------------
# monotone


def monotone_open_mobile_guards(P: Polygon) -> GuardSet:
    """Guards induced by a geodesic between left- and rightmost vertices."""
    d = monotone_direction(P)
    if d is None:
        raise NotMonotone("polygon is not monotone in any direction")
    dx, dy = d
    px, py = -dy, dx

    def key(i):
        v = P.vertices[i]
        return (v.x * dx + v.y * dy, v.x * px + v.y * py)

    # ties along d happen on perpendicular extreme edges: take the lower
    # vertex of each
    left = min(range(P.n), key=key)
    right = max(range(P.n), key=lambda i: (key(i)[0], -key(i)[1]))
    g = shortest_path(P, left, right)
    return induced_guard_set(P, g)


# ---------------------------------------------------------------------------
# starshaped


@dataclass(frozen=True)
class Ray:
    source: int          # reflex vertex index
    hit: Point           # boundary point where the continuation lands


@dataclass(frozen=True)
class RayWheel:
    center: Point
    rays: tuple[Ray, ...]


@dataclass(frozen=True)
class ResidualWedge:
    """One of the two wedges flanking the double wedge.

    ``vertex`` is the reflex vertex the wedge touches; ``edge_index`` the
    polygon edge at that vertex running along the wedge's boundary arc;
    ``outgoing`` whether that edge leaves the vertex in boundary order.
    """
    vertex: int
    edge_index: int
    outgoing: bool


@dataclass(frozen=True)
class DoubleWedge:
    u: int
    u_prime: int
    bounding_rays: tuple[Ray, Ray]
    wedge_u: ResidualWedge
    wedge_u_prime: ResidualWedge
    merged_remainder: bool
    bisector: Optional[tuple[int, int]]   # separating direction when merged


def ray_wheel(P: Polygon, center: Optional[Point] = None) -> RayWheel:
    """Rays from each reflex vertex through a kernel point to the far
    boundary."""
    if center is None:
        kern = kernel_polygon(P)
        if kern.is_empty:
            raise NotStarshaped("empty kernel")
        center = kern.representative_point()
    k = hpoint(center)
    hv = P.hverts
    rays = []
    for r in P.reflex:
        d = direction(hv[r], k)
        hit = exact.ray_first_hit(hv, k, d)
        if hit is None:
            raise ConstructionFailed("kernel ray escaped the polygon")
        rays.append(Ray(r, exact.to_point(hit[1])))
    return RayWheel(center, tuple(rays))


def _wheel_events(P: Polygon, wheel: RayWheel):
    """Ray endpoints in angular order about the center.

    Each reflex vertex contributes a start event at its own direction and
    a termination event at the opposite direction (its hit point).
    """
    k = hpoint(wheel.center)
    hv = P.hverts
    events = []
    for ray in wheel.rays:
        d_start = direction(k, hv[ray.source])
        d_term = (-d_start[0], -d_start[1])
        events.append((_AngKey(d_start), 0, ray.source, ray))
        events.append((_AngKey(d_term), 1, ray.source, ray))
    events.sort(key=lambda e: (e[0], e[1], e[2]))
    return events


def _angles_equal(k1: _AngKey, k2: _AngKey) -> bool:
    return k1 == k2


def find_double_wedge(P: Polygon, wheel: RayWheel) -> DoubleWedge:
    """First consecutive start/termination event pair around the center.

    The wedge between such a pair of rays touches exactly one reflex
    vertex per side: the start's vertex on one side, the termination's
    source on the antipodal side.
    """
    if len(wheel.rays) < 2:
        raise NoDoubleWedge("need at least two reflex vertices")
    events = _wheel_events(P, wheel)
    m = len(events)
    candidates = []
    for i in range(m):
        e1 = events[i]
        e2 = events[(i + 1) % m]
        if e1[1] == e2[1]:
            continue
        if e1[2] == e2[2]:
            continue
        zero_width = _angles_equal(e1[0], e2[0])
        candidates.append((zero_width, i, e1, e2))
    candidates.sort(key=lambda c: (c[0], c[1]))
    if not candidates:
        raise NoDoubleWedge("no start/termination event pair with distinct vertices")
    _, _, e1, e2 = candidates[0]
    if e1[1] == 0:
        # start first: the wedge at u extends forward along the boundary,
        # the wedge at u' backward
        u, u_ray = e1[2], e1[3]
        up, up_ray = e2[2], e2[3]
        wedge_u = ResidualWedge(u, u, outgoing=True)
        wedge_up = ResidualWedge(up, (up - 1) % P.n, outgoing=False)
    else:
        u, u_ray = e2[2], e2[3]
        up, up_ray = e1[2], e1[3]
        wedge_u = ResidualWedge(u, (u - 1) % P.n, outgoing=False)
        wedge_up = ResidualWedge(up, up, outgoing=True)

    merged, bisector = _merged_remainder(P, wheel, u, up, wedge_u.outgoing)
    return DoubleWedge(u, up, (u_ray, up_ray), wedge_u, wedge_up,
                       merged, bisector)


def _merged_remainder(P: Polygon, wheel: RayWheel, u: int, up: int,
                      u_forward: bool):
    """The two residual wedges merge into one region reflex at the center
    exactly when u' is u's angular reflex neighbour on the wedge side; the
    termination ray of u' then separates the two convex halves."""
    k = hpoint(wheel.center)
    hv = P.hverts
    reflex = [r.source for r in wheel.rays]
    idx_u = reflex.index(u)
    step = 1 if u_forward else -1
    neighbour = reflex[(idx_u + step) % len(reflex)]
    if neighbour != up:
        return False, None
    d = direction(k, hv[up])
    return True, (-d[0], -d[1])


def wedge_covered_by_geodesic(P: Polygon, wedge: ResidualWedge,
                              g: Geodesic) -> bool:
    """Interior angle between the geodesic's final edge and the wedge's
    boundary edge at the shared vertex is at most pi."""
    v = wedge.vertex
    if g.path[0] == v:
        nxt = g.path[1]
    elif g.path[-1] == v:
        nxt = g.path[-2]
    else:
        raise ValueError("wedge vertex is not a geodesic endpoint")
    hv = P.hverts
    d_g = direction(hv[v], hv[nxt])
    other = (wedge.edge_index + 1) % P.n if wedge.outgoing else wedge.edge_index
    d_w = direction(hv[v], hv[other])
    if wedge.outgoing:
        c = d_w[0] * d_g[1] - d_w[1] * d_g[0]
    else:
        c = d_g[0] * d_w[1] - d_g[1] * d_w[0]
    return c >= 0


def star_open_mobile_guards(P: Polygon) -> GuardSet:
    """Hidden open mobile guard set for a starshaped polygon."""
    kern = kernel_polygon(P)
    if kern.is_empty:
        raise NotStarshaped("empty kernel")
    if not P.reflex:
        # convex: one open edge sees everything and is trivially hidden
        return GuardSet((edge_guard(P, 0, Inclusion.OPEN),))
    center = kern.representative_point()
    from .polygon import point_in_polygon, Location
    degenerate = kern.is_degenerate or \
        point_in_polygon(P, center) is not Location.INTERIOR
    if len(P.reflex) < 2 or degenerate:
        if degenerate:
            log.warning("degenerate kernel; falling back to search")
        return _search_fallback(P)
    wheel = ray_wheel(P, center)
    wedge = find_double_wedge(P, wheel)
    g = shortest_path(P, wedge.u, wedge.u_prime)
    guards = list(induced_guard_set(P, g))
    for rw in (wedge.wedge_u, wedge.wedge_u_prime):
        if not wedge_covered_by_geodesic(P, rw, g):
            extension = edge_guard(P, rw.edge_index, Inclusion.OPEN)
            if extension not in guards:
                guards.append(extension)
    return GuardSet(tuple(guards))


def _search_fallback(P: Polygon) -> GuardSet:
    from .certifier import exists_hidden_guard_set
    res = exists_hidden_guard_set(P, "mobile", Inclusion.OPEN)
    if res.status != "yes":
        raise ConstructionFailed(
            f"fallback search found no hidden open mobile guard set ({res.status})")
    return res.guard_set
