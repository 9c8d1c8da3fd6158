"""Weak visibility inside a simple polygon, with strict grazing semantics.

A point q is visible from p when the open segment pq lies in the open
interior of the polygon.  Touching the boundary anywhere strictly between
p and q — even grazing a single vertex — blocks the view.  A segment guard
sees a location when *some* point of its carrier does; the carrier is the
open segment for open guards and the closed segment for closed guards.

Existence questions over a carrier are decided by exact interval
subdivision at the finitely many event lines (lines through the query
point, or through two polygon vertices), never by epsilon sampling.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import exact
from .exact import (HLine, HPoint, _AngKey, affine_combination,
                    collinear_between_closed, collinear_between_strict,
                    direction, hmidpoint, hpoint, line_through,
                    locate_in_polygon, meet, norm_line, orient, point_eq,
                    sees_h, segment_param_range, side, to_point)
from .geometry import Point
from .guards import Guard, GuardSet, Inclusion
from .polygon import Polygon


def sees(P: Polygon, p: Point, q: Point) -> bool:
    """Open segment pq inside the open interior; endpoints may touch."""
    return sees_h(P.hverts, hpoint(p), hpoint(q))


def segment_inside_closure(P: Polygon, p: Point, q: Point) -> bool:
    """Closed-polygon visibility: pq never leaves the closure of P."""
    return exact.relint_free_of_exterior(P.hverts, hpoint(p), hpoint(q))


# ---------------------------------------------------------------------------
# kernel


@dataclass(frozen=True)
class Kernel:
    """Intersection of the interior half-planes of all edges.

    May be full-dimensional, a segment, a single point, or empty; every
    point of it sees the entire interior.
    """
    vertices: tuple[Point, ...]

    @property
    def is_empty(self) -> bool:
        return len(self.vertices) == 0

    @property
    def is_degenerate(self) -> bool:
        return 0 < len(self.vertices) < 3

    def representative_point(self) -> Optional[Point]:
        if not self.vertices:
            return None
        k = len(self.vertices)
        sx = sum((v.x for v in self.vertices), Fraction(0))
        sy = sum((v.y for v in self.vertices), Fraction(0))
        return Point(sx / k, sy / k)

    def contains(self, q: Point) -> bool:
        k = len(self.vertices)
        if k == 0:
            return False
        if k == 1:
            return self.vertices[0] == q
        if k == 2:
            a, b = self.vertices
            from .geometry import on_segment
            return on_segment(a, b, q)
        from .geometry import cross
        for i in range(k):
            if cross(self.vertices[i], self.vertices[(i + 1) % k], q) < 0:
                return False
        return True


def kernel_polygon(P: Polygon) -> Kernel:
    """Clip a bounding box by the left half-plane of every CCW edge."""
    if P._kernel is not None:
        return P._kernel
    xs = [v.x for v in P.vertices]
    ys = [v.y for v in P.vertices]
    subject = [Point(min(xs), min(ys)), Point(max(xs), min(ys)),
               Point(max(xs), max(ys)), Point(min(xs), max(ys))]
    from .geometry import cross
    for i in range(P.n):
        a, b = P.edge(i)
        out = []
        m = len(subject)
        for k in range(m):
            s = subject[k]
            e = subject[(k + 1) % m]
            s_val = cross(a, b, s)
            e_val = cross(a, b, e)
            if e_val >= 0:
                if s_val < 0:
                    out.append(_line_cut(a, b, s, e, s_val, e_val))
                out.append(e)
            elif s_val >= 0:
                out.append(_line_cut(a, b, s, e, s_val, e_val))
        subject = _dedupe_cyclic(out)
        if not subject:
            break
    kern = Kernel(tuple(_convex_canonical(subject)))
    P._kernel = kern
    return kern


def _line_cut(a: Point, b: Point, s: Point, e: Point,
              s_val: Fraction, e_val: Fraction) -> Point:
    t = s_val / (s_val - e_val)
    return Point(s.x + t * (e.x - s.x), s.y + t * (e.y - s.y))


def _dedupe_cyclic(points: list[Point]) -> list[Point]:
    out = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _convex_canonical(points: list[Point]) -> list[Point]:
    """Convex hull (monotone chain); collapses degenerate point sets."""
    pts = sorted(set(points), key=lambda p: (p.x, p.y))
    if len(pts) <= 2:
        return pts
    from .geometry import cross

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        # collinear input: keep the two extremes
        return [pts[0], pts[-1]]
    return hull


# ---------------------------------------------------------------------------
# critical lines


def critical_lines(P: Polygon, family: str = "reflex") -> list[HLine]:
    """Event lines for guard visibility, deduplicated and sorted.

    ``"reflex"``: lines through a reflex vertex and any other vertex, plus
    every edge's supporting line.  All visibility windows of vertex-anchored
    segment guards pivot at a reflex vertex, so this family contains every
    event line while staying far smaller than all vertex pairs.

    ``"all-pairs"``: lines through every vertex pair.
    """
    if P._clines is None:
        P._clines = {}
    if family in P._clines:
        return P._clines[family]
    hv = P.hverts
    n = P.n
    lines = set()
    for i in range(n):
        lines.add(line_through(hv[i], hv[(i + 1) % n]))
    if family == "all-pairs":
        for i in range(n):
            for j in range(i + 1, n):
                lines.add(line_through(hv[i], hv[j]))
    elif family == "reflex":
        for r in P.reflex:
            for j in range(n):
                if j != r:
                    lines.add(line_through(hv[r], hv[j]))
    elif family == "windows":
        # lines that can carry a visibility window regardless of the guard:
        # through two reflex vertices, or a reflex vertex and a neighbour
        # (edge extensions)
        n_ = P.n
        for r in P.reflex:
            for r2 in P.reflex:
                if r2 != r:
                    lines.add(line_through(hv[r], hv[r2]))
            for j in ((r - 1) % n_, (r + 1) % n_):
                lines.add(line_through(hv[r], hv[j]))
    else:
        raise ValueError(f"unknown critical line family: {family}")
    out = sorted(lines)
    P._clines[family] = out
    return out


def _pair_event_lines(P: Polygon, g: Guard) -> list[HLine]:
    """Window lines of the weak visibility region of guard g: any boundary
    of that region away from the polygon edges pivots at a reflex vertex
    and is anchored by a carrier endpoint, another reflex vertex, or an
    incident edge extension."""
    base = critical_lines(P, "windows")
    hv = P.hverts
    extra = set()
    for r in P.reflex:
        for e in (g.i, g.j):
            if e != r:
                extra.add(line_through(hv[r], hv[e]))
    return base + sorted(extra - set(base))


# ---------------------------------------------------------------------------
# visibility polygons


class DegenerateViewpoint(ValueError):
    pass


@dataclass(frozen=True)
class VisibilityPolygon:
    """Closure of the region seen from ``owner``.

    The chain is star-shaped about the owner.  Points on lines through the
    owner and a polygon vertex may be blocked by grazing even when they lie
    inside the chain; exact queries on such points should fall back to
    `sees`.
    """
    owner: Point
    chain: tuple[Point, ...]

    def contains_closure(self, q: Point) -> bool:
        loc = locate_in_polygon([hpoint(v) for v in self.chain], hpoint(q))
        return loc >= 0


class _VPData:
    """Internal fan representation of a visibility polygon.

    ``dirs[k]`` are the boundary-ray directions in CCW order; sector k
    spans dirs[k] .. dirs[k+1] and sees the portion of one polygon edge
    between anchor points A[k], B[k].  ``full`` fans wrap around; boundary
    owners have an open fan covering the interior side only.
    """

    __slots__ = ("origin", "dirs", "keys", "A", "B", "edges", "full")

    def __init__(self, origin, dirs, A, B, edges, full):
        self.origin = origin
        self.dirs = dirs
        self.keys = [_AngKey(d) for d in dirs]
        self.A = A
        self.B = B
        self.edges = edges
        self.full = full

    def sector_of(self, d) -> Optional[int]:
        """Sector index whose open angular range contains d, or None.

        Callers resolve directions lying exactly on a boundary ray through
        `on_boundary_ray` first.
        """
        key = _AngKey(d)
        keys = self.keys
        lo, hi = 0, len(keys)
        while lo < hi:
            mid = (lo + hi) // 2
            if keys[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        k = lo - 1
        if k < 0:
            return len(self.A) - 1 if self.full else None
        if k >= len(self.A):
            return None
        return k

    def on_boundary_ray(self, d) -> Optional[int]:
        key = _AngKey(d)
        keys = self.keys
        lo, hi = 0, len(keys)
        while lo < hi:
            mid = (lo + hi) // 2
            if keys[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(keys) and keys[lo] == key:
            return lo
        return None

    def contains_closure_h(self, x) -> bool:
        o = self.origin
        if point_eq(o, x):
            return True
        d = direction(o, x)
        ray = self.on_boundary_ray(d)
        if ray is not None:
            far = self._far_anchor(ray)
            if far is None:
                return False
            return collinear_between_closed(o, far, x)
        k = self.sector_of(d)
        if k is None or k >= len(self.A):
            return False
        return orient(self.A[k], self.B[k], x) >= 0

    def _far_anchor(self, ray_index):
        """Deepest reachable point along boundary ray ``ray_index``."""
        cands = []
        if ray_index < len(self.A):
            cands.append(self.A[ray_index])
        prev = ray_index - 1
        if prev >= 0:
            cands.append(self.B[prev])
        elif self.full:
            cands.append(self.B[len(self.B) - 1])
        if not cands:
            return None
        if len(cands) == 1:
            return cands[0]
        a, b = cands
        # b within [origin, a] means a reaches farther
        return a if collinear_between_closed(self.origin, a, b) else b


def _vp_fan(P: Polygon, o: HPoint) -> _VPData:
    """Build the sector fan for an interior viewpoint."""
    hv = P.hverts
    dirs_set = {}
    for v in hv:
        if point_eq(v, o):
            raise DegenerateViewpoint("viewpoint coincides with a vertex")
        d = direction(o, v)
        dirs_set[d] = True
    dirs = sorted(dirs_set, key=_AngKey)
    m = len(dirs)
    A, B, edges = [], [], []
    for k in range(m):
        d1 = dirs[k]
        d2 = dirs[(k + 1) % m]
        s = (d1[0] + d2[0], d1[1] + d2[1])
        hit = _ray_hit_edge(P, o, s)
        if hit is None:
            raise RuntimeError("interior ray escaped the polygon")
        ei = hit
        e1 = hv[ei]
        e2 = hv[(ei + 1) % P.n]
        ledge = line_through(e1, e2)
        a = meet(ledge, _ray_line(o, d1))
        b = meet(ledge, _ray_line(o, d2))
        A.append(a)
        B.append(b)
        edges.append(ei)
    return _VPData(o, dirs, A, B, edges, True)


def _ray_line(o: HPoint, d) -> HLine:
    q = (o[0] + d[0] * o[2], o[1] + d[1] * o[2], o[2])
    return line_through(o, q)


def _ray_hit_edge(P: Polygon, o: HPoint, d) -> Optional[int]:
    """Index of the edge containing the first boundary hit of ray (o, d)."""
    hv = P.hverts
    n = P.n
    ox, oy, ow = o
    best_t = None
    best_i = None
    for i in range(n):
        e = hv[i]
        f = hv[(i + 1) % n]
        l = line_through(e, f)
        denom = (l[0] * d[0] + l[1] * d[1]) * ow
        if denom == 0:
            continue
        num = -(l[0] * ox + l[1] * oy + l[2] * ow)
        t = Fraction(num, denom)
        if t <= 0:
            continue
        x = exact.norm_point(ox * denom + d[0] * ow * num,
                             oy * denom + d[1] * ow * num,
                             ow * denom)
        if collinear_between_closed(e, f, x):
            if best_t is None or t < best_t:
                best_t, best_i = t, i
    return best_i


def visibility_polygon(P: Polygon, p: Point) -> VisibilityPolygon:
    """Region visible from p, by exact angular sweep over vertex rays."""
    o = hpoint(p)
    for v in P.hverts:
        if point_eq(v, o):
            raise DegenerateViewpoint("viewpoint coincides with a vertex")
    loc = locate_in_polygon(P.hverts, o)
    if loc < 0:
        raise ValueError("viewpoint outside the polygon")
    if loc > 0:
        fan = _vp_fan(P, o)
        chain = _fan_chain(fan)
    else:
        fan = _vp_fan_boundary(P, o)
        chain = _fan_chain(fan)
    return VisibilityPolygon(p, tuple(to_point(c) for c in chain))


def _fan_chain(fan: _VPData) -> list:
    chain = []
    m = len(fan.A)
    for k in range(m):
        for pt in (fan.A[k], fan.B[k]):
            if not chain or not point_eq(chain[-1], pt):
                chain.append(pt)
    while len(chain) > 1 and point_eq(chain[0], chain[-1]):
        chain.pop()
    return chain


def _vp_fan_boundary(P: Polygon, o: HPoint) -> _VPData:
    """Fan for a viewpoint on the relative interior of one edge."""
    hv = P.hverts
    n = P.n
    edge_i = None
    for i in range(n):
        if exact.on_closed_segment(hv[i], hv[(i + 1) % n], o):
            edge_i = i
            break
    if edge_i is None:
        raise ValueError("boundary viewpoint not located on any edge")
    a = hv[edge_i]
    b = hv[(edge_i + 1) % n]
    fwd = direction(o, b)
    bwd = direction(o, a)
    dirs_set = {}
    for v in hv:
        if point_eq(v, o):
            continue
        d = direction(o, v)
        c = fwd[0] * d[1] - fwd[1] * d[0]
        if c > 0:
            dirs_set[d] = True
    strict = sorted(dirs_set, key=lambda d: _AngCross(fwd, d))
    dirs = [fwd] + strict + [bwd]
    A, B, edges = [], [], []
    for k in range(len(dirs) - 1):
        d1 = dirs[k]
        d2 = dirs[k + 1]
        s = (d1[0] + d2[0], d1[1] + d2[1])
        hit = _ray_hit_edge(P, o, s)
        if hit is None:
            raise RuntimeError("boundary-viewpoint ray escaped the polygon")
        e1 = hv[hit]
        e2 = hv[(hit + 1) % n]
        ledge = line_through(e1, e2)
        A.append(meet(ledge, _ray_line(o, d1)))
        B.append(meet(ledge, _ray_line(o, d2)))
        edges.append(hit)
    return _VPData(o, dirs, A, B, edges, False)


class _AngCross:
    """Orders directions strictly inside the open half-plane left of fwd."""

    __slots__ = ("fwd", "d")

    def __init__(self, fwd, d):
        self.fwd = fwd
        self.d = d

    def __lt__(self, other):
        c = self.d[0] * other.d[1] - self.d[1] * other.d[0]
        return c > 0


# ---------------------------------------------------------------------------
# guard visibility


def _carrier_h(P: Polygon, g: Guard) -> tuple[HPoint, HPoint]:
    return P.hverts[g.i], P.hverts[g.j]


def _point_on_carrier(a: HPoint, b: HPoint, incl: Inclusion, x: HPoint) -> bool:
    if orient(a, b, x) != 0:
        return False
    if incl is Inclusion.CLOSED:
        return collinear_between_closed(a, b, x)
    return collinear_between_strict(a, b, x)


def _subdivision_params(a: HPoint, b: HPoint, lines) -> list[Fraction]:
    """Sorted params in [0, 1] where the given lines cut segment ab."""
    ts = {Fraction(0), Fraction(1)}
    for l in lines:
        rng = segment_param_range(a, b, l)
        if rng is not None and rng[0] == "point":
            t = rng[1]
            if 0 <= t <= 1:
                ts.add(t)
    return sorted(ts)


def _carrier_samples(a, b, incl, lines):
    """Sample points deciding existence of a visible carrier point.

    Yields interval midpoints (always in the open carrier), then interior
    breakpoints, then the endpoints for closed carriers.  Visibility status
    is constant on open subintervals and any isolated visible point lies on
    an event line, so this set is decision-complete.
    """
    cuts = _subdivision_params(a, b, lines)
    for k in range(len(cuts) - 1):
        yield affine_combination(a, b, (cuts[k] + cuts[k + 1]) / 2)
    for t in cuts:
        if 0 < t < 1:
            yield affine_combination(a, b, t)
    if incl is Inclusion.CLOSED:
        yield a
        yield b


def _vertex_lines_through(P: Polygon, q: HPoint) -> list[HLine]:
    out = []
    for v in P.hverts:
        if not point_eq(v, q):
            out.append(line_through(q, v))
    return out


def _segment_sees_target(P: Polygon, a: HPoint, b: HPoint,
                         incl: Inclusion, q: HPoint) -> Optional[HPoint]:
    """A carrier point that sees q, or None.  Exact, subdivision-based."""
    if _point_on_carrier(a, b, incl, q):
        return q
    verts = P.hverts
    mid = hmidpoint(a, b)
    if sees_h(verts, q, mid):
        return mid
    for s in _carrier_samples(a, b, incl, _vertex_lines_through(P, q)):
        if sees_h(verts, q, s):
            return s
    return None


def guard_sees_point(P: Polygon, g: Guard, l: Point) -> bool:
    """Does some carrier point of g see location l?"""
    a, b = _carrier_h(P, g)
    return _segment_sees_target(P, a, b, g.inclusion, hpoint(l)) is not None


def _collinear_carriers(a1, b1, a2, b2) -> bool:
    return orient(a1, b1, a2) == 0 and orient(a1, b1, b2) == 0


def _carrier_intersection_witness(a1, b1, incl1, a2, b2, incl2):
    """Shared carrier point (respecting inclusions), or None.

    A pair of guards whose carriers share a point see each other trivially:
    the witness segment is degenerate and its interior is empty.
    """
    if _collinear_carriers(a1, b1, a2, b2):
        # the closed overlap interval's endpoints are carrier endpoints
        # lying inside the other segment
        pts = []
        for x in (a2, b2):
            if collinear_between_closed(a1, b1, x):
                pts.append(x)
        for x in (a1, b1):
            if collinear_between_closed(a2, b2, x):
                pts.append(x)
        uniq = []
        for x in pts:
            if not any(point_eq(x, y) for y in uniq):
                uniq.append(x)
        if not uniq:
            return None
        if len(uniq) >= 2:
            # positive-length overlap: its midpoint is interior to both
            # carriers, hence a witness for either inclusion
            return hmidpoint(uniq[0], uniq[1])
        x = uniq[0]
        if _point_on_carrier(a1, b1, incl1, x) and \
           _point_on_carrier(a2, b2, incl2, x):
            return x
        return None
    # non-collinear: at most one shared point
    o1 = orient(a1, b1, a2)
    o2 = orient(a1, b1, b2)
    o3 = orient(a2, b2, a1)
    o4 = orient(a2, b2, b1)
    if o1 * o2 > 0 or o3 * o4 > 0:
        return None
    x = meet(line_through(a1, b1), line_through(a2, b2))
    if x is None:
        return None
    if collinear_between_closed(a1, b1, x) and \
       collinear_between_closed(a2, b2, x) and \
       _point_on_carrier(a1, b1, incl1, x) and \
       _point_on_carrier(a2, b2, incl2, x):
        return x
    return None


def _facing_endpoints(a1, b1, a2, b2):
    """For disjoint collinear carriers: the two nearest-facing endpoints.

    The facing pair is the unique endpoint pair with no other endpoint
    strictly between them.
    """
    for x in (a1, b1):
        for y in (a2, b2):
            others = [z for z in (a1, b1, a2, b2)
                      if not (point_eq(z, x) or point_eq(z, y))]
            if all(not collinear_between_strict(x, y, z) for z in others):
                return x, y
    return a1, a2


def guards_see_each_other(P: Polygon, g1: Guard, g2: Guard):
    """Witness pair (p, q) with relint(pq) interior, or None.

    Decided exactly: carriers that touch share a degenerate witness;
    collinear carriers reduce to a one-dimensional gap test; the general
    case subdivides one carrier at the critical lines and decides each
    piece with the one-dimensional engine.
    """
    a1, b1 = _carrier_h(P, g1)
    a2, b2 = _carrier_h(P, g2)
    i1, i2 = g1.inclusion, g2.inclusion
    verts = P.hverts

    x = _carrier_intersection_witness(a1, b1, i1, a2, b2, i2)
    if x is not None:
        return (to_point(x), to_point(x))

    if _collinear_carriers(a1, b1, a2, b2):
        # disjoint, same line: any witness segment along the line sweeps
        # past a carrier endpoint, so only the facing endpoints qualify,
        # and only for closed guards; the open gap must be interior
        if i1 is Inclusion.CLOSED and i2 is Inclusion.CLOSED:
            e1, e2 = _facing_endpoints(a1, b1, a2, b2)
            if sees_h(verts, e1, e2):
                return (to_point(e1), to_point(e2))
        return None

    # quick positive probes before the exhaustive pass
    probe_ts = (Fraction(1, 2), Fraction(1, 4), Fraction(3, 4))
    probes1 = [affine_combination(a1, b1, t) for t in probe_ts]
    probes2 = [affine_combination(a2, b2, t) for t in probe_ts]
    if i1 is Inclusion.CLOSED:
        probes1 += [a1, b1]
    if i2 is Inclusion.CLOSED:
        probes2 += [a2, b2]
    for p in probes1[:2]:
        for q in probes2[:2]:
            if sees_h(verts, p, q):
                return (to_point(p), to_point(q))

    lines = _pair_event_lines(P, g1)
    for q in _carrier_samples(a2, b2, i2, lines):
        p = _segment_sees_target(P, a1, b1, i1, q)
        if p is not None:
            return (to_point(p), to_point(q))
    return None


@dataclass(frozen=True)
class HiddenResult:
    hidden: bool
    witness: Optional[tuple[int, int, Point, Point]] = None


def is_hidden(P: Polygon, S: GuardSet) -> HiddenResult:
    """No pair of guards in S may see each other."""
    guards = list(S)
    for i in range(len(guards)):
        for j in range(i + 1, len(guards)):
            w = guards_see_each_other(P, guards[i], guards[j])
            if w is not None:
                return HiddenResult(False, (i, j, w[0], w[1]))
    return HiddenResult(True)
