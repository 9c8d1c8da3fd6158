"""Independent brute-force oracles for the test suite.

Everything here is written directly against `Fraction` arithmetic and the
definitions, sharing no code with the package's engines, so that agreement
between the two is meaningful.
"""
from __future__ import annotations

import heapq
from fractions import Fraction

import mpmath

from hiddenguards.geometry import Point
from hiddenguards.polygon import Polygon

mpmath.mp.dps = 60


def _cross(o, a, b):
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def _sign(v):
    return (v > 0) - (v < 0)


def _between_closed(a, b, p):
    if a.x != b.x:
        return min(a.x, b.x) <= p.x <= max(a.x, b.x)
    return min(a.y, b.y) <= p.y <= max(a.y, b.y)


def _between_strict(a, b, p):
    if a.x != b.x:
        return min(a.x, b.x) < p.x < max(a.x, b.x)
    return min(a.y, b.y) < p.y < max(a.y, b.y)


def point_location(P: Polygon, p: Point) -> int:
    """1 interior, 0 boundary, -1 exterior (crossing parity)."""
    n = P.n
    for i in range(n):
        a, b = P.vertices[i], P.vertices[(i + 1) % n]
        if _sign(_cross(a, b, p)) == 0 and _between_closed(a, b, p):
            return 0
    crossings = 0
    for i in range(n):
        a, b = P.vertices[i], P.vertices[(i + 1) % n]
        if (a.y > p.y) != (b.y > p.y):
            t = (p.y - a.y) / (b.y - a.y)
            x = a.x + t * (b.x - a.x)
            if x > p.x:
                crossings += 1
    return 1 if crossings % 2 == 1 else -1


def brute_sees(P: Polygon, p: Point, q: Point) -> bool:
    """Definition-level check: open segment pq inside the open interior."""
    if p == q:
        return True
    n = P.n
    # any boundary contact strictly inside pq blocks
    for i in range(n):
        v = P.vertices[i]
        if _sign(_cross(p, q, v)) == 0 and _between_strict(p, q, v):
            return False
    for i in range(n):
        a, b = P.vertices[i], P.vertices[(i + 1) % n]
        o1 = _sign(_cross(p, q, a))
        o2 = _sign(_cross(p, q, b))
        if o1 == 0 and o2 == 0:
            if _between_closed(a, b, p) and _between_closed(a, b, q):
                return False
            continue
        if o1 * o2 < 0:
            o3 = _sign(_cross(a, b, p))
            o4 = _sign(_cross(a, b, q))
            if o3 * o4 < 0:
                return False
    mid = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
    return point_location(P, mid) == 1


def grid_points(P: Polygon, k: int) -> list[Point]:
    """Interior points of a (k x k) grid over the bounding box."""
    xs = [v.x for v in P.vertices]
    ys = [v.y for v in P.vertices]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    out = []
    for i in range(1, k + 1):
        x = xmin + (xmax - xmin) * Fraction(i, k + 1)
        for j in range(1, k + 1):
            y = ymin + (ymax - ymin) * Fraction(j, k + 1)
            p = Point(x, y)
            if point_location(P, p) == 1:
                out.append(p)
    return out


def brute_guard_sees_point(P: Polygon, g, l: Point, samples: int = 64) -> bool:
    """Dense-sampling probe of weak visibility (sufficient, not complete)."""
    a, b = g.carrier(P)
    for k in range(1, samples):
        t = Fraction(k, samples)
        p = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
        if brute_sees(P, p, l):
            return True
    from hiddenguards.guards import Inclusion
    if g.inclusion is Inclusion.CLOSED:
        return brute_sees(P, a, l) or brute_sees(P, b, l)
    return False


def brute_guards_see(P: Polygon, g1, g2, samples: int = 48) -> bool:
    """Dense witness-pair sampling (sufficient, not complete)."""
    from hiddenguards.guards import Inclusion
    a1, b1 = g1.carrier(P)
    a2, b2 = g2.carrier(P)

    def pts(a, b, incl):
        out = [Point(a.x + Fraction(k, samples) * (b.x - a.x),
                     a.y + Fraction(k, samples) * (b.y - a.y))
               for k in range(1, samples)]
        if incl is Inclusion.CLOSED:
            out += [a, b]
        return out

    for p in pts(a1, b1, g1.inclusion):
        for q in pts(a2, b2, g2.inclusion):
            if p == q:
                return True
            if brute_sees(P, p, q):
                return True
    return False


class LengthTie(Exception):
    pass


def dijkstra_geodesic(P: Polygon, u: int, v: int) -> list[int]:
    """Shortest vertex path over the edge+diagonal visibility graph.

    Distances are compared with 60-digit arithmetic; near-ties beyond that
    resolution raise `LengthTie` for manual review.
    """
    from hiddenguards.polygon import is_diagonal
    n = P.n
    adj = [[] for _ in range(n)]
    for i in range(n):
        adj[i].append((i + 1) % n)
        adj[(i + 1) % n].append(i)
    for i in range(n):
        for j in range(i + 1, n):
            if is_diagonal(P, i, j):
                adj[i].append(j)
                adj[j].append(i)

    def dist(i, j):
        a, b = P.vertices[i], P.vertices[j]
        d2 = (a.x - b.x) ** 2 + (a.y - b.y) ** 2
        return mpmath.sqrt(mpmath.mpf(d2.numerator) / mpmath.mpf(d2.denominator))

    INF = mpmath.inf
    best = [INF] * n
    parent = [None] * n
    best[u] = mpmath.mpf(0)
    heap = [(mpmath.mpf(0), u)]
    done = [False] * n
    while heap:
        d, i = heapq.heappop(heap)
        if done[i]:
            continue
        done[i] = True
        if i == v:
            break
        for j in adj[i]:
            if done[j]:
                continue
            nd = d + dist(i, j)
            if nd < best[j] - mpmath.mpf(10) ** -40:
                best[j] = nd
                parent[j] = i
                heapq.heappush(heap, (nd, j))
            elif abs(nd - best[j]) <= mpmath.mpf(10) ** -40 and parent[j] != i:
                raise LengthTie(f"tie at vertex {j}")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def monotone_brute(P: Polygon, d: tuple[int, int]) -> bool:
    """d-monotone iff every generic line perpendicular to d crosses the
    boundary exactly twice.

    Tested at midpoints between consecutive distinct vertex projections,
    where every boundary crossing is a proper edge crossing; between those
    events the crossing count is constant.
    """
    n = P.n
    proj = [v.x * d[0] + v.y * d[1] for v in P.vertices]
    values = sorted(set(proj))
    for k in range(len(values) - 1):
        c = (values[k] + values[k + 1]) / 2
        crossings = 0
        for i in range(n):
            a = proj[i] - c
            b = proj[(i + 1) % n] - c
            if (a > 0) != (b > 0):
                crossings += 1
        if crossings != 2:
            return False
    return True
