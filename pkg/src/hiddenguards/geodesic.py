"""Geodesic shortest paths between polygon vertices, via the funnel
algorithm over a triangulation.

Only orientation predicates are needed: two distinct taut paths between
the same endpoints cannot tie in a simple polygon, so lengths are never
compared.  Vertices lying exactly on a straight stretch of the path are
kept as path vertices — the induced guards must be genuine edges and
diagonals, which a grazed vertex would invalidate.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .exact import collinear_between_strict, orient
from .geometry import squared_distance
from .guards import Guard, GuardSet, Inclusion, diagonal_guard, edge_guard
from .polygon import Polygon
from .triangulate import triangulate


class PathTooShort(ValueError):
    pass


@dataclass(frozen=True)
class Geodesic:
    """Vertex-index chain of the shortest interior path between two
    vertices; interior chain vertices are reflex vertices of the polygon."""
    path: tuple[int, ...]

    def edges(self):
        return list(zip(self.path, self.path[1:]))


def shortest_path(P: Polygon, u: int, v: int) -> Geodesic:
    n = P.n
    if not (0 <= u < n and 0 <= v < n):
        raise IndexError("vertex index out of range")
    if u == v:
        return Geodesic((u,))
    if (u + 1) % n == v or (v + 1) % n == u:
        return Geodesic((u, v))

    tris = triangulate(P)
    corridor = _triangle_corridor(tris, u, v)
    if len(corridor) == 1:
        return Geodesic((u, v))
    portals = _oriented_portals(P, tris, corridor, u)
    path = _funnel(P, portals, u, v)
    return Geodesic(tuple(path))


def _triangle_corridor(tris, u: int, v: int) -> list[int]:
    """Triangle indices from the last u-fan triangle to the first v-fan
    triangle along the unique dual-tree path."""
    edge_map: dict[tuple[int, int], list[int]] = {}
    for t, (a, b, c) in enumerate(tris):
        for x, y in ((a, b), (b, c), (c, a)):
            key = (x, y) if x < y else (y, x)
            edge_map.setdefault(key, []).append(t)
    adj: dict[int, list[int]] = {t: [] for t in range(len(tris))}
    for key, owners in edge_map.items():
        if len(owners) == 2:
            s, t = owners
            adj[s].append(t)
            adj[t].append(s)

    start = min(t for t, tri in enumerate(tris) if u in tri)
    goal = {t for t, tri in enumerate(tris) if v in tri}
    parent = {start: None}
    queue = deque([start])
    reached = None
    while queue:
        t = queue.popleft()
        if t in goal:
            reached = t
            break
        for s in sorted(adj[t]):
            if s not in parent:
                parent[s] = t
                queue.append(s)
    if reached is None:
        raise RuntimeError("triangulation dual is disconnected")
    path = []
    t = reached
    while t is not None:
        path.append(t)
        t = parent[t]
    path.reverse()

    lo = 0
    while lo + 1 < len(path) and u in tris[path[lo + 1]]:
        lo += 1
    hi = lo
    while hi < len(path) and v not in tris[path[hi]]:
        hi += 1
    return path[lo:hi + 1]


def _oriented_portals(P: Polygon, tris, corridor, u: int):
    """Shared diagonals along the corridor as (left, right) index pairs."""
    raw = []
    for k in range(len(corridor) - 1):
        a = set(tris[corridor[k]])
        b = set(tris[corridor[k + 1]])
        shared = sorted(a & b)
        if len(shared) != 2:
            raise RuntimeError("corridor triangles do not share an edge")
        raw.append(tuple(shared))

    pts = P.hverts
    l, r = raw[0]
    o = orient(pts[u], pts[l], pts[r])
    if o == 0:
        raise RuntimeError("degenerate first portal")
    if o > 0:
        l, r = r, l
    oriented = [(l, r)]
    for a, b in raw[1:]:
        pl, pr = oriented[-1]
        if a == pl:
            oriented.append((pl, b))
        elif b == pl:
            oriented.append((pl, a))
        elif a == pr:
            oriented.append((b, pr))
        elif b == pr:
            oriented.append((a, pr))
        else:
            raise RuntimeError("consecutive portals share no endpoint")
    return oriented


def _funnel(P: Polygon, portals, u: int, v: int) -> list[int]:
    pts = P.hverts
    path = [u]
    l0, r0 = portals[0]
    funnel = deque([l0, u, r0])
    cusp = u

    def turn(i, j, k):
        return orient(pts[i], pts[j], pts[k])

    def strictly_between(i, j, k):
        return collinear_between_strict(pts[i], pts[j], pts[k])

    def insert_right(w):
        nonlocal cusp
        if funnel[-1] == w:
            return
        while funnel[-1] != cusp:
            a, b = funnel[-2], funnel[-1]
            o = turn(a, b, w)
            # pop unless b is a genuine bend the path keeps
            if o > 0 or (o == 0 and not strictly_between(a, w, b)):
                funnel.pop()
            else:
                break
        if funnel[-1] == cusp:
            while len(funnel) > 1:
                c, l1 = funnel[-1], funnel[-2]
                o = turn(c, l1, w)
                if o > 0 or (o == 0 and strictly_between(c, w, l1)):
                    path.append(l1)
                    funnel.pop()
                    cusp = funnel[-1]
                else:
                    break
        funnel.append(w)

    def insert_left(w):
        nonlocal cusp
        if funnel[0] == w:
            return
        while funnel[0] != cusp:
            a, b = funnel[1], funnel[0]
            o = turn(a, b, w)
            if o < 0 or (o == 0 and not strictly_between(a, w, b)):
                funnel.popleft()
            else:
                break
        if funnel[0] == cusp:
            while len(funnel) > 1:
                c, r1 = funnel[0], funnel[1]
                o = turn(c, r1, w)
                if o < 0 or (o == 0 and strictly_between(c, w, r1)):
                    path.append(r1)
                    funnel.popleft()
                    cusp = funnel[0]
                else:
                    break
        funnel.appendleft(w)

    prev_l, prev_r = portals[0]
    for l, r in portals[1:]:
        if l != prev_l:
            insert_left(l)
        if r != prev_r:
            insert_right(r)
        prev_l, prev_r = l, r

    insert_right(v)
    tail = []
    for x in reversed(funnel):
        if x == cusp:
            break
        tail.append(x)
    path.extend(reversed(tail))
    return path


def induced_guard_set(P: Polygon, g: Geodesic) -> GuardSet:
    """One open guard per geodesic edge; each edge is a polygon edge or a
    diagonal by construction."""
    if len(g.path) < 2:
        raise PathTooShort("geodesic has no edges")
    n = P.n
    guards = []
    for i, j in g.edges():
        if (i + 1) % n == j:
            guards.append(edge_guard(P, i, Inclusion.OPEN))
        elif (j + 1) % n == i:
            guards.append(edge_guard(P, j, Inclusion.OPEN))
        else:
            guards.append(diagonal_guard(P, i, j, Inclusion.OPEN, trusted=True))
    return GuardSet(tuple(guards))


def path_length(g: Geodesic, P: Polygon) -> tuple[Fraction, ...]:
    """Exact squared length of each path edge, in path order."""
    return tuple(squared_distance(P.vertices[i], P.vertices[j])
                 for i, j in g.edges())
