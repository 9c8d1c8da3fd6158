"""Ear-clipping triangulation with exact predicates.

Plain ear clipping, but blocker lookups go through an x-sorted vertex index
so that the common structured inputs (staircases, gear teeth, zigzags)
triangulate in near-linear time.  Worst case remains quadratic, which is
fine at the sizes the certifier handles.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right

from .geometry import Orientation, orient
from .polygon import Polygon


def triangulate(P: Polygon) -> list[tuple[int, int, int]]:
    """Triangles as CCW index triples; n-2 of them, exact area partition."""
    if P._tri is None:
        P._tri = _ear_clip(P)
    return list(P._tri)


def _ear_clip(P: Polygon) -> list[tuple[int, int, int]]:
    verts = P.vertices
    n = P.n
    if n == 3:
        return [(0, 1, 2)]

    nxt = list(range(1, n)) + [0]
    prv = [n - 1] + list(range(n - 1))
    alive = [True] * n
    convex = [True] * n
    for i in P.reflex:
        convex[i] = False

    # static x-order; dead entries are skipped on read
    order = sorted(range(n), key=lambda i: (verts[i].x, verts[i].y))
    xs = [verts[i].x for i in order]

    def triangle_blocked(p, i, q):
        a, b, c = verts[p], verts[i], verts[q]
        xlo = min(a.x, b.x, c.x)
        xhi = max(a.x, b.x, c.x)
        lo = bisect_left(xs, xlo)
        hi = bisect_right(xs, xhi)
        for k in range(lo, hi):
            w = order[k]
            if not alive[w] or w == p or w == i or w == q:
                continue
            v = verts[w]
            # closed-triangle contact blocks: a vertex grazing the chord
            # would make it an invalid diagonal
            if orient(a, b, v) >= 0 and orient(b, c, v) >= 0 \
                    and orient(c, a, v) >= 0:
                return True
        return False

    def recompute_convex(i):
        # corners that go collinear after a clip are not clippable: their
        # chord would be a zero-area triangle
        convex[i] = orient(verts[prv[i]], verts[i], verts[nxt[i]]) \
            is Orientation.CCW

    triangles = []
    remaining = n
    i = 0
    stale = 0
    while remaining > 3:
        if not alive[i]:
            i = nxt[i]
            continue
        p, q = prv[i], nxt[i]
        if convex[i] and not triangle_blocked(p, i, q):
            triangles.append((p, i, q))
            alive[i] = False
            nxt[p] = q
            prv[q] = p
            remaining -= 1
            recompute_convex(p)
            recompute_convex(q)
            i = p
            stale = 0
        else:
            i = nxt[i]
            stale += 1
            if stale > remaining + 1:
                raise RuntimeError("ear clipping stalled; polygon invariant violated")
    a = next(k for k in range(n) if alive[k])
    triangles.append((a, nxt[a], nxt[nxt[a]]))
    return triangles
