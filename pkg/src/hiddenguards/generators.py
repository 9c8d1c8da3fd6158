"""Random and structured polygon generators.

All generators are deterministic functions of (n, seed): they draw only
from a locally seeded RNG.  Coordinates are integers bounded by a small
multiple of n so that exact arithmetic stays cheap downstream.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .polygon import Polygon, PolygonError, is_monotone_in, validate_polygon


class GenerationFailed(RuntimeError):
    pass


def random_orthogonal(n: int, seed: int) -> Polygon:
    """Grow a hole-free polyomino cell by cell, then trace its boundary.

    n must be an even vertex count >= 4.
    """
    if n < 4 or n % 2:
        raise ValueError("orthogonal polygons have an even vertex count >= 4")
    rng = random.Random(("ortho", n, seed).__repr__())
    for _ in range(400):
        poly = _grow_polyomino(rng, n)
        if poly is not None:
            return poly
    raise GenerationFailed(f"no orthogonal polygon with {n} vertices found")


def _grow_polyomino(rng: random.Random, n: int):
    cells = {(0, 0)}
    span = max(4, n)

    def addable(c):
        # the occupied 8-neighbourhood must be one contiguous arc that
        # includes an edge neighbour: no pinch points, no holes
        ring = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
        occ = [(c[0] + dx, c[1] + dy) in cells for dx, dy in ring]
        if not any(occ[k] for k in (0, 2, 4, 6)):
            return False
        changes = sum(occ[k] != occ[(k + 1) % 8] for k in range(8))
        return changes == 2

    for _ in range(6 * n):
        count = _boundary_vertex_count(cells)
        if count == n:
            pts = _trace_boundary(cells)
            try:
                return validate_polygon(pts)
            except PolygonError:
                return None
        frontier = set()
        for (x, y) in cells:
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                c = (x + dx, y + dy)
                if c not in cells and abs(c[0]) < span and abs(c[1]) < span:
                    frontier.add(c)
        candidates = [c for c in sorted(frontier) if addable(c)]
        if not candidates:
            return None
        cells.add(rng.choice(candidates))
    return None


def _boundary_edges(cells):
    edges = set()
    for (x, y) in cells:
        for a, b, neigh in (
            ((x, y), (x + 1, y), (x, y - 1)),
            ((x + 1, y), (x + 1, y + 1), (x + 1, y)),
            ((x + 1, y + 1), (x, y + 1), (x, y + 1)),
            ((x, y + 1), (x, y), (x - 1, y)),
        ):
            if neigh not in cells:
                edges.add((a, b))
    return edges


def _boundary_vertex_count(cells) -> int:
    pts = _trace_boundary(cells)
    return len(pts) if pts else 0


def _trace_boundary(cells):
    """Walk the directed boundary edges into a cycle and drop straight
    intermediate points."""
    edges = _boundary_edges(cells)
    nxt = {}
    for a, b in edges:
        nxt[a] = b
    start = min(nxt)
    cycle = [start]
    cur = nxt.get(start)
    while cur is not None and cur != start:
        cycle.append(cur)
        cur = nxt.get(cur)
        if len(cycle) > len(edges) + 1:
            return []
    if cur is None or len(cycle) != len(edges):
        return []
    out = []
    m = len(cycle)
    for i in range(m):
        a, b, c = cycle[i - 1], cycle[i], cycle[(i + 1) % m]
        if (b[0] - a[0], b[1] - a[1]) != (c[0] - b[0], c[1] - b[1]):
            out.append(b)
    return out


def random_monotone(n: int, seed: int) -> Polygon:
    """x-monotone polygon around a drifting corridor.

    Both chains follow a shared random-walk midline at jittered offsets,
    so the corridor between them bends and geodesics between the extreme
    vertices pick up reflex vertices.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    rng = random.Random(("mono", n, seed).__repr__())
    span = 4 * n
    for _ in range(400):
        xs = sorted(rng.sample(range(1, span), n - 2))
        mid = 0
        lower, upper = [], []
        for x in xs:
            mid += rng.randint(-3, 3)
            if rng.random() < 0.5:
                lower.append((x, mid - rng.randint(1, 4)))
            else:
                upper.append((x, mid + rng.randint(1, 4)))
        end_mid = mid + rng.randint(-3, 3)
        pts = [(0, 0)] + lower + [(span, end_mid)] + list(reversed(upper))
        if len(pts) != n:
            continue
        try:
            P = validate_polygon(pts)
        except PolygonError:
            continue
        if is_monotone_in(P, (1, 0)):
            return P
    raise GenerationFailed(f"no monotone polygon with {n} vertices found")


def random_starshaped(n: int, seed: int) -> Polygon:
    """Distinct directions around the origin with jittered radii; the
    origin then lies in the kernel by construction, which classify
    re-verifies."""
    if n < 3:
        raise ValueError("need n >= 3")
    rng = random.Random(("star", n, seed).__repr__())
    base = 4 * n
    from .exact import _AngKey
    for _ in range(400):
        dirs = {}
        tries = 0
        while len(dirs) < n and tries < 40 * n:
            tries += 1
            dx = rng.randint(-8, 8)
            dy = rng.randint(-8, 8)
            if dx == 0 and dy == 0:
                continue
            g = gcd(abs(dx), abs(dy))
            dirs[(dx // g, dy // g)] = True
        if len(dirs) < n:
            continue
        ordered = sorted(dirs, key=_AngKey)
        idx = sorted(rng.sample(range(len(ordered)), n))
        chosen = [ordered[k] for k in idx]
        pts = []
        for (dx, dy) in chosen:
            top = max(1, base // (4 * max(abs(dx), abs(dy))))
            s = rng.randint(max(1, top // 3), top)
            pts.append((dx * s, dy * s))
        try:
            P = validate_polygon(pts)
        except PolygonError:
            continue
        from .visibility import kernel_polygon
        if kernel_polygon(P).is_empty:
            continue
        if len(P.reflex) < 2:
            continue
        return P
    raise GenerationFailed(f"no starshaped polygon with {n} vertices found")


def structured_family(kind: str, n: int) -> Polygon:
    """Deterministic scaling families: staircase (orthogonal), zigzag
    (x-monotone), gear (starshaped)."""
    if kind == "staircase":
        return _staircase(n)
    if kind == "zigzag":
        return _zigzag(n)
    if kind == "gear":
        return _gear(n)
    raise ValueError(f"unknown family: {kind}")


def _staircase(n: int) -> Polygon:
    if n < 4 or n % 2:
        raise ValueError("staircase needs even n >= 4")
    k = (n - 2) // 2
    pts = []
    for i in range(k):
        pts.append((i, i))
        pts.append((i + 1, i))
    pts.append((k, k))
    pts.append((0, k))
    return validate_polygon(pts)


def _zigzag(n: int) -> Polygon:
    if n < 4:
        raise ValueError("zigzag needs n >= 4")
    m = n - 2
    pts = [(i, -(i % 2)) for i in range(m)]
    pts.append((m - 1, 3))
    pts.append((0, 3))
    return validate_polygon(pts)


def _gear(n: int) -> Polygon:
    """Teeth around a square ring: perimeter points scaled radially in and
    out, in angular order about the origin."""
    if n < 8 or n % 2:
        raise ValueError("gear needs even n >= 8")
    m = max(2, (n + 3) // 4)
    ring = _square_ring_points(n, m)
    pts = []
    for i, (x, y) in enumerate(ring):
        if i % 2 == 0:
            pts.append((3 * x, 3 * y))
        else:
            pts.append((2 * x, 2 * y))
    return validate_polygon(pts)


def _square_ring_points(count: int, m: int):
    """count points in CCW order on the boundary of the square [-m, m]^2,
    doubled so the alternating radial scaling stays integral."""
    side = 2 * m
    total = 4 * side
    out = []
    for i in range(count):
        t = Fraction(i * total, count) + Fraction(1, 2)
        s = int(t // side) % 4
        r = t - (t // side) * side
        if s == 0:
            out.append((-m + r, Fraction(-m)))
        elif s == 1:
            out.append((Fraction(m), -m + r))
        elif s == 2:
            out.append((m - r, Fraction(m)))
        else:
            out.append((Fraction(-m), m - r))
    return [(2 * p[0], 2 * p[1]) for p in out]
