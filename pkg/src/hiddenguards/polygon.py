"""Simple polygons: validation, classification, diagonals, membership.

A `Polygon` is an immutable CCW vertex chain with its reflex vertices
precomputed.  Class flags (orthogonal / monotone / starshaped) are computed
lazily and cached, since starshapedness needs the kernel.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from . import exact
from .geometry import Orientation, Point, cross, orient


class PolygonError(ValueError):
    pass


class TooFewVertices(PolygonError):
    pass


class CollinearTriple(PolygonError):
    def __init__(self, index: int):
        super().__init__(f"vertices {index - 1}, {index}, {index + 1} are collinear")
        self.index = index


class NotSimple(PolygonError):
    def __init__(self, edge_a: int, edge_b: int):
        super().__init__(f"edges {edge_a} and {edge_b} intersect")
        self.witness = (edge_a, edge_b)


class Location(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class ClassFlags:
    orthogonal: bool
    monotone: Optional[tuple[int, int]]   # primitive direction, or None
    starshaped: bool


class Polygon:
    """Validated simple polygon, counterclockwise, no collinear triples."""

    __slots__ = ("vertices", "reflex", "_h", "_tri", "_flags", "_kernel",
                 "_diagonals", "_clines")

    def __init__(self, vertices: tuple, reflex: tuple, _token=None):
        if _token is not _CONSTRUCT:
            raise TypeError("use validate_polygon() to build a Polygon")
        self.vertices = vertices
        self.reflex = reflex
        self._h = None
        self._tri = None
        self._flags = None
        self._kernel = None
        self._diagonals = None
        self._clines = None

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edge(self, i: int) -> tuple[Point, Point]:
        return self.vertices[i], self.vertices[(i + 1) % self.n]

    @property
    def hverts(self) -> list:
        if self._h is None:
            self._h = [exact.hpoint(v) for v in self.vertices]
        return self._h

    def signed_area2(self) -> Fraction:
        return _signed_area2(self.vertices)

    def contains(self, p: Point) -> Location:
        loc = exact.locate_in_polygon(self.hverts, exact.hpoint(p))
        if loc > 0:
            return Location.INTERIOR
        if loc == 0:
            return Location.BOUNDARY
        return Location.EXTERIOR

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Polygon({len(self.vertices)} vertices)"


_CONSTRUCT = object()


def _signed_area2(vertices: Sequence[Point]) -> Fraction:
    total = Fraction(0)
    n = len(vertices)
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        total += a.x * b.y - b.x * a.y
    return total


def validate_polygon(points: Sequence, collinear: str = "error") -> Polygon:
    """Validate a vertex chain and return the canonical CCW Polygon.

    Orientation is fixed by reversal when the input is clockwise.  Runs of
    collinear consecutive vertices raise `CollinearTriple` unless
    ``collinear="merge"``, which drops the interior vertices of each run.
    """
    verts = [p if isinstance(p, Point) else Point.of(p[0], p[1]) for p in points]
    if len(verts) < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {len(verts)}")
    if len(set(verts)) != len(verts):
        dup = _first_duplicate(verts)
        raise NotSimple(dup[0], dup[1])

    area2 = _signed_area2(verts)
    if area2 == 0:
        # either self-crossing (report the witness) or genuinely flat
        _check_simple(verts)
        raise PolygonError("degenerate polygon with zero area")
    if area2 < 0:
        verts.reverse()

    if collinear == "merge":
        verts = _merge_collinear(verts)
        if len(verts) < 3:
            raise TooFewVertices("fewer than 3 vertices after merging collinear runs")
    n = len(verts)
    for i in range(n):
        a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
        if orient(a, b, c) is Orientation.COLLINEAR:
            raise CollinearTriple(i)

    _check_simple(verts)

    reflex = tuple(i for i in range(n)
                   if orient(verts[i - 1], verts[i], verts[(i + 1) % n])
                   is Orientation.CW)
    return Polygon(tuple(verts), reflex, _token=_CONSTRUCT)


def _first_duplicate(verts):
    seen = {}
    for i, v in enumerate(verts):
        if v in seen:
            return (seen[v], i)
        seen[v] = i
    raise AssertionError


def _merge_collinear(verts):
    out = list(verts)
    changed = True
    while changed and len(out) >= 3:
        changed = False
        n = len(out)
        for i in range(n):
            if orient(out[i - 1], out[i], out[(i + 1) % n]) is Orientation.COLLINEAR:
                del out[i]
                changed = True
                break
    return out


def _check_simple(verts):
    """Pairwise edge-intersection check, pruned by x-sorted edge spans.

    Worst case quadratic, but near-linear on the structured families whose
    edges are local; that keeps validation usable at 1e5 vertices.
    """
    n = len(verts)
    edges = []
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        lo, hi = (a.x, b.x) if a.x <= b.x else (b.x, a.x)
        edges.append((lo, hi, i))
    edges.sort()
    for idx in range(n):
        lo_i, hi_i, i = edges[idx]
        ai, bi = verts[i], verts[(i + 1) % n]
        for jdx in range(idx + 1, n):
            lo_j, hi_j, j = edges[jdx]
            if lo_j > hi_i:
                break
            if abs(i - j) in (1, n - 1):
                # adjacent edges share exactly their common endpoint; a
                # collinear overlap would imply a collinear triple, caught
                # separately, or a duplicate vertex, caught earlier.
                continue
            aj, bj = verts[j], verts[(j + 1) % n]
            if _segments_touch(ai, bi, aj, bj):
                raise NotSimple(min(i, j), max(i, j))


def _segments_touch(a, b, c, d):
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    from .geometry import between_closed
    if o1 == 0 and between_closed(a, b, c):
        return True
    if o2 == 0 and between_closed(a, b, d):
        return True
    if o3 == 0 and between_closed(c, d, a):
        return True
    if o4 == 0 and between_closed(c, d, b):
        return True
    return False


def point_in_polygon(P: Polygon, p: Point) -> Location:
    """Exact point location: interior, boundary, or exterior."""
    return P.contains(p)


def is_diagonal(P: Polygon, i: int, j: int) -> bool:
    """True iff vertices i, j are non-consecutive and the open segment
    between them lies in the open interior."""
    n = P.n
    if i == j:
        return False
    if (i + 1) % n == j or (j + 1) % n == i:
        return False
    return exact.sees_h(P.hverts, P.hverts[i], P.hverts[j])


def enumerate_diagonals(P: Polygon) -> list[tuple[int, int]]:
    """All diagonals (i, j) with i < j, in lexicographic order."""
    if P._diagonals is None:
        out = []
        for i in range(P.n):
            for j in range(i + 1, P.n):
                if is_diagonal(P, i, j):
                    out.append((i, j))
        P._diagonals = out
    return list(P._diagonals)


def _primitive(dx: Fraction, dy: Fraction) -> tuple[int, int]:
    """Primitive integer direction for a rational vector."""
    num_x, num_y = dx.numerator * dy.denominator, dy.numerator * dx.denominator
    if num_x == 0 and num_y == 0:
        raise ValueError("zero vector")
    g = gcd(abs(num_x), abs(num_y))
    return (num_x // g, num_y // g)


def _unoriented(d: tuple[int, int]) -> tuple[int, int]:
    if d[0] < 0 or (d[0] == 0 and d[1] < 0):
        return (-d[0], -d[1])
    return d


def edge_directions(P: Polygon) -> list[tuple[int, int]]:
    """Unoriented primitive edge directions, deduplicated, input order."""
    seen = []
    for i in range(P.n):
        a, b = P.edge(i)
        d = _unoriented(_primitive(b.x - a.x, b.y - a.y))
        if d not in seen:
            seen.append(d)
    return seen


def is_orthogonal(P: Polygon) -> bool:
    """All edges parallel to one of two perpendicular directions.

    A closed chain with no collinear triples needs exactly two directions,
    so this is equivalent to rotatability into axis alignment.
    """
    dirs = edge_directions(P)
    if len(dirs) != 2:
        return False
    (ax, ay), (bx, by) = dirs
    return ax * bx + ay * by == 0


def orthogonal_frame(P: Polygon) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
    """The two perpendicular edge directions (d, rot90(d)), or None."""
    if not is_orthogonal(P):
        return None
    d = edge_directions(P)[0]
    return d, (-d[1], d[0])


def is_monotone_in(P: Polygon, d: tuple[int, int]) -> bool:
    """Is P monotone with respect to sweep direction d?

    Projects vertices onto d, compresses plateau runs (edges perpendicular
    to d), and checks that the cyclic sequence has exactly one strict local
    minimum and one strict local maximum — i.e. the boundary splits into a
    single increasing and a single decreasing chain.
    """
    dx, dy = d
    proj = [v.x * dx + v.y * dy for v in P.vertices]
    comp = []
    for value in proj:
        if not comp or comp[-1] != value:
            comp.append(value)
    while len(comp) > 1 and comp[0] == comp[-1]:
        comp.pop()
    m = len(comp)
    if m < 2:
        return False
    minima = 0
    maxima = 0
    for i in range(m):
        prev_v, v, next_v = comp[i - 1], comp[i], comp[(i + 1) % m]
        if v < prev_v and v < next_v:
            minima += 1
        elif v > prev_v and v > next_v:
            maxima += 1
    return minima == 1 and maxima == 1


def monotone_direction(P: Polygon) -> Optional[tuple[int, int]]:
    """A direction in which P is monotone, or None.

    The combinatorially distinct sweep directions are delimited by the edge
    normals, so testing every edge normal and edge direction is complete;
    the x-axis is tried first so axis-aligned inputs report the familiar
    frame.
    """
    candidates = [(1, 0), (0, 1)]
    for d in edge_directions(P):
        candidates.append(_unoriented((-d[1], d[0])))
        candidates.append(_unoriented(d))
    seen = set()
    for d in candidates:
        if d in seen:
            continue
        seen.add(d)
        if is_monotone_in(P, d):
            return d
    return None


def classify(P: Polygon) -> ClassFlags:
    """Orthogonal / monotone / starshaped flags (cached on the polygon)."""
    if P._flags is None:
        from .visibility import kernel_polygon
        P._flags = ClassFlags(
            orthogonal=is_orthogonal(P),
            monotone=monotone_direction(P),
            starshaped=not kernel_polygon(P).is_empty,
        )
    return P._flags
