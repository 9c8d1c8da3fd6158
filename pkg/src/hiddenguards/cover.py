"""Coverage decisions: does a guard set see every interior location?

The critical lines partition the interior into convex cells on which every
guard's visibility status is constant, so coverage is decided on finitely
many cell representatives.  The engine refines lazily: starting from the
triangulation, a piece wholly seen by a single guard is certified and
dropped via a convex-hull argument, and only contested pieces are split
down to atomic cells (crossed by no critical line), whose representatives
are decided exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import exact
from .exact import (HPoint, affine_combination, collinear_between_closed,
                    collinear_between_strict, hmidpoint, hpoint, line_through,
                    norm_line, orient, point_eq, sees_h, segment_param_range,
                    side, to_point)
from .geometry import Point
from .guards import Guard, GuardSet, Inclusion
from .polygon import Polygon
from .triangulate import triangulate
from .visibility import _segment_sees_target, _vp_fan, critical_lines

DEFAULT_CELL_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CoverageCell:
    representative: Point
    seen_by: tuple[bool, ...]


@dataclass(frozen=True)
class CoverageMap:
    cells: tuple[CoverageCell, ...]
    lines: tuple
    guards: GuardSet

    @property
    def covered(self) -> bool:
        return all(any(c.seen_by) for c in self.cells)

    def unseen(self) -> list[Point]:
        return [c.representative for c in self.cells if not any(c.seen_by)]

    def to_document(self) -> str:
        out = [f"cells: {len(self.cells)}", f"lines: {len(self.lines)}",
               f"covered: {str(self.covered).lower()}"]
        for p in self.unseen():
            out.append(f"unseen: {p.x},{p.y}")
        return "\n".join(out) + "\n"


def _carriers(P: Polygon, S) -> list[tuple[HPoint, HPoint, Inclusion]]:
    hv = P.hverts
    return [(hv[g.i], hv[g.j], g.inclusion) for g in S]


def _centroid(piece) -> HPoint:
    sx = Fraction(0)
    sy = Fraction(0)
    for p in piece:
        sx += Fraction(p[0], p[2])
        sy += Fraction(p[1], p[2])
    k = len(piece)
    return hpoint(Point(sx / k, sy / k))


def _piece_edge_lines(piece):
    """CCW edge lines with the interior on the positive side."""
    m = len(piece)
    return [exact.oriented_line(piece[i], piece[(i + 1) % m]) for i in range(m)]


def _line_crosses(piece, l) -> bool:
    has_pos = has_neg = False
    for v in piece:
        s = side(l, v)
        if s > 0:
            has_pos = True
        elif s < 0:
            has_neg = True
        if has_pos and has_neg:
            return True
    return False


def _split_piece(piece, l):
    """Cut a convex piece by a line known to cross it."""
    m = len(piece)
    pos, neg = [], []
    for i in range(m):
        a = piece[i]
        b = piece[(i + 1) % m]
        sa = side(l, a)
        sb = side(l, b)
        if sa >= 0:
            pos.append(a)
        if sa <= 0:
            neg.append(a)
        if sa * sb < 0:
            x = exact.meet(l, line_through(a, b))
            pos.append(x)
            neg.append(x)
    return _dedupe(pos), _dedupe(neg)


def _dedupe(pts):
    out = []
    for p in pts:
        if not out or not point_eq(out[-1], p):
            out.append(p)
    while len(out) > 1 and point_eq(out[0], out[-1]):
        out.pop()
    return out


def _segment_meets_relint_convex(a: HPoint, b: HPoint, hull_lines) -> bool:
    """Does segment ab reach the open interior of the convex region whose
    CCW edge lines are given?"""
    lo, hi = Fraction(0), Fraction(1)
    for l in hull_lines:
        sa = side(l, a)
        sb = side(l, b)
        if sa >= 0 and sb >= 0:
            continue
        if sa < 0 and sb < 0:
            return False
        rng = segment_param_range(a, b, l)
        if rng is None or rng[0] != "point":
            return False
        t = rng[1]
        if sa < 0:
            lo = max(lo, t)
        else:
            hi = min(hi, t)
        if lo > hi:
            return False
    if lo > hi:
        return False
    mid = affine_combination(a, b, (lo + hi) / 2)
    return all(side(l, mid) > 0 for l in hull_lines)


def _hull_of(points):
    """Convex hull, CCW, of a handful of homogeneous points."""
    pts = sorted(set(points), key=lambda p: (Fraction(p[0], p[2]), Fraction(p[1], p[2])))
    if len(pts) <= 2:
        return pts

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 3 else pts[:2]


def _face_overlap_cert(piece, a, b) -> bool:
    """A piece face lies along the carrier with positive overlap: every
    interior piece point then sees the shared face point through the piece."""
    m = len(piece)
    for i in range(m):
        u, v = piece[i], piece[(i + 1) % m]
        if orient(a, b, u) == 0 and orient(a, b, v) == 0:
            # positive-length overlap of [u,v] with [a,b]
            inside = [p for p in (u, v) if collinear_between_closed(a, b, p)]
            for p in (a, b):
                if collinear_between_closed(u, v, p):
                    inside.append(p)
            uniq = []
            for p in inside:
                if not any(point_eq(p, q) for q in uniq):
                    uniq.append(p)
            if len(uniq) >= 2:
                return True
    return False


def _through_piece_cert(piece, piece_lines, a, b) -> bool:
    """The open carrier passes through the open piece."""
    return _segment_meets_relint_convex(a, b, piece_lines)


def _hull_cert(P: Polygon, piece, a, b, pstar) -> bool:
    """Every point of the piece sees pstar on the carrier.

    Requires: no polygon edge meets the open hull of piece+pstar, and the
    hull edges incident to pstar (where sight segments run along the hull
    boundary) are themselves interior.
    """
    hull = _hull_of(list(piece) + [pstar])
    if len(hull) < 3:
        return False
    hull_lines = _piece_edge_lines(hull)
    hv = P.hverts
    n = len(hv)
    for i in range(n):
        e = hv[i]
        f = hv[(i + 1) % n]
        if _segment_meets_relint_convex(e, f, hull_lines):
            return False
    for k, h in enumerate(hull):
        if point_eq(h, pstar):
            prev_pt = hull[k - 1]
            next_pt = hull[(k + 1) % len(hull)]
            if not sees_h(hv, pstar, prev_pt):
                return False
            if not sees_h(hv, pstar, next_pt):
                return False
            break
    return True


def _anchor_on_carrier(a: HPoint, b: HPoint, c: HPoint) -> HPoint:
    """Projection of c onto the carrier line, clamped into the open
    segment: the natural witness candidate for seeing a whole piece."""
    ax, ay = Fraction(a[0], a[2]), Fraction(a[1], a[2])
    bx, by = Fraction(b[0], b[2]), Fraction(b[1], b[2])
    cx, cy = Fraction(c[0], c[2]), Fraction(c[1], c[2])
    dx, dy = bx - ax, by - ay
    denom = dx * dx + dy * dy
    t = ((cx - ax) * dx + (cy - ay) * dy) / denom
    lo, hi = Fraction(1, 16), Fraction(15, 16)
    t = lo if t < lo else hi if t > hi else t
    return affine_combination(a, b, t)


def _certify_piece(P: Polygon, piece, piece_lines, carriers, hint: int) -> int:
    """Index of a guard certified to see the whole piece, or -1.

    The hint (the guard that covered the previous piece) is tried first;
    spatial locality makes it the usual winner.  Hull certificates are
    attempted only from anchor points that already see the centroid.
    """
    order = list(range(len(carriers)))
    if 0 <= hint < len(carriers):
        order.remove(hint)
        order.insert(0, hint)
    for k in order:
        a, b, _incl = carriers[k]
        if _face_overlap_cert(piece, a, b):
            return k
        if _through_piece_cert(piece, piece_lines, a, b):
            return k
    verts = P.hverts
    centroid = _centroid(piece)
    for k in order:
        a, b, _incl = carriers[k]
        for anchor in (_anchor_on_carrier(a, b, centroid), hmidpoint(a, b)):
            if sees_h(verts, centroid, anchor) and \
               _hull_cert(P, piece, a, b, anchor):
                return k
    return -1


def _rescue_piece(P: Polygon, piece, carriers, centroid, hint: int) -> int:
    """Before splitting, probe a few more carrier points for a witness of
    the centroid and retry the hull certificate from it.  Probes only:
    exact witness searches are reserved for atomic cells."""
    order = list(range(len(carriers)))
    if 0 <= hint < len(carriers):
        order.remove(hint)
        order.insert(0, hint)
    verts = P.hverts
    for k in order:
        a, b, _incl = carriers[k]
        for t in (Fraction(1, 4), Fraction(3, 4)):
            w = affine_combination(a, b, t)
            if sees_h(verts, centroid, w) and _hull_cert(P, piece, a, b, w):
                return k
    return -1


def _first_crossing(piece, my_cand, lines):
    """First candidate line crossing the piece, plus the candidates that
    can still cross a descendant (the non-crossing prefix is dropped for
    good: a line missing the parent misses both children)."""
    for pos, li in enumerate(my_cand):
        if _line_crosses(piece, lines[li]):
            return li, my_cand[pos + 1:]
    return None, []


def is_covered(P: Polygon, S: GuardSet, budget: int = DEFAULT_CELL_BUDGET,
               family: str = "reflex"):
    """(covered, witness, cells_processed): adaptive coverage decision.

    The witness, when coverage fails, is an exact interior point no guard
    sees; it represents an entire atomic cell.
    """
    carriers = _carriers(P, S)
    lines = critical_lines(P, family)
    work = [[P.hverts[i] for i in t] for t in triangulate(P)]
    cand = [list(range(len(lines)))] * len(work)
    processed = 0
    wi = 0
    hint = 0   # the guard that certified the previous piece usually repeats
    while wi < len(work):
        piece = work[wi]
        my_cand = cand[wi]
        wi += 1
        processed += 1
        if processed > budget:
            raise BudgetExceeded(f"cell budget {budget} exhausted")
        piece_lines = _piece_edge_lines(piece)
        if carriers:
            winner = _certify_piece(P, piece, piece_lines, carriers, hint)
            if winner >= 0:
                hint = winner
                continue
        rep = _centroid(piece)
        if carriers:
            winner = _rescue_piece(P, piece, carriers, rep, hint)
            if winner >= 0:
                hint = winner
                continue
        crossing, rest = _first_crossing(piece, my_cand, lines)
        if crossing is not None:
            lo, hi = _split_piece(piece, lines[crossing])
            work.append(lo)
            cand.append([li for li in rest if _line_crosses(lo, lines[li])])
            work.append(hi)
            cand.append([li for li in rest if _line_crosses(hi, lines[li])])
            continue
        seen = False
        for a, b, incl in carriers:
            if _segment_sees_target(P, a, b, incl, rep) is not None:
                seen = True
                break
        if not seen:
            return False, to_point(rep), processed
    return True, None, processed


def coverage_map(P: Polygon, S: GuardSet, budget: int = DEFAULT_CELL_BUDGET,
                 family: str = "reflex") -> CoverageMap:
    """Full atomic cell decomposition with a per-guard bitmap per cell."""
    carriers = _carriers(P, S)
    lines = critical_lines(P, family)
    atomic = []
    work = [[P.hverts[i] for i in t] for t in triangulate(P)]
    cand = [list(range(len(lines)))] * len(work)
    processed = 0
    wi = 0
    while wi < len(work):
        piece = work[wi]
        my_cand = cand[wi]
        wi += 1
        processed += 1
        if processed > budget:
            raise BudgetExceeded(f"cell budget {budget} exhausted")
        crossing, rest = _first_crossing(piece, my_cand, lines)
        if crossing is not None:
            lo, hi = _split_piece(piece, lines[crossing])
            work.append(lo)
            cand.append([li for li in rest if _line_crosses(lo, lines[li])])
            work.append(hi)
            cand.append([li for li in rest if _line_crosses(hi, lines[li])])
            continue
        atomic.append(_centroid(piece))

    atomic.sort(key=lambda h: (Fraction(h[0], h[2]), Fraction(h[1], h[2])))
    cells = []
    for rep in atomic:
        bits = cell_bitmap(P, rep, carriers)
        cells.append(CoverageCell(to_point(rep),
                                  tuple(bool(bits >> k & 1)
                                        for k in range(len(carriers)))))
    return CoverageMap(tuple(cells), tuple(lines), S)


def cell_bitmap(P: Polygon, rep: HPoint, carriers) -> int:
    """Guard-visibility bitmap of one interior representative point.

    Builds the visibility fan of the representative once, then tests each
    carrier against it; only isolated candidate points need the exact
    segment test.
    """
    fan = _vp_fan(P, rep)
    ray_lines = set()
    for d in fan.dirs:
        q = (rep[0] + d[0] * rep[2], rep[1] + d[1] * rep[2], rep[2])
        ray_lines.add(line_through(rep, q))
    ray_lines = sorted(ray_lines)
    bits = 0
    for k, (a, b, incl) in enumerate(carriers):
        if _fan_sees_carrier(P, fan, ray_lines, a, b, incl):
            bits |= 1 << k
    return bits


def _fan_visible(P: Polygon, fan, x: HPoint) -> Optional[bool]:
    """Strict visibility of x from the fan origin; None if x lies on a
    boundary ray, where grazing makes the fan inconclusive."""
    o = fan.origin
    if point_eq(o, x):
        return True
    d = exact.direction(o, x)
    if fan.on_boundary_ray(d) is not None:
        return None
    k = fan.sector_of(d)
    if k is None:
        return False
    return orient(fan.A[k], fan.B[k], x) >= 0


def _fan_sees_carrier(P: Polygon, fan, ray_lines, a, b, incl) -> bool:
    o = fan.origin
    if orient(a, b, o) == 0:
        on = collinear_between_closed(a, b, o) if incl is Inclusion.CLOSED \
            else collinear_between_strict(a, b, o)
        if on:
            return True
    mid = hmidpoint(a, b)
    quick = _fan_visible(P, fan, mid)
    if quick:
        return True
    ts = {Fraction(0), Fraction(1)}
    for l in ray_lines:
        rng = segment_param_range(a, b, l)
        if rng is not None and rng[0] == "point":
            t = rng[1]
            if 0 <= t <= 1:
                ts.add(t)
    cuts = sorted(ts)
    for k in range(len(cuts) - 1):
        x = affine_combination(a, b, (cuts[k] + cuts[k + 1]) / 2)
        v = _fan_visible(P, fan, x)
        if v is None:
            v = sees_h(P.hverts, o, x)
        if v:
            return True
    for t in cuts:
        if 0 < t < 1:
            if sees_h(P.hverts, o, affine_combination(a, b, t)):
                return True
    if incl is Inclusion.CLOSED:
        if sees_h(P.hverts, o, a) or sees_h(P.hverts, o, b):
            return True
    return False
