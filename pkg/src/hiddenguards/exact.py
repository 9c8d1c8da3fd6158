"""Integer homogeneous-coordinate engine behind the hot geometric paths.

A point is a triple ``(x, y, w)`` of Python ints with ``w > 0`` standing for
the affine point ``(x/w, y/w)``; a line is a triple ``(a, b, c)`` standing
for ``a*x + b*y + c*w = 0``.  Triples are kept gcd-reduced, which bounds
coordinate growth: every point produced internally is either an input
vertex or the meet of two vertex-pair lines.

`Fraction` is used only at the rim (conversion in and out); the predicate
loops below run on plain ints.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .geometry import Point

HPoint = tuple  # (x, y, w) ints, w > 0
HLine = tuple   # (a, b, c) ints, not all zero


def norm_point(x: int, y: int, w: int) -> HPoint:
    if w < 0:
        x, y, w = -x, -y, -w
    elif w == 0:
        raise ZeroDivisionError("point at infinity")
    g = gcd(gcd(abs(x), abs(y)), w)
    if g > 1:
        return (x // g, y // g, w // g)
    return (x, y, w)


def hpoint(p: Point) -> HPoint:
    xd, yd = p.x.denominator, p.y.denominator
    w = xd * yd // gcd(xd, yd)
    return (p.x.numerator * (w // xd), p.y.numerator * (w // yd), w)


def to_point(p: HPoint) -> Point:
    return Point(Fraction(p[0], p[2]), Fraction(p[1], p[2]))


def orient(p: HPoint, q: HPoint, r: HPoint) -> int:
    """Sign of the affine orientation of (p, q, r); +1 is a left turn."""
    d = (p[0] * (q[1] * r[2] - r[1] * q[2])
         - p[1] * (q[0] * r[2] - r[0] * q[2])
         + p[2] * (q[0] * r[1] - r[0] * q[1]))
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def norm_line(a: int, b: int, c: int) -> HLine:
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    if g > 1:
        a, b, c = a // g, b // g, c // g
    if a < 0 or (a == 0 and (b < 0 or (b == 0 and c < 0))):
        a, b, c = -a, -b, -c
    return (a, b, c)


def line_through(p: HPoint, q: HPoint) -> HLine:
    """Canonically signed line (for dedup keys); sidedness is arbitrary."""
    a = p[1] * q[2] - q[1] * p[2]
    b = q[0] * p[2] - p[0] * q[2]
    c = p[0] * q[1] - q[0] * p[1]
    if a == 0 and b == 0:
        raise ValueError("coincident points define no line")
    return norm_line(a, b, c)


def oriented_line(p: HPoint, q: HPoint) -> HLine:
    """Line through p, q with side() > 0 exactly left of the direction p->q."""
    a = p[1] * q[2] - q[1] * p[2]
    b = q[0] * p[2] - p[0] * q[2]
    c = p[0] * q[1] - q[0] * p[1]
    if a == 0 and b == 0:
        raise ValueError("coincident points define no line")
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    if g > 1:
        return (a // g, b // g, c // g)
    return (a, b, c)


def side(l: HLine, p: HPoint) -> int:
    """Sign of l evaluated at p (w > 0 keeps affine sides consistent)."""
    d = l[0] * p[0] + l[1] * p[1] + l[2] * p[2]
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def meet(l1: HLine, l2: HLine) -> HPoint | None:
    """Intersection point of two lines, or None when parallel."""
    w = l1[0] * l2[1] - l2[0] * l1[1]
    if w == 0:
        return None
    x = l1[1] * l2[2] - l2[1] * l1[2]
    y = l2[0] * l1[2] - l1[0] * l2[2]
    return norm_point(x, y, w)


def point_eq(p: HPoint, q: HPoint) -> bool:
    return p[0] * q[2] == q[0] * p[2] and p[1] * q[2] == q[1] * p[2]


def hmidpoint(a: HPoint, b: HPoint) -> HPoint:
    return norm_point(a[0] * b[2] + b[0] * a[2],
                      a[1] * b[2] + b[1] * a[2],
                      2 * a[2] * b[2])


def affine_combination(a: HPoint, b: HPoint, t: Fraction) -> HPoint:
    """Point a + t*(b - a) for rational t."""
    tn, td = t.numerator, t.denominator
    w = td * a[2] * b[2]
    x = (td - tn) * a[0] * b[2] + tn * b[0] * a[2]
    y = (td - tn) * a[1] * b[2] + tn * b[1] * a[2]
    return norm_point(x, y, w)


def collinear_between_closed(a: HPoint, b: HPoint, p: HPoint) -> bool:
    """p within the closed segment ab; all three assumed collinear."""
    # compare along the dominant axis, cross-multiplying by positive w's
    axw = a[0] * b[2]
    bxw = b[0] * a[2]
    if axw != bxw:
        pa = p[0] * a[2] - a[0] * p[2]   # sign of (p - a).x scaled
        pb = p[0] * b[2] - b[0] * p[2]
        return (pa * b[2]) * (pb * a[2]) <= 0
    pa = p[1] * a[2] - a[1] * p[2]
    pb = p[1] * b[2] - b[1] * p[2]
    return (pa * b[2]) * (pb * a[2]) <= 0


def collinear_between_strict(a: HPoint, b: HPoint, p: HPoint) -> bool:
    axw = a[0] * b[2]
    bxw = b[0] * a[2]
    if axw != bxw:
        pa = p[0] * a[2] - a[0] * p[2]
        pb = p[0] * b[2] - b[0] * p[2]
        return (pa * b[2]) * (pb * a[2]) < 0
    pa = p[1] * a[2] - a[1] * p[2]
    pb = p[1] * b[2] - b[1] * p[2]
    return (pa * b[2]) * (pb * a[2]) < 0


def on_closed_segment(a: HPoint, b: HPoint, p: HPoint) -> bool:
    return orient(a, b, p) == 0 and collinear_between_closed(a, b, p)


def direction(frm: HPoint, to: HPoint) -> tuple[int, int]:
    """Primitive integer direction vector from one point to another."""
    dx = to[0] * frm[2] - frm[0] * to[2]
    dy = to[1] * frm[2] - frm[1] * to[2]
    if dx == 0 and dy == 0:
        raise ValueError("zero direction")
    g = gcd(abs(dx), abs(dy))
    return (dx // g, dy // g)


def angular_cmp_key(d: tuple[int, int]):
    """Sort key placing directions in CCW order starting just above +x.

    Directions compare by half-plane first (upper half including +x axis,
    then lower half including -x axis) and by cross product within a half;
    the returned key is only usable with `functools.cmp_to_key`-free sorts
    via the (half, slope-ordering) trick, so we expose a comparator too.
    """
    return _AngKey(d)


class _AngKey:
    __slots__ = ("d", "half")

    def __init__(self, d):
        self.d = d
        dx, dy = d
        self.half = 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def __lt__(self, other):
        if self.half != other.half:
            return self.half < other.half
        ax, ay = self.d
        bx, by = other.d
        c = ax * by - ay * bx
        if c != 0:
            return c > 0
        return False

    def __eq__(self, other):
        return self.half == other.half and \
            self.d[0] * other.d[1] == self.d[1] * other.d[0]


def same_direction(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    return d1[0] * d2[1] == d1[1] * d2[0] and \
        d1[0] * d2[0] + d1[1] * d2[1] > 0


def segment_param_range(a: HPoint, b: HPoint, l: HLine):
    """Intersection of segment ab with line l as a parameter t in [0, 1].

    Returns ('point', t) for a proper crossing, ('span', 0, 1) when the
    segment lies on l, or None when they do not meet inside [0, 1].
    """
    sa = side(l, a)
    sb = side(l, b)
    if sa == 0 and sb == 0:
        return ("span",)
    if sa == 0:
        return ("point", Fraction(0))
    if sb == 0:
        return ("point", Fraction(1))
    if sa * sb > 0:
        return None
    # crossing strictly inside: t = sa_val / (sa_val - sb_val) on affine values
    va = (l[0] * a[0] + l[1] * a[1] + l[2] * a[2]) * b[2]
    vb = (l[0] * b[0] + l[1] * b[1] + l[2] * b[2]) * a[2]
    return ("point", Fraction(va, va - vb))


def open_segment_clear(verts, a: HPoint, b: HPoint) -> bool:
    """Does the open segment ab avoid every closed polygon edge?

    `verts` is the CCW vertex list.  This is the blocking half of the
    visibility test: it returns False as soon as any boundary point lies
    strictly inside ab.  The orientation determinant is inlined: this is
    the hottest loop in the package.
    """
    if point_eq(a, b):
        return True
    n = len(verts)
    ax, ay, aw = a
    bx, by, bw = b
    # orient(a, b, v) expanded with the a/b cofactors hoisted
    c_xy = ax * by - bx * ay
    c_xw = ax * bw - bx * aw
    c_yw = ay * bw - by * aw
    signs = [0] * n
    for i in range(n):
        vx, vy, vw = verts[i]
        d = c_xy * vw - c_xw * vy + c_yw * vx
        if d > 0:
            signs[i] = 1
        elif d < 0:
            signs[i] = -1
        elif collinear_between_strict(a, b, verts[i]):
            return False
    prev = signs[n - 1]
    for i in range(n):
        si = prev
        sj = signs[i]
        prev = sj
        if si == 0 and sj == 0:
            # collinear edge: blocks only if it swallows ab entirely
            e, f = verts[i - 1], verts[i]
            if collinear_between_closed(e, f, a) and \
               collinear_between_closed(e, f, b):
                return False
            continue
        if si * sj < 0:
            e, f = verts[i - 1], verts[i]
            o3 = orient(e, f, a)
            o4 = orient(e, f, b)
            if o3 * o4 < 0:
                return False
    return True


def locate_in_polygon(verts, p: HPoint) -> int:
    """1 interior, 0 boundary, -1 exterior, by exact winding number."""
    n = len(verts)
    px, py, pw = p
    wn = 0
    e = verts[n - 1]
    ey = e[1] * pw - py * e[2]   # sign of e.y - p.y
    for i in range(n):
        f = verts[i]
        fy = f[1] * pw - py * f[2]
        o = orient(e, f, p)
        if o == 0 and collinear_between_closed(e, f, p):
            return 0
        if ey <= 0:
            if fy > 0 and o > 0:
                wn += 1
        elif fy <= 0 and o < 0:
            wn -= 1
        e = f
        ey = fy
    return 1 if wn != 0 else -1


def sees_h(verts, a: HPoint, b: HPoint) -> bool:
    """Open-segment visibility: relint(ab) inside the open interior.

    Touching the boundary anywhere strictly between a and b (including
    grazing a vertex) blocks.  a and b themselves may lie on the boundary.
    """
    if point_eq(a, b):
        return True
    if not open_segment_clear(verts, a, b):
        return False
    return locate_in_polygon(verts, hmidpoint(a, b)) == 1


def relint_free_of_exterior(verts, a: HPoint, b: HPoint) -> bool:
    """Closed-polygon visibility: relint(ab) never enters the exterior.

    Unlike `sees_h`, grazing vertices or running along the boundary is
    allowed; only actual excursions outside the closure block.
    """
    if point_eq(a, b):
        return True
    n = len(verts)
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        if segments_properly_cross_h(a, b, verts[i], verts[j]):
            return False
    # cut ab at every boundary touch and test one point per open gap
    ts = {Fraction(0), Fraction(1)}
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        e, f = verts[i], verts[j]
        oe = orient(a, b, e)
        of_ = orient(a, b, f)
        if oe == 0 and collinear_between_closed(a, b, e):
            ts.add(_param_on_segment(a, b, e))
        if of_ == 0 and collinear_between_closed(a, b, f):
            ts.add(_param_on_segment(a, b, f))
        if oe != 0 and of_ != 0 and oe * of_ < 0:
            rng = segment_param_range(a, b, line_through(e, f))
            if rng is not None and rng[0] == "point":
                t = rng[1]
                if 0 <= t <= 1:
                    # touch point must actually be on the edge ef
                    x = affine_combination(a, b, t)
                    if collinear_between_closed(e, f, x):
                        ts.add(t)
    cuts = sorted(ts)
    for k in range(len(cuts) - 1):
        mid = affine_combination(a, b, (cuts[k] + cuts[k + 1]) / 2)
        if locate_in_polygon(verts, mid) == -1:
            return False
    return True


def segments_properly_cross_h(a, b, c, d) -> bool:
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    if o1 * o2 >= 0:
        return False
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return o3 * o4 < 0


def _param_on_segment(a: HPoint, b: HPoint, p: HPoint) -> Fraction:
    """Parameter of collinear p along ab (a is 0, b is 1)."""
    dxa = p[0] * a[2] - a[0] * p[2]
    dxb = b[0] * a[2] - a[0] * b[2]
    if dxb != 0:
        return Fraction(dxa * b[2], dxb * p[2])
    dya = p[1] * a[2] - a[1] * p[2]
    dyb = b[1] * a[2] - a[1] * b[2]
    return Fraction(dya * b[2], dyb * p[2])


def ray_first_hit(verts, origin: HPoint, d: tuple[int, int]):
    """First boundary point hit by the ray origin + t*d, t > 0.

    Returns (t: Fraction, point) or None if the ray escapes (possible only
    for origins outside or on the boundary).  Hits at t == 0 are ignored.
    """
    n = len(verts)
    ox, oy, ow = origin
    best_t = None
    best_p = None
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        e, f = verts[i], verts[j]
        # solve origin + t d on line ef
        l = line_through(e, f)
        denom = (l[0] * d[0] + l[1] * d[1]) * ow
        num = -(l[0] * ox + l[1] * oy + l[2] * ow)
        if denom == 0:
            if num == 0:
                # ray runs along the edge line; endpoints are candidate hits
                for v in (e, f):
                    t = _ray_param(origin, d, v)
                    if t is not None and t > 0 and \
                       (best_t is None or t < best_t):
                        best_t, best_p = t, v
            continue
        t = Fraction(num, denom)
        if t <= 0:
            continue
        x = norm_point(ox * denom + d[0] * ow * num,
                       oy * denom + d[1] * ow * num,
                       ow * denom)
        if collinear_between_closed(e, f, x):
            if best_t is None or t < best_t:
                best_t, best_p = t, x
    if best_t is None:
        return None
    return best_t, best_p


def _ray_param(origin: HPoint, d: tuple[int, int], p: HPoint):
    """t with p == origin + t*d, or None if p is off the ray line."""
    dx = p[0] * origin[2] - origin[0] * p[2]
    dy = p[1] * origin[2] - origin[1] * p[2]
    if dx * d[1] != dy * d[0]:
        return None
    if d[0] != 0:
        return Fraction(dx, d[0] * p[2] * origin[2])
    return Fraction(dy, d[1] * p[2] * origin[2])
