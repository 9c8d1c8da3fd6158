"""Exact rational primitives for plane geometry.

Coordinates are `fractions.Fraction` throughout.  Every predicate is decided
by exact integer arithmetic after cross-multiplication, so there are no
tolerance knobs anywhere in the package and no decision ever consults a
float.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

Rational = Fraction


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def to_rational(value) -> Fraction:
    """Convert an exact coordinate literal (int, Fraction, or string).

    Strings may be 'a/b' fractions or decimal literals, both of which
    convert exactly.  Floats are rejected: they carry rounding the caller
    never sees.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact rational required, got {type(value).__name__}")


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x, y) -> "Point":
        return Point(to_rational(x), to_rational(y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __str__(self):
        return f"({self.x}, {self.y})"


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Cross product of (a - o) and (b - o)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orient(a: Point, b: Point, c: Point) -> Orientation:
    """Orientation of the triple (a, b, c): sign of the 2x2 determinant."""
    d = cross(a, b, c)
    if d > 0:
        return Orientation.CCW
    if d < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def collinear(a: Point, b: Point, c: Point) -> bool:
    return orient(a, b, c) is Orientation.COLLINEAR


def between_closed(a: Point, b: Point, p: Point) -> bool:
    """Is p on the closed segment ab?  (p assumed collinear with a, b.)"""
    if a.x != b.x:
        lo, hi = min(a.x, b.x), max(a.x, b.x)
        return lo <= p.x <= hi
    lo, hi = min(a.y, b.y), max(a.y, b.y)
    return lo <= p.y <= hi


def between_strict(a: Point, b: Point, p: Point) -> bool:
    """Is p strictly inside the segment ab?  (p assumed collinear.)"""
    if a.x != b.x:
        lo, hi = min(a.x, b.x), max(a.x, b.x)
        return lo < p.x < hi
    lo, hi = min(a.y, b.y), max(a.y, b.y)
    return lo < p.y < hi


def on_segment(a: Point, b: Point, p: Point) -> bool:
    """Is p on the closed segment ab (no collinearity assumption)?"""
    return collinear(a, b, p) and between_closed(a, b, p)


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def squared_distance(a: Point, b: Point) -> Fraction:
    return (a.x - b.x) ** 2 + (a.y - b.y) ** 2


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Do segments ab and cd cross at a single point interior to both?"""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Do the closed segments ab and cd share any point?"""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and between_closed(a, b, c):
        return True
    if o2 == 0 and between_closed(a, b, d):
        return True
    if o3 == 0 and between_closed(c, d, a):
        return True
    if o4 == 0 and between_closed(c, d, b):
        return True
    return False
