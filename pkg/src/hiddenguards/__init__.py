"""Hidden guard sets in simple polygons.

Exact-arithmetic construction of hidden open edge/mobile guard sets for
orthogonal, monotone, and starshaped polygons; certification of guard sets
(coverage and hiddenness); and exhaustive existence decisions for hidden
edge, diagonal, and mobile guard sets, open or closed.
"""
__version__ = "0.1.0"

from .geometry import Orientation, Point, Rational, orient, to_rational
from .guards import Guard, GuardKind, GuardSet, Inclusion, diagonal_guard, edge_guard
from .polygon import (ClassFlags, CollinearTriple, Location, NotSimple, Polygon,
                      PolygonError, TooFewVertices, classify,
                      enumerate_diagonals, is_diagonal, point_in_polygon,
                      validate_polygon)
from .triangulate import triangulate
from .visibility import (DegenerateViewpoint, HiddenResult, Kernel,
                         VisibilityPolygon, guard_sees_point,
                         guards_see_each_other, is_hidden, kernel_polygon,
                         sees, visibility_polygon)
from .geodesic import Geodesic, PathTooShort, induced_guard_set, path_length, shortest_path

__all__ = [
    "Orientation", "Point", "Rational", "orient", "to_rational",
    "Guard", "GuardKind", "GuardSet", "Inclusion", "diagonal_guard", "edge_guard",
    "ClassFlags", "CollinearTriple", "Location", "NotSimple", "Polygon",
    "PolygonError", "TooFewVertices", "classify", "enumerate_diagonals",
    "is_diagonal", "point_in_polygon", "validate_polygon",
    "triangulate",
    "DegenerateViewpoint", "HiddenResult", "Kernel", "VisibilityPolygon",
    "guard_sees_point", "guards_see_each_other", "is_hidden",
    "kernel_polygon", "sees", "visibility_polygon",
    "Geodesic", "PathTooShort", "induced_guard_set", "path_length",
    "shortest_path",
]
