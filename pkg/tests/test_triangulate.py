from fractions import Fraction

from hiddenguards.geometry import Point, cross
from hiddenguards.polygon import is_diagonal, validate_polygon
from hiddenguards.triangulate import triangulate


def tri_area2(P, t):
    a, b, c = (P.vertices[i] for i in t)
    return cross(a, b, c)


def check_triangulation(P):
    tris = triangulate(P)
    assert len(tris) == P.n - 2
    total = Fraction(0)
    for t in tris:
        a2 = tri_area2(P, t)
        assert a2 > 0
        total += a2
    assert total == P.signed_area2()
    # every triangle side is a polygon edge or a diagonal
    n = P.n
    for t in tris:
        for i, j in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            adjacent = (i + 1) % n == j or (j + 1) % n == i
            assert adjacent or is_diagonal(P, i, j), (i, j)


def test_triangle_is_itself(tent):
    assert triangulate(tent) == [(0, 1, 2)]


def test_unit_square(unit_square):
    tris = triangulate(unit_square)
    assert len(tris) == 2
    check_triangulation(unit_square)


def test_l_shape_area_conservation(l_shape):
    check_triangulation(l_shape)
    assert sum(tri_area2(l_shape, t) for t in triangulate(l_shape)) == 6


def test_staircase(staircase6):
    check_triangulation(staircase6)


def test_spiral():
    P = validate_polygon([
        (0, 0), (5, 0), (5, 5), (1, 5), (1, 2), (2, 2),
        (2, 4), (4, 4), (4, 1), (0, 1),
    ])
    check_triangulation(P)


def test_comb():
    P = validate_polygon([
        (0, 0), (7, 0), (7, 4), (6, 4), (6, 1), (5, 1), (5, 4),
        (4, 4), (4, 1), (3, 1), (3, 4), (2, 4), (2, 1), (1, 1), (1, 4), (0, 4),
    ])
    check_triangulation(P)


def test_collinear_nonconsecutive_vertices():
    # vertices 0, 2, 4 lie on one line; ear chords must not grab them
    P = validate_polygon([(0, 0), (2, -1), (4, 0), (6, -1), (8, 0), (4, 5)])
    check_triangulation(P)
