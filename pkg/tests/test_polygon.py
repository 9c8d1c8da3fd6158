from fractions import Fraction

import pytest

from hiddenguards.geometry import Point
from hiddenguards.polygon import (CollinearTriple, Location, NotSimple,
                                  TooFewVertices, classify,
                                  enumerate_diagonals, is_diagonal,
                                  is_monotone_in, is_orthogonal,
                                  monotone_direction, point_in_polygon,
                                  validate_polygon)

from oracles import monotone_brute, point_location


class TestValidate:
    def test_unit_square(self, unit_square):
        assert unit_square.reflex == ()
        assert unit_square.signed_area2() == 2

    def test_l_shape_reflex(self, l_shape):
        assert l_shape.reflex == (3,)
        assert l_shape.vertices[3] == Point.of(1, 1)

    def test_bowtie_not_simple(self):
        with pytest.raises(NotSimple):
            validate_polygon([(0, 0), (2, 2), (2, 0), (0, 2)])

    def test_too_few(self):
        with pytest.raises(TooFewVertices):
            validate_polygon([(0, 0), (1, 1)])

    def test_collinear_triple_rejected(self):
        with pytest.raises(CollinearTriple):
            validate_polygon([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])

    def test_collinear_merge_mode(self):
        P = validate_polygon([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)],
                             collinear="merge")
        assert P.n == 4

    def test_cw_input_reversed(self):
        P = validate_polygon([(0, 0), (0, 1), (1, 1), (1, 0)])
        assert P.signed_area2() > 0

    def test_reversal_yields_identical_polygon(self, l_shape):
        pts = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]
        rev = validate_polygon(list(reversed(pts)))
        assert rev == l_shape

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(NotSimple):
            validate_polygon([(0, 0), (1, 0), (1, 1), (0, 0), (0, 1), (-1, 1)])


class TestPointInPolygon:
    def test_square_center(self, unit_square):
        assert point_in_polygon(unit_square, Point.of("1/2", "1/2")) is Location.INTERIOR

    def test_square_edge(self, unit_square):
        assert point_in_polygon(unit_square, Point.of(1, "1/2")) is Location.BOUNDARY

    def test_l_shape_notch(self, l_shape):
        assert point_in_polygon(l_shape, Point.of("3/2", "3/2")) is Location.EXTERIOR

    def test_agrees_with_oracle_on_grid(self, l_shape):
        for i in range(-1, 24):
            for j in range(-1, 24):
                p = Point(Fraction(i, 10), Fraction(j, 10))
                got = point_in_polygon(l_shape, p)
                want = point_location(l_shape, p)
                assert {Location.INTERIOR: 1, Location.BOUNDARY: 0,
                        Location.EXTERIOR: -1}[got] == want


class TestDiagonals:
    def test_square(self, unit_square):
        assert enumerate_diagonals(unit_square) == [(0, 2), (1, 3)]

    def test_triangle_has_none(self, tent):
        assert enumerate_diagonals(tent) == []

    def test_l_shape_known_diagonals(self, l_shape):
        # by hand: (0,0)-(2,1), (0,0)-(1,1), (0,0)-(1,2), (2,0)-(1,1),
        # and (1,1)-(0,2); the chord (2,0)-(0,2) grazes the reflex vertex
        assert enumerate_diagonals(l_shape) == [(0, 2), (0, 3), (0, 4), (1, 3), (3, 5)]

    def test_grazing_chord_is_not_a_diagonal(self, l_shape):
        assert not is_diagonal(l_shape, 1, 5)

    def test_adjacent_not_diagonal(self, unit_square):
        assert not is_diagonal(unit_square, 0, 1)


class TestClassify:
    def test_unit_square_all_flags(self, unit_square):
        flags = classify(unit_square)
        assert flags.orthogonal
        assert flags.monotone is not None
        assert flags.starshaped

    def test_l_shape(self, l_shape):
        flags = classify(l_shape)
        assert flags.orthogonal
        assert flags.monotone == (1, 0)
        assert flags.starshaped

    def test_tent_not_orthogonal(self, tent):
        assert not is_orthogonal(tent)

    def test_rotated_square_is_orthogonal(self):
        P = validate_polygon([(0, 0), (2, 1), (1, 3), (-1, 2)])
        assert is_orthogonal(P)

    def test_monotone_matches_brute_force(self, l_shape, staircase6, tent):
        for P in (l_shape, staircase6, tent):
            d = monotone_direction(P)
            assert d is not None
            assert monotone_brute(P, d)

    def test_plus_shape_is_monotone_both_ways(self):
        plus = validate_polygon([
            (1, 0), (2, 0), (2, 1), (3, 1), (3, 2), (2, 2),
            (2, 3), (1, 3), (1, 2), (0, 2), (0, 1), (1, 1),
        ])
        for d in ((1, 0), (0, 1)):
            assert is_monotone_in(plus, d)
            assert monotone_brute(plus, d)

    def test_spiral_is_not_monotone(self):
        spiral = validate_polygon([
            (0, 0), (5, 0), (5, 5), (1, 5), (1, 2), (2, 2),
            (2, 4), (4, 4), (4, 1), (0, 1),
        ])
        assert monotone_direction(spiral) is None
        for d in ((1, 0), (0, 1), (1, 1), (2, 1)):
            assert not is_monotone_in(spiral, d)
            assert not monotone_brute(spiral, d)

    def test_spike_star_not_monotone_not_orthogonal(self):
        # three deep spikes around a small core
        star = validate_polygon([
            (10, 0), (1, 2), (-4, 9), (-2, -1), (-5, -8), (2, -2),
        ])
        flags = classify(star)
        assert not flags.orthogonal
        assert flags.starshaped
