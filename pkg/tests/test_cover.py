import random

from hiddenguards.cover import coverage_map, is_covered
from hiddenguards.guards import GuardSet, Inclusion, edge_guard
from hiddenguards.polygon import validate_polygon
from hiddenguards.visibility import guard_sees_point

from oracles import grid_points


def open_edges(P, *idx):
    return GuardSet(tuple(edge_guard(P, i, Inclusion.OPEN) for i in idx))


class TestIsCovered:
    def test_square_bottom_edge_covers(self, unit_square):
        covered, witness, _ = is_covered(unit_square, open_edges(unit_square, 0))
        assert covered and witness is None

    def test_l_shape_bottom_edge_covers(self, l_shape):
        covered, witness, _ = is_covered(l_shape, open_edges(l_shape, 0))
        assert covered, witness

    def test_l_shape_right_edge_leaves_upper_arm(self, l_shape):
        covered, witness, _ = is_covered(l_shape, open_edges(l_shape, 1))
        assert not covered
        assert witness is not None
        # the witness must genuinely be unseen
        g = open_edges(l_shape, 1).guards[0]
        assert not guard_sees_point(l_shape, g, witness)

    def test_staircase_two_bottom_edges_cover(self, staircase6):
        covered, _, _ = is_covered(staircase6, open_edges(staircase6, 0, 2))
        assert covered

    def test_no_guards_uncovered(self, unit_square):
        covered, witness, _ = is_covered(unit_square, GuardSet(()))
        assert not covered


class TestCoverageMap:
    def test_square_single_edge(self, unit_square):
        cm = coverage_map(unit_square, open_edges(unit_square, 0))
        assert cm.covered
        assert all(any(c.seen_by) for c in cm.cells)

    def test_l_shape_bottom(self, l_shape):
        cm = coverage_map(l_shape, open_edges(l_shape, 0))
        assert cm.covered

    def test_l_shape_gap_has_unseen_cells(self, l_shape):
        cm = coverage_map(l_shape, open_edges(l_shape, 1))
        assert not cm.covered
        assert len(cm.unseen()) > 0

    def test_families_agree(self, l_shape, staircase6):
        for P in (l_shape, staircase6):
            for idx in ([0], [1], [2], [0, 2]):
                S = open_edges(P, *idx)
                a = coverage_map(P, S, family="reflex").covered
                b = coverage_map(P, S, family="all-pairs").covered
                c, _, _ = is_covered(P, S)
                assert a == b == c

    def test_bitmaps_match_guard_sees_point(self, staircase6):
        S = open_edges(staircase6, 0, 2, 4)
        cm = coverage_map(staircase6, S)
        for cell in cm.cells:
            for k, g in enumerate(S):
                assert cell.seen_by[k] == guard_sees_point(staircase6, g, cell.representative)


class TestGridOracleSoundness:
    def test_covered_never_contradicted_by_grid(self):
        # a covered verdict must never leave a grid point unseen
        rng = random.Random(5)
        from hiddenguards.generators import random_monotone, random_orthogonal
        cases = []
        for seed in range(4):
            cases.append((random_orthogonal(10, seed), [0]))
            cases.append((random_monotone(9, seed), [0, 2]))
        for P, idx in cases:
            S = GuardSet(tuple(edge_guard(P, i % P.n, Inclusion.OPEN) for i in idx))
            covered, _, _ = is_covered(P, S)
            if not covered:
                continue
            for q in grid_points(P, 25):
                assert any(guard_sees_point(P, g, q) for g in S), (P.vertices, q)
