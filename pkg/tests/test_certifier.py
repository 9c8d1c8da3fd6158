import itertools

import pytest

from hiddenguards.certifier import (ExistenceResult, SearchBudget,
                                    conflict_graph, exists_hidden_guard_set,
                                    guard_pool, verify)
from hiddenguards.cover import is_covered
from hiddenguards.guards import GuardKind, GuardSet, Inclusion, edge_guard
from hiddenguards.polygon import validate_polygon
from hiddenguards.visibility import guards_see_each_other


def brute_exists(P, gtype, inclusion, max_size=None):
    """Exhaustive subset enumeration over the candidate pool."""
    pool = guard_pool(P, gtype, inclusion)
    m = len(pool)
    adj = conflict_graph(P, pool)
    limit = max_size if max_size is not None else m
    for r in range(1, limit + 1):
        for combo in itertools.combinations(range(m), r):
            if any(adj[i] >> j & 1 for i, j in itertools.combinations(combo, 2)):
                continue
            S = GuardSet(tuple(pool[i] for i in combo))
            covered, _, _ = is_covered(P, S)
            if covered:
                return True
    return False


class TestVerify:
    def test_square_bottom_edge_ok(self, unit_square):
        S = GuardSet((edge_guard(unit_square, 0, Inclusion.OPEN),))
        v = verify(unit_square, S)
        assert v.ok and v.covered and v.hidden

    def test_staircase_selection_ok(self, staircase6):
        S = GuardSet((edge_guard(staircase6, 0, Inclusion.OPEN),
                      edge_guard(staircase6, 2, Inclusion.OPEN)))
        assert verify(staircase6, S).ok

    def test_square_bottom_top_covered_not_hidden(self, unit_square):
        S = GuardSet((edge_guard(unit_square, 0, Inclusion.OPEN),
                      edge_guard(unit_square, 2, Inclusion.OPEN)))
        v = verify(unit_square, S)
        assert v.covered and not v.hidden and not v.ok
        assert v.hidden_witness is not None

    def test_uncovered_witness_reported(self, l_shape):
        S = GuardSet((edge_guard(l_shape, 1, Inclusion.OPEN),))
        v = verify(l_shape, S)
        assert not v.covered
        assert v.covered_witness is not None


class TestConflictGraph:
    def test_square_all_open_edges_complete(self, unit_square):
        pool = guard_pool(unit_square, GuardKind.EDGE, Inclusion.OPEN)
        adj = conflict_graph(unit_square, pool)
        for i in range(4):
            assert bin(adj[i]).count("1") == 3

    def test_staircase_lemma_edges_non_adjacent(self, staircase6):
        pool = guard_pool(staircase6, GuardKind.EDGE, Inclusion.OPEN)
        adj = conflict_graph(staircase6, pool)
        assert not adj[0] >> 2 & 1
        assert not adj[2] >> 0 & 1

    def test_matches_pairwise_predicate(self, l_shape):
        pool = guard_pool(l_shape, "mobile", Inclusion.OPEN)
        adj = conflict_graph(l_shape, pool)
        for i in range(len(pool)):
            for j in range(i + 1, len(pool)):
                want = guards_see_each_other(l_shape, pool[i], pool[j]) is not None
                assert bool(adj[i] >> j & 1) == want


class TestExistence:
    def test_square_edge_open_yes(self, unit_square):
        res = exists_hidden_guard_set(unit_square, "edge", Inclusion.OPEN)
        assert res.status == "yes"
        assert len(res.guard_set) == 1
        assert verify(unit_square, res.guard_set).ok

    def test_yes_result_reverifies(self, staircase6):
        res = exists_hidden_guard_set(staircase6, "edge", Inclusion.OPEN)
        assert res.status == "yes"
        assert verify(staircase6, res.guard_set).ok

    def test_triangle_diagonal_pool_empty_no(self, tent):
        res = exists_hidden_guard_set(tent, "diagonal", Inclusion.OPEN)
        assert res.status == "no"
        assert res.reason == "empty candidate pool"

    def test_mobile_subsumes_edge(self, l_shape):
        res = exists_hidden_guard_set(l_shape, "mobile", Inclusion.OPEN)
        assert res.status == "yes"

    def test_node_budget_returns_unknown(self, staircase6):
        res = exists_hidden_guard_set(staircase6, "mobile", Inclusion.OPEN,
                                      SearchBudget(nodes=1))
        assert res.status in ("unknown", "yes")
        if res.status == "unknown":
            assert "budget" in res.reason

    @pytest.mark.parametrize("gtype", ["edge", "diagonal"])
    @pytest.mark.parametrize("inclusion", [Inclusion.OPEN, Inclusion.CLOSED])
    def test_agrees_with_subset_enumeration(self, gtype, inclusion,
                                            unit_square, l_shape, tent):
        for P in (unit_square, l_shape, tent):
            got = exists_hidden_guard_set(P, gtype, inclusion)
            assert got.status in ("yes", "no")
            want = brute_exists(P, gtype, inclusion)
            assert (got.status == "yes") == want, (gtype, inclusion, P.vertices)

    def test_agrees_with_subset_enumeration_on_randoms(self):
        from hiddenguards.generators import random_monotone, random_starshaped
        cases = [random_monotone(8, 3), random_starshaped(8, 1), random_monotone(7, 11)]
        for P in cases:
            for gtype in ("edge",):
                for inclusion in (Inclusion.OPEN, Inclusion.CLOSED):
                    got = exists_hidden_guard_set(P, gtype, inclusion)
                    assert got.status in ("yes", "no")
                    want = brute_exists(P, gtype, inclusion)
                    assert (got.status == "yes") == want

    def test_stats_populated(self, l_shape):
        res = exists_hidden_guard_set(l_shape, "edge", Inclusion.OPEN)
        assert res.stats.cells > 0
        assert res.stats.runtime >= 0
