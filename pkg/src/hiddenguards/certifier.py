"""Guard-set verification and exhaustive existence decisions.

`verify` certifies a concrete guard set: coverage of the whole interior
plus pairwise hiddenness.  `exists_hidden_guard_set` decides whether any
hidden guard set exists over the vertex-anchored candidate pool (edges,
diagonals, or both), by branch and bound over independent sets of the
conflict graph with lazily generated coverage constraints:

  1. search for a hidden subset covering the current witness points;
  2. none exists -> exhaustive No (witness constraints only relax the
     true problem);
  3. otherwise verify the candidate set; a coverage gap yields a new
     witness cell and the search repeats, strictly shrinking the space.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .cover import (DEFAULT_CELL_BUDGET, BudgetExceeded, cell_bitmap,
                    is_covered)
from .exact import hpoint
from .geometry import Point
from .guards import Guard, GuardKind, GuardSet, Inclusion, diagonal_guard, edge_guard
from .polygon import Polygon, enumerate_diagonals
from .visibility import guards_see_each_other, is_hidden

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class Verdict:
    covered: bool
    hidden: bool
    covered_witness: Optional[Point] = None
    hidden_witness: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return self.covered and self.hidden


@dataclass
class SearchStats:
    nodes: int = 0
    cells: int = 0
    witnesses: int = 0
    rounds: int = 0
    runtime: float = 0.0


@dataclass(frozen=True)
class ExistenceResult:
    status: str                      # "yes" | "no" | "unknown"
    guard_set: Optional[GuardSet]
    reason: Optional[str]
    stats: SearchStats

    @property
    def yes(self) -> bool:
        return self.status == "yes"


@dataclass(frozen=True)
class SearchBudget:
    nodes: int = DEFAULT_NODE_BUDGET
    cells: int = DEFAULT_CELL_BUDGET


def verify(P: Polygon, S: GuardSet, cell_budget: int = DEFAULT_CELL_BUDGET) -> Verdict:
    """Coverage and hiddenness of a concrete guard set, with witnesses."""
    if len(S) == 0:
        return Verdict(covered=False, hidden=True)
    covered, cov_witness, _ = is_covered(P, S, budget=cell_budget)
    hid = is_hidden(P, S)
    return Verdict(covered=covered, hidden=hid.hidden,
                   covered_witness=cov_witness, hidden_witness=hid.witness)


def guard_pool(P: Polygon, gtype: GuardKind | str, inclusion: Inclusion) -> list[Guard]:
    """Deterministic candidate pool: edges, diagonals, or both (mobile)."""
    kind = gtype.value if isinstance(gtype, GuardKind) else str(gtype).lower()
    pool: list[Guard] = []
    if kind in ("edge", "mobile"):
        pool.extend(edge_guard(P, i, inclusion) for i in range(P.n))
    if kind in ("diagonal", "mobile"):
        pool.extend(diagonal_guard(P, i, j, inclusion, trusted=True)
                    for i, j in enumerate_diagonals(P))
    if kind not in ("edge", "diagonal", "mobile"):
        raise ValueError(f"unknown guard type: {gtype}")
    return pool


def conflict_graph(P: Polygon, pool: list[Guard]) -> list[int]:
    """Adjacency bitmasks: bit j of entry i set iff guards i, j see each
    other."""
    m = len(pool)
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if guards_see_each_other(P, pool[i], pool[j]) is not None:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def exists_hidden_guard_set(P: Polygon, gtype, inclusion: Inclusion,
                            budget: SearchBudget = SearchBudget()) -> ExistenceResult:
    t0 = time.perf_counter()
    stats = SearchStats()
    pool = guard_pool(P, gtype, inclusion)
    m = len(pool)

    def done(status, gs=None, reason=None):
        stats.runtime = time.perf_counter() - t0
        return ExistenceResult(status, gs, reason, stats)

    if m == 0:
        return done("no", reason="empty candidate pool")

    adj = conflict_graph(P, pool)
    hv = P.hverts
    carriers = [(hv[g.i], hv[g.j], g.inclusion) for g in pool]

    from .triangulate import triangulate
    from .cover import _centroid
    witness_reps = [_centroid([hv[i] for i in t]) for t in triangulate(P)]
    rows = []
    try:
        for rep in witness_reps:
            rows.append(cell_bitmap(P, rep, carriers))
            stats.cells += 1
    except BudgetExceeded as e:
        return done("unknown", reason=str(e))

    while True:
        stats.rounds += 1
        chosen = _bb_search(rows, adj, m, stats, budget.nodes)
        if chosen == "budget":
            return done("unknown", reason=f"node budget {budget.nodes} exhausted")
        if chosen is None:
            return done("no")
        T = GuardSet(tuple(pool[i] for i in range(m) if chosen >> i & 1))
        try:
            covered, witness, cells = is_covered(P, T, budget=budget.cells)
            stats.cells += cells
        except BudgetExceeded as e:
            return done("unknown", reason=str(e))
        if covered:
            verdict = verify(P, T, cell_budget=budget.cells)
            if not verdict.ok:
                return done("unknown",
                            reason="candidate failed re-verification")
            return done("yes", gs=T)
        rep = hpoint(witness)
        row = cell_bitmap(P, rep, carriers)
        stats.cells += 1
        stats.witnesses += 1
        if row & chosen:
            return done("unknown",
                        reason="coverage witness inconsistent with bitmap")
        rows.append(row)
        if stats.cells > budget.cells:
            return done("unknown", reason=f"cell budget {budget.cells} exhausted")


def _bb_search(rows: list[int], adj: list[int], m: int, stats: SearchStats,
               node_budget: int):
    """First hidden subset satisfying every row constraint, as a bitmask;
    None when provably none exists; "budget" on node exhaustion.

    Branches on the unsatisfied row with the fewest available candidates;
    within a row, candidates are tried by descending count of rows only
    they can satisfy (fail-fast on forced guards), ties by index.
    """
    # drop dominated rows: a superset row is implied by its subset
    kept: list[int] = []
    for r in sorted(set(rows), key=lambda x: (bin(x).count("1"), x)):
        if not any(k & r == k for k in kept):
            kept.append(r)
    rows = kept
    if any(r == 0 for r in rows):
        return None

    exclusive = [0] * m
    for r in rows:
        if bin(r).count("1") == 1:
            exclusive[r.bit_length() - 1] += 1

    def order_key(i):
        return (-exclusive[i], i)

    full = (1 << m) - 1
    memo = set()
    nodes = 0

    def dfs(chosen: int, avail: int):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            return "budget"
        pending = [r for r in rows if not (r & chosen)]
        if not pending:
            return chosen
        best = None
        best_count = None
        for r in pending:
            opts = r & avail
            if opts == 0:
                return None
            c = bin(opts).count("1")
            if best_count is None or c < best_count:
                best, best_count = opts, c
        key = (avail, frozenset(pending))
        if key in memo:
            return None
        cands = sorted(_bits(best), key=order_key)
        for g in cands:
            res = dfs(chosen | (1 << g), avail & ~adj[g] & ~(1 << g))
            if res == "budget" or res is not None:
                return res
        memo.add(key)
        return None

    result = dfs(0, full)
    stats.nodes += nodes
    return result


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
