"""Guards: polygon edges and diagonals with open or closed endpoints."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .geometry import Point
from .polygon import Polygon, is_diagonal


class Inclusion(Enum):
    OPEN = "open"
    CLOSED = "closed"


class GuardKind(Enum):
    EDGE = "edge"
    DIAGONAL = "diagonal"


@dataclass(frozen=True, order=True)
class Guard:
    """An edge guard (vertices i, i+1) or diagonal guard (vertices i, j)."""
    kind: GuardKind
    i: int
    j: int
    inclusion: Inclusion

    def carrier(self, P: Polygon) -> tuple[Point, Point]:
        return P.vertices[self.i], P.vertices[self.j]

    def endpoints(self) -> tuple[int, int]:
        return self.i, self.j

    def label(self) -> str:
        if self.kind is GuardKind.EDGE:
            return f"edge {self.i}"
        return f"diagonal {self.i}-{self.j}"


def edge_guard(P: Polygon, i: int, inclusion: Inclusion) -> Guard:
    if not 0 <= i < P.n:
        raise IndexError(f"edge index {i} out of range")
    return Guard(GuardKind.EDGE, i, (i + 1) % P.n, inclusion)


def diagonal_guard(P: Polygon, i: int, j: int, inclusion: Inclusion,
                   trusted: bool = False) -> Guard:
    """Diagonal guard between vertices i < j.

    ``trusted`` skips the interior-segment check for callers that produce
    diagonals constructively (geodesic edges are diagonals by construction).
    """
    i, j = min(i, j), max(i, j)
    if not trusted and not is_diagonal(P, i, j):
        raise ValueError(f"({i}, {j}) is not a diagonal")
    return Guard(GuardKind.DIAGONAL, i, j, inclusion)


@dataclass(frozen=True)
class GuardSet:
    guards: tuple[Guard, ...]

    def __post_init__(self):
        if len(set(self.guards)) != len(self.guards):
            raise ValueError("duplicate guards")
        incl = {g.inclusion for g in self.guards}
        if len(incl) > 1:
            raise ValueError("mixed open/closed inclusion in one guard set")

    @property
    def inclusion(self) -> Inclusion:
        return self.guards[0].inclusion if self.guards else Inclusion.OPEN

    def __len__(self):
        return len(self.guards)

    def __iter__(self):
        return iter(self.guards)


def guard_set(guards: Iterable[Guard]) -> GuardSet:
    return GuardSet(tuple(guards))
