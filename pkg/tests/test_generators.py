import pytest

from hiddenguards.generators import (random_monotone, random_orthogonal,
                                     random_starshaped, structured_family)
from hiddenguards.polygon import classify, is_monotone_in, is_orthogonal, validate_polygon
from hiddenguards.visibility import kernel_polygon

from oracles import monotone_brute


@pytest.mark.parametrize("n", [4, 10, 12, 20])
def test_random_orthogonal(n):
    for seed in range(5):
        P = random_orthogonal(n, seed)
        assert P.n == n
        assert is_orthogonal(P)


@pytest.mark.parametrize("n", [3, 8, 12, 20])
def test_random_monotone(n):
    for seed in range(5):
        P = random_monotone(n, seed)
        assert P.n == n
        assert is_monotone_in(P, (1, 0))
        assert monotone_brute(P, (1, 0))


@pytest.mark.parametrize("n", [6, 10, 14, 20])
def test_random_starshaped(n):
    for seed in range(5):
        P = random_starshaped(n, seed)
        assert P.n == n
        assert not kernel_polygon(P).is_empty
        assert len(P.reflex) >= 2


def test_determinism():
    assert random_orthogonal(12, 3) == random_orthogonal(12, 3)
    assert random_monotone(12, 3) == random_monotone(12, 3)
    assert random_starshaped(12, 3) == random_starshaped(12, 3)


def test_different_seeds_differ():
    assert random_monotone(14, 1) != random_monotone(14, 2)


@pytest.mark.parametrize("kind,n", [
    ("staircase", 4), ("staircase", 12), ("staircase", 100),
    ("zigzag", 5), ("zigzag", 12), ("zigzag", 100),
    ("gear", 8), ("gear", 16), ("gear", 100),
])
def test_structured_families(kind, n):
    P = structured_family(kind, n)
    assert P.n == n
    if kind == "staircase":
        assert is_orthogonal(P)
    elif kind == "zigzag":
        assert is_monotone_in(P, (1, 0))
    else:
        assert not kernel_polygon(P).is_empty


def test_structured_base_case_square_like():
    P = structured_family("staircase", 4)
    assert P.n == 4
    assert is_orthogonal(P)


def test_classify_confirms_generated_classes():
    P = random_orthogonal(12, 7)
    assert classify(P).orthogonal
    Q = random_monotone(12, 7)
    assert classify(Q).monotone is not None
    R = random_starshaped(12, 7)
    assert classify(R).starshaped
