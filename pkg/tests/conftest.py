from __future__ import annotations

import pytest

from hiddenguards.polygon import validate_polygon


@pytest.fixture
def unit_square():
    return validate_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def l_shape():
    return validate_polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])


@pytest.fixture
def staircase6():
    return validate_polygon([(0, 0), (2, 0), (2, 1), (4, 1), (4, 2), (0, 2)])


@pytest.fixture
def tent():
    return validate_polygon([(0, 0), (4, 0), (2, 3)])
