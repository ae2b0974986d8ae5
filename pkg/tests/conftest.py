"""Shared fixtures: small worked examples used across test modules."""

from __future__ import annotations

import pytest

from electdist import Election

# A 3-candidate, 3-voter pair that is isomorphic: relabel nothing and swap
# the first two voters.
EXAMPLE_FIRST = [(0, 1, 2), (1, 0, 2), (2, 0, 1)]
EXAMPLE_SECOND = [(1, 0, 2), (0, 1, 2), (2, 0, 1)]

# Two maximal single-crossing vote sequences over four candidates (seven
# orders each, every candidate pair flipping exactly once along the
# sequence).  As elections they are not isomorphic: the first ranks three
# distinct candidates on top across its votes, the second only two.
SC_DOMAIN_A = [
    (0, 1, 2, 3),
    (1, 0, 2, 3),
    (1, 2, 0, 3),
    (1, 2, 3, 0),
    (1, 3, 2, 0),
    (3, 1, 2, 0),
    (3, 2, 1, 0),
]
SC_DOMAIN_B = [
    (3, 2, 1, 0),
    (3, 2, 0, 1),
    (3, 0, 2, 1),
    (0, 3, 2, 1),
    (0, 2, 3, 1),
    (0, 2, 1, 3),
    (0, 1, 2, 3),
]


@pytest.fixture
def example_pair() -> tuple[Election, Election]:
    return Election(3, EXAMPLE_FIRST), Election(3, EXAMPLE_SECOND)
