from __future__ import annotations

import random

import numpy as np
import pytest

from electdist import SizeMismatch, ValidationError, min_cost_perfect_matching
from electdist.assignment import MAX_ENTRY, _solve_numpy, _solve_python

from oracles import assignment_bruteforce


class TestFrozenValues:
    def test_small_known_optimum(self):
        # Enumeration gives total 5 via rows -> columns (1, 0, 2).
        cost = [[4, 1, 3], [2, 0, 5], [3, 2, 2]]
        assignment, total = min_cost_perfect_matching(cost)
        assert total == 5
        assert assignment == (1, 0, 2)

    def test_one_by_one(self):
        assert min_cost_perfect_matching([[7]]) == ((0,), 7)


class TestAgainstEnumeration:
    def test_random_matrices_match_bruteforce_total(self):
        rng = random.Random(42)
        for _ in range(300):
            k = rng.randint(1, 6)
            cost = [[rng.randint(0, 30) for _ in range(k)] for _ in range(k)]
            assignment, total = min_cost_perfect_matching(cost)
            best, _ = assignment_bruteforce(cost)
            assert total == best
            assert sorted(assignment) == list(range(k))
            assert sum(cost[i][assignment[i]] for i in range(k)) == total


class TestDeterminism:
    def test_repeat_calls_identical(self):
        rng = random.Random(7)
        cost = [[rng.randint(0, 9) for _ in range(5)] for _ in range(5)]
        first = min_cost_perfect_matching(cost)
        for _ in range(5):
            assert min_cost_perfect_matching(cost) == first

    def test_all_equal_matrix_gives_identity(self):
        # With every entry equal, the first-index tie-break must pick the
        # identity assignment.
        assignment, total = min_cost_perfect_matching([[3] * 4 for _ in range(4)])
        assert assignment == (0, 1, 2, 3)
        assert total == 12

    def test_backends_agree_including_ties(self):
        rng = random.Random(99)
        for _ in range(30):
            k = rng.randint(2, 12)
            rows = [[rng.randint(0, 4) for _ in range(k)] for _ in range(k)]
            py = _solve_python([row[:] for row in rows], k)
            nq = _solve_numpy(np.array(rows, dtype=np.int64), k)
            assert py == nq

    def test_large_matrix_backends_agree(self):
        rng = random.Random(5)
        k = 80
        rows = [[rng.randint(0, 1000) for _ in range(k)] for _ in range(k)]
        py = _solve_python([row[:] for row in rows], k)
        nq = _solve_numpy(np.array(rows, dtype=np.int64), k)
        assert py == nq


class TestValidation:
    def test_not_square(self):
        with pytest.raises(SizeMismatch):
            min_cost_perfect_matching([[1, 2], [3]])
        with pytest.raises(SizeMismatch):
            min_cost_perfect_matching(np.zeros((2, 3), dtype=np.int64))

    def test_empty(self):
        with pytest.raises(SizeMismatch):
            min_cost_perfect_matching([])

    def test_negative_entry(self):
        with pytest.raises(ValidationError):
            min_cost_perfect_matching([[0, 1], [-1, 0]])

    def test_float_entries(self):
        with pytest.raises(ValidationError):
            min_cost_perfect_matching([[0.5, 1], [1, 0]])
        with pytest.raises(ValidationError):
            min_cost_perfect_matching(np.zeros((2, 2)))

    def test_entry_over_limit(self):
        with pytest.raises(ValidationError):
            min_cost_perfect_matching([[MAX_ENTRY + 1, 0], [0, 0]])

    def test_overflow_guard(self):
        # Entries are individually legal but k * max reaches 2^63.
        big = MAX_ENTRY
        with pytest.raises(OverflowError):
            min_cost_perfect_matching([[big, big], [big, big]])

    def test_max_legal_entry_single_cell(self):
        assignment, total = min_cost_perfect_matching([[MAX_ENTRY]])
        assert total == MAX_ENTRY
