"""Minimum-cost perfect matching on square integer matrices.

Shortest-augmenting-path Hungarian algorithm with dual potentials, O(k^3).
All arithmetic is integer arithmetic, so totals are exact.  Ties are broken
deterministically: among columns of equal reduced cost the lowest index wins,
and rows are inserted in ascending order, so identical inputs always yield
identical assignments.

Two backends implement the same algorithm with the same tie-breaks: a plain
Python version (fast for the small matrices the distance solvers produce) and
a numpy int64 version used for large instances.
"""

from __future__ import annotations

import numpy as np

from .errors import SizeMismatch, ValidationError

MAX_ENTRY = 1 << 62

# Matrices at least this wide go to the numpy backend, provided int64
# reduced-cost arithmetic is safely in range for them.
_NUMPY_MIN_SIZE = 64
_NUMPY_SAFE_LIMIT = 1 << 59

_BIG = 1 << 70


def _solve_python(rows: list[list[int]], k: int) -> list[int]:
    u = [0] * (k + 1)
    v = [0] * (k + 1)
    p = [0] * (k + 1)
    way = [0] * (k + 1)
    for i in range(1, k + 1):
        p[0] = i
        j0 = 0
        minv = [_BIG] * (k + 1)
        used = [False] * (k + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = _BIG
            j1 = -1
            row = rows[i0 - 1]
            ui0 = u[i0]
            for j in range(1, k + 1):
                if not used[j]:
                    cur = row[j - 1] - ui0 - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(k + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0 != 0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    assignment = [0] * k
    for j in range(1, k + 1):
        assignment[p[j] - 1] = j - 1
    return assignment


def _solve_numpy(arr: np.ndarray, k: int) -> list[int]:
    c = arr.astype(np.int64, copy=False)
    inf = np.iinfo(np.int64).max // 4
    u = np.zeros(k + 1, dtype=np.int64)
    v = np.zeros(k + 1, dtype=np.int64)
    p = np.zeros(k + 1, dtype=np.int64)
    way = np.zeros(k + 1, dtype=np.int64)
    for i in range(1, k + 1):
        p[0] = i
        j0 = 0
        minv = np.full(k + 1, inf, dtype=np.int64)
        used = np.zeros(k + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = int(p[j0])
            free = ~used[1:]
            cur = c[i0 - 1, :] - u[i0] - v[1:]
            minv1 = minv[1:]
            better = free & (cur < minv1)
            minv1[better] = cur[better]
            way[1:][better] = j0
            masked = np.where(free, minv1, inf)
            # np.argmin returns the first index among ties, matching the
            # Python backend's column scan.
            j1 = int(np.argmin(masked)) + 1
            delta = int(masked[j1 - 1])
            u[p[used]] += delta
            v[used] -= delta
            minv1[free] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0 != 0:
            j1 = int(way[j0])
            p[j0] = int(p[j1])
            j0 = j1
    assignment = [0] * k
    for j in range(1, k + 1):
        assignment[int(p[j]) - 1] = j - 1
    return assignment


def min_cost_perfect_matching(cost) -> tuple[tuple[int, ...], int]:
    """Solve the assignment problem on a square matrix of non-negative ints.

    Parameters
    ----------
    cost
        k x k matrix (nested sequences or a numpy integer array);
        ``cost[i][j]`` is the cost of assigning row i to column j.  Entries
        must be integers in [0, 2^62].

    Returns
    -------
    (assignment, total)
        ``assignment[i]`` is the column matched to row i; ``total`` is the
        (exact, integer) optimal cost.

    Raises
    ------
    SizeMismatch
        if the matrix is not square or is empty.
    ValidationError
        if an entry is not an integer in range.
    OverflowError
        if ``k * max_entry`` reaches 2^63, i.e. a total could not be
        guaranteed to fit 63 bits.
    """
    arr: np.ndarray | None = None
    if isinstance(cost, np.ndarray):
        arr = cost
    rows: list[list[int]] | None = None
    if arr is None:
        rows = [list(r) for r in cost]
        k = len(rows)
        if k == 0:
            raise SizeMismatch("cost matrix is empty")
        max_entry = 0
        for row in rows:
            if len(row) != k:
                raise SizeMismatch(f"cost matrix is not square: row of length {len(row)} in a {k}-row matrix")
            for x in row:
                if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                    raise ValidationError(f"cost entry {x!r} is not an integer")
                if x < 0 or x > MAX_ENTRY:
                    raise ValidationError(f"cost entry {x} outside [0, 2^62]")
                if x > max_entry:
                    max_entry = int(x)
    else:
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise SizeMismatch(f"cost matrix is not square: shape {arr.shape}")
        k = int(arr.shape[0])
        if k == 0:
            raise SizeMismatch("cost matrix is empty")
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValidationError(f"cost entries must be integers, got dtype {arr.dtype}")
        lo = int(arr.min())
        max_entry = int(arr.max())
        if lo < 0 or max_entry > MAX_ENTRY:
            raise ValidationError("cost entries outside [0, 2^62]")
    if k * max_entry >= 1 << 63:
        raise OverflowError(
            f"assignment total could exceed 63 bits: {k} rows with max entry {max_entry}"
        )

    if k >= _NUMPY_MIN_SIZE and k * max_entry < _NUMPY_SAFE_LIMIT:
        if arr is None:
            arr = np.array(rows, dtype=np.int64)
        assignment = _solve_numpy(arr, k)
        total = int(sum(int(arr[i, assignment[i]]) for i in range(k)))
    else:
        if rows is None:
            rows = arr.tolist()
        assignment = _solve_python(rows, k)
        total = sum(rows[i][assignment[i]] for i in range(k))
    return tuple(assignment), int(total)
