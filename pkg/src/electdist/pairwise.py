"""Pairwise distance matrices over collections of elections.

The matrix is computed once per unordered pair, so it is symmetric with a
zero diagonal by construction; each entry carries a provenance tag saying
whether it is exact or approximate (and at what certified ratio).
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from typing import Sequence

from .approx import approx_candidates
from .errors import HeterogeneousSizes, ValidationError
from .exact import (
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_MAX_VOTERS,
    exact_distance_brute_candidates,
)
from .isomorphism import exact_discrete_distance
from .metrics import MetricKind
from .model import Election

STRATEGIES = ("exact", "approx", "auto")


@dataclass(frozen=True)
class DistanceMatrix:
    """A labeled, symmetric, zero-diagonal matrix of pairwise distances."""

    labels: tuple[str, ...]
    metric: MetricKind
    values: tuple[tuple[int, ...], ...]
    tags: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        object.__setattr__(self, "values", tuple(tuple(row) for row in self.values))
        object.__setattr__(self, "tags", tuple(tuple(row) for row in self.tags))
        size = len(self.labels)
        if len(self.values) != size or len(self.tags) != size:
            raise ValidationError("matrix rows must match the label count")
        for row, tag_row in zip(self.values, self.tags):
            if len(row) != size or len(tag_row) != size:
                raise ValidationError("matrix must be square")
        for i in range(size):
            if self.values[i][i] != 0:
                raise ValidationError("diagonal entries must be zero")
            for j in range(size):
                if self.values[i][j] < 0:
                    raise ValidationError("distance entries are non-negative")
                if self.values[i][j] != self.values[j][i]:
                    raise ValidationError("matrix must be symmetric")

    def __len__(self) -> int:
        return len(self.labels)

    def to_json_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "metric": self.metric.value,
            "values": [list(row) for row in self.values],
            "tags": [list(row) for row in self.tags],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "DistanceMatrix":
        try:
            labels = payload["labels"]
            metric = payload["metric"]
            values = payload["values"]
            tags = payload["tags"]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"matrix JSON is missing field {exc}") from None
        return cls(
            labels=tuple(labels),
            metric=MetricKind.from_name(metric),
            values=tuple(tuple(int(x) for x in row) for row in values),
            tags=tuple(tuple(str(t) for t in row) for row in tags),
        )


def _entry_tag(exact: bool, guarantee) -> str:
    if exact:
        return "exact"
    return f"approx(ratio<={guarantee})"


def _pair_entry(args) -> tuple[int, int, int, str]:
    i, j, first, second, metric, strategy, max_candidates, max_voters = args
    if metric is MetricKind.DISCRETE:
        result = exact_discrete_distance(first, second)
        return i, j, result.value, "exact"
    if strategy == "auto":
        strategy = (
            "exact"
            if first.num_candidates <= max_candidates
            and first.num_voters <= max_voters
            else "approx"
        )
    if strategy == "exact":
        result = exact_distance_brute_candidates(
            first, second, metric, max_candidates=max_candidates
        )
        return i, j, result.value, "exact"
    result = approx_candidates(first, second, metric)
    return i, j, result.value, _entry_tag(result.exact, result.guarantee)


def pairwise_matrix(
    elections: Sequence[Election],
    metric: MetricKind,
    strategy: str = "auto",
    *,
    labels: Sequence[str] | None = None,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    max_voters: int = DEFAULT_MAX_VOTERS,
    processes: int = 1,
) -> DistanceMatrix:
    """Distance matrix over ``elections`` under ``metric``.

    Strategies: ``exact`` (branch-and-bound; CapExceeded over the caps),
    ``approx`` (best pair-induced matching), ``auto`` (exact when the shape
    is under the caps, else approx).  The discrete metric is always computed
    exactly in polynomial time, whatever the strategy.  ``processes`` > 1
    distributes pairs over a process pool.
    """
    elections = list(elections)
    if not elections:
        raise ValidationError("need at least one election")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    shape = (elections[0].num_candidates, elections[0].num_voters)
    for e in elections[1:]:
        if (e.num_candidates, e.num_voters) != shape:
            raise HeterogeneousSizes(
                f"all elections must share one shape; saw {shape} and "
                f"({e.num_candidates}, {e.num_voters})"
            )
    size = len(elections)
    if labels is None:
        label_tuple = tuple(f"E{i}" for i in range(size))
    else:
        label_tuple = tuple(str(s) for s in labels)
        if len(label_tuple) != size:
            raise ValidationError(f"{len(label_tuple)} labels for {size} elections")

    values = [[0] * size for _ in range(size)]
    tags = [["exact"] * size for _ in range(size)]
    tasks = [
        (i, j, elections[i], elections[j], metric, strategy, max_candidates, max_voters)
        for i in range(size)
        for j in range(i + 1, size)
    ]
    if processes > 1 and tasks:
        with concurrent.futures.ProcessPoolExecutor(max_workers=processes) as pool:
            results = list(pool.map(_pair_entry, tasks))
    else:
        results = [_pair_entry(t) for t in tasks]
    for i, j, value, tag in results:
        values[i][j] = values[j][i] = value
        tags[i][j] = tags[j][i] = tag
    return DistanceMatrix(
        labels=label_tuple,
        metric=metric,
        values=tuple(tuple(row) for row in values),
        tags=tuple(tuple(row) for row in tags),
    )
