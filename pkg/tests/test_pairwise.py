from __future__ import annotations

import random
from fractions import Fraction

import pytest

from electdist import (
    CapExceeded,
    DistanceMatrix,
    Election,
    HeterogeneousSizes,
    MetricKind,
    ValidationError,
    exact_distance_brute_candidates,
    pairwise_matrix,
)

from oracles import random_rankings


def _random_elections(rng, count, m, n):
    return [Election(m, random_rankings(rng, m, n)) for _ in range(count)]


class TestMatrixShape:
    def test_symmetric_zero_diagonal_defaults(self):
        rng = random.Random(700)
        elections = _random_elections(rng, 4, 3, 3)
        matrix = pairwise_matrix(elections, MetricKind.SWAP, "exact")
        assert len(matrix) == 4
        assert matrix.labels == ("E0", "E1", "E2", "E3")
        for i in range(4):
            assert matrix.values[i][i] == 0
            for j in range(4):
                assert matrix.values[i][j] == matrix.values[j][i]
                assert matrix.values[i][j] >= 0

    def test_exact_entries_match_solver_and_triangle(self):
        rng = random.Random(701)
        elections = _random_elections(rng, 4, 3, 2)
        for metric in MetricKind:
            matrix = pairwise_matrix(elections, metric, "exact")
            for i in range(4):
                for j in range(i + 1, 4):
                    want = exact_distance_brute_candidates(
                        elections[i], elections[j], metric
                    ).value
                    assert matrix.values[i][j] == want
                    assert matrix.tags[i][j] == "exact"
            for i in range(4):
                for j in range(4):
                    for k in range(4):
                        assert (
                            matrix.values[i][j]
                            <= matrix.values[i][k] + matrix.values[k][j]
                        )

    def test_custom_labels(self):
        rng = random.Random(702)
        elections = _random_elections(rng, 2, 2, 2)
        matrix = pairwise_matrix(
            elections, MetricKind.SPEARMAN, labels=["left", "right"]
        )
        assert matrix.labels == ("left", "right")
        with pytest.raises(ValidationError):
            pairwise_matrix(elections, MetricKind.SPEARMAN, labels=["only-one"])

    def test_single_election(self):
        matrix = pairwise_matrix([Election(2, [(0, 1)])], MetricKind.SWAP)
        assert matrix.values == ((0,),)

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            pairwise_matrix([], MetricKind.SWAP)

    def test_heterogeneous_rejected(self):
        a = Election(2, [(0, 1)])
        b = Election(3, [(0, 1, 2)])
        with pytest.raises(HeterogeneousSizes):
            pairwise_matrix([a, b], MetricKind.SWAP)
        c = Election(2, [(0, 1), (1, 0)])
        with pytest.raises(HeterogeneousSizes):
            pairwise_matrix([a, c], MetricKind.SWAP)

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            pairwise_matrix([Election(2, [(0, 1)])], MetricKind.SWAP, "magic")


class TestStrategies:
    def test_approx_dominates_exact_within_ratio(self):
        rng = random.Random(703)
        elections = _random_elections(rng, 4, 4, 3)
        m = 4
        for metric in (MetricKind.SWAP, MetricKind.SPEARMAN):
            exact = pairwise_matrix(elections, metric, "exact")
            approx = pairwise_matrix(elections, metric, "approx")
            ratio = Fraction(m if metric is MetricKind.SPEARMAN else 2 * m)
            for i in range(4):
                for j in range(4):
                    lo = exact.values[i][j]
                    hi = approx.values[i][j]
                    assert lo <= hi
                    assert hi <= ratio * lo or lo == 0 and hi == 0

    def test_approx_tags(self):
        a = Election(3, [(0, 1, 2), (0, 2, 1)])
        b = Election(3, [(1, 2, 0), (2, 1, 0)])
        matrix = pairwise_matrix([a, b], MetricKind.SWAP, "approx")
        tag = matrix.tags[0][1]
        assert tag == "exact" or tag.startswith("approx(ratio<=")

    def test_discrete_always_exact(self):
        rng = random.Random(704)
        elections = _random_elections(rng, 3, 3, 3)
        matrix = pairwise_matrix(elections, MetricKind.DISCRETE, "approx")
        assert all(tag == "exact" for row in matrix.tags for tag in row)

    def test_auto_switches_on_caps(self):
        # Distance is forced positive so the approx tag cannot be promoted.
        a = Election(3, [(0, 1, 2)] * 4)
        b = Election(3, [(0, 1, 2)] * 3 + [(1, 0, 2)])
        under = pairwise_matrix([a, b], MetricKind.SWAP, "auto")
        assert under.tags[0][1] == "exact"
        over = pairwise_matrix([a, b], MetricKind.SWAP, "auto", max_voters=3)
        assert over.tags[0][1].startswith("approx(ratio<=")
        assert over.values[0][1] >= under.values[0][1]

    def test_exact_strategy_propagates_cap(self):
        rng = random.Random(706)
        elections = _random_elections(rng, 2, 4, 2)
        with pytest.raises(CapExceeded):
            pairwise_matrix(elections, MetricKind.SWAP, "exact", max_candidates=3)

    def test_processes_match_serial(self):
        rng = random.Random(707)
        elections = _random_elections(rng, 4, 3, 3)
        serial = pairwise_matrix(elections, MetricKind.SPEARMAN, "exact")
        parallel = pairwise_matrix(
            elections, MetricKind.SPEARMAN, "exact", processes=2
        )
        assert serial.values == parallel.values
        assert serial.tags == parallel.tags


class TestJsonRoundTrip:
    def test_round_trip(self):
        rng = random.Random(708)
        elections = _random_elections(rng, 3, 3, 2)
        matrix = pairwise_matrix(elections, MetricKind.SWAP, "auto")
        payload = matrix.to_json_dict()
        back = DistanceMatrix.from_json_dict(payload)
        assert back == matrix

    def test_missing_field(self):
        with pytest.raises(ValidationError):
            DistanceMatrix.from_json_dict({"labels": ["a"]})

    def test_validation(self):
        with pytest.raises(ValidationError):
            DistanceMatrix(
                labels=("a", "b"),
                metric=MetricKind.SWAP,
                values=((0, 1), (2, 0)),
                tags=(("exact", "exact"), ("exact", "exact")),
            )
        with pytest.raises(ValidationError):
            DistanceMatrix(
                labels=("a",),
                metric=MetricKind.SWAP,
                values=((1,),),
                tags=(("exact",),),
            )
        with pytest.raises(ValidationError):
            DistanceMatrix(
                labels=("a", "b"),
                metric=MetricKind.SWAP,
                values=((0, -1), (-1, 0)),
                tags=(("exact", "exact"), ("exact", "exact")),
            )
