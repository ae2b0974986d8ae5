from __future__ import annotations

import random
from fractions import Fraction

import pytest

from electdist import (
    CapExceeded,
    Election,
    MetricKind,
    approx_auto,
    approx_candidates,
    approx_candidates_minus,
    exact_distance_brute_candidates,
    induced_distance,
)

from oracles import joint_bruteforce, random_rankings

APPROX_METRICS = (MetricKind.SWAP, MetricKind.SPEARMAN)


def _random_pair(rng, m, n):
    e = Election(m, random_rankings(rng, m, n))
    f = Election(m, random_rankings(rng, m, n))
    return e, f


def _check_certificate(e, f, metric, result, opt):
    assert (
        induced_distance(
            e, f, result.candidate_matching, result.voter_matching, metric
        )
        == result.value
    )
    assert result.value >= opt
    if result.exact:
        assert result.guarantee is None
        assert result.value == opt
    else:
        assert result.guarantee is not None
        assert result.value <= result.guarantee * opt


class TestApproxCandidates:
    def test_certificates(self):
        rng = random.Random(500)
        for _ in range(50):
            m = rng.randint(1, 4)
            n = rng.randint(1, 3)
            e, f = _random_pair(rng, m, n)
            for metric in APPROX_METRICS:
                opt = joint_bruteforce(e.rankings(), f.rankings(), metric.value)
                got = approx_candidates(e, f, metric)
                _check_certificate(e, f, metric, got, opt)

    def test_ratio_tags(self):
        rng = random.Random(501)
        e, f = _random_pair(rng, 5, 3)
        swap = approx_candidates(e, f, MetricKind.SWAP)
        spear = approx_candidates(e, f, MetricKind.SPEARMAN)
        if not swap.exact:
            assert swap.guarantee == Fraction(10)
        if not spear.exact:
            assert spear.guarantee == Fraction(5)

    def test_zero_promoted_to_exact(self):
        e = Election(3, [(0, 1, 2), (2, 1, 0)])
        f = Election(3, [(2, 1, 0), (0, 1, 2)])
        for metric in APPROX_METRICS:
            got = approx_candidates(e, f, metric)
            assert got.value == 0
            assert got.exact
            assert got.guarantee is None

    def test_discrete_rejected(self):
        e = Election(2, [(0, 1)])
        with pytest.raises(ValueError):
            approx_candidates(e, e, MetricKind.DISCRETE)


class TestApproxCandidatesMinus:
    def test_never_worse_than_plain(self):
        rng = random.Random(502)
        for _ in range(15):
            m = rng.randint(4, 5)
            n = rng.randint(1, 3)
            e, f = _random_pair(rng, m, n)
            for metric in APPROX_METRICS:
                plain = approx_candidates(e, f, metric)
                minus = approx_candidates_minus(e, f, metric)
                assert minus.value <= plain.value
                assert minus.solver == "approx-best-pair-overrides" or minus.exact

    def test_certificates(self):
        rng = random.Random(503)
        for _ in range(10):
            e, f = _random_pair(rng, 4, 2)
            for metric in APPROX_METRICS:
                opt = joint_bruteforce(e.rankings(), f.rankings(), metric.value)
                got = approx_candidates_minus(e, f, metric)
                _check_certificate(e, f, metric, got, opt)
                if not got.exact:
                    base = 4 - 1
                    want = base if metric is MetricKind.SPEARMAN else 2 * base
                    assert got.guarantee == Fraction(want)

    def test_small_instances_fall_back_to_exact(self):
        rng = random.Random(504)
        for m in (1, 2, 3):
            e, f = _random_pair(rng, m, 2)
            for metric in APPROX_METRICS:
                opt = joint_bruteforce(e.rankings(), f.rankings(), metric.value)
                got = approx_candidates_minus(e, f, metric)
                assert got.value == opt
                assert got.exact
                assert got.solver == "approx-best-pair-overrides/exact-fallback"

    def test_full_override_is_exhaustive(self):
        # improvement 2 on m = 6 forces all 6 sources, enumerating every
        # candidate matching, so the result must equal the exact optimum.
        rng = random.Random(505)
        e, f = _random_pair(rng, 6, 1)
        got = approx_candidates_minus(
            e, f, MetricKind.SPEARMAN, improvement=2, max_improvement=2
        )
        want = exact_distance_brute_candidates(e, f, MetricKind.SPEARMAN)
        assert got.value == want.value

    def test_improvement_validation(self):
        e = Election(4, [(0, 1, 2, 3)])
        with pytest.raises(ValueError):
            approx_candidates_minus(e, e, MetricKind.SWAP, improvement=0)
        with pytest.raises(CapExceeded):
            approx_candidates_minus(e, e, MetricKind.SWAP, improvement=2)

    def test_discrete_rejected(self):
        e = Election(4, [(0, 1, 2, 3)])
        with pytest.raises(ValueError):
            approx_candidates_minus(e, e, MetricKind.DISCRETE)


class TestApproxAuto:
    def test_pair_branch_when_voters_plentiful(self):
        rng = random.Random(506)
        e, f = _random_pair(rng, 3, 3)
        for metric in APPROX_METRICS:
            got = approx_auto(e, f, metric)
            assert got.solver == "approx-auto/best-pair"
            assert got.value == approx_candidates(e, f, metric).value

    def test_voter_enumeration_when_voters_scarce(self):
        rng = random.Random(507)
        for _ in range(25):
            m = rng.randint(3, 5)
            n = rng.randint(1, 2)  # n! < m forces the enumeration branch
            e, f = _random_pair(rng, m, n)
            opt_spear = joint_bruteforce(e.rankings(), f.rankings(), "spearman")
            got = approx_auto(e, f, MetricKind.SPEARMAN)
            assert got.solver == "approx-auto/voter-enumeration"
            assert got.value == opt_spear
            assert got.exact

            opt_swap = joint_bruteforce(e.rankings(), f.rankings(), "swap")
            got = approx_auto(e, f, MetricKind.SWAP)
            assert got.solver == "approx-auto/voter-enumeration"
            _check_certificate(e, f, MetricKind.SWAP, got, opt_swap)
            if not got.exact:
                assert got.guarantee == Fraction(2)

    def test_discrete_rejected(self):
        e = Election(2, [(0, 1)])
        with pytest.raises(ValueError):
            approx_auto(e, e, MetricKind.DISCRETE)
