"""Polynomial approximation algorithms for swap and Spearman distances.

All of them return a DistanceResult whose witness matchings realize the
reported value, plus a certified approximation ratio in ``guarantee``;
a value of zero is promoted to an exact result (zero admits no slack).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import CapExceeded
from .exact import (
    best_pair_induced,
    distance_with_candidate_matching,
    exact_distance_brute_candidates,
    spearman_with_voter_matching,
)
from .metrics import MetricKind, induced_distance
from .model import CandidateMatching, DistanceResult, Election, VoterMatching


def _check_metric(metric: MetricKind) -> None:
    if metric not in (MetricKind.SWAP, MetricKind.SPEARMAN):
        raise ValueError(
            "approximation targets the swap and spearman metrics "
            "(the discrete distance is solved exactly in polynomial time)"
        )


def _pair_ratio(metric: MetricKind, candidates: int) -> Fraction:
    # Every candidate moves fewer than `candidates` positions, so the best
    # pair-induced matching is within factor m for Spearman; the swap bound
    # follows through the footrule sandwich at the cost of another factor 2.
    if metric is MetricKind.SPEARMAN:
        return Fraction(candidates)
    return Fraction(2 * candidates)


def _finalize(result: DistanceResult, solver: str, ratio: Fraction) -> DistanceResult:
    exact = result.value == 0
    return DistanceResult(
        value=result.value,
        candidate_matching=result.candidate_matching,
        voter_matching=result.voter_matching,
        exact=exact,
        solver=solver,
        guarantee=None if exact else ratio,
    )


def approx_candidates(
    first: Election, second: Election, metric: MetricKind
) -> DistanceResult:
    """Best pair-induced candidate matching: ratio m (Spearman) / 2m (swap).

    Runs in polynomial time (n^2 assignment solves).
    """
    _check_metric(metric)
    best = best_pair_induced(first, second, metric)
    return _finalize(
        best, "approx-best-pair", _pair_ratio(metric, first.num_candidates)
    )


def _repair(
    base: tuple[int, ...], sources: tuple[int, ...], images: tuple[int, ...], m: int
) -> tuple[int, ...]:
    """Overwrite ``base`` on ``sources`` with ``images`` and mend the rest
    into a bijection: unforced sources keep their base image when still free,
    and the leftovers are zipped in ascending order."""
    out = [-1] * m
    taken = [False] * m
    for s, t in zip(sources, images):
        out[s] = t
        taken[t] = True
    deferred = []
    for s in range(m):
        if out[s] >= 0:
            continue
        t = base[s]
        if not taken[t]:
            out[s] = t
            taken[t] = True
        else:
            deferred.append(s)
    free = [t for t in range(m) if not taken[t]]
    for s, t in zip(deferred, free):
        out[s] = t
    return tuple(out)


def approx_candidates_minus(
    first: Election,
    second: Election,
    metric: MetricKind,
    improvement: int = 1,
    *,
    max_improvement: int = 1,
) -> DistanceResult:
    """Ratio m-c (Spearman) / 2(m-c) (swap) for c = ``improvement``.

    On top of every pair-induced matching, forces each choice of 2c+2
    source candidates onto each choice of 2c+2 images, repairing the rest
    into a bijection, and keeps the best evaluated matching.  Exponential in
    c only; ``max_improvement`` (default 1) caps c and can be raised
    explicitly.  When fewer than 2c+2 candidates exist the instance is small
    enough to solve exactly, and that exact result is returned instead.

    Never worse than :func:`approx_candidates`: forcing a subset of a
    pair-induced matching onto itself reproduces that matching.
    """
    _check_metric(metric)
    if improvement < 1:
        raise ValueError("improvement must be at least 1")
    if improvement > max_improvement:
        raise CapExceeded(
            f"improvement {improvement} over the cap of {max_improvement}; "
            "raise max_improvement to force the run"
        )
    m = first.num_candidates
    group = 2 * improvement + 2
    if m < group:
        exact = exact_distance_brute_candidates(first, second, metric, max_candidates=m)
        return DistanceResult(
            value=exact.value,
            candidate_matching=exact.candidate_matching,
            voter_matching=exact.voter_matching,
            exact=True,
            solver="approx-best-pair-overrides/exact-fallback",
        )

    seen: set[tuple[int, ...]] = set()
    best: DistanceResult | None = None
    source_choices = list(itertools.combinations(range(m), group))
    for u in first.votes:
        for w in second.votes:
            base = CandidateMatching.sending(u, w).mapping
            for sources in source_choices:
                for images in itertools.permutations(range(m), group):
                    mapping = _repair(base, sources, images, m)
                    if mapping in seen:
                        continue
                    seen.add(mapping)
                    candidate = distance_with_candidate_matching(
                        first, second, CandidateMatching(mapping), metric
                    )
                    if best is None or candidate.value < best.value:
                        best = candidate
    assert best is not None
    ratio = _pair_ratio(metric, m - improvement)
    return _finalize(best, "approx-best-pair-overrides", ratio)


def approx_auto(
    first: Election, second: Election, metric: MetricKind
) -> DistanceResult:
    """Pick the cheaper of two strategies by instance shape.

    With m <= n! candidate relabelings are the scarce resource and the best
    pair-induced matching already gives ratio m <= n!; otherwise n is tiny
    (n! < m), so enumerate all n! voter matchings and solve each one
    optimally with the Spearman assignment, which is exact for Spearman.
    For swap, each enumerated witness is re-evaluated under the swap metric;
    the footrule sandwich certifies ratio 2 for the result.
    """
    _check_metric(metric)
    m = first.num_candidates
    n = first.num_voters
    if m <= math.factorial(min(n, 16)) or n >= 16:
        best = best_pair_induced(first, second, metric)
        return _finalize(best, "approx-auto/best-pair", _pair_ratio(metric, m))

    best_value: int | None = None
    best_sigma: CandidateMatching | None = None
    best_nu: VoterMatching | None = None
    for perm in itertools.permutations(range(n)):
        nu = VoterMatching(perm)
        conditional = spearman_with_voter_matching(first, second, nu)
        if metric is MetricKind.SPEARMAN:
            value = conditional.value
        else:
            value = induced_distance(
                first, second, conditional.candidate_matching, nu, MetricKind.SWAP
            )
        if best_value is None or value < best_value:
            best_value = value
            best_sigma = conditional.candidate_matching
            best_nu = nu
    assert best_value is not None and best_sigma is not None and best_nu is not None
    if metric is MetricKind.SPEARMAN:
        return DistanceResult(
            value=best_value,
            candidate_matching=best_sigma,
            voter_matching=best_nu,
            exact=True,
            solver="approx-auto/voter-enumeration",
        )
    exact = best_value == 0
    return DistanceResult(
        value=best_value,
        candidate_matching=best_sigma,
        voter_matching=best_nu,
        exact=exact,
        solver="approx-auto/voter-enumeration",
        guarantee=None if exact else Fraction(2),
    )
