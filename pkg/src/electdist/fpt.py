"""Budget-parameterized deciders: is the isomorphic distance at most k?

Two regimes, split on how the budget k compares to the voter count n:

* k < n: if the total distance is at most k, some matched vote pair must be
  at distance zero (all n pairs positive would already cost more than k), and
  a zero-distance pair pins the whole candidate matching.  Scanning the n^2
  pair-induced matchings is therefore exact.
* k >= n: for Spearman, enumerate voter matchings (n! <= k! here, so this is
  still parameterized by k).  For swap, search over actual swap sequences:
  with a voter matching fixed, call a candidate *sad* when no candidate of
  the other election has the same position vector across the matched votes.
  A solution of cost <= k can only involve swaps adjacent to positions near
  sad candidates, at most 2k candidates are sad in any state on a successful
  path (each swap fixes at most two), and the search depth is k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetTooLargeForSearch, CapExceeded, SizeMismatch
from .exact import (
    DEFAULT_MAX_VOTERS,
    best_pair_induced,
    exact_spearman_brute_voters,
)
from .metrics import MetricKind, induced_distance
from .model import CandidateMatching, DistanceResult, Election, VoterMatching

DEFAULT_MAX_SEARCH_BUDGET = 6


def _require_same_shape(first: Election, second: Election) -> None:
    if first.num_candidates != second.num_candidates:
        raise SizeMismatch("elections have different candidate counts")
    if first.num_voters != second.num_voters:
        raise SizeMismatch("elections have different voter counts")


def _check_budget(budget: int) -> None:
    if budget < 0:
        raise ValueError("budget must be non-negative")


@dataclass(frozen=True)
class SwapWitness:
    """An accepting branch of the swap search.

    ``swaps`` lists adjacent transpositions as (vote index, left position):
    applying them to the first election in order, then relabeling through
    ``candidate_matching``, yields the second election's votes under
    ``voter_matching``.
    """

    candidate_matching: CandidateMatching
    voter_matching: VoterMatching
    swaps: tuple[tuple[int, int], ...]


def _position_vectors(
    rankings: tuple[tuple[int, ...], ...], m: int
) -> list[tuple[int, ...]]:
    """vector[c] = (position of c in vote 0, in vote 1, ...)."""
    n = len(rankings)
    vecs = [[0] * n for _ in range(m)]
    for i, r in enumerate(rankings):
        for p, c in enumerate(r):
            vecs[c][i] = p
    return [tuple(v) for v in vecs]


def search_swap_witness(
    first: Election,
    second: Election,
    budget: int,
    *,
    max_search_budget: int = DEFAULT_MAX_SEARCH_BUDGET,
    max_voters: int = DEFAULT_MAX_VOTERS,
) -> SwapWitness | None:
    """Find at most ``budget`` adjacent swaps turning ``first`` into an
    election isomorphic to ``second``, or None if none exist.

    This is the k >= n workhorse of :func:`decide_swap`, exposed so callers
    can replay the swap sequence.  Voter matchings are tried in lexicographic
    order; within one, the search only ever swaps at positions within
    ``budget`` of a sad candidate, rejects states where more candidates are
    sad than remaining swaps could fix, and memoizes states by the largest
    remaining budget they were explored with.

    Raises BudgetTooLargeForSearch when ``budget`` exceeds
    ``max_search_budget`` (default 6) and CapExceeded when the voter count
    exceeds ``max_voters``; both caps can be raised explicitly.
    """
    _require_same_shape(first, second)
    _check_budget(budget)
    if budget > max_search_budget:
        raise BudgetTooLargeForSearch(
            f"budget {budget} over the search cap of {max_search_budget}; "
            "raise max_search_budget to force the search"
        )
    n = first.num_voters
    if n > max_voters:
        raise CapExceeded(
            f"{n} voters over the cap of {max_voters}; raise max_voters to force the search"
        )
    m = first.num_candidates
    start = first.rankings()
    k = budget

    for nu_perm in itertools.permutations(range(n)):
        matched = tuple(second.votes[nu_perm[i]].ranking for i in range(n))
        target_vectors = set(_position_vectors(matched, m))
        memo: dict[tuple[tuple[int, ...], ...], int] = {}
        path: list[tuple[int, int]] = []

        def dfs(state: tuple[tuple[int, ...], ...], remaining: int) -> bool:
            vecs = _position_vectors(state, m)
            sad = [c for c in range(m) if vecs[c] not in target_vectors]
            if not sad:
                return True
            if len(sad) > 2 * remaining:
                return False
            if memo.get(state, -1) >= remaining:
                return False
            memo[state] = remaining
            seen: set[tuple[int, int]] = set()
            for i in range(n):
                pos_i = [0] * m
                for p, c in enumerate(state[i]):
                    pos_i[c] = p
                for d in sad:
                    base = pos_i[d]
                    for mag in range(k + 1):
                        spots = (base,) if mag == 0 else (base - mag, base + mag)
                        for q in spots:
                            if q < 0 or q >= m:
                                continue
                            for p in (q - 1, q):
                                if p < 0 or p > m - 2 or (i, p) in seen:
                                    continue
                                seen.add((i, p))
                                r = list(state[i])
                                r[p], r[p + 1] = r[p + 1], r[p]
                                child = state[:i] + (tuple(r),) + state[i + 1 :]
                                path.append((i, p))
                                if dfs(child, remaining - 1):
                                    return True
                                path.pop()
            return False

        if dfs(start, k):
            final = list(start)
            for i, p in path:
                r = list(final[i])
                r[p], r[p + 1] = r[p + 1], r[p]
                final[i] = tuple(r)
            final_vectors = _position_vectors(tuple(final), m)
            by_vector = {
                vec: c for c, vec in enumerate(_position_vectors(matched, m))
            }
            sigma = CandidateMatching(
                tuple(by_vector[final_vectors[c]] for c in range(m))
            )
            return SwapWitness(
                candidate_matching=sigma,
                voter_matching=VoterMatching(nu_perm),
                swaps=tuple(path),
            )
    return None


def decide_swap(
    first: Election,
    second: Election,
    budget: int,
    *,
    max_search_budget: int = DEFAULT_MAX_SEARCH_BUDGET,
    max_voters: int = DEFAULT_MAX_VOTERS,
) -> DistanceResult | None:
    """Decide whether the swap isomorphic distance is at most ``budget``.

    Returns a DistanceResult whose value is at most ``budget`` on yes, None
    on no.  Exact as a decider: the answer is yes iff the true distance is
    within budget.
    """
    _require_same_shape(first, second)
    _check_budget(budget)
    n = first.num_voters
    if budget < n:
        best = best_pair_induced(first, second, MetricKind.SWAP)
        if best.value > budget:
            return None
        return DistanceResult(
            value=best.value,
            candidate_matching=best.candidate_matching,
            voter_matching=best.voter_matching,
            exact=True,
            solver="fpt-swap",
        )
    witness = search_swap_witness(
        first,
        second,
        budget,
        max_search_budget=max_search_budget,
        max_voters=max_voters,
    )
    if witness is None:
        return None
    value = induced_distance(
        first,
        second,
        witness.candidate_matching,
        witness.voter_matching,
        MetricKind.SWAP,
    )
    assert value <= budget
    return DistanceResult(
        value=value,
        candidate_matching=witness.candidate_matching,
        voter_matching=witness.voter_matching,
        exact=False,
        solver="fpt-swap",
    )


def decide_spearman(
    first: Election,
    second: Election,
    budget: int,
    *,
    max_voters: int = DEFAULT_MAX_VOTERS,
) -> DistanceResult | None:
    """Decide whether the Spearman isomorphic distance is at most ``budget``.

    Returns an exact-optimum DistanceResult on yes, None on no.
    """
    _require_same_shape(first, second)
    _check_budget(budget)
    n = first.num_voters
    if budget < n:
        best = best_pair_induced(first, second, MetricKind.SPEARMAN)
        if best.value > budget:
            return None
        return DistanceResult(
            value=best.value,
            candidate_matching=best.candidate_matching,
            voter_matching=best.voter_matching,
            exact=True,
            solver="fpt-spearman",
        )
    result = exact_spearman_brute_voters(first, second, max_voters=max_voters)
    if result.value > budget:
        return None
    return DistanceResult(
        value=result.value,
        candidate_matching=result.candidate_matching,
        voter_matching=result.voter_matching,
        exact=True,
        solver="fpt-spearman",
    )


def distance_within_budget(
    first: Election,
    second: Election,
    metric: MetricKind,
    budget_max: int,
    *,
    max_search_budget: int = DEFAULT_MAX_SEARCH_BUDGET,
    max_voters: int = DEFAULT_MAX_VOTERS,
) -> DistanceResult | None:
    """Smallest-budget yes answer with budgets 0..``budget_max``, or None.

    Because the deciders are exact, a first yes at budget k means the true
    distance is exactly k's witness value, so the result is marked exact.
    Supports the swap and Spearman metrics.
    """
    _require_same_shape(first, second)
    _check_budget(budget_max)
    if metric is MetricKind.SWAP:
        decide = lambda k: decide_swap(
            first,
            second,
            k,
            max_search_budget=max_search_budget,
            max_voters=max_voters,
        )
    elif metric is MetricKind.SPEARMAN:
        decide = lambda k: decide_spearman(first, second, k, max_voters=max_voters)
    else:
        raise ValueError("budgeted deciders exist for the swap and spearman metrics")
    for k in range(budget_max + 1):
        result = decide(k)
        if result is not None:
            return DistanceResult(
                value=result.value,
                candidate_matching=result.candidate_matching,
                voter_matching=result.voter_matching,
                exact=True,
                solver="fpt-value",
            )
    return None
