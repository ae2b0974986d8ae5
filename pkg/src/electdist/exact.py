"""Exact solvers for isomorphic distances.

Fixing one side of the (candidate matching, voter matching) pair makes the
other side a polynomial assignment problem; those conditional optima are
solved here.  The unrestricted problem is solved by branch-and-bound over
candidate matchings (any metric) or enumeration over voter matchings
(Spearman), both exponential and guarded by size caps.  The Kemeny score of
an election is also computed directly, for cross-checking its reduction to
the swap isomorphic distance.
"""

from __future__ import annotations

import itertools

import numpy as np

from .assignment import min_cost_perfect_matching
from .errors import CapExceeded, SizeMismatch
from .metrics import MetricKind, _count_inversions, induced_distance
from .model import (
    CandidateMatching,
    DistanceResult,
    Election,
    PreferenceOrder,
    VoterMatching,
)

DEFAULT_MAX_CANDIDATES = 10
DEFAULT_MAX_VOTERS = 8
DEFAULT_KEMENY_MAX_CANDIDATES = 8

_NUMPY_MIN_CELLS = 4096


def _require_same_shape(first: Election, second: Election) -> None:
    if first.num_candidates != second.num_candidates:
        raise SizeMismatch("elections have different candidate counts")
    if first.num_voters != second.num_voters:
        raise SizeMismatch("elections have different voter counts")


def _pair_cost_matrix(
    first: Election, second: Election, matching: CandidateMatching, metric: MetricKind
) -> list[list[int]]:
    """n x n matrix of vote distances after relabeling ``first`` through
    ``matching``."""
    mp = matching.mapping
    mapped = [tuple(mp[c] for c in v.ranking) for v in first.votes]
    targets = second.rankings()
    n = len(mapped)
    if metric is MetricKind.DISCRETE:
        return [[0 if r == t else 1 for t in targets] for r in mapped]
    if metric is MetricKind.SWAP:
        target_pos = [v.positions() for v in second.votes]
        return [
            [_count_inversions([pos[c] for c in r]) for pos in target_pos]
            for r in mapped
        ]
    # Spearman: |position difference| summed per candidate, vectorized when
    # the matrix is big enough to amortize numpy overhead.
    m = first.num_candidates
    mapped_pos = []
    for r in mapped:
        pos = [0] * m
        for p, c in enumerate(r):
            pos[c] = p
        mapped_pos.append(pos)
    target_pos = [list(v.positions()) for v in second.votes]
    if n * n * m >= _NUMPY_MIN_CELLS:
        a = np.array(mapped_pos, dtype=np.int64)
        b = np.array(target_pos, dtype=np.int64)
        cost = np.abs(a[:, None, :] - b[None, :, :]).sum(axis=2)
        return cost.tolist()
    return [
        [sum(abs(pa[c] - pb[c]) for c in range(m)) for pb in target_pos]
        for pa in mapped_pos
    ]


def distance_with_candidate_matching(
    first: Election,
    second: Election,
    matching: CandidateMatching,
    metric: MetricKind,
) -> DistanceResult:
    """Optimal voter matching for a fixed candidate matching.

    Exact for the restricted problem: the value is the minimum induced
    distance over all voter matchings, found by one assignment solve on the
    per-vote distance matrix.
    """
    _require_same_shape(first, second)
    if len(matching) != first.num_candidates:
        raise SizeMismatch("candidate matching has the wrong size")
    cost = _pair_cost_matrix(first, second, matching, metric)
    assignment, total = min_cost_perfect_matching(cost)
    nu = VoterMatching(assignment)
    result = DistanceResult(
        value=total,
        candidate_matching=matching,
        voter_matching=nu,
        exact=True,
        solver="assignment-fixed-candidates",
    )
    assert induced_distance(first, second, matching, nu, metric) == total
    return result


def spearman_with_voter_matching(
    first: Election, second: Election, matching: VoterMatching
) -> DistanceResult:
    """Optimal candidate matching for a fixed voter matching, Spearman metric.

    Spearman cost separates per candidate pair: sending candidate c to c'
    costs sum_i |pos_i(c) - pos_of_partner(c')| independently of the rest of
    the matching, so one m x m assignment solve is exact.  (The swap metric
    does not separate this way, which is why only Spearman gets this solver.)
    """
    _require_same_shape(first, second)
    if len(matching) != first.num_voters:
        raise SizeMismatch("voter matching has the wrong size")
    m = first.num_candidates
    n = first.num_voters
    first_pos = [v.positions() for v in first.votes]
    second_pos = [second.votes[matching[i]].positions() for i in range(n)]
    if n * m * m >= _NUMPY_MIN_CELLS:
        a = np.array(first_pos, dtype=np.int64)
        b = np.array(second_pos, dtype=np.int64)
        w = np.abs(a[:, :, None] - b[:, None, :]).sum(axis=0)
        cost: list[list[int]] | np.ndarray = w
    else:
        cost = [
            [
                sum(abs(first_pos[i][c] - second_pos[i][d]) for i in range(n))
                for d in range(m)
            ]
            for c in range(m)
        ]
    assignment, total = min_cost_perfect_matching(cost)
    sigma = CandidateMatching(assignment)
    result = DistanceResult(
        value=total,
        candidate_matching=sigma,
        voter_matching=matching,
        exact=True,
        solver="assignment-fixed-voters",
    )
    assert induced_distance(first, second, sigma, matching, MetricKind.SPEARMAN) == total
    return result


def best_pair_induced(
    first: Election, second: Election, metric: MetricKind
) -> DistanceResult:
    """Minimum over the n^2 candidate matchings induced by mapping one vote
    of ``first`` exactly onto one vote of ``second``.

    The workhorse shared by the budgeted deciders and the approximation
    routines.  When the true distance is below the voter count, some matched
    pair of an optimal solution is at distance zero and pins the candidate
    matching, so this scan is exact in that regime; in general it is an upper
    bound.  Scans pairs in index order, keeping the first minimum.
    """
    _require_same_shape(first, second)
    best: DistanceResult | None = None
    for u in first.votes:
        for w in second.votes:
            sigma = CandidateMatching.sending(u, w)
            candidate = distance_with_candidate_matching(first, second, sigma, metric)
            if best is None or candidate.value < best.value:
                best = candidate
                if best.value == 0:
                    return best
    assert best is not None
    return best


def exact_distance_brute_candidates(
    first: Election,
    second: Election,
    metric: MetricKind,
    *,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> DistanceResult:
    """Exact isomorphic distance by branch-and-bound over candidate matchings.

    Works for every metric.  Explores partial candidate matchings in
    lexicographic order, accumulating per-vote-pair partial costs; a subtree
    is pruned when the row-minimum lower bound already reaches the incumbent.
    Each complete matching is finished with one assignment solve over voter
    matchings, so the result is a true optimum with a deterministic witness
    (the lexicographically first optimal candidate matching).

    Exponential in the candidate count; refuses m > ``max_candidates``
    (default 10) unless the cap is raised explicitly.
    """
    _require_same_shape(first, second)
    m = first.num_candidates
    n = first.num_voters
    if m > max_candidates:
        raise CapExceeded(
            f"{m} candidates over the cap of {max_candidates}; "
            "raise max_candidates to force the search"
        )
    pos_e = [v.positions() for v in first.votes]
    pos_f = [v.positions() for v in second.votes]
    is_swap = metric is MetricKind.SWAP
    is_disc = metric is MetricKind.DISCRETE

    partial = [[0] * n for _ in range(n)]
    sigma = [-1] * m
    used = [False] * m
    assigned: list[int] = []

    best_value: int | None = None
    best_sigma: tuple[int, ...] | None = None
    best_nu: tuple[int, ...] | None = None

    def leaf_cost() -> list[list[int]]:
        if is_disc:
            return [[1 if x else 0 for x in row] for row in partial]
        return [row[:] for row in partial]

    def lower_bound() -> int:
        if is_disc:
            return sum(1 if all(x > 0 for x in row) else 0 for row in partial)
        return sum(min(row) for row in partial)

    def search(depth: int) -> None:
        nonlocal best_value, best_sigma, best_nu
        if best_value == 0:
            return
        if depth == m:
            assignment, total = min_cost_perfect_matching(leaf_cost())
            if best_value is None or total < best_value:
                best_value = total
                best_sigma = tuple(sigma)
                best_nu = tuple(assignment)
            return
        for image in range(m):
            if best_value == 0:
                break
            if used[image]:
                continue
            delta = [[0] * n for _ in range(n)]
            for i in range(n):
                pe = pos_e[i]
                pe_t = pe[depth]
                di = delta[i]
                row = partial[i]
                for j in range(n):
                    pf = pos_f[j]
                    pf_t = pf[image]
                    if is_swap:
                        d = 0
                        for s in assigned:
                            if (pe[s] < pe_t) != (pf[sigma[s]] < pf_t):
                                d += 1
                    elif is_disc:
                        d = 1 if pe_t != pf_t else 0
                    else:
                        d = abs(pe_t - pf_t)
                    di[j] = d
                    row[j] += d
            sigma[depth] = image
            used[image] = True
            assigned.append(depth)
            if best_value is None or lower_bound() < best_value:
                search(depth + 1)
            assigned.pop()
            used[image] = False
            sigma[depth] = -1
            for i in range(n):
                row = partial[i]
                di = delta[i]
                for j in range(n):
                    row[j] -= di[j]

    search(0)
    assert best_value is not None and best_sigma is not None and best_nu is not None
    sigma_m = CandidateMatching(best_sigma)
    nu_m = VoterMatching(best_nu)
    result = DistanceResult(
        value=best_value,
        candidate_matching=sigma_m,
        voter_matching=nu_m,
        exact=True,
        solver="brute-candidates",
    )
    assert induced_distance(first, second, sigma_m, nu_m, metric) == best_value
    return result


def exact_spearman_brute_voters(
    first: Election,
    second: Election,
    *,
    max_voters: int = DEFAULT_MAX_VOTERS,
) -> DistanceResult:
    """Exact Spearman isomorphic distance by enumerating voter matchings.

    Each of the n! voter matchings is finished optimally with one candidate
    assignment solve.  Refuses n > ``max_voters`` (default 8) unless the cap
    is raised explicitly.
    """
    _require_same_shape(first, second)
    n = first.num_voters
    if n > max_voters:
        raise CapExceeded(
            f"{n} voters over the cap of {max_voters}; "
            "raise max_voters to force the enumeration"
        )
    best: DistanceResult | None = None
    for perm in itertools.permutations(range(n)):
        candidate = spearman_with_voter_matching(first, second, VoterMatching(perm))
        if best is None or candidate.value < best.value:
            best = candidate
            if best.value == 0:
                break
    assert best is not None
    return DistanceResult(
        value=best.value,
        candidate_matching=best.candidate_matching,
        voter_matching=best.voter_matching,
        exact=True,
        solver="brute-voters-spearman",
    )


def kemeny_score_brute(
    election: Election,
    *,
    max_candidates: int = DEFAULT_KEMENY_MAX_CANDIDATES,
) -> tuple[int, PreferenceOrder]:
    """Kemeny score and an optimal consensus ranking, by full enumeration.

    The score of a ranking is the number of (vote, candidate pair) instances
    on which the ranking disagrees with the vote; equivalently the sum of
    swap distances from the ranking to all votes.  Returns the
    lexicographically smallest optimal ranking.  Refuses
    m > ``max_candidates`` (default 8) unless the cap is raised.
    """
    m = election.num_candidates
    if m > max_candidates:
        raise CapExceeded(
            f"{m} candidates over the cap of {max_candidates}; "
            "raise max_candidates to force the enumeration"
        )
    prefer = [[0] * m for _ in range(m)]
    for vote in election.votes:
        r = vote.ranking
        for s in range(m):
            for t in range(s + 1, m):
                prefer[r[s]][r[t]] += 1
    best_score: int | None = None
    best_ranking: tuple[int, ...] | None = None
    for perm in itertools.permutations(range(m)):
        score = 0
        for s in range(m):
            ps = perm[s]
            for t in range(s + 1, m):
                score += prefer[perm[t]][ps]
        if best_score is None or score < best_score:
            best_score = score
            best_ranking = perm
    assert best_score is not None and best_ranking is not None
    return best_score, PreferenceOrder(best_ranking)
