"""Election isomorphism and the exact discrete isomorphic distance.

Two elections are isomorphic when some relabeling of candidates plus some
re-pairing of voters makes them identical.  Both checks here exploit the same
fact: if a candidate bijection works at all, it must map the first vote of one
election onto some vote of the other, so only n bijections need to be tried,
each checked by comparing sorted vote lists.
"""

from __future__ import annotations

from collections import Counter, deque

import numpy as np

from .errors import SizeMismatch
from .metrics import MetricKind, induced_distance
from .model import CandidateMatching, DistanceResult, Election, PreferenceOrder, VoterMatching

_DISC_NUMPY_MIN_VOTERS = 16


def _require_same_shape(first: Election, second: Election) -> None:
    if first.num_candidates != second.num_candidates:
        raise SizeMismatch("elections have different candidate counts")
    if first.num_voters != second.num_voters:
        raise SizeMismatch("elections have different voter counts")


def _greedy_voter_matching(
    mapped: list[tuple[int, ...]], targets: tuple[tuple[int, ...], ...]
) -> VoterMatching:
    """Pair equal votes first (lowest indices win), then zip the leftovers."""
    pool: dict[tuple[int, ...], deque[int]] = {}
    for j, t in enumerate(targets):
        pool.setdefault(t, deque()).append(j)
    nu = [-1] * len(mapped)
    unmatched = []
    for i, r in enumerate(mapped):
        bucket = pool.get(r)
        if bucket:
            nu[i] = bucket.popleft()
        else:
            unmatched.append(i)
    free = sorted(j for bucket in pool.values() for j in bucket)
    for i, j in zip(unmatched, free):
        nu[i] = j
    return VoterMatching(tuple(nu))


def find_isomorphism(
    first: Election, second: Election
) -> tuple[CandidateMatching, VoterMatching] | None:
    """A witness (candidate matching, voter matching) if the elections are
    isomorphic, else None.

    Deterministic: tries the bijections sending ``first``'s initial vote onto
    each vote of ``second`` in index order and returns the first that works.
    """
    _require_same_shape(first, second)
    target_sorted = sorted(second.rankings())
    v1 = first.votes[0]
    for w in second.votes:
        sigma = CandidateMatching.sending(v1, w)
        mp = sigma.mapping
        mapped = [tuple(mp[c] for c in v.ranking) for v in first.votes]
        if sorted(mapped) == target_sorted:
            nu = _greedy_voter_matching(mapped, second.rankings())
            return sigma, nu
    return None


def are_isomorphic(first: Election, second: Election) -> bool:
    """Whether some candidate relabeling plus voter re-pairing equates them."""
    return find_isomorphism(first, second) is not None


def canonical_form(election: Election) -> Election:
    """A canonical representative of the election's isomorphism class.

    Two elections are isomorphic iff their canonical forms are equal.  For
    each vote, relabel candidates so that vote becomes 0 < 1 < ... < m-1 and
    sort the resulting vote list; the lexicographically smallest outcome over
    all choices of pivot vote is the canonical form.  Idempotent.
    """
    best: list[tuple[int, ...]] | None = None
    for pivot in election.votes:
        relabel = [0] * election.num_candidates
        for p, c in enumerate(pivot.ranking):
            relabel[c] = p
        mapped = sorted(tuple(relabel[c] for c in v.ranking) for v in election.votes)
        if best is None or mapped < best:
            best = mapped
    assert best is not None
    return Election(
        election.num_candidates, tuple(PreferenceOrder(r) for r in best)
    )


def _relative_order_profiles(
    election: Election, intern: dict[tuple[int, ...], int]
) -> list[Counter]:
    """For each vote i, the multiset (as Counter of interned ids) of relative
    orders of all votes seen through vote i's relabeling."""
    rankings = election.rankings()
    positions = [v.positions() for v in election.votes]
    profiles = []
    for pos in positions:
        counter: Counter = Counter()
        for r in rankings:
            key = tuple(pos[c] for c in r)
            code = intern.setdefault(key, len(intern))
            counter[code] += 1
        profiles.append(counter)
    return profiles


def exact_discrete_distance(first: Election, second: Election) -> DistanceResult:
    """Exact isomorphic distance under the discrete vote metric.

    Some optimal candidate matching maps vote 1 of ``first`` onto some vote of
    ``second`` exactly or can be replaced by one that pairs at least one vote
    exactly (any matched pair at distance 0 induces such a bijection; if all
    pairs differ the value n is matched by any bijection).  So it suffices to
    scan the n^2 pair-induced bijections.  For each one, the optimal voter
    matching keeps as many exactly-equal votes as possible, which is the
    multiset intersection of relative-order profiles; no assignment solve is
    needed.
    """
    _require_same_shape(first, second)
    n = first.num_voters
    intern: dict[tuple[int, ...], int] = {}
    left = _relative_order_profiles(first, intern)
    right = _relative_order_profiles(second, intern)

    best_i = best_j = 0
    if n >= _DISC_NUMPY_MIN_VOTERS:
        width = len(intern)
        a = np.zeros((n, width), dtype=np.int64)
        b = np.zeros((n, width), dtype=np.int64)
        for i, counter in enumerate(left):
            for code, cnt in counter.items():
                a[i, code] = cnt
        for j, counter in enumerate(right):
            for code, cnt in counter.items():
                b[j, code] = cnt
        common = np.minimum(a[:, None, :], b[None, :, :]).sum(axis=2)
        flat = int(np.argmax(common))
        best_i, best_j = divmod(flat, n)
        best_common = int(common[best_i, best_j])
    else:
        best_common = -1
        for i, ci in enumerate(left):
            for j, cj in enumerate(right):
                if len(cj) < len(ci):
                    ci_, cj_ = cj, ci
                else:
                    ci_, cj_ = ci, cj
                shared = sum(min(cnt, cj_[code]) for code, cnt in ci_.items() if code in cj_)
                if shared > best_common:
                    best_common = shared
                    best_i, best_j = i, j

    value = n - best_common
    sigma = CandidateMatching.sending(first.votes[best_i], second.votes[best_j])
    mp = sigma.mapping
    mapped = [tuple(mp[c] for c in v.ranking) for v in first.votes]
    nu = _greedy_voter_matching(mapped, second.rankings())
    result = DistanceResult(
        value=value,
        candidate_matching=sigma,
        voter_matching=nu,
        exact=True,
        solver="disc-exact",
    )
    assert induced_distance(first, second, sigma, nu, MetricKind.DISCRETE) == value
    return result
