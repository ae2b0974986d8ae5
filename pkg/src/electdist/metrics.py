"""Distances between individual votes, and their lifting to elections.

Three metrics over strict orders of the same length m:

* discrete: 0 if the orders are identical, else 1.
* swap: number of discordant candidate pairs (Kendall tau distance), which
  equals the minimum number of adjacent transpositions turning one order
  into the other.  Bounded by m(m-1)/2.
* spearman: sum over candidates of |position difference| (Spearman footrule).
  Always even, bounded by floor(m^2 / 2).
"""

from __future__ import annotations

from enum import Enum

from .errors import SizeMismatch
from .model import CandidateMatching, Election, PreferenceOrder, VoterMatching


class MetricKind(Enum):
    DISCRETE = "disc"
    SWAP = "swap"
    SPEARMAN = "spearman"

    @classmethod
    def from_name(cls, name: str) -> "MetricKind":
        key = name.strip().lower()
        for kind in cls:
            if key == kind.value:
                return kind
        aliases = {"discrete": cls.DISCRETE, "kendall": cls.SWAP, "spear": cls.SPEARMAN}
        if key in aliases:
            return aliases[key]
        raise ValueError(f"unknown metric {name!r}")


def _require_same_length(u: PreferenceOrder, v: PreferenceOrder) -> None:
    if len(u) != len(v):
        raise SizeMismatch(f"orders rank {len(u)} vs {len(v)} candidates")


def _positions(ranking: tuple[int, ...]) -> list[int]:
    pos = [0] * len(ranking)
    for p, c in enumerate(ranking):
        pos[c] = p
    return pos


def _count_inversions(seq: list[int]) -> int:
    # Merge-sort inversion count, O(m log m).
    n = len(seq)
    if n < 2:
        return 0
    buf = list(seq)
    tmp = [0] * n
    total = 0
    width = 1
    while width < n:
        for lo in range(0, n - width, 2 * width):
            mid = lo + width
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if buf[i] <= buf[j]:
                    tmp[k] = buf[i]
                    i += 1
                else:
                    tmp[k] = buf[j]
                    total += mid - i
                    j += 1
                k += 1
            tmp[k:hi] = buf[i:mid] if i < mid else buf[j:hi]
            buf[lo:hi] = tmp[lo:hi]
        width *= 2
    return total


def _swap_raw(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    # Rank v's candidates in the order u lists them; inversions of that
    # sequence are exactly the discordant pairs.
    pos_v = _positions(v)
    return _count_inversions([pos_v[c] for c in u])


def _spear_raw(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    pos_v = _positions(v)
    return sum(abs(p - pos_v[c]) for p, c in enumerate(u))


def d_disc(u: PreferenceOrder, v: PreferenceOrder) -> int:
    """Discrete distance: 0 iff the orders are identical, else 1."""
    _require_same_length(u, v)
    return 0 if u.ranking == v.ranking else 1


def d_swap(u: PreferenceOrder, v: PreferenceOrder) -> int:
    """Swap (Kendall tau) distance: number of discordant candidate pairs."""
    _require_same_length(u, v)
    return _swap_raw(u.ranking, v.ranking)


def d_spear(u: PreferenceOrder, v: PreferenceOrder) -> int:
    """Spearman footrule: sum of absolute position differences."""
    _require_same_length(u, v)
    return _spear_raw(u.ranking, v.ranking)


def vote_distance(metric: MetricKind, u: PreferenceOrder, v: PreferenceOrder) -> int:
    if metric is MetricKind.DISCRETE:
        return d_disc(u, v)
    if metric is MetricKind.SWAP:
        return d_swap(u, v)
    if metric is MetricKind.SPEARMAN:
        return d_spear(u, v)
    raise ValueError(f"unknown metric {metric!r}")


def induced_distance(
    first: Election,
    second: Election,
    candidate_matching: CandidateMatching,
    voter_matching: VoterMatching,
    metric: MetricKind,
) -> int:
    """Total vote distance under a fixed pair of matchings.

    Relabels every vote of ``first`` through ``candidate_matching`` and sums
    the per-vote distance to its ``voter_matching`` partner in ``second``.
    This is the quantity every isomorphic-distance solver minimizes.
    """
    if first.num_candidates != second.num_candidates:
        raise SizeMismatch("elections have different candidate counts")
    if first.num_voters != second.num_voters:
        raise SizeMismatch("elections have different voter counts")
    if len(candidate_matching) != first.num_candidates:
        raise SizeMismatch("candidate matching has the wrong size")
    if len(voter_matching) != first.num_voters:
        raise SizeMismatch("voter matching has the wrong size")
    mp = candidate_matching.mapping
    total = 0
    for i, vote in enumerate(first.votes):
        mapped = tuple(mp[c] for c in vote.ranking)
        other = second.votes[voter_matching[i]].ranking
        if metric is MetricKind.DISCRETE:
            total += 0 if mapped == other else 1
        elif metric is MetricKind.SWAP:
            total += _swap_raw(mapped, other)
        else:
            total += _spear_raw(mapped, other)
    return total
