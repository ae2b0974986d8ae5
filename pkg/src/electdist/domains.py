"""Structured vote domains and random election models.

Single-peakedness is relative to an axis (a societal ordering of the
candidates): a vote is single-peaked when every prefix of it forms a
contiguous interval of the axis.  Single-crossingness is a property of a
vote *sequence*: each candidate pair's relative ranking changes at most once
along the sequence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainTooLarge, EmptyDomain, SizeMismatch, ValidationError
from .model import Election, PreferenceOrder, _check_permutation

MAX_AXIS_FOR_DOMAIN = 20

MODEL_ALIASES = {
    "impartial_culture": "impartial_culture",
    "ic": "impartial_culture",
    "identity": "identity",
    "id": "identity",
    "single_peaked": "single_peaked",
    "sp": "single_peaked",
}


@dataclass(frozen=True)
class Axis:
    """A left-to-right ordering of candidates 0..m-1."""

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        _check_permutation(self.order)

    def __len__(self) -> int:
        return len(self.order)

    def positions(self) -> tuple[int, ...]:
        pos = [0] * len(self.order)
        for p, c in enumerate(self.order):
            pos[c] = p
        return tuple(pos)

    @classmethod
    def identity(cls, size: int) -> "Axis":
        return cls(tuple(range(size)))


@dataclass(frozen=True)
class Domain:
    """A set of strict orders over a common candidate set."""

    num_candidates: int
    orders: frozenset[PreferenceOrder]

    def __post_init__(self):
        orders = frozenset(
            o if isinstance(o, PreferenceOrder) else PreferenceOrder(tuple(o))
            for o in self.orders
        )
        for o in orders:
            if len(o) != self.num_candidates:
                raise SizeMismatch(
                    f"order of length {len(o)} in a domain over {self.num_candidates} candidates"
                )
        object.__setattr__(self, "orders", orders)

    def __len__(self) -> int:
        return len(self.orders)

    def __contains__(self, order) -> bool:
        if not isinstance(order, PreferenceOrder):
            order = PreferenceOrder(tuple(order))
        return order in self.orders


def maximal_single_peaked_domain(axis: Axis) -> Domain:
    """All orders single-peaked with respect to ``axis``.

    Built back to front: the last-ranked candidate must sit at an end of the
    axis, and each earlier position takes an end of the remaining interval,
    so the domain has exactly 2^(m-1) orders.
    """
    m = len(axis)
    if m > MAX_AXIS_FOR_DOMAIN:
        raise DomainTooLarge(
            f"{m} candidates would give 2^{m - 1} orders (limit is {MAX_AXIS_FOR_DOMAIN})"
        )
    seq = axis.order
    orders = []
    for mask in range(1 << (m - 1)):
        lo, hi = 0, m - 1
        rev = []
        for t in range(m - 1):
            if (mask >> t) & 1:
                rev.append(seq[hi])
                hi -= 1
            else:
                rev.append(seq[lo])
                lo += 1
        rev.append(seq[lo])
        orders.append(PreferenceOrder(tuple(reversed(rev))))
    return Domain(m, frozenset(orders))


def _as_rankings(votes) -> list[tuple[int, ...]]:
    if isinstance(votes, Election):
        return list(votes.rankings())
    if isinstance(votes, Domain):
        return sorted(o.ranking for o in votes.orders)
    out = []
    for v in votes:
        if not isinstance(v, PreferenceOrder):
            v = PreferenceOrder(tuple(v))
        out.append(v.ranking)
    return out


def is_single_peaked(votes, axis: Axis) -> bool:
    """Whether every given order is single-peaked with respect to ``axis``.

    ``votes`` may be a Domain, an Election, or an iterable of orders.
    """
    rankings = _as_rankings(votes)
    pos = axis.positions()
    m = len(axis)
    for r in rankings:
        if len(r) != m:
            raise SizeMismatch(
                f"order of length {len(r)} against an axis of length {m}"
            )
        lo = hi = pos[r[0]]
        for count, c in enumerate(r[1:], start=2):
            p = pos[c]
            if p < lo:
                lo = p
            elif p > hi:
                hi = p
            if hi - lo + 1 != count:
                return False
    return True


def is_single_crossing_order(votes) -> bool:
    """Whether the vote sequence, in the order given, is single-crossing:
    each candidate pair's relative ranking flips at most once along it.

    ``votes`` may be an Election or a sequence of orders; the sequence order
    is the one tested.
    """
    rankings = _as_rankings(votes)
    if not rankings:
        return True
    m = len(rankings[0])
    positions = []
    for r in rankings:
        if len(r) != m:
            raise SizeMismatch("orders of mixed lengths")
        pos = [0] * m
        for p, c in enumerate(r):
            pos[c] = p
        positions.append(pos)
    for a in range(m):
        for b in range(a + 1, m):
            flips = 0
            prefers_a = positions[0][a] < positions[0][b]
            for pos in positions[1:]:
                now = pos[a] < pos[b]
                if now != prefers_a:
                    flips += 1
                    prefers_a = now
                    if flips > 1:
                        return False
    return True


def domain_as_election(domain: Domain) -> Election:
    """The election whose votes are the domain's orders, sorted
    lexicographically (one voter per order)."""
    if len(domain) == 0:
        raise EmptyDomain("cannot build an election from an empty domain")
    votes = tuple(
        PreferenceOrder(r) for r in sorted(o.ranking for o in domain.orders)
    )
    return Election(domain.num_candidates, votes)


def sample_election(
    model: str,
    num_candidates: int,
    num_voters: int,
    seed: int,
    axis: Axis | None = None,
) -> Election:
    """Draw a random election, deterministically for a given seed.

    Models: ``impartial_culture`` (every vote an independent uniform order),
    ``identity`` (all votes 0 < 1 < ... < m-1), ``single_peaked`` (votes
    uniform over the maximal single-peaked domain of ``axis``, default the
    identity axis).  Short aliases ic / id / sp are accepted.
    """
    try:
        canonical = MODEL_ALIASES[model.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown model {model!r}") from None
    if num_candidates < 1 or num_voters < 1:
        raise ValidationError("need at least one candidate and one voter")
    rng = random.Random(seed)
    m = num_candidates
    if canonical == "impartial_culture":
        votes = []
        for _ in range(num_voters):
            r = list(range(m))
            rng.shuffle(r)
            votes.append(PreferenceOrder(tuple(r)))
        return Election(m, tuple(votes))
    if canonical == "identity":
        ident = PreferenceOrder(tuple(range(m)))
        return Election(m, tuple([ident] * num_voters))
    if axis is None:
        axis = Axis.identity(m)
    if len(axis) != m:
        raise SizeMismatch(f"axis over {len(axis)} candidates, asked for {m}")
    pool = sorted(o.ranking for o in maximal_single_peaked_domain(axis).orders)
    votes = [PreferenceOrder(pool[rng.randrange(len(pool))]) for _ in range(num_voters)]
    return Election(m, tuple(votes))


def kemeny_reduction_instance(election: Election) -> tuple[Election, Election]:
    """The pair of elections whose swap isomorphic distance equals the Kemeny
    score of ``election``: the election itself, and a unanimous election of
    the same shape (every vote the identity order)."""
    ident = PreferenceOrder(tuple(range(election.num_candidates)))
    unanimous = Election(
        election.num_candidates, tuple([ident] * election.num_voters)
    )
    return election, unanimous
