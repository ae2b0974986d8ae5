"""Core data model: preference orders, elections, matchings, results.

An election is a pair (C, V): m candidates named 0..m-1 and an ordered list
of n votes, each a strict total order over the candidates.  All indexing is
0-based internally; positions reported through :meth:`PreferenceOrder.position_of`
are 1-based (the top-ranked candidate has position 1), matching the usual
convention in the literature and in the native file format.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    NotAPermutation,
    SizeMismatch,
    ValidationError,
    VoteLengthMismatch,
)


def _check_permutation(values: tuple[int, ...]) -> None:
    m = len(values)
    seen = [False] * m
    for x in values:
        if not isinstance(x, int) or isinstance(x, bool):
            raise NotAPermutation(f"entry {x!r} is not an int")
        if x < 0 or x >= m or seen[x]:
            raise NotAPermutation(
                f"{values} is not a permutation of 0..{m - 1}"
            )
        seen[x] = True


@dataclass(frozen=True)
class PreferenceOrder:
    """A strict total order over candidates 0..m-1.

    ``ranking[p]`` is the candidate ranked at 0-based position p, so
    ``ranking[0]`` is the most preferred candidate.
    """

    ranking: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranking", tuple(self.ranking))
        _check_permutation(self.ranking)
        if len(self.ranking) == 0:
            raise ValidationError("an order must rank at least one candidate")

    def __len__(self) -> int:
        return len(self.ranking)

    def __iter__(self):
        return iter(self.ranking)

    def position_of(self, candidate: int) -> int:
        """1-based position of ``candidate`` (top-ranked candidate is 1)."""
        return self.ranking.index(candidate) + 1

    def positions(self) -> tuple[int, ...]:
        """0-based position of every candidate, indexed by candidate."""
        pos = [0] * len(self.ranking)
        for p, c in enumerate(self.ranking):
            pos[c] = p
        return tuple(pos)


def _coerce_order(vote, index: int, num_candidates: int) -> PreferenceOrder:
    if not isinstance(vote, PreferenceOrder):
        try:
            vote = PreferenceOrder(tuple(vote))
        except NotAPermutation as exc:
            raise NotAPermutation(f"vote {index}: {exc}", vote_index=index) from None
    if len(vote) != num_candidates:
        raise VoteLengthMismatch(
            f"vote {index} ranks {len(vote)} candidates, election has {num_candidates}",
            vote_index=index,
        )
    return vote


@dataclass(frozen=True)
class Election:
    """An ordinal election: ``num_candidates`` candidates and a vote list.

    Votes may be passed as PreferenceOrder objects or as plain sequences of
    candidate indices; they are validated on construction.  ``candidate_names``
    is optional display metadata and never affects any distance.
    """

    num_candidates: int
    votes: tuple[PreferenceOrder, ...]
    candidate_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.num_candidates < 1:
            raise ValidationError("an election needs at least one candidate")
        votes = tuple(
            _coerce_order(v, i, self.num_candidates)
            for i, v in enumerate(self.votes)
        )
        object.__setattr__(self, "votes", votes)
        if len(votes) < 1:
            raise ValidationError("an election needs at least one vote")
        if self.candidate_names is not None:
            names = tuple(str(s) for s in self.candidate_names)
            if len(names) != self.num_candidates:
                raise SizeMismatch(
                    f"{len(names)} candidate names for {self.num_candidates} candidates"
                )
            object.__setattr__(self, "candidate_names", names)

    @property
    def num_voters(self) -> int:
        return len(self.votes)

    def rankings(self) -> tuple[tuple[int, ...], ...]:
        """The votes as raw ranking tuples."""
        return tuple(v.ranking for v in self.votes)


def validate_election(election: Election) -> None:
    """Re-check every structural invariant of ``election``.

    Election construction already validates, so this only matters for objects
    whose fields were built by hand.  Raises the same typed errors as the
    constructor and returns None on success.
    """
    Election(election.num_candidates, election.votes, election.candidate_names)


@dataclass(frozen=True)
class CandidateMatching:
    """A bijection between two equal-size candidate sets.

    ``mapping[c]`` is the image of source candidate c.
    """

    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        _check_permutation(self.mapping)

    def __len__(self) -> int:
        return len(self.mapping)

    def __getitem__(self, candidate: int) -> int:
        return self.mapping[candidate]

    def inverse(self) -> "CandidateMatching":
        inv = [0] * len(self.mapping)
        for c, image in enumerate(self.mapping):
            inv[image] = c
        return CandidateMatching(tuple(inv))

    @classmethod
    def identity(cls, size: int) -> "CandidateMatching":
        return cls(tuple(range(size)))

    @classmethod
    def sending(cls, source: PreferenceOrder, target: PreferenceOrder) -> "CandidateMatching":
        """The unique bijection mapping ``source`` onto ``target`` position by position."""
        if len(source) != len(target):
            raise SizeMismatch("orders have different lengths")
        mapping = [0] * len(source)
        for p in range(len(source)):
            mapping[source.ranking[p]] = target.ranking[p]
        return cls(tuple(mapping))


@dataclass(frozen=True)
class VoterMatching:
    """A bijection between two equal-size vote lists.

    ``mapping[i]`` is the index of the vote matched to source vote i.
    """

    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        _check_permutation(self.mapping)

    def __len__(self) -> int:
        return len(self.mapping)

    def __getitem__(self, voter: int) -> int:
        return self.mapping[voter]

    def inverse(self) -> "VoterMatching":
        inv = [0] * len(self.mapping)
        for i, image in enumerate(self.mapping):
            inv[image] = i
        return VoterMatching(tuple(inv))

    @classmethod
    def identity(cls, size: int) -> "VoterMatching":
        return cls(tuple(range(size)))


def apply_candidate_matching(election: Election, matching: CandidateMatching) -> Election:
    """Relabel every vote of ``election`` through ``matching``.

    Vote order is preserved; candidate names are dropped since they describe
    the source labels.
    """
    if len(matching) != election.num_candidates:
        raise SizeMismatch(
            f"matching over {len(matching)} candidates, election has {election.num_candidates}"
        )
    mp = matching.mapping
    votes = tuple(
        PreferenceOrder(tuple(mp[c] for c in v.ranking)) for v in election.votes
    )
    return Election(election.num_candidates, votes)


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a distance computation, with its witness matchings.

    ``value`` always equals the distance induced by (candidate_matching,
    voter_matching) under the metric the solver was run with; solvers assert
    this before returning.  ``exact`` marks a proven optimum, in which case
    ``guarantee`` is None; otherwise ``guarantee`` is the certified
    approximation ratio (value <= guarantee * optimum).  ``solver`` names the
    algorithm that produced the result.
    """

    value: int
    candidate_matching: CandidateMatching
    voter_matching: VoterMatching
    exact: bool
    solver: str
    guarantee: Fraction | None = None

    def __post_init__(self):
        if self.value < 0:
            raise ValidationError("distance values are non-negative")
        if self.exact and self.guarantee is not None:
            raise ValidationError("an exact result carries no approximation ratio")
        if self.guarantee is not None:
            object.__setattr__(self, "guarantee", Fraction(self.guarantee))
