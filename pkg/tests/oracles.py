"""Independent brute-force reference implementations.

Everything here recomputes from first principles: per-vote metrics by direct
pair/position counting, distances by full enumeration over matchings,
assignments by trying all permutations.  Nothing is shared with the package's
algorithms, so agreement is evidence, not tautology.
"""

from __future__ import annotations

import itertools
import random


def positions(ranking) -> dict:
    return {c: p for p, c in enumerate(ranking)}


def swap_by_pairs(u, v) -> int:
    pu, pv = positions(u), positions(v)
    total = 0
    cands = list(pu)
    for i, a in enumerate(cands):
        for b in cands[i + 1 :]:
            if (pu[a] < pu[b]) != (pv[a] < pv[b]):
                total += 1
    return total


def spear_direct(u, v) -> int:
    pu, pv = positions(u), positions(v)
    return sum(abs(pu[c] - pv[c]) for c in pu)


def disc_direct(u, v) -> int:
    return 0 if tuple(u) == tuple(v) else 1


METRIC_ORACLES = {
    "disc": disc_direct,
    "swap": swap_by_pairs,
    "spearman": spear_direct,
}


def induced_total(e_rankings, f_rankings, sigma, nu, metric: str) -> int:
    fn = METRIC_ORACLES[metric]
    total = 0
    for i, vote in enumerate(e_rankings):
        mapped = tuple(sigma[c] for c in vote)
        total += fn(mapped, f_rankings[nu[i]])
    return total


def joint_bruteforce(e_rankings, f_rankings, metric: str) -> int:
    """Minimum induced distance over every candidate and voter matching."""
    m = len(e_rankings[0])
    n = len(e_rankings)
    best = None
    for sigma in itertools.permutations(range(m)):
        for nu in itertools.permutations(range(n)):
            total = induced_total(e_rankings, f_rankings, sigma, nu, metric)
            if best is None or total < best:
                best = total
    return best


def conditional_voters_oracle(e_rankings, f_rankings, sigma, metric: str) -> int:
    """Minimum over voter matchings only, candidate matching fixed."""
    n = len(e_rankings)
    return min(
        induced_total(e_rankings, f_rankings, sigma, nu, metric)
        for nu in itertools.permutations(range(n))
    )


def conditional_candidates_spear_oracle(e_rankings, f_rankings, nu) -> int:
    """Minimum over candidate matchings only, voter matching fixed."""
    m = len(e_rankings[0])
    return min(
        induced_total(e_rankings, f_rankings, sigma, nu, "spearman")
        for sigma in itertools.permutations(range(m))
    )


def assignment_bruteforce(cost) -> tuple[int, tuple[int, ...]]:
    """Optimal assignment by trying all k! permutations; first optimum wins."""
    k = len(cost)
    best = None
    best_perm = None
    for perm in itertools.permutations(range(k)):
        total = sum(cost[i][perm[i]] for i in range(k))
        if best is None or total < best:
            best = total
            best_perm = perm
    return best, best_perm


def kemeny_oracle(rankings) -> tuple[int, tuple[int, ...]]:
    """Kemeny score as a plain sum of pair-counted swap distances."""
    m = len(rankings[0])
    best = None
    best_perm = None
    for perm in itertools.permutations(range(m)):
        total = sum(swap_by_pairs(v, perm) for v in rankings)
        if best is None or total < best:
            best = total
            best_perm = perm
    return best, best_perm


def is_prefix_interval_sp(ranking, axis) -> bool:
    """Single-peaked check by materializing every prefix as a set."""
    apos = positions(axis)
    spots = sorted(apos[c] for c in ranking)
    for size in range(1, len(ranking) + 1):
        prefix = sorted(apos[c] for c in ranking[:size])
        if prefix != list(range(prefix[0], prefix[0] + size)):
            return False
    return True


def random_ranking(rng: random.Random, m: int) -> tuple[int, ...]:
    return tuple(rng.sample(range(m), m))


def random_rankings(rng: random.Random, m: int, n: int) -> list[tuple[int, ...]]:
    return [random_ranking(rng, m) for _ in range(n)]
