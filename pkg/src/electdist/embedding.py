"""2D maps of elections: stress-minimizing embeddings of a distance matrix.

Minimizes normalized Kruskal stress,

    stress(P) = sum_{i<j} (|p_i - p_j| - D_ij)^2 / sum_{i<j} D_ij^2,

by gradient descent from a seeded random start in the unit square.  Steps
that would increase stress are halved until they do not, so the recorded
stress trace never increases.  Deterministic for a given seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .pairwise import DistanceMatrix

_EPS = 1e-12
_MIN_STEP = 1e-18


@dataclass(frozen=True)
class Embedding:
    """Result of a 2D embedding.

    ``stress_history`` holds the stress after initialization and after each
    accepted iteration; it is non-increasing.  ``degenerate`` marks an
    all-zero distance matrix, embedded as coincident points with zero stress
    rather than treated as an error.
    """

    points: tuple[tuple[float, float], ...]
    stress: float
    stress_history: tuple[float, ...]
    degenerate: bool = False


def _as_distance_array(distances) -> np.ndarray:
    if isinstance(distances, DistanceMatrix):
        d = np.array(distances.values, dtype=float)
    else:
        d = np.array(distances, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise ValidationError(f"distance matrix must be square, got shape {d.shape}")
    if d.shape[0] < 1:
        raise ValidationError("distance matrix is empty")
    if not np.all(np.isfinite(d)):
        raise ValidationError("distance entries must be finite")
    if np.any(d < 0):
        raise ValidationError("distance entries are non-negative")
    if np.any(np.diagonal(d) != 0):
        raise ValidationError("diagonal entries must be zero")
    if not np.array_equal(d, d.T):
        raise ValidationError("distance matrix must be symmetric")
    return d


class StressEmbedding:
    """Gradient-descent stress minimizer with a fit/fit_transform surface.

    Parameters
    ----------
    iterations : int
        Maximum number of accepted descent iterations.
    seed : int
        Seed for the random initial layout.
    initial_step : float
        Starting gradient step; adapts upward on accepted steps and halves
        on rejected ones.

    Attributes (after fit)
    ----------------------
    embedding_ : ndarray of shape (n, 2)
    stress_ : float
    stress_history_ : tuple of float
    degenerate_ : bool
    """

    def __init__(self, iterations: int = 500, seed: int = 0, initial_step: float = 0.1):
        self.iterations = iterations
        self.seed = seed
        self.initial_step = initial_step

    def get_params(self) -> dict:
        return {
            "iterations": self.iterations,
            "seed": self.seed,
            "initial_step": self.initial_step,
        }

    def _stress(self, points: np.ndarray, d: np.ndarray, denom: float) -> float:
        diff = points[:, None, :] - points[None, :, :]
        dist = np.sqrt((diff * diff).sum(axis=2))
        gap = dist - d
        upper = np.triu_indices(d.shape[0], k=1)
        return float((gap[upper] ** 2).sum() / denom)

    def fit(self, distances) -> "StressEmbedding":
        d = _as_distance_array(distances)
        size = d.shape[0]
        upper = np.triu_indices(size, k=1)
        denom = float((d[upper] ** 2).sum())
        if denom == 0.0:
            points = np.zeros((size, 2), dtype=float)
            self.embedding_ = points
            self.stress_ = 0.0
            self.stress_history_ = (0.0,)
            self.degenerate_ = True
            return self

        rng = np.random.default_rng(self.seed)
        points = rng.random((size, 2))
        current = self._stress(points, d, denom)
        history = [current]
        step = float(self.initial_step)
        for _ in range(self.iterations):
            diff = points[:, None, :] - points[None, :, :]
            dist = np.sqrt((diff * diff).sum(axis=2))
            safe = np.where(dist > _EPS, dist, 1.0)
            coef = np.where(dist > _EPS, 2.0 * (dist - d) / safe / denom, 0.0)
            np.fill_diagonal(coef, 0.0)
            grad = (coef[:, :, None] * diff).sum(axis=1)
            moved = False
            while step >= _MIN_STEP:
                candidate = points - step * grad
                value = self._stress(candidate, d, denom)
                if value <= current:
                    points = candidate
                    current = value
                    step *= 1.05
                    moved = True
                    break
                step *= 0.5
            if not moved:
                break
            history.append(current)
        self.embedding_ = points
        self.stress_ = current
        self.stress_history_ = tuple(history)
        self.degenerate_ = False
        return self

    def fit_transform(self, distances) -> np.ndarray:
        return self.fit(distances).embedding_.copy()

    def result(self) -> Embedding:
        return Embedding(
            points=tuple((float(x), float(y)) for x, y in self.embedding_),
            stress=self.stress_,
            stress_history=self.stress_history_,
            degenerate=self.degenerate_,
        )


def embed_2d(distances, seed: int = 0, iterations: int = 500) -> Embedding:
    """Embed a distance matrix (DistanceMatrix or array-like) into 2D."""
    return StressEmbedding(iterations=iterations, seed=seed).fit(distances).result()
