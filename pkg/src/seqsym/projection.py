"""Numeric kernels behind the analytics products: small dense PCA, seeded
overlap removal for scatter layouts, and deterministic 1-D k-means.

All three are seeded and free of hidden global state so that identical inputs
produce byte-identical outputs across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PCAResult:
    scores: np.ndarray             # (n, k) projections, columns = components
    components: np.ndarray         # (k, d) orthonormal rows
    explained_variance: np.ndarray  # (k,) non-increasing


def pca_projection(matrix: np.ndarray) -> PCAResult:
    """PCA of the rows of `matrix` after centering by column means.

    Computed via SVD of the centered matrix. Component signs are normalized so
    each component's largest-magnitude loading is positive, which keeps layouts
    stable across platforms.
    """
    X = np.asarray(matrix, dtype=float)
    if X.ndim != 2 or X.shape[0] < 1:
        raise ValueError("matrix must be 2-D with at least one row")
    n = X.shape[0]
    centered = X - X.mean(axis=0)
    U, s, Vt = np.linalg.svd(centered, full_matrices=False)
    for k in range(Vt.shape[0]):
        pivot = int(np.argmax(np.abs(Vt[k])))
        if Vt[k, pivot] < 0:
            Vt[k] = -Vt[k]
            U[:, k] = -U[:, k]
    scores = U * s
    variance = s**2 / (n - 1) if n > 1 else np.zeros_like(s)
    return PCAResult(scores=scores, components=Vt, explained_variance=variance)


def pca_scores_2d(matrix: np.ndarray) -> np.ndarray:
    """First two PCA score columns, zero-padded when fewer components exist."""
    scores = pca_projection(matrix).scores
    out = np.zeros((scores.shape[0], 2))
    k = min(2, scores.shape[1])
    out[:, :k] = scores[:, :k]
    return out


def default_collision_diameter(coords: np.ndarray) -> float:
    """2% of the larger coordinate span; floor keeps coincident inputs separable."""
    coords = np.asarray(coords, dtype=float)
    if coords.size == 0:
        return 1e-6
    span = float(np.max(np.ptp(coords, axis=0))) if len(coords) > 1 else 0.0
    return max(0.02 * span, 1e-6)


def resolve_collisions(
    coords: np.ndarray,
    diameter: float,
    seed: int = 0,
    max_sweeps: int = 300,
) -> np.ndarray:
    """Push overlapping points apart until every pairwise distance >= diameter.

    Gauss-Seidel sweeps in index order: each violating pair is pushed apart
    symmetrically along its separation vector (seeded random direction for
    coincident points), with a tiny overshoot so the post-condition holds under
    floating-point comparison. Repulsion applies only on overlap.
    """
    points = np.array(coords, dtype=float)
    n = len(points)
    if n < 2 or diameter <= 0:
        return points
    rng = np.random.default_rng(seed)
    target = diameter * (1.0 + 1e-9)

    for _ in range(max_sweeps):
        deltas = points[:, None, :] - points[None, :, :]
        sq = np.einsum("ijk,ijk->ij", deltas, deltas)
        ii, jj = np.triu_indices(n, k=1)
        violating = sq[ii, jj] < diameter * diameter
        if not violating.any():
            break
        for i, j in zip(ii[violating], jj[violating]):
            delta = points[j] - points[i]
            dist = float(np.hypot(delta[0], delta[1]))
            if dist >= target:
                continue  # an earlier push in this sweep already separated them
            if dist < 1e-12:
                angle = rng.uniform(0.0, 2.0 * np.pi)
                direction = np.array([np.cos(angle), np.sin(angle)])
            else:
                direction = delta / dist
            push = (target - dist) / 2.0
            points[i] -= direction * push
            points[j] += direction * push
    return points


def min_pairwise_distance(coords: np.ndarray) -> float:
    points = np.asarray(coords, dtype=float)
    if len(points) < 2:
        return np.inf
    deltas = points[:, None, :] - points[None, :, :]
    sq = np.einsum("ijk,ijk->ij", deltas, deltas)
    ii, jj = np.triu_indices(len(points), k=1)
    return float(np.sqrt(np.min(sq[ii, jj])))


def kmeans_1d(
    values: np.ndarray, k: int = 3, seed: int = 0, max_iter: int = 100
) -> tuple[np.ndarray, np.ndarray]:
    """Seeded 1-D k-means; labels returned in ascending-centroid order.

    Initialization is farthest-first: a seeded random first center, then
    argmax of the distance to the nearest chosen center (first index on ties).
    Assignments are scale-free, so positive rescaling of the values leaves the
    labels unchanged.
    """
    data = np.asarray(values, dtype=float)
    n = len(data)
    if n < k:
        raise ValueError(f"need at least {k} values")
    rng = np.random.default_rng(seed)

    centers = [float(data[int(rng.integers(n))])]
    while len(centers) < k:
        dists = np.min(np.abs(data[:, None] - np.array(centers)[None, :]), axis=1)
        centers.append(float(data[int(np.argmax(dists))]))
    centers = np.sort(np.array(centers))

    labels: np.ndarray | None = None
    for _ in range(max_iter):
        # Nearest center; argmin takes the lower-centroid cluster on ties.
        new_labels = np.argmin(np.abs(data[:, None] - centers[None, :]), axis=1)
        if labels is not None and np.array_equal(new_labels, labels):
            break
        labels = new_labels
        for c in range(k):
            mask = labels == c
            if mask.any():
                centers[c] = data[mask].mean()
        order = np.argsort(centers, kind="stable")
        centers = centers[order]
        remap = np.empty(k, dtype=int)
        remap[order] = np.arange(k)
        labels = remap[labels]
    return labels, centers
