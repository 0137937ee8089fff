"""SMOTE oversampling of benign flow records prior to sequence building.

Each synthetic record interpolates between a base record and one of its k
nearest neighbors under Euclidean distance: s = x + u * (x_nn - x) with
u ~ U[0, 1]. Base records are cycled round-robin so synthesis is spread
evenly over the benign set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TargetBelowInput, TooFewRecords
from .ingest import FlowTable
from .rng import rng_from


@dataclass(frozen=True)
class SmoteConfig:
    target_count: int
    k_neighbors: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.k_neighbors < 1:
            raise ValueError("k_neighbors must be >= 1")
        if self.target_count < 0:
            raise ValueError("target_count must be >= 0")


def _nearest_neighbors(points: np.ndarray, k: int, chunk: int = 512) -> np.ndarray:
    """Exact k nearest neighbors (excluding self) by brute-force distance.

    Returns an (n, k) index array, neighbors sorted by distance.
    """
    n = points.shape[0]
    sq = np.einsum("ij,ij->i", points, points)
    out = np.empty((n, k), dtype=np.int64)
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        block = points[lo:hi]
        d2 = sq[lo:hi, None] + sq[None, :] - 2.0 * block @ points.T
        d2[np.arange(hi - lo), np.arange(lo, hi)] = np.inf  # exclude self
        part = np.argpartition(d2, k - 1, axis=1)[:, :k]
        order = np.argsort(np.take_along_axis(d2, part, axis=1), axis=1, kind="stable")
        out[lo:hi] = np.take_along_axis(part, order, axis=1)
    return out


def smote_oversample(benign_flows: FlowTable, cfg: SmoteConfig) -> FlowTable:
    """Grow the benign set to ``cfg.target_count`` records with SMOTE.

    The output contains every original record (in order) followed by the
    synthetic ones; synthetic records are labeled benign and carry
    original_index -1.
    """
    if benign_flows.n_attack:
        raise ValueError("oversampling expects benign records only")
    count = len(benign_flows)
    if count < 2 or cfg.k_neighbors >= count:
        raise TooFewRecords(
            f"need more than k_neighbors={cfg.k_neighbors} records, have {count}"
        )
    if cfg.target_count < count:
        raise TargetBelowInput(
            f"target_count={cfg.target_count} below input count {count}"
        )
    n_synthetic = cfg.target_count - count
    if n_synthetic == 0:
        return benign_flows

    points = benign_flows.features
    neighbors = _nearest_neighbors(points, cfg.k_neighbors)
    rng = rng_from(cfg.seed)

    base_idx = np.arange(n_synthetic) % count  # round-robin over the benign set
    pick = rng.integers(0, cfg.k_neighbors, size=n_synthetic)
    u = rng.uniform(0.0, 1.0, size=n_synthetic)
    bases = points[base_idx]
    picked = points[neighbors[base_idx, pick]]
    synthetic = bases + u[:, None] * (picked - bases)

    features = np.vstack([points, synthetic])
    is_attack = np.concatenate([benign_flows.is_attack, np.zeros(n_synthetic, dtype=bool)])
    categories = list(benign_flows.categories) + [None] * n_synthetic
    original = np.concatenate(
        [benign_flows.original_indices, np.full(n_synthetic, -1, dtype=np.int64)]
    )
    return FlowTable(features, is_attack, categories, original)
