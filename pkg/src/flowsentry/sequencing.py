"""Fixed-length windowing of flows and triplet construction for training.

A window's label is attack iff strictly more than half of its flows are
attack-labeled; ties stay benign. Training triplets pair each benign anchor
with a noise-augmented copy and a temporally distinct benign sequence.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import NeedAtLeastTwoSequences, SequenceLongerThanData
from .ingest import ATTACK, BENIGN, FlowTable


@dataclass(frozen=True)
class Sequence:
    values: np.ndarray  # (length, n_features)
    label: str
    category: str | None
    start_index: int

    @property
    def is_attack(self) -> bool:
        return self.label == ATTACK

    @property
    def length(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class Triplet:
    anchor: Sequence
    positive: Sequence
    negative: Sequence


@dataclass(frozen=True)
class TripletConfig:
    sequence_length: int = 25
    stride: int | None = None  # None = sequence_length (non-overlapping tiling)
    noise_scale: float = 0.01
    seed: int = 0

    def __post_init__(self):
        if self.sequence_length < 1:
            raise ValueError("sequence_length must be >= 1")
        if self.stride is not None and self.stride < 1:
            raise ValueError("stride must be >= 1")
        if self.noise_scale < 0:
            raise ValueError("noise_scale must be >= 0")

    @property
    def effective_stride(self) -> int:
        return self.sequence_length if self.stride is None else self.stride


def _dominant_category(categories: list[str]) -> str | None:
    if not categories:
        return None
    counts = Counter(categories)
    # ties broken lexicographically
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[0][0]


def build_sequences(
    flows: FlowTable, length: int, stride: int | None = None
) -> list[Sequence]:
    """Window a flow table into sequences starting at 0, stride, 2*stride, ...

    The trailing partial window is discarded.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    stride = length if stride is None else stride
    if stride < 1:
        raise ValueError("stride must be >= 1")
    if length > len(flows):
        raise SequenceLongerThanData(
            f"window of {length} flows requested but table has {len(flows)}"
        )
    sequences = []
    for start in range(0, len(flows) - length + 1, stride):
        window = slice(start, start + length)
        attack_mask = flows.is_attack[window]
        n_attack = int(attack_mask.sum())
        is_attack = 2 * n_attack > length  # strict majority
        category = None
        if is_attack:
            cats = [
                c
                for c, a in zip(flows.categories[window], attack_mask)
                if a and c is not None
            ]
            category = _dominant_category(cats)
        sequences.append(
            Sequence(
                values=flows.features[window].copy(),
                label=ATTACK if is_attack else BENIGN,
                category=category,
                start_index=start,
            )
        )
    return sequences


def make_triplets(benign_sequences: list[Sequence], cfg: TripletConfig) -> list[Triplet]:
    """Build one triplet per anchor: (anchor, anchor + noise, other sequence).

    The positive adds element-wise uniform noise in [-eps, +eps], clamped to
    [0, 1]; the negative is drawn uniformly among benign sequences with a
    different start index. Each anchor draws from its own seed-derived
    stream, so results are deterministic and order-independent.
    """
    if any(s.is_attack for s in benign_sequences):
        raise ValueError("triplet construction expects benign sequences only")
    starts = [s.start_index for s in benign_sequences]
    if len(benign_sequences) < 2 or len(set(starts)) < 2:
        raise NeedAtLeastTwoSequences(
            "need at least two benign sequences with distinct start indices"
        )
    eps = cfg.noise_scale
    children = np.random.SeedSequence(cfg.seed).spawn(len(benign_sequences))
    start_arr = np.asarray(starts)

    triplets = []
    for i, anchor in enumerate(benign_sequences):
        rng = np.random.default_rng(children[i])
        values = anchor.values
        if eps > 0:
            values = np.clip(values + rng.uniform(-eps, eps, values.shape), 0.0, 1.0)
        positive = Sequence(values, BENIGN, None, anchor.start_index)
        candidates = np.flatnonzero(start_arr != anchor.start_index)
        negative = benign_sequences[int(rng.choice(candidates))]
        triplets.append(Triplet(anchor=anchor, positive=positive, negative=negative))
    return triplets
