"""Percentile threshold calibration over benign reconstruction errors and
sequence classification.

The threshold is the configured percentile (linear interpolation between
closest ranks) of the unweighted reconstruction errors of the benign
training sequences. A sequence is flagged attack iff its score exceeds the
threshold strictly; a score exactly at the threshold stays benign.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyCalibrationSet
from .ingest import ATTACK, BENIGN
from .model import AutoencoderModel, decode_batch, encode_batch
from .sequencing import Sequence


@dataclass(frozen=True)
class ThresholdModel:
    threshold: float
    percentile: float
    calibration_count: int

    def __post_init__(self):
        if not 0.0 < self.percentile <= 100.0:
            raise ValueError("percentile must lie in (0, 100]")
        if self.threshold < 0:
            raise ValueError("threshold must be >= 0")


@dataclass(frozen=True)
class Verdict:
    label: str
    score: float

    @property
    def is_attack(self) -> bool:
        return self.label == ATTACK


def reconstruction_errors(
    model: AutoencoderModel,
    sequences: list[Sequence],
    chunk: int = 512,
) -> np.ndarray:
    """Per-sequence anomaly scores: MSE between each sequence and its
    reconstruction. Sequences must share one length."""
    if not sequences:
        return np.zeros(0)
    lengths = {s.length for s in sequences}
    if len(lengths) != 1:
        raise ValueError("sequences must share one length for batched scoring")
    L = lengths.pop()
    scores = np.empty(len(sequences))
    for lo in range(0, len(sequences), chunk):
        batch = sequences[lo : lo + chunk]
        X = np.stack([s.values for s in batch])
        state = encode_batch(model, X)
        Y = decode_batch(model, state.z, L).outputs
        diff = Y - X
        scores[lo : lo + len(batch)] = np.mean(diff * diff, axis=(1, 2))
    return scores


def percentile_threshold(errors: np.ndarray, percentile: float) -> float:
    """Linear-interpolation percentile of an error sample."""
    errors = np.asarray(errors, dtype=np.float64)
    if errors.size == 0:
        raise EmptyCalibrationSet("no calibration errors")
    if not 0.0 < percentile <= 100.0:
        raise ValueError("percentile must lie in (0, 100]")
    return float(np.percentile(errors, percentile))


def calibrate(
    model: AutoencoderModel,
    benign_train_sequences: list[Sequence],
    percentile: float = 99.0,
) -> ThresholdModel:
    """Calibrate the detection threshold on benign training sequences.

    Errors are the raw reconstruction MSEs, never scaled by the training
    loss weights.
    """
    if not benign_train_sequences:
        raise EmptyCalibrationSet("calibration needs at least one benign sequence")
    errors = reconstruction_errors(model, benign_train_sequences)
    return ThresholdModel(
        threshold=percentile_threshold(errors, percentile),
        percentile=percentile,
        calibration_count=len(benign_train_sequences),
    )


def classify(
    model: AutoencoderModel, threshold: ThresholdModel, seq: Sequence
) -> Verdict:
    """Score one sequence and compare against the calibrated threshold."""
    score = float(reconstruction_errors(model, [seq])[0])
    return Verdict(ATTACK if score > threshold.threshold else BENIGN, score)


def classify_many(
    model: AutoencoderModel, threshold: ThresholdModel, sequences: list[Sequence]
) -> list[Verdict]:
    scores = reconstruction_errors(model, sequences)
    return [
        Verdict(ATTACK if s > threshold.threshold else BENIGN, float(s))
        for s in scores
    ]
