"""Detection metrics: benign/anomaly accuracy, precision, recall, F1,
per-attack-category breakdowns, precision-recall curves across percentile
thresholds, and the latent-cohesion score.

Attack is the positive class throughout. Ratios with a zero denominator are
reported as None rather than zero.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import EmptyCalibrationSet, InsufficientCodes, UnknownCategory
from .detector import (
    ThresholdModel,
    percentile_threshold,
    reconstruction_errors,
)
from .model import AutoencoderModel, LatentCode, encode_batch
from .sequencing import Sequence


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int

    def __post_init__(self):
        if min(self.tp, self.fp, self.tn, self.fn) < 0:
            raise ValueError("counts must be non-negative")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


@dataclass(frozen=True)
class MetricSummary:
    benign_accuracy: float | None   # percent
    anomaly_accuracy: float | None  # percent
    precision: float | None
    recall: float | None
    f1: float | None


@dataclass(frozen=True)
class CategoryMetrics:
    anomaly_accuracy: float | None
    precision: float | None
    recall: float | None


@dataclass(frozen=True)
class PRPoint:
    percentile: float
    precision: float | None
    recall: float | None
    benign_accuracy: float | None
    anomaly_accuracy: float | None


@dataclass(frozen=True)
class EvalReport:
    counts: ConfusionCounts
    benign_accuracy: float | None
    anomaly_accuracy: float | None
    precision: float | None
    recall: float | None
    f1: float | None
    per_category: dict[str, CategoryMetrics]
    pr_curve: tuple[PRPoint, ...]
    latent_cohesion: float | None


def _ratio(num: int, denom: int) -> float | None:
    return num / denom if denom else None


def compute_metrics(counts: ConfusionCounts) -> MetricSummary:
    """Benign accuracy TN/(TN+FP), anomaly accuracy TP/(TP+FN) (both as
    percentages), precision, recall, and the harmonic-mean F1."""
    ba = _ratio(counts.tn, counts.tn + counts.fp)
    aa = _ratio(counts.tp, counts.tp + counts.fn)
    precision = _ratio(counts.tp, counts.tp + counts.fp)
    recall = aa
    f1 = None
    if precision is not None and recall is not None and precision + recall > 0:
        f1 = 2.0 * precision * recall / (precision + recall)
    return MetricSummary(
        benign_accuracy=None if ba is None else 100.0 * ba,
        anomaly_accuracy=None if aa is None else 100.0 * aa,
        precision=precision,
        recall=recall,
        f1=f1,
    )


def counts_from_scores(
    benign_scores: np.ndarray, attack_scores: np.ndarray, threshold: float
) -> ConfusionCounts:
    """Confusion counts with the strict score > threshold attack rule."""
    benign_scores = np.asarray(benign_scores)
    attack_scores = np.asarray(attack_scores)
    fp = int((benign_scores > threshold).sum())
    tp = int((attack_scores > threshold).sum())
    return ConfusionCounts(
        tp=tp,
        fp=fp,
        tn=benign_scores.size - fp,
        fn=attack_scores.size - tp,
    )


def group_by_category(sequences: Iterable[Sequence]) -> dict[str, list[Sequence]]:
    """Group attack sequences by their dominant category."""
    groups: dict[str, list[Sequence]] = defaultdict(list)
    for seq in sequences:
        if seq.category is None:
            raise UnknownCategory(
                f"attack sequence at start {seq.start_index} has no category"
            )
        groups[seq.category].append(seq)
    return dict(groups)


def per_category_eval(
    model: AutoencoderModel,
    threshold: ThresholdModel,
    attacks_by_category: Mapping[str, list[Sequence]],
    benign_test_sequences: list[Sequence],
) -> dict[str, CategoryMetrics]:
    """Anomaly accuracy / precision / recall per category, each against the
    shared benign test set."""
    if benign_test_sequences:
        benign_scores = reconstruction_errors(model, benign_test_sequences)
        fp = int((benign_scores > threshold.threshold).sum())
    else:
        fp = 0
    out = {}
    for category in sorted(attacks_by_category):
        seqs = attacks_by_category[category]
        scores = reconstruction_errors(model, seqs)
        tp = int((scores > threshold.threshold).sum())
        fn = len(seqs) - tp
        aa = _ratio(tp, tp + fn)
        out[category] = CategoryMetrics(
            anomaly_accuracy=None if aa is None else 100.0 * aa,
            precision=_ratio(tp, tp + fp),
            recall=aa,
        )
    return out


def pr_across_percentiles(
    model: AutoencoderModel,
    benign_errors: np.ndarray,
    labeled_sequences: list[Sequence],
    percentiles: Iterable[float],
) -> tuple[PRPoint, ...]:
    """Recalibrate the threshold at each percentile from the stored benign
    error sample (no retraining) and recompute the metrics."""
    benign_errors = np.asarray(benign_errors, dtype=np.float64)
    if benign_errors.size == 0:
        raise EmptyCalibrationSet("no stored benign errors")
    scores = reconstruction_errors(model, labeled_sequences)
    is_attack = np.asarray([s.is_attack for s in labeled_sequences], dtype=bool)
    points = []
    for q in percentiles:
        thr = percentile_threshold(benign_errors, q)
        counts = counts_from_scores(scores[~is_attack], scores[is_attack], thr)
        m = compute_metrics(counts)
        points.append(
            PRPoint(
                percentile=float(q),
                precision=m.precision,
                recall=m.recall,
                benign_accuracy=m.benign_accuracy,
                anomaly_accuracy=m.anomaly_accuracy,
            )
        )
    return tuple(points)


def latent_cohesion(codes: Iterable[LatentCode] | np.ndarray) -> float:
    """Mean over latent dimensions of (max - min) along that dimension."""
    if isinstance(codes, np.ndarray):
        matrix = np.asarray(codes, dtype=np.float64)
    else:
        matrix = np.stack([c.z if isinstance(c, LatentCode) else np.asarray(c) for c in codes])
    if matrix.ndim != 2 or matrix.shape[0] < 2:
        raise InsufficientCodes("latent cohesion needs at least two codes")
    return float(np.mean(matrix.max(axis=0) - matrix.min(axis=0)))


def benign_latent_codes(
    model: AutoencoderModel, sequences: list[Sequence], chunk: int = 512
) -> np.ndarray:
    """Latent codes of the given sequences as a (count, latent_dim) matrix."""
    rows = []
    for lo in range(0, len(sequences), chunk):
        X = np.stack([s.values for s in sequences[lo : lo + chunk]])
        rows.append(encode_batch(model, X).z)
    return np.vstack(rows) if rows else np.zeros((0, model.config.latent_dim))


def evaluate_detector(
    model: AutoencoderModel,
    threshold: ThresholdModel,
    benign_sequences: list[Sequence],
    attack_sequences: list[Sequence],
    pr_percentiles: Iterable[float] = (),
    calibration_errors: np.ndarray | None = None,
    include_categories: bool = False,
) -> EvalReport:
    """Assemble the full evaluation report at a calibrated threshold."""
    benign_scores = (
        reconstruction_errors(model, benign_sequences)
        if benign_sequences
        else np.zeros(0)
    )
    attack_scores = (
        reconstruction_errors(model, attack_sequences)
        if attack_sequences
        else np.zeros(0)
    )
    counts = counts_from_scores(benign_scores, attack_scores, threshold.threshold)
    summary = compute_metrics(counts)

    per_category: dict[str, CategoryMetrics] = {}
    if include_categories and attack_sequences:
        per_category = per_category_eval(
            model, threshold, group_by_category(attack_sequences), benign_sequences
        )

    pr_curve: tuple[PRPoint, ...] = ()
    percentiles = list(pr_percentiles)
    if percentiles:
        errors = (
            np.asarray(calibration_errors)
            if calibration_errors is not None
            else benign_scores
        )
        pr_curve = pr_across_percentiles(
            model, errors, benign_sequences + attack_sequences, percentiles
        )

    cohesion = None
    if len(benign_sequences) >= 2:
        cohesion = latent_cohesion(benign_latent_codes(model, benign_sequences))

    return EvalReport(
        counts=counts,
        benign_accuracy=summary.benign_accuracy,
        anomaly_accuracy=summary.anomaly_accuracy,
        precision=summary.precision,
        recall=summary.recall,
        f1=summary.f1,
        per_category=per_category,
        pr_curve=pr_curve,
        latent_cohesion=cohesion,
    )


def average_reports(reports: Iterable[EvalReport]) -> MetricSummary:
    """Column-wise mean of scalar metrics across reports (None excluded)."""

    def mean(values: list[float | None]) -> float | None:
        present = [v for v in values if v is not None]
        return sum(present) / len(present) if present else None

    reports = list(reports)
    return MetricSummary(
        benign_accuracy=mean([r.benign_accuracy for r in reports]),
        anomaly_accuracy=mean([r.anomaly_accuracy for r in reports]),
        precision=mean([r.precision for r in reports]),
        recall=mean([r.recall for r in reports]),
        f1=mean([r.f1 for r in reports]),
    )
