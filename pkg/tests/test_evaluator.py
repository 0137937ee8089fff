import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flowsentry.detector import ThresholdModel, calibrate, reconstruction_errors
from flowsentry.errors import EmptyCalibrationSet, InsufficientCodes, UnknownCategory
from flowsentry.evaluator import (
    ConfusionCounts,
    compute_metrics,
    counts_from_scores,
    evaluate_detector,
    group_by_category,
    latent_cohesion,
    per_category_eval,
    pr_across_percentiles,
)
from flowsentry.ingest import ATTACK
from flowsentry.model import LatentCode, ModelConfig, init_model
from flowsentry.sequencing import Sequence

from conftest import benign_sequence


@pytest.fixture(scope="module")
def model():
    return init_model(ModelConfig(input_dim=2, hidden_dim=4, latent_dim=3, seed=1))


def attack_sequence(values, category, start):
    return Sequence(np.asarray(values, dtype=np.float64), ATTACK, category, start)


class TestComputeMetrics:
    def test_hand_arithmetic(self):
        m = compute_metrics(ConfusionCounts(tp=97, fp=1, tn=99, fn=3))
        assert m.anomaly_accuracy == pytest.approx(97.0)
        assert m.benign_accuracy == pytest.approx(99.0)
        assert m.precision == pytest.approx(97 / 98)
        assert m.recall == pytest.approx(0.97)
        assert m.f1 == pytest.approx(2 * (97 / 98) * 0.97 / (97 / 98 + 0.97))

    def test_perfect_detector(self):
        m = compute_metrics(ConfusionCounts(tp=10, fp=0, tn=5, fn=0))
        assert m.precision == 1.0
        assert m.recall == 1.0
        assert m.f1 == 1.0

    def test_zero_denominators_are_absent(self):
        m = compute_metrics(ConfusionCounts(tp=0, fp=0, tn=3, fn=0))
        assert m.anomaly_accuracy is None
        assert m.precision is None
        assert m.recall is None
        assert m.f1 is None
        m = compute_metrics(ConfusionCounts(tp=2, fp=0, tn=0, fn=0))
        assert m.benign_accuracy is None

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            ConfusionCounts(tp=-1, fp=0, tn=0, fn=0)

    @given(st.integers(0, 10_000), st.integers(0, 10_000),
           st.integers(0, 10_000), st.integers(0, 10_000))
    @settings(max_examples=200)
    def test_identities(self, tp, fp, tn, fn):
        m = compute_metrics(ConfusionCounts(tp, fp, tn, fn))
        if m.recall is not None and m.anomaly_accuracy is not None:
            assert abs(m.anomaly_accuracy - 100.0 * m.recall) < 1e-12 * max(1.0, m.anomaly_accuracy)
        if m.f1 is not None:
            expected = 2 * m.precision * m.recall / (m.precision + m.recall)
            assert abs(m.f1 - expected) < 1e-12


class TestLatentCohesion:
    def test_identical_codes_zero(self):
        codes = [LatentCode(np.array([1.0, 2.0]))] * 3
        assert latent_cohesion(codes) == 0.0

    def test_hand_arithmetic(self):
        codes = np.array([[0.0, 0.0], [1.0, 0.0]])
        assert latent_cohesion(codes) == 0.5

    def test_insufficient_codes(self):
        with pytest.raises(InsufficientCodes):
            latent_cohesion(np.zeros((1, 4)))


class TestPerCategory:
    def test_all_flagged_category_is_perfect(self, model):
        rng = np.random.default_rng(0)
        attacks = {"dos": [attack_sequence(rng.uniform(0, 1, (4, 2)), "dos", i) for i in range(3)]}
        thr = ThresholdModel(threshold=1e-12, percentile=99.0, calibration_count=1)
        out = per_category_eval(model, thr, attacks, benign_test_sequences=[])
        assert out["dos"].anomaly_accuracy == pytest.approx(100.0)
        assert out["dos"].recall == pytest.approx(1.0)

    def test_empty_categories_give_empty_map(self, model):
        thr = ThresholdModel(threshold=1.0, percentile=99.0, calibration_count=1)
        assert per_category_eval(model, thr, {}, []) == {}

    def test_group_by_category_requires_metadata(self):
        seq = attack_sequence(np.zeros((2, 2)), None, 0)
        with pytest.raises(UnknownCategory):
            group_by_category([seq])

    def test_shared_benign_fp(self, model):
        rng = np.random.default_rng(1)
        benign = [benign_sequence(rng.uniform(0, 1, (4, 2)), i) for i in range(4)]
        attacks = {"recon": [attack_sequence(rng.uniform(0, 1, (4, 2)), "recon", 9)]}
        thr = ThresholdModel(threshold=1e-12, percentile=99.0, calibration_count=1)
        out = per_category_eval(model, thr, attacks, benign)
        # every benign sequence scores above the tiny threshold: fp = 4, tp = 1
        assert out["recon"].precision == pytest.approx(1 / 5)


class TestPRAcrossPercentiles:
    def test_separable_case(self, model):
        rng = np.random.default_rng(2)
        benign = [benign_sequence(rng.uniform(0, 1, (4, 2)), i * 4) for i in range(6)]
        benign_errors = reconstruction_errors(model, benign)
        # attacks far outside the unit box reconstruct terribly
        attacks = [attack_sequence(rng.uniform(4, 5, (4, 2)), "dos", 100 + i) for i in range(3)]
        points = pr_across_percentiles(model, benign_errors, benign + attacks, [100.0])
        assert len(points) == 1
        assert points[0].precision == pytest.approx(1.0)
        assert points[0].recall == pytest.approx(1.0)

    def test_empty_calibration(self, model):
        with pytest.raises(EmptyCalibrationSet):
            pr_across_percentiles(model, np.zeros(0), [], [99.0])

    def test_fp_counts_non_increasing_in_percentile(self, model):
        rng = np.random.default_rng(3)
        benign = [benign_sequence(rng.uniform(0, 1, (4, 2)), i * 4) for i in range(20)]
        benign_errors = reconstruction_errors(model, benign)
        points = pr_across_percentiles(
            model, benign_errors, benign, [90.0, 95.0, 99.0, 100.0]
        )
        fps = [100.0 - p.benign_accuracy for p in points]
        assert fps == sorted(fps, reverse=True)


class TestEvaluateDetector:
    def test_full_report(self, model):
        rng = np.random.default_rng(4)
        benign = [benign_sequence(rng.uniform(0, 1, (4, 2)), i * 4) for i in range(8)]
        attacks = [attack_sequence(rng.uniform(4, 5, (4, 2)), "dos", 100 + i) for i in range(4)]
        thr = calibrate(model, benign, 99.0)
        report = evaluate_detector(
            model, thr, benign, attacks,
            pr_percentiles=[90.0, 99.0], include_categories=True,
        )
        assert report.counts.total == 12
        assert report.anomaly_accuracy == pytest.approx(100.0)
        assert "dos" in report.per_category
        assert len(report.pr_curve) == 2
        assert report.latent_cohesion is not None

    def test_counts_from_scores_strict_rule(self):
        counts = counts_from_scores(np.array([0.5, 1.0]), np.array([1.0, 2.0]), 1.0)
        # scores exactly at the threshold stay benign
        assert counts.fp == 0 and counts.tn == 2
        assert counts.tp == 1 and counts.fn == 1
