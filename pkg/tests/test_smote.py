import numpy as np
import pytest

from flowsentry.errors import TargetBelowInput, TooFewRecords
from flowsentry.smote import SmoteConfig, smote_oversample

from conftest import make_table


def segment_residual(sample, base, neighbors):
    """Distance from `sample` to the nearest segment [base, neighbor]."""
    best = np.inf
    for nn in neighbors:
        direction = nn - base
        denom = float(direction @ direction)
        u = 0.0 if denom == 0 else float((sample - base) @ direction) / denom
        u = min(max(u, 0.0), 1.0)
        best = min(best, float(np.linalg.norm(sample - (base + u * direction))))
    return best


def test_noop_when_target_equals_count():
    table = make_table([[0.1], [0.5], [0.9]])
    out = smote_oversample(table, SmoteConfig(target_count=3, k_neighbors=1, seed=0))
    assert out is table


def test_two_point_interpolation_stays_on_segment():
    table = make_table([[0.0], [1.0]])
    out = smote_oversample(table, SmoteConfig(target_count=3, k_neighbors=1, seed=4))
    synthetic = out.features[2, 0]
    assert 0.0 <= synthetic <= 1.0


def test_originals_preserved_in_order():
    rng = np.random.default_rng(0)
    table = make_table(rng.uniform(0, 1, (10, 3)))
    out = smote_oversample(table, SmoteConfig(target_count=17, k_neighbors=3, seed=1))
    assert len(out) == 17
    np.testing.assert_array_equal(out.features[:10], table.features)
    assert list(out.original_indices[:10]) == list(range(10))
    assert set(out.original_indices[10:]) == {-1}
    assert out.n_attack == 0


def test_synthetics_on_neighbor_segments_and_in_unit_box():
    rng = np.random.default_rng(7)
    k = 4
    table = make_table(rng.uniform(0, 1, (64, 4)))
    out = smote_oversample(table, SmoteConfig(target_count=120, k_neighbors=k, seed=9))
    points = table.features
    for s in range(64, 120):
        sample = out.features[s]
        base = points[(s - 64) % 64]
        dists = np.linalg.norm(points - base, axis=1)
        dists[(s - 64) % 64] = np.inf
        neighbors = points[np.argsort(dists)[:k]]
        assert segment_residual(sample, base, neighbors) <= 1e-9
        assert sample.min() >= 0.0 and sample.max() <= 1.0


def test_deterministic_per_seed():
    rng = np.random.default_rng(3)
    table = make_table(rng.uniform(0, 1, (12, 2)))
    a = smote_oversample(table, SmoteConfig(target_count=20, k_neighbors=3, seed=5))
    b = smote_oversample(table, SmoteConfig(target_count=20, k_neighbors=3, seed=5))
    np.testing.assert_array_equal(a.features, b.features)


def test_too_few_records():
    table = make_table([[0.1], [0.2]])
    with pytest.raises(TooFewRecords):
        smote_oversample(table, SmoteConfig(target_count=5, k_neighbors=2, seed=0))


def test_target_below_input():
    table = make_table([[0.1], [0.2], [0.3]])
    with pytest.raises(TargetBelowInput):
        smote_oversample(table, SmoteConfig(target_count=2, k_neighbors=1, seed=0))


def test_rejects_attack_rows():
    table = make_table([[0.1], [0.2], [0.3]], attacks=[False, True, False])
    with pytest.raises(ValueError):
        smote_oversample(table, SmoteConfig(target_count=5, k_neighbors=1, seed=0))
