import numpy as np
import pytest

from flowsentry.ingest import BENIGN, FlowSchema, FlowTable
from flowsentry.sequencing import Sequence


@pytest.fixture
def two_feature_schema() -> FlowSchema:
    return FlowSchema(
        feature_columns=("a", "b"),
        label_column="label",
        attack_category_column="category",
    )


def make_table(
    features, attacks=None, categories=None, start_index: int = 0
) -> FlowTable:
    features = np.asarray(features, dtype=np.float64)
    n = features.shape[0]
    if attacks is None:
        attacks = [False] * n
    if categories is None:
        categories = [None] * n
    return FlowTable(features, attacks, categories, np.arange(start_index, start_index + n))


def benign_sequence(values, start_index: int = 0) -> Sequence:
    return Sequence(np.asarray(values, dtype=np.float64), BENIGN, None, start_index)
