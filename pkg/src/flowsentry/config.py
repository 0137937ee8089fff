"""Pipeline configuration: dataclass defaults plus INI config-file loading.

The config file is key-value with sections; command-line flags override
file values, which override the dataclass defaults below.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from pathlib import Path

from .ingest import FlowSchema
from .model import MODE_DETERMINISTIC, ModelConfig
from .rng import derive_seed
from .sequencing import TripletConfig
from .trainer import TrainConfig


@dataclass(frozen=True)
class PipelineConfig:
    """End-to-end knobs of the batch pipeline.

    Defaults pin the fixed experimental protocol: sequence length 25,
    positive-noise scale 0.01, threshold percentile 99.
    """

    schema: FlowSchema
    sequence_length: int = 25
    stride: int | None = None
    noise_scale: float = 0.01
    percentile: float = 99.0
    smote_multiplier: float | None = None  # None = SMOTE off
    smote_k: int = 5
    train: TrainConfig = field(default_factory=TrainConfig)
    hidden_dim: int = 64
    latent_dim: int = 32
    num_layers: int = 1
    mode: str = MODE_DETERMINISTIC
    train_fraction: float = 0.8
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.percentile <= 100.0:
            raise ValueError("percentile must lie in (0, 100]")
        if self.smote_multiplier is not None and self.smote_multiplier < 1.0:
            raise ValueError("smote multiplier must be >= 1")

    def model_config(self) -> ModelConfig:
        return ModelConfig(
            input_dim=self.schema.n_features,
            hidden_dim=self.hidden_dim,
            latent_dim=self.latent_dim,
            num_layers=self.num_layers,
            mode=self.mode,
            seed=derive_seed(self.seed, "init"),
        )

    def triplet_config(self) -> TripletConfig:
        return TripletConfig(
            sequence_length=self.sequence_length,
            stride=self.stride,
            noise_scale=self.noise_scale,
            seed=derive_seed(self.seed, "triplets"),
        )


# (section, key) in the INI file -> (argparse dest, parser)
_CONFIG_KEYS = {
    ("schema", "feature_columns"): ("feature_columns", str),
    ("schema", "label_column"): ("label_column", str),
    ("schema", "category_column"): ("category_column", str),
    ("schema", "benign_label"): ("benign_label", str),
    ("schema", "delimiter"): ("delimiter", str),
    ("sequencing", "length"): ("sequence_length", int),
    ("sequencing", "stride"): ("stride", int),
    ("sequencing", "noise_scale"): ("noise_scale", float),
    ("model", "hidden_dim"): ("hidden_dim", int),
    ("model", "latent_dim"): ("latent_dim", int),
    ("model", "num_layers"): ("num_layers", int),
    ("model", "mode"): ("mode", str),
    ("train", "lambda_rec"): ("lambda_rec", float),
    ("train", "lambda_tml"): ("lambda_tml", float),
    ("train", "lambda_kl"): ("lambda_kl", float),
    ("train", "margin"): ("margin", float),
    ("train", "epochs"): ("epochs", int),
    ("train", "batch_size"): ("batch_size", int),
    ("train", "learning_rate"): ("learning_rate", float),
    ("detector", "percentile"): ("percentile", float),
    ("smote", "multiplier"): ("smote", float),
    ("smote", "k_neighbors"): ("smote_k", int),
    ("pipeline", "seed"): ("seed", int),
    ("pipeline", "train_fraction"): ("train_fraction", float),
}


def load_config_values(path: str | Path) -> dict[str, object]:
    """Read an INI config file into a dict keyed by argparse dest names."""
    parser = configparser.ConfigParser()
    with Path(path).open() as fh:
        parser.read_file(fh)
    values: dict[str, object] = {}
    for (section, key), (dest, cast) in _CONFIG_KEYS.items():
        if parser.has_option(section, key):
            values[dest] = cast(parser.get(section, key))
    return values
