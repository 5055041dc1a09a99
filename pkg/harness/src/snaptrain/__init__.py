"""Training harness for snapshot method-name classification datasets."""

from .data import (
    LoadedData,
    MissingFile,
    MissingVariant,
    SplitData,
    build_token_vocab,
    encode_tokens,
    load_dataset,
    read_manifest,
)
from .metrics import (
    Metrics,
    VocabMismatch,
    evaluate,
    load_checkpoint,
    metrics_from_predictions,
    predict,
)
from .models import BiLstmClassifier, MODEL_NAMES, build_model, expand_channels
from .report import append_results, read_results, render_table
from .train import TrainConfig, TrainResult, pad_batch, train

__all__ = [
    "LoadedData",
    "MissingFile",
    "MissingVariant",
    "SplitData",
    "build_token_vocab",
    "encode_tokens",
    "load_dataset",
    "read_manifest",
    "Metrics",
    "VocabMismatch",
    "evaluate",
    "load_checkpoint",
    "metrics_from_predictions",
    "predict",
    "BiLstmClassifier",
    "MODEL_NAMES",
    "build_model",
    "expand_channels",
    "append_results",
    "read_results",
    "render_table",
    "TrainConfig",
    "TrainResult",
    "pad_batch",
    "train",
]

__version__ = "0.1.0"
