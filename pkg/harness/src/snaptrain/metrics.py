"""Evaluation: confusion counts, weighted metrics, checkpoint scoring."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import torch

from .data import LoadedData, SplitData
from .models import build_model, expand_channels
from .train import pad_batch


class VocabMismatch(ValueError):
    """Checkpoint and dataset disagree on labels or token vocabulary."""


@dataclass
class Metrics:
    """Weighted-average scores in percent, plus the per-label breakdown."""

    precision: float
    recall: float
    f1: float
    accuracy: float
    model: str
    variant: str
    dataset: str
    per_label: dict[str, dict[str, float]] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("precision", "recall", "f1", "accuracy"):
            value = getattr(self, name)
            if not 0.0 <= value <= 100.0:
                raise ValueError(f"{name} must be in [0,100], got {value}")

    def as_dict(self) -> dict:
        return {
            "model": self.model,
            "variant": self.variant,
            "dataset": self.dataset,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "accuracy": self.accuracy,
            "per_label": self.per_label,
        }


def metrics_from_predictions(
    y_true: list[int],
    y_pred: list[int],
    labels: tuple[str, ...],
    model: str = "",
    variant: str = "",
    dataset: str = "",
) -> Metrics:
    """Support-weighted precision/recall/F1 and accuracy from index lists."""
    if len(y_true) != len(y_pred) or not y_true:
        raise ValueError("y_true and y_pred must be equal-length and nonempty")
    k = len(labels)
    tp = [0] * k
    pred_count = [0] * k
    support = [0] * k
    for t, p in zip(y_true, y_pred):
        support[t] += 1
        pred_count[p] += 1
        if t == p:
            tp[t] += 1

    per_label: dict[str, dict[str, float]] = {}
    weighted_p = []
    weighted_f1 = []
    for i, label in enumerate(labels):
        precision = tp[i] / pred_count[i] if pred_count[i] else 0.0
        recall = tp[i] / support[i] if support[i] else 0.0
        f1 = (
            2 * precision * recall / (precision + recall)
            if precision + recall
            else 0.0
        )
        per_label[label] = {
            "precision": 100 * precision,
            "recall": 100 * recall,
            "f1": 100 * f1,
            "support": support[i],
        }
        weighted_p.append(support[i] * precision)
        weighted_f1.append(support[i] * f1)

    total = len(y_true)
    correct = sum(tp)
    # Support-weighted recall telescopes to correct/total, so recall and
    # accuracy are the same number by construction.
    accuracy = 100 * correct / total
    return Metrics(
        precision=100 * math.fsum(weighted_p) / total,
        recall=accuracy,
        f1=100 * math.fsum(weighted_f1) / total,
        accuracy=accuracy,
        model=model,
        variant=variant,
        dataset=dataset,
        per_label=per_label,
    )


def predict(model: torch.nn.Module, split: SplitData, kind: str, batch_size: int = 64) -> list[int]:
    model.eval()
    preds: list[int] = []
    with torch.no_grad():
        for start in range(0, len(split), batch_size):
            if kind == "image":
                batch = expand_channels(split.inputs[start : start + batch_size])
            else:
                batch = pad_batch(split.inputs[start : start + batch_size])
            preds.extend(model(batch).argmax(dim=1).tolist())
    return preds


def load_checkpoint(path: Path | str) -> dict:
    ckpt = torch.load(Path(path), map_location="cpu", weights_only=True)
    model = build_model(
        ckpt["model"], len(ckpt["labels"]), vocab_size=ckpt.get("vocab_size")
    )
    model.load_state_dict(ckpt["state_dict"])
    ckpt["module"] = model
    return ckpt


def evaluate(
    checkpoint: dict | Path | str,
    data: LoadedData,
    split: str = "test",
) -> Metrics:
    """Score a trained checkpoint on one split (never the training one)."""
    if isinstance(checkpoint, (Path, str)):
        checkpoint = load_checkpoint(checkpoint)
    if tuple(checkpoint["labels"]) != data.labels:
        raise VocabMismatch(
            f"checkpoint labels {checkpoint['labels']} != dataset labels {data.labels}"
        )
    if checkpoint["kind"] == "tokens" and data.vocab is not None:
        if len(data.vocab) + 2 != checkpoint["vocab_size"]:
            raise VocabMismatch("checkpoint and dataset token vocabularies differ")
    preds = predict(checkpoint["module"], data.splits[split], checkpoint["kind"])
    return metrics_from_predictions(
        data.splits[split].targets.tolist(),
        preds,
        data.labels,
        model=checkpoint["model"],
        variant=data.variant,
        dataset=data.dataset_name,
    )
