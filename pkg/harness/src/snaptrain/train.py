"""Seeded training loop: SGD + cross-entropy, best-validation checkpointing."""

from __future__ import annotations

import copy
import json
import math
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

import torch
from torch import nn

from .data import TOKEN_PAD, LoadedData
from .models import MODEL_NAMES, build_model, expand_channels


@dataclass(frozen=True)
class TrainConfig:
    model: str
    max_epochs: int = 100
    learning_rate: float = 0.01
    momentum: float = 0.9
    batch_size: int = 64
    seed: int = 0
    # Train-split mean/std normalization is applied at load time; recorded
    # here so the log and checkpoint state the full recipe.
    normalize: bool = True
    early_stop_val_acc: float | None = None

    def __post_init__(self):
        if self.model not in MODEL_NAMES:
            raise ValueError(f"model must be one of {MODEL_NAMES}")
        if self.max_epochs < 1:
            raise ValueError("max_epochs must be >= 1")
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")


@dataclass
class TrainResult:
    checkpoint_path: Path
    log_path: Path
    best_val_acc: float
    best_epoch: int
    epochs_run: int
    diverged: bool


def pad_batch(sequences: list[torch.Tensor]) -> torch.Tensor:
    """Right-pad variable-length index sequences into one (batch, time)."""
    return nn.utils.rnn.pad_sequence(
        sequences, batch_first=True, padding_value=TOKEN_PAD
    )


def _gather(split, indices: list[int], kind: str) -> torch.Tensor:
    if kind == "image":
        return expand_channels(split.inputs[indices])
    return pad_batch([split.inputs[i] for i in indices])


def _accuracy(model: nn.Module, split, kind: str, batch_size: int) -> float:
    model.eval()
    correct = 0
    with torch.no_grad():
        for start in range(0, len(split), batch_size):
            idx = list(range(start, min(start + batch_size, len(split))))
            out = model(_gather(split, idx, kind))
            correct += int((out.argmax(dim=1) == split.targets[idx]).sum())
    return 100 * correct / len(split)


def train(config: TrainConfig, data: LoadedData, out_dir: Path | str) -> TrainResult:
    """Train up to max_epochs, keeping the best-validation-accuracy weights.

    Writes <out_dir>/checkpoint_<model>_<variant>.pt and a CSV log
    (epoch, train_loss, val_acc) with the full configuration in a
    commented preamble. A fixed seed fixes batch order and init, so the
    log is reproducible.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    torch.manual_seed(config.seed)

    vocab_size = (len(data.vocab) + 2) if data.vocab is not None else None
    model = build_model(config.model, data.num_classes, vocab_size=vocab_size)
    optimizer = torch.optim.SGD(
        model.parameters(), lr=config.learning_rate, momentum=config.momentum
    )
    loss_fn = nn.CrossEntropyLoss()
    train_split = data.splits["train"]
    val_split = data.splits.get("validation")
    generator = torch.Generator().manual_seed(config.seed)

    stem = f"{config.model}_{data.variant}"
    log_path = out / f"train_log_{stem}.csv"
    ckpt_path = out / f"checkpoint_{stem}.pt"
    log_lines = [
        f"# config: {json.dumps(asdict(config))}",
        f"# data: dataset={data.dataset_name} variant={data.variant} "
        f"labels={list(data.labels)} mean={data.mean} std={data.std}",
        "epoch,train_loss,val_acc",
    ]

    best_acc = -1.0
    best_epoch = -1
    best_state = None
    epochs_run = 0
    for epoch in range(config.max_epochs):
        model.train()
        order = torch.randperm(len(train_split), generator=generator).tolist()
        total_loss = 0.0
        for start in range(0, len(order), config.batch_size):
            idx = order[start : start + config.batch_size]
            optimizer.zero_grad()
            output = model(_gather(train_split, idx, data.kind))
            loss = loss_fn(output, train_split.targets[idx])
            loss.backward()
            optimizer.step()
            total_loss += loss.item() * len(idx)
        train_loss = total_loss / len(train_split)

        if val_split is not None and len(val_split):
            val_acc = _accuracy(model, val_split, data.kind, config.batch_size)
        else:
            val_acc = float("nan")
        log_lines.append(f"{epoch},{train_loss:.6f},{val_acc:.4f}")
        epochs_run = epoch + 1
        if not math.isnan(val_acc) and val_acc > best_acc:
            best_acc = val_acc
            best_epoch = epoch
            best_state = copy.deepcopy(model.state_dict())
        if (
            config.early_stop_val_acc is not None
            and val_acc >= config.early_stop_val_acc
        ):
            log_lines.append(f"# early stop: val_acc reached {val_acc:.4f}")
            break

    if best_state is None:  # no usable validation split: keep final weights
        best_state = copy.deepcopy(model.state_dict())
        best_epoch = epochs_run - 1
        best_acc = float("nan")

    chance = 100.0 / data.num_classes
    diverged = (
        epochs_run >= min(5, config.max_epochs)
        and not math.isnan(best_acc)
        and best_acc < chance + 1.0
    )
    if diverged:
        msg = (
            f"divergence: best val_acc {best_acc:.2f}% is at chance level "
            f"({chance:.2f}%) after {epochs_run} epochs"
        )
        log_lines.append(f"# {msg}")
        print(f"warning: {msg}", file=sys.stderr)

    log_path.write_text("\n".join(log_lines) + "\n", encoding="utf-8")
    torch.save(
        {
            "state_dict": best_state,
            "model": config.model,
            "kind": data.kind,
            "variant": data.variant,
            "labels": list(data.labels),
            "vocab_size": vocab_size,
            "vocab": data.vocab,
            "mean": data.mean,
            "std": data.std,
            "config": asdict(config),
            "best_epoch": best_epoch,
            "best_val_acc": best_acc,
            "manifest_path": data.manifest_path,
            "dataset": data.dataset_name,
        },
        ckpt_path,
    )
    return TrainResult(
        checkpoint_path=ckpt_path,
        log_path=log_path,
        best_val_acc=best_acc,
        best_epoch=best_epoch,
        epochs_run=epochs_run,
        diverged=diverged,
    )
