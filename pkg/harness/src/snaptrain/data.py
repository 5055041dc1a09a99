"""Dataset loading from a snapshot-pipeline manifest.

The manifest is line-delimited JSON: a header (labels, variants, counts)
followed by one entry per artifact with paths relative to the manifest's
directory. Images become normalized float tensors; token files become
index sequences over a vocabulary built from the training split only.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import torch
from PIL import Image

SPLITS = ("train", "validation", "test")
TOKEN_PAD = 0
TOKEN_OOV = 1


class MissingFile(FileNotFoundError):
    """An artifact referenced by the manifest does not exist."""


class MissingVariant(ValueError):
    """The manifest holds no entries for the requested variant."""


@dataclass
class SplitData:
    """One split: stacked image tensor or list of token index tensors."""

    inputs: torch.Tensor | list[torch.Tensor]
    targets: torch.Tensor

    def __len__(self) -> int:
        return int(self.targets.shape[0])


@dataclass
class LoadedData:
    kind: str  # "image" or "tokens"
    variant: str
    labels: tuple[str, ...]
    splits: dict[str, SplitData]
    mean: float | None = None
    std: float | None = None
    vocab: dict[str, int] | None = None
    dataset_name: str = ""
    manifest_path: str = ""

    @property
    def num_classes(self) -> int:
        return len(self.labels)


def read_manifest(manifest_path: Path | str) -> tuple[dict, list[dict]]:
    path = Path(manifest_path)
    with open(path, encoding="utf-8") as fh:
        header = json.loads(fh.readline())
        entries = [json.loads(line) for line in fh if line.strip()]
    return header, entries


def _load_image(path: Path) -> np.ndarray:
    if not path.is_file():
        raise MissingFile(str(path))
    with Image.open(path) as img:
        return np.asarray(img.convert("L"), dtype=np.float32) / 255.0


def _load_tokens(path: Path) -> list[str]:
    if not path.is_file():
        raise MissingFile(str(path))
    return json.loads(path.read_text(encoding="utf-8"))["tokens"]


def build_token_vocab(
    train_sequences: list[list[str]], max_size: int = 20_000
) -> dict[str, int]:
    """Most frequent training tokens; index 0 is padding, 1 is out-of-vocab."""
    freq = Counter(tok for seq in train_sequences for tok in seq)
    ranked = sorted(freq.items(), key=lambda kv: (-kv[1], kv[0]))[: max_size - 2]
    vocab = {token: i + 2 for i, (token, _) in enumerate(ranked)}
    return vocab


def encode_tokens(seq: list[str], vocab: dict[str, int]) -> torch.Tensor:
    if not seq:
        return torch.tensor([TOKEN_OOV], dtype=torch.long)
    return torch.tensor(
        [vocab.get(tok, TOKEN_OOV) for tok in seq], dtype=torch.long
    )


def load_dataset(
    manifest_path: Path | str,
    variant: str,
    splits: tuple[str, ...] = SPLITS,
    norm: tuple[float, float] | None = None,
    vocab: dict[str, int] | None = None,
) -> LoadedData:
    """Load one variant of a built dataset into memory.

    Image pixels are scaled to [0,1] and normalized with the training
    split's mean/std (or the supplied `norm`, so evaluation can reuse a
    checkpoint's statistics without touching training files). For the
    "tokens" variant a vocabulary is built from training sequences unless
    one is supplied. Ordering follows the manifest, which is sorted.
    """
    path = Path(manifest_path)
    root = path.parent
    header, entries = read_manifest(path)
    labels = tuple(header["labels"])
    label_index = {label: i for i, label in enumerate(labels)}

    if variant == "tokens":
        per_split: dict[str, list[dict]] = {s: [] for s in splits}
        seen: set[str] = set()
        for e in entries:  # image manifests repeat each record per variant
            if e["split"] in per_split and e["id"] not in seen:
                seen.add(e["id"])
                per_split[e["split"]].append(e)
        if not any(per_split.values()):
            raise MissingVariant("manifest has no entries for requested splits")
        sequences = {
            s: [_load_tokens(root / e["tokens_path"]) for e in per_split[s]]
            for s in splits
        }
        if vocab is None:
            if "train" not in splits:
                raise ValueError("token vocab required when train split not loaded")
            vocab = build_token_vocab(sequences["train"])
        data_splits = {
            s: SplitData(
                inputs=[encode_tokens(seq, vocab) for seq in sequences[s]],
                targets=torch.tensor(
                    [label_index[e["label"]] for e in per_split[s]],
                    dtype=torch.long,
                ),
            )
            for s in splits
        }
        return LoadedData(
            kind="tokens",
            variant=variant,
            labels=labels,
            splits=data_splits,
            vocab=vocab,
            dataset_name=root.name,
            manifest_path=str(path),
        )

    chosen = [e for e in entries if e["variant"] == variant and e["split"] in splits]
    if not chosen:
        raise MissingVariant(f"manifest has no {variant!r} entries")
    arrays: dict[str, list[np.ndarray]] = {s: [] for s in splits}
    targets: dict[str, list[int]] = {s: [] for s in splits}
    for e in chosen:
        arrays[e["split"]].append(_load_image(root / e["image_path"]))
        targets[e["split"]].append(label_index[e["label"]])

    if norm is not None:
        mean, std = norm
    else:
        if "train" not in splits or not arrays["train"]:
            raise ValueError("normalization stats required when train not loaded")
        train_pixels = np.stack(arrays["train"])
        mean = float(train_pixels.mean())
        std = float(train_pixels.std())
    if std == 0.0 or math.isnan(std):  # constant training images
        std = 1.0

    data_splits = {}
    for s in splits:
        if arrays[s]:
            stacked = (np.stack(arrays[s]) - mean) / std
            inputs = torch.from_numpy(stacked.astype(np.float32)).unsqueeze(1)
        else:
            inputs = torch.empty((0, 1, 1, 1), dtype=torch.float32)
        data_splits[s] = SplitData(
            inputs=inputs, targets=torch.tensor(targets[s], dtype=torch.long)
        )
    return LoadedData(
        kind="image",
        variant=variant,
        labels=labels,
        splits=data_splits,
        mean=mean,
        std=std,
        dataset_name=root.name,
        manifest_path=str(path),
    )
