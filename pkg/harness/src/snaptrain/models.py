"""Model zoo: the two canonical CNNs plus a bidirectional LSTM baseline.

The CNNs are the published torchvision architectures with only the final
layer width changed; grayscale input is replicated to three channels at
the batch level so the architectures stay untouched.
"""

from __future__ import annotations

import torch
from torch import nn
from torchvision import models as tv_models

MODEL_NAMES = ("alexnet8", "resnet18", "bilstm")


class BiLstmClassifier(nn.Module):
    """Embedding -> 2-layer BiLSTM -> masked max-pool over time -> linear."""

    def __init__(
        self,
        vocab_size: int,
        num_classes: int,
        embed_dim: int = 128,
        hidden_dim: int = 128,
        num_layers: int = 2,
    ):
        super().__init__()
        self.embed = nn.Embedding(vocab_size, embed_dim, padding_idx=0)
        self.lstm = nn.LSTM(
            embed_dim,
            hidden_dim,
            num_layers=num_layers,
            bidirectional=True,
            batch_first=True,
        )
        self.head = nn.Linear(2 * hidden_dim, num_classes)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        # x: (batch, time) of token indices, 0 = padding. Sequences are
        # packed so padded steps never enter the recurrence; otherwise the
        # backward direction would see padding before the real tokens.
        lengths = (x != 0).sum(dim=1).clamp(min=1)
        packed = nn.utils.rnn.pack_padded_sequence(
            self.embed(x), lengths.cpu(), batch_first=True, enforce_sorted=False
        )
        out, _ = self.lstm(packed)
        out, _ = nn.utils.rnn.pad_packed_sequence(out, batch_first=True)
        mask = (
            torch.arange(out.shape[1], device=x.device)[None, :] >= lengths[:, None]
        )
        out = out.masked_fill(mask.unsqueeze(-1), float("-inf"))
        pooled, _ = out.max(dim=1)
        return self.head(pooled)


def build_model(
    name: str, num_classes: int, vocab_size: int | None = None
) -> nn.Module:
    if num_classes < 2:
        raise ValueError("num_classes must be >= 2")
    if name == "alexnet8":
        return tv_models.alexnet(num_classes=num_classes)
    if name == "resnet18":
        return tv_models.resnet18(num_classes=num_classes)
    if name == "bilstm":
        if not vocab_size or vocab_size < 2:
            raise ValueError("bilstm requires a vocab_size >= 2")
        return BiLstmClassifier(vocab_size, num_classes)
    raise ValueError(f"unknown model {name!r}; expected one of {MODEL_NAMES}")


def expand_channels(batch: torch.Tensor) -> torch.Tensor:
    """Replicate 1-channel images to the 3 channels the CNNs expect."""
    if batch.ndim != 4 or batch.shape[1] != 1:
        raise ValueError("expected (batch, 1, height, width)")
    return batch.expand(-1, 3, -1, -1)
