"""Command-line interface: train, evaluate, report."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .data import MissingFile, MissingVariant, load_dataset
from .metrics import VocabMismatch, evaluate, load_checkpoint
from .models import MODEL_NAMES
from .report import append_results, read_results, render_table
from .train import TrainConfig, train

VARIANTS = ("original", "reformatted", "redacted", "tokens")


def _cmd_train(args: argparse.Namespace) -> int:
    config = TrainConfig(
        model=args.model,
        max_epochs=args.epochs,
        learning_rate=args.lr,
        momentum=args.momentum,
        batch_size=args.batch_size,
        seed=args.seed,
        early_stop_val_acc=args.early_stop_val_acc,
    )
    data = load_dataset(args.manifest, args.variant)
    result = train(config, data, args.out)
    print(f"checkpoint: {result.checkpoint_path}")
    print(f"log: {result.log_path}")
    print(
        f"best val_acc: {result.best_val_acc:.2f}% "
        f"(epoch {result.best_epoch}, {result.epochs_run} epochs run)"
    )
    return 1 if result.diverged else 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    ckpt = load_checkpoint(args.checkpoint)
    manifest = args.manifest or ckpt["manifest_path"]
    if not manifest:
        print("error: no manifest given and none stored in checkpoint", file=sys.stderr)
        return 1
    if ckpt["kind"] == "image":
        data = load_dataset(
            manifest, ckpt["variant"], splits=("test",),
            norm=(ckpt["mean"], ckpt["std"]),
        )
    else:
        data = load_dataset(
            manifest, "tokens", splits=("test",), vocab=ckpt["vocab"]
        )
    metrics = evaluate(ckpt, data)
    print(
        f"{metrics.model} / {metrics.variant} on {metrics.dataset}: "
        f"precision {metrics.precision:.2f}  recall {metrics.recall:.2f}  "
        f"f1 {metrics.f1:.2f}  accuracy {metrics.accuracy:.2f}"
    )
    results_path = Path(args.results or Path(args.checkpoint).parent / "results.jsonl")
    append_results(metrics, results_path)
    print(f"results: {results_path}")
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    table = render_table(read_results(args.results))
    out_path = Path(args.out or Path(args.results).with_name("results_table.txt"))
    out_path.write_text(table, encoding="utf-8")
    print(table, end="")
    print(f"table: {out_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snaptrain",
        description="Train and evaluate method-name classifiers on snapshot datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train one model on one dataset variant")
    p.add_argument("--manifest", required=True, help="path to manifest.jsonl")
    p.add_argument("--variant", required=True, choices=VARIANTS)
    p.add_argument("--model", required=True, choices=MODEL_NAMES)
    p.add_argument("--epochs", type=int, default=100, help="max epochs (default 100)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lr", type=float, default=0.01, help="SGD learning rate (default 0.01)")
    p.add_argument("--momentum", type=float, default=0.9, help="SGD momentum (default 0.9)")
    p.add_argument("--batch-size", type=int, default=64)
    p.add_argument("--early-stop-val-acc", type=float, default=None,
                   help="stop once validation accuracy reaches this percentage")
    p.add_argument("-o", "--out", default="runs", help="output directory (default runs/)")
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("evaluate", help="score a checkpoint on the test split")
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--manifest", default=None,
                   help="dataset manifest (default: the one stored in the checkpoint)")
    p.add_argument("--results", default=None,
                   help="results.jsonl to append to (default alongside checkpoint)")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("report", help="render a grouped results table")
    p.add_argument("--results", required=True, help="results.jsonl path")
    p.add_argument("-o", "--out", default=None,
                   help="table text file (default results_table.txt alongside)")
    p.set_defaults(func=_cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MissingFile, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MissingVariant, VocabMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
