"""Command-line interface.

Subcommands: reformat / redact / snapshot for single-file inspection,
build for full dataset construction, stats for corpus summaries. Every
flag default matches the documented pipeline configuration (30 rows,
120 columns, 512 px output, top-k 10, cap 1000), so bare invocations
reproduce the standard setup.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dataset import (
    IMAGE_VARIANTS,
    ORIGINAL,
    REDACTED,
    REFORMATTED,
    SPLITS,
    InsufficientLabels,
    build_dataset,
    corpus_stats,
)
from .redact import redact
from .reformat import WindowConfig, reformat_with_warnings, truncate_window
from .render import RenderConfig, snapshot_png
from .source import ingest


def _add_window_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-rows", type=int, default=30, help="window height in lines (default 30)")
    p.add_argument("--max-cols", type=int, default=120, help="window width in characters (default 120)")
    p.add_argument("--indent-unit", type=int, default=4, help="spaces per brace depth (default 4)")
    p.add_argument("--tab-width", type=int, default=4, help="spaces per tab on ingest (default 4)")


def _window(args: argparse.Namespace) -> WindowConfig:
    return WindowConfig(
        max_rows=args.max_rows,
        max_cols=args.max_cols,
        indent_unit=args.indent_unit,
        tab_width=args.tab_width,
    )


def _render_cfg(args: argparse.Namespace) -> RenderConfig:
    return RenderConfig(
        rows=args.max_rows, cols=args.max_cols, output_size=args.out_size
    )


def _read_source(path: str, tab_width: int):
    return ingest(Path(path).read_bytes(), tab_width=tab_width)


def _print_warnings(warnings: list[str]) -> None:
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)


def _cmd_reformat(args: argparse.Namespace) -> int:
    src = _read_source(args.input, args.tab_width)
    out, warnings = reformat_with_warnings(src, _window(args))
    _print_warnings(warnings)
    print(out.text)
    return 0


def _cmd_redact(args: argparse.Namespace) -> int:
    src = _read_source(args.input, args.tab_width)
    out, warnings = reformat_with_warnings(src, _window(args))
    _print_warnings(warnings)
    print(redact(out).text)
    return 0


def _cmd_snapshot(args: argparse.Namespace) -> int:
    src = _read_source(args.input, args.tab_width)
    window = _window(args)
    if args.variant == ORIGINAL:
        text = truncate_window(src, window)
        warnings: list[str] = []
    else:
        text, warnings = reformat_with_warnings(src, window)
        if args.variant == REDACTED:
            text = redact(text)
    _print_warnings(warnings)
    out_path = Path(args.out or (Path(args.input).stem + f".{args.variant}.png"))
    out_path.write_bytes(snapshot_png(text, _render_cfg(args)))
    print(out_path)
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    variants = tuple(v for v in args.variants.split(",") if v) if args.variants else ()
    manifest = build_dataset(
        args.corpus,
        args.out,
        top_k=args.top_k,
        cap=args.cap,
        variants=variants,
        window=_window(args),
        render_cfg=_render_cfg(args),
        seed=args.seed,
        jobs=args.jobs,
    )
    print(f"manifest: {Path(args.out) / 'manifest.jsonl'}")
    print(f"fingerprint: {manifest.config_fingerprint}")
    print(f"labels ({manifest.top_k}): {', '.join(manifest.labels)}")
    header = "label".ljust(24) + "".join(s.rjust(12) for s in SPLITS)
    print(header)
    for label in manifest.labels:
        row = label.ljust(24) + "".join(
            str(manifest.counts[s][label]).rjust(12) for s in SPLITS
        )
        print(row)
    total = sum(sum(c.values()) for c in manifest.counts.values())
    print(f"records: {total}, entries: {len(manifest.entries)}, "
          f"warnings: {len(manifest.warnings)}")
    _print_warnings(manifest.warnings)
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    stats = corpus_stats(args.corpus)
    for split in SPLITS:
        freq = stats["label_frequency"][split]
        print(f"{split}: {sum(freq.values())} methods, {len(freq)} distinct labels")
        for label, count in freq.items():
            print(f"  {label.ljust(30)} {count}")
    print("method length (lines): count")
    for length, count in stats["method_line_histogram"].items():
        print(f"  {str(length).rjust(5)}: {count}")
    print(f"warnings: {stats['warning_count']}")
    _print_warnings(stats["warnings"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srcsnap",
        description="Render source code into labeled grayscale snapshots "
        "and build method-name classification datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reformat", help="print the reformatted text of one file")
    p.add_argument("input")
    _add_window_flags(p)
    p.set_defaults(func=_cmd_reformat)

    p = sub.add_parser("redact", help="print the redacted (reformatted) text of one file")
    p.add_argument("input")
    _add_window_flags(p)
    p.set_defaults(func=_cmd_redact)

    p = sub.add_parser("snapshot", help="write one snapshot PNG for a file")
    p.add_argument("input")
    p.add_argument("--variant", choices=IMAGE_VARIANTS, default=REFORMATTED,
                   help="which pipeline to render (default reformatted)")
    p.add_argument("-o", "--out", help="output PNG path (default <input>.<variant>.png)")
    p.add_argument("--out-size", type=int, default=512,
                   help="square output size in pixels (default 512)")
    _add_window_flags(p)
    p.set_defaults(func=_cmd_snapshot)

    p = sub.add_parser("build", help="build a top-K dataset from a corpus")
    p.add_argument("corpus", help="directory containing train/ validation/ test/")
    p.add_argument("-o", "--out", required=True, help="output dataset directory")
    p.add_argument("--top-k", type=int, default=10,
                   help="number of most frequent labels to keep (default 10)")
    p.add_argument("--cap", type=int, default=1000,
                   help="max training instances per label (default 1000)")
    p.add_argument("--variants", default=",".join(IMAGE_VARIANTS),
                   help="comma-separated image variants to render "
                   "(default all three; empty string for tokens only)")
    p.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker threads (default: processor count)")
    p.add_argument("--out-size", type=int, default=512,
                   help="square output size in pixels (default 512)")
    _add_window_flags(p)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("stats", help="print corpus label and length statistics")
    p.add_argument("corpus")
    p.set_defaults(func=_cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InsufficientLabels as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
