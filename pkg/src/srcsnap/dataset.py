"""Top-K method-name dataset construction.

Mines methods from a corpus laid out as <root>/{train,validation,test}/**/*.java,
keeps the K most frequent training-split names, caps the training instances
per label with a seeded shuffle, and writes the requested snapshot variants
plus one token file per method. A line-delimited JSON manifest (header line
followed by one entry per artifact) records everything needed to regenerate
the build byte for byte.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import lexing
from .extract import MethodRecord, extract_methods
from .redact import redact
from .reformat import WindowConfig, reformat
from .render import RenderConfig, snapshot_png
from .source import SourceText, ingest

SPLITS = ("train", "validation", "test")

ORIGINAL = "original"
REFORMATTED = "reformatted"
REDACTED = "redacted"
TOKENS = "tokens"
IMAGE_VARIANTS = (ORIGINAL, REFORMATTED, REDACTED)


class InsufficientLabels(ValueError):
    """The training split has fewer distinct method names than requested."""


@dataclass(frozen=True)
class LabelVocab:
    """The K most frequent training-split labels, most frequent first."""

    labels: tuple[str, ...]
    frequency: dict[str, int]

    @property
    def k(self) -> int:
        return len(self.labels)

    def __contains__(self, label: str) -> bool:
        return label in self.frequency


@dataclass(frozen=True)
class TokenSequence:
    label: str
    tokens: tuple[str, ...]


@dataclass
class DatasetManifest:
    """In-memory form of manifest.jsonl: one header plus ordered entries."""

    config_fingerprint: str
    seed: int
    top_k: int
    cap: int
    variants: tuple[str, ...]
    labels: tuple[str, ...]
    label_frequencies: dict[str, int]
    counts: dict[str, dict[str, int]]
    warnings: list[str] = field(default_factory=list)
    entries: list[dict] = field(default_factory=list)

    def header(self) -> dict:
        return {
            "config_fingerprint": self.config_fingerprint,
            "seed": self.seed,
            "top_k": self.top_k,
            "cap": self.cap,
            "variants": list(self.variants),
            "labels": list(self.labels),
            "label_frequencies": dict(self.label_frequencies),
            "counts": {s: dict(c) for s, c in self.counts.items()},
            "warnings": list(self.warnings),
        }

    def write(self, path: Path) -> None:
        lines = [json.dumps(self.header(), ensure_ascii=False)]
        lines.extend(json.dumps(e, ensure_ascii=False) for e in self.entries)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_manifest(path: Path | str) -> DatasetManifest:
    with open(path, encoding="utf-8") as fh:
        header = json.loads(fh.readline())
        entries = [json.loads(line) for line in fh if line.strip()]
    return DatasetManifest(
        config_fingerprint=header["config_fingerprint"],
        seed=header["seed"],
        top_k=header["top_k"],
        cap=header["cap"],
        variants=tuple(header["variants"]),
        labels=tuple(header["labels"]),
        label_frequencies=header["label_frequencies"],
        counts=header["counts"],
        warnings=header["warnings"],
        entries=entries,
    )


def config_fingerprint(
    window: WindowConfig,
    render: RenderConfig,
    top_k: int,
    cap: int,
    variants: tuple[str, ...],
    seed: int,
) -> str:
    """Hash of every setting that can change output bytes."""
    blob = json.dumps(
        {
            "window": asdict(window),
            "render": asdict(render),
            "top_k": top_k,
            "cap": cap,
            "variants": list(variants),
            "seed": seed,
        },
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def record_id(record: MethodRecord) -> str:
    """Stable 64-bit hex id from the record's corpus coordinates."""
    key = f"{record.split}:{record.source_path}:{record.span[0]}:{record.span[1]}"
    return hashlib.sha256(key.encode("utf-8")).hexdigest()[:16]


def scan_corpus(
    corpus_root: Path | str, tab_width: int = 4
) -> tuple[list[MethodRecord], list[str]]:
    """Extract every method from every .java file under the three splits.

    Files are visited in sorted path order so the result is independent of
    filesystem enumeration order. Unreadable files become warnings.
    """
    root = Path(corpus_root)
    records: list[MethodRecord] = []
    warnings: list[str] = []
    for split in SPLITS:
        split_dir = root / split
        if not split_dir.is_dir():
            raise FileNotFoundError(f"missing corpus split directory: {split_dir}")
        paths = sorted(split_dir.rglob("*.java"), key=lambda p: p.as_posix())
        for path in paths:
            rel = path.relative_to(root).as_posix()
            try:
                raw = path.read_bytes()
            except OSError as exc:
                warnings.append(f"{rel}: unreadable, skipped ({exc})")
                continue
            src = ingest(raw, tab_width=tab_width)
            recs, warns = extract_methods(src.text, source_path=rel, split=split)
            records.extend(recs)
            warnings.extend(warns)
    return records, warnings


def build_vocab(train_records: list[MethodRecord], k: int) -> LabelVocab:
    """Top-k labels by training frequency; ties broken lexicographically."""
    if k < 1:
        raise ValueError("k must be >= 1")
    freq = Counter(r.label for r in train_records)
    if len(freq) < k:
        raise InsufficientLabels(
            f"corpus has {len(freq)} distinct training labels, need {k}"
        )
    ranked = sorted(freq.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    return LabelVocab(
        labels=tuple(label for label, _ in ranked),
        frequency={label: count for label, count in ranked},
    )


def cap_per_label(
    records: list[MethodRecord], cap: int, seed: int
) -> list[MethodRecord]:
    """Keep at most `cap` records per label via a per-label seeded shuffle.

    Selection depends only on (seed, label, record coordinates), never on
    input order. Survivors come back in (source_path, span) order.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    by_label: dict[str, list[MethodRecord]] = {}
    for rec in records:
        by_label.setdefault(rec.label, []).append(rec)
    kept: list[MethodRecord] = []
    for label in sorted(by_label):
        group = sorted(by_label[label], key=lambda r: (r.source_path, r.span))
        if len(group) > cap:
            digest = hashlib.sha256(f"{seed}:{label}".encode("utf-8")).digest()
            rng = random.Random(int.from_bytes(digest[:8], "big"))
            rng.shuffle(group)
            group = sorted(group[:cap], key=lambda r: (r.source_path, r.span))
        kept.extend(group)
    return kept


def tokenize_body(record: MethodRecord) -> TokenSequence:
    """Lexemes of the body in source order, without whitespace or comments."""
    tokens, _ = lexing.lex_with_degradation(record.body.text)
    drop = lexing.COMMENT_KINDS | lexing.SPACING_KINDS
    return TokenSequence(
        label=record.label,
        tokens=tuple(t.lexeme for t in tokens if t.kind not in drop),
    )


def _normalize_variants(variants: tuple[str, ...] | list[str]) -> tuple[str, ...]:
    seen = []
    for v in variants:
        if v not in IMAGE_VARIANTS:
            raise ValueError(f"unknown variant {v!r}; expected one of {IMAGE_VARIANTS}")
        if v not in seen:
            seen.append(v)
    return tuple(v for v in IMAGE_VARIANTS if v in seen)


def _emit_record(
    record: MethodRecord,
    out_dir: Path,
    variants: tuple[str, ...],
    window: WindowConfig,
    render_cfg: RenderConfig,
) -> tuple[list[dict], list[str]]:
    """Write all artifacts for one record; returns (entries, warnings)."""
    rid = record_id(record)
    entries: list[dict] = []
    warnings: list[str] = []
    tokens_rel = f"tokens/{record.split}/{rid}.json"
    seq = tokenize_body(record)
    payload = {"label": seq.label, "tokens": list(seq.tokens)}
    try:
        (out_dir / tokens_rel).write_text(
            json.dumps(payload, ensure_ascii=False), encoding="utf-8"
        )
    except OSError as exc:
        warnings.append(f"{record.source_path}: token write failed ({exc})")
        return entries, warnings

    base = {
        "label": record.label,
        "split": record.split,
        "source_path": record.source_path,
        "span": list(record.span),
        "tokens_path": tokens_rel,
        "id": rid,
    }
    if not variants:
        entries.append({"image_path": None, "variant": TOKENS, **base})
        return entries, warnings

    reformatted: SourceText | None = None
    for variant in variants:
        image_rel = f"{variant}/{record.split}/{record.label}/{rid}.png"
        if variant == ORIGINAL:
            text = record.body
        else:
            if reformatted is None:
                reformatted = reformat(record.body, window)
            text = reformatted if variant == REFORMATTED else redact(reformatted)
        try:
            png = snapshot_png(text, render_cfg)
            (out_dir / image_rel).write_bytes(png)
        except OSError as exc:
            warnings.append(
                f"{record.source_path}: {variant} image write failed ({exc})"
            )
            continue
        entries.append({"image_path": image_rel, "variant": variant, **base})
    return entries, warnings


def build_dataset(
    corpus_root: Path | str,
    out_dir: Path | str,
    top_k: int = 10,
    cap: int = 1000,
    variants: tuple[str, ...] = IMAGE_VARIANTS,
    window: WindowConfig | None = None,
    render_cfg: RenderConfig | None = None,
    seed: int = 0,
    jobs: int | None = None,
) -> DatasetManifest:
    """Run the full mining + capping + rendering pipeline and write a manifest.

    The manifest and every artifact are a pure function of (corpus bytes,
    top_k, cap, variants, configs, seed): workers run in parallel but all
    ordering is reimposed in a final sort before anything is written.
    """
    window = window or WindowConfig()
    render_cfg = render_cfg or RenderConfig()
    variants = _normalize_variants(variants)
    out = Path(out_dir)
    jobs = jobs or os.cpu_count() or 1

    records, warnings = scan_corpus(corpus_root, tab_width=window.tab_width)
    train = [r for r in records if r.split == "train"]
    vocab = build_vocab(train, top_k)

    retained = [r for r in records if r.split != "train" and r.label in vocab]
    retained += cap_per_label([r for r in train if r.label in vocab], cap, seed)
    retained.sort(key=lambda r: (r.split, r.label, r.source_path, r.span))

    counts: dict[str, dict[str, int]] = {
        split: {label: 0 for label in vocab.labels} for split in SPLITS
    }
    for rec in retained:
        counts[rec.split][rec.label] += 1

    for split in SPLITS:
        (out / "tokens" / split).mkdir(parents=True, exist_ok=True)
        for variant in variants:
            for label in vocab.labels:
                (out / variant / split / label).mkdir(parents=True, exist_ok=True)

    entries: list[dict] = []
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_emit_record, rec, out, variants, window, render_cfg)
            for rec in retained
        ]
        for future in futures:
            recs, warns = future.result()
            entries.extend(recs)
            warnings.extend(warns)
    entries.sort(
        key=lambda e: (
            e["split"],
            e["label"],
            e["source_path"],
            e["span"],
            e["variant"],
        )
    )

    manifest = DatasetManifest(
        config_fingerprint=config_fingerprint(
            window, render_cfg, top_k, cap, variants, seed
        ),
        seed=seed,
        top_k=top_k,
        cap=cap,
        variants=variants,
        labels=vocab.labels,
        label_frequencies=vocab.frequency,
        counts=counts,
        warnings=sorted(warnings),
        entries=entries,
    )
    manifest.write(out / "manifest.jsonl")
    return manifest


def corpus_stats(corpus_root: Path | str) -> dict:
    """Label frequencies per split, method length histogram, warning count."""
    records, warnings = scan_corpus(corpus_root)
    freq = {
        split: dict(
            Counter(r.label for r in records if r.split == split).most_common()
        )
        for split in SPLITS
    }
    lengths = Counter(r.span[1] - r.span[0] + 1 for r in records)
    return {
        "label_frequency": freq,
        "method_line_histogram": dict(sorted(lengths.items())),
        "method_count": len(records),
        "warning_count": len(warnings),
        "warnings": sorted(warnings),
    }
