"""End-to-end acceptance gate for the snapshot pipeline.

Each test prints one ACCEPTANCE PASS/FAIL line so the suite doubles as a
sign-off checklist. Criteria covered: byte-level build determinism, the
redaction contract, the 30x120 window bound with reformat idempotence,
lossless lexing with honest degradation flags, renderer fixed points, and
dataset shape against a brute-force oracle.
"""

import hashlib
import random
import re
import string
import time
from collections import Counter
from pathlib import Path

import numpy as np
import pytest

from srcsnap.dataset import build_dataset, load_manifest
from srcsnap.lexing import lex, lex_with_degradation
from srcsnap.png import decode_png, encode_png
from srcsnap.redact import redact
from srcsnap.reformat import WindowConfig, reformat, reformat_with_warnings
from srcsnap.render import RenderConfig, render_snapshot, resize_box
from srcsnap.image import SnapshotImage
from srcsnap.source import SourceText, ingest

from genjava import LABELS, gen_fuzz_file, gen_method, write_labeled_corpus


def _report(name: str):
    """Context manager printing one PASS/FAIL line per criterion."""

    class _Reporter:
        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            verdict = "PASS" if exc_type is None else "FAIL"
            print(f"ACCEPTANCE {verdict}: {name}")
            return False

    return _Reporter()


def _tree_digest(root: Path) -> dict[str, str]:
    return {
        p.relative_to(root).as_posix(): hashlib.sha256(p.read_bytes()).hexdigest()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }


# --- criterion: determinism ------------------------------------------------


def test_build_determinism(tmp_path):
    with _report("determinism (double build, byte-identical, < 2 min)"):
        corpus = tmp_path / "corpus"
        plan = {
            "train": {label: 10 for label in LABELS[:12]},  # 120 files
            "validation": {label: 3 for label in LABELS[:12]},  # 36 files
            "test": {label: 4 for label in LABELS[:11]},  # 44 files
        }
        write_labeled_corpus(corpus, plan, seed=31, comments=True, noise=True)
        # Two files gain a degenerate tail so warning paths are exercised too.
        for name in ("train/file_00001.java", "test/file_00002.java"):
            path = corpus / name
            path.write_text(
                path.read_text(encoding="utf-8") + '\nString oops = "never closed\n',
                encoding="utf-8",
            )
        n_files = sum(1 for _ in corpus.rglob("*.java"))
        assert n_files == 200

        cfg = dict(top_k=10, cap=8, seed=9, render_cfg=RenderConfig(output_size=256))
        start = time.monotonic()
        first = build_dataset(corpus, tmp_path / "out1", **cfg)
        second = build_dataset(corpus, tmp_path / "out2", **cfg)
        elapsed = time.monotonic() - start

        digests1 = _tree_digest(tmp_path / "out1")
        digests2 = _tree_digest(tmp_path / "out2")
        assert digests1 == digests2
        assert first.entries and first.entries == second.entries
        assert any("unterminated" in w for w in first.warnings)
        assert elapsed < 120, f"double build took {elapsed:.1f}s"


# --- criterion: redaction fidelity -----------------------------------------


def test_redaction_fidelity():
    with _report("redaction fidelity (example + 10,000-line property suite)"):
        assert redact(SourceText("int i = 2;")).text == "xxx x = x;"

        rng = random.Random(97)
        pool = string.ascii_letters + string.digits + "_ \t(){}[];=+-*/<>.,\"'éπ値"
        for _ in range(10_000):
            line = "".join(rng.choice(pool) for _ in range(rng.randint(0, 80)))
            out = redact(SourceText(line)).text
            assert len(out) == len(line)
            assert redact(SourceText(out)).text == out
            for src_c, out_c in zip(line, out):
                if src_c.isalnum():
                    assert out_c == "x"
                else:
                    assert out_c == src_c


# --- criteria: window bound + idempotence, lexer round-trip -----------------


@pytest.fixture(scope="module")
def fuzz_corpus(tmp_path_factory):
    root = tmp_path_factory.mktemp("fuzz")
    rng = random.Random(887)
    flags = []
    for i in range(1000):
        text, degenerate = gen_fuzz_file(rng)
        (root / f"fuzz_{i:04d}.java").write_text(text, encoding="utf-8")
        flags.append(degenerate)
    assert 10 < sum(flags) < 300  # both populations well represented
    return root, flags


def test_window_bound_and_idempotence(fuzz_corpus):
    with _report("window bound + reformat idempotence (1,000 fuzz files)"):
        root, _ = fuzz_corpus
        window = WindowConfig()
        for path in sorted(root.iterdir()):
            src = ingest(path.read_bytes())
            out = reformat(src, window)
            lines = out.lines()
            assert len(lines) <= 30, path.name
            assert all(len(line) <= 120 for line in lines), path.name
            again = reformat(SourceText(out.text), window)
            assert again.text == out.text, path.name


def test_lexer_round_trip(fuzz_corpus):
    with _report("lexer round-trip (lossless or flagged in warnings)"):
        root, flags = fuzz_corpus
        degraded_seen = 0
        for path, degenerate in zip(sorted(root.iterdir()), flags):
            text = ingest(path.read_bytes()).text
            tokens, warnings = lex_with_degradation(text)
            assert "".join(t.lexeme for t in tokens) == text, path.name
            if degenerate:
                assert warnings, f"{path.name}: degradation not flagged"
                degraded_seen += 1
            else:
                assert not warnings, f"{path.name}: spurious warning"
                clean = lex(text)
                assert "".join(t.lexeme for t in clean) == text, path.name
        assert degraded_seen == sum(flags)


# --- criterion: renderer ----------------------------------------------------


def test_renderer_fixed_points():
    with _report("renderer (empty=255, PNG round-trip x100, 2x2->128)"):
        img = render_snapshot(SourceText(""), RenderConfig())
        assert img.pixels.shape == (512, 512)
        assert (img.pixels == 255).all()

        rng = np.random.default_rng(1234)
        for _ in range(100):
            h, w = int(rng.integers(1, 80)), int(rng.integers(1, 80))
            pixels = rng.integers(0, 256, size=(h, w), dtype=np.uint8)
            decoded = decode_png(encode_png(SnapshotImage(pixels)))
            assert (decoded.pixels == pixels).all()

        quad = SnapshotImage(np.array([[0, 0], [255, 255]], dtype=np.uint8))
        assert resize_box(quad, 1, 1).pixels.tolist() == [[128]]


# --- criterion: dataset shape ------------------------------------------------


def test_dataset_shape(tmp_path):
    with _report("dataset shape (k=10, cap=1000 vs brute-force oracle)"):
        corpus = tmp_path / "corpus"
        train_plan = dict(
            zip(LABELS, [1100, 500, 400, 350, 300, 250, 200, 150, 120, 100, 80, 60])
        )
        plan = {
            "train": train_plan,
            "validation": {label: 5 for label in list(train_plan)[:11]},
            "test": {label: 5 for label in list(train_plan)[:11]},
        }
        write_labeled_corpus(corpus, plan, seed=55, methods_per_file=4)

        # Brute-force oracle: count method declarations straight off the text.
        sig = re.compile(r"^\s*public \w+(?:<\w+>)? (\w+)\(", re.MULTILINE)
        oracle = Counter()
        for path in (corpus / "train").rglob("*.java"):
            oracle.update(sig.findall(path.read_text(encoding="utf-8")))
        assert oracle == Counter(train_plan)
        expected_labels = sorted(oracle, key=lambda l: (-oracle[l], l))[:10]

        manifest = build_dataset(
            corpus, tmp_path / "ds", top_k=10, cap=1000, variants=(), seed=3
        )
        assert len(manifest.labels) == 10
        assert sorted(manifest.labels) == sorted(expected_labels)
        assert manifest.label_frequencies == {
            label: oracle[label] for label in manifest.labels
        }
        for label in manifest.labels:
            assert manifest.counts["train"][label] == min(oracle[label], 1000)
        assert manifest.counts["train"][LABELS[0]] == 1000  # cap actually bites

        reloaded = load_manifest(tmp_path / "ds" / "manifest.jsonl")
        train_entries = Counter(
            e["label"] for e in reloaded.entries if e["split"] == "train"
        )
        assert dict(train_entries) == manifest.counts["train"]
