"""Dataset builder contract: vocab, capping, artifacts, manifest integrity."""

import json
from collections import Counter
from pathlib import Path

import pytest

from srcsnap.dataset import (
    InsufficientLabels,
    build_dataset,
    build_vocab,
    cap_per_label,
    load_manifest,
    tokenize_body,
)
from srcsnap.extract import MethodRecord
from srcsnap.png import decode_png
from srcsnap.redact import redact
from srcsnap.reformat import WindowConfig, reformat
from srcsnap.render import RenderConfig, render_snapshot
from srcsnap.source import SourceText

from genjava import write_labeled_corpus


def rec(label, path="F.java", span=(0, 0), split="train", body="(){}"):
    return MethodRecord(label, SourceText(body), path, span, split)


def records_with_counts(counts):
    out = []
    for label, n in counts.items():
        out.extend(rec(label, path=f"{label}_{i}.java") for i in range(n))
    return out


class TestBuildVocab:
    def test_top_k_by_frequency(self):
        vocab = build_vocab(records_with_counts({"a": 5, "b": 3, "c": 1}), 2)
        assert vocab.labels == ("a", "b")
        assert vocab.frequency == {"a": 5, "b": 3}

    def test_lexicographic_tie_break(self):
        vocab = build_vocab(records_with_counts({"b": 3, "a": 3}), 1)
        assert vocab.labels == ("a",)

    def test_insufficient_labels(self):
        with pytest.raises(InsufficientLabels):
            build_vocab(records_with_counts({"a": 5}), 2)

    def test_matches_brute_force_counter(self):
        import random

        rng = random.Random(2)
        recs = [rec(rng.choice("abcdefgh")) for _ in range(500)]
        vocab = build_vocab(recs, 4)
        freq = Counter(r.label for r in recs)
        expected = sorted(freq, key=lambda l: (-freq[l], l))[:4]
        assert list(vocab.labels) == expected
        assert all(vocab.frequency[l] == freq[l] for l in vocab.labels)


class TestCapPerLabel:
    def test_overfull_label_capped_exactly(self):
        recs = records_with_counts({"hot": 1500})
        assert len(cap_per_label(recs, 1000, seed=0)) == 1000

    def test_underfull_label_kept_whole(self):
        recs = records_with_counts({"cool": 800})
        assert len(cap_per_label(recs, 1000, seed=0)) == 800

    def test_same_seed_same_selection(self):
        recs = records_with_counts({"a": 50, "b": 40})
        first = cap_per_label(recs, 10, seed=7)
        second = cap_per_label(recs, 10, seed=7)
        assert first == second

    def test_different_seed_different_selection(self):
        recs = records_with_counts({"a": 200})
        a = cap_per_label(recs, 20, seed=1)
        b = cap_per_label(recs, 20, seed=2)
        assert a != b

    def test_selection_is_input_order_independent(self):
        recs = records_with_counts({"a": 90, "b": 30})
        shuffled = list(reversed(recs))
        assert cap_per_label(recs, 12, seed=3) == cap_per_label(shuffled, 12, seed=3)

    def test_caps_apply_per_label(self):
        recs = records_with_counts({"a": 30, "b": 5})
        kept = Counter(r.label for r in cap_per_label(recs, 10, seed=0))
        assert kept == {"a": 10, "b": 5}


class TestTokenizeBody:
    def test_paper_token_example(self):
        seq = tokenize_body(rec("f", body="int i = 2;"))
        assert list(seq.tokens) == ["int", "i", "=", "2", ";"]
        assert seq.label == "f"

    def test_empty_body(self):
        assert tokenize_body(rec("f", body="")).tokens == ()

    def test_comments_and_whitespace_dropped(self):
        seq = tokenize_body(rec("f", body="(int a) { // c\n  return a; /* d */ }"))
        assert list(seq.tokens) == ["(", "int", "a", ")", "{", "return", "a", ";", "}"]


@pytest.fixture(scope="module")
def built(tmp_path_factory):
    root = tmp_path_factory.mktemp("corpus")
    out = tmp_path_factory.mktemp("dataset")
    plan = {
        "train": {"getValue": 8, "setValue": 6, "compute": 5, "reset": 2},
        "validation": {"getValue": 2, "setValue": 2, "compute": 1, "reset": 1},
        "test": {"getValue": 2, "setValue": 1, "compute": 2, "reset": 1},
    }
    write_labeled_corpus(root, plan, seed=11)
    manifest = build_dataset(
        root,
        out,
        top_k=3,
        cap=5,
        variants=("original", "reformatted", "redacted"),
        window=WindowConfig(),
        render_cfg=RenderConfig(output_size=128),
        seed=4,
    )
    return root, out, manifest, plan


class TestBuildDataset:
    def test_vocab_and_caps(self, built):
        _, _, manifest, plan = built
        assert manifest.labels == ("getValue", "setValue", "compute")
        assert manifest.counts["train"] == {"getValue": 5, "setValue": 5, "compute": 5}
        assert manifest.counts["validation"] == {"getValue": 2, "setValue": 2, "compute": 1}
        assert manifest.counts["test"] == {"getValue": 2, "setValue": 1, "compute": 2}

    def test_out_of_vocab_label_absent(self, built):
        _, _, manifest, _ = built
        assert all(e["label"] != "reset" for e in manifest.entries)
        assert "reset" not in manifest.labels

    def test_every_referenced_file_exists(self, built):
        _, out, manifest, _ = built
        for e in manifest.entries:
            assert (out / e["image_path"]).is_file()
            assert (out / e["tokens_path"]).is_file()

    def test_entries_sorted_and_consistent(self, built):
        _, _, manifest, _ = built
        keys = [
            (e["split"], e["label"], e["source_path"], e["span"], e["variant"])
            for e in manifest.entries
        ]
        assert keys == sorted(keys)
        per_variant = Counter(e["variant"] for e in manifest.entries)
        assert len(set(per_variant.values())) == 1  # same records in each variant

    def test_split_matches_directory(self, built):
        _, _, manifest, _ = built
        for e in manifest.entries:
            assert e["source_path"].startswith(e["split"] + "/")
            assert e["image_path"].split("/")[1] == e["split"]

    def test_token_files_have_label_and_tokens(self, built):
        _, out, manifest, _ = built
        entry = manifest.entries[0]
        payload = json.loads((out / entry["tokens_path"]).read_text())
        assert payload["label"] == entry["label"]
        assert isinstance(payload["tokens"], list) and payload["tokens"]
        assert payload["tokens"][0] == "("  # bodies start at the parameter list

    def test_redacted_derives_from_reformatted_text(self, built):
        root, out, manifest, _ = built
        entry = next(e for e in manifest.entries if e["variant"] == "redacted")
        src_file = root / entry["source_path"]
        from srcsnap.extract import extract_methods
        from srcsnap.source import ingest

        records, _ = extract_methods(
            ingest(src_file.read_bytes()).text, entry["source_path"], entry["split"]
        )
        record = next(r for r in records if list(r.span) == entry["span"])
        expected = render_snapshot(
            redact(reformat(record.body)), RenderConfig(output_size=128)
        )
        actual = decode_png((out / entry["image_path"]).read_bytes())
        assert (actual.pixels == expected.pixels).all()

    def test_manifest_round_trip(self, built):
        _, out, manifest, _ = built
        loaded = load_manifest(out / "manifest.jsonl")
        assert loaded == manifest

    def test_rebuild_is_byte_identical(self, built, tmp_path):
        root, out, _, _ = built
        build_dataset(
            root,
            tmp_path,
            top_k=3,
            cap=5,
            variants=("original", "reformatted", "redacted"),
            window=WindowConfig(),
            render_cfg=RenderConfig(output_size=128),
            seed=4,
        )
        first = (out / "manifest.jsonl").read_bytes()
        second = (tmp_path / "manifest.jsonl").read_bytes()
        assert first == second


def test_tokens_only_build(tmp_path):
    root = tmp_path / "corpus"
    plan = {
        "train": {"read": 3, "write": 2},
        "validation": {"read": 1, "write": 1},
        "test": {"read": 1, "write": 1},
    }
    write_labeled_corpus(root, plan, seed=5)
    manifest = build_dataset(root, tmp_path / "ds", top_k=2, cap=10, variants=(), seed=0)
    assert manifest.variants == ()
    assert all(e["variant"] == "tokens" for e in manifest.entries)
    assert all(e["image_path"] is None for e in manifest.entries)
    assert len(manifest.entries) == 9
    assert not (tmp_path / "ds" / "reformatted").exists()
    for e in manifest.entries:
        assert (tmp_path / "ds" / e["tokens_path"]).is_file()


def test_insufficient_labels_propagates(tmp_path):
    root = tmp_path / "corpus"
    plan = {"train": {"only": 2}, "validation": {"only": 1}, "test": {"only": 1}}
    write_labeled_corpus(root, plan, seed=6)
    with pytest.raises(InsufficientLabels):
        build_dataset(root, tmp_path / "ds", top_k=5, cap=10, variants=(), seed=0)


def test_missing_split_directory_raises(tmp_path):
    (tmp_path / "train").mkdir()
    with pytest.raises(FileNotFoundError):
        build_dataset(tmp_path, tmp_path / "ds", top_k=1, cap=1, variants=(), seed=0)


def test_unknown_variant_rejected(tmp_path):
    with pytest.raises(ValueError):
        build_dataset(tmp_path, tmp_path / "ds", variants=("sepia",), seed=0)
