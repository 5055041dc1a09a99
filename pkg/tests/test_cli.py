"""CLI behavior: outputs, exit codes, flag plumbing, console-script wiring."""

import json
import subprocess
import sys

import pytest

from srcsnap.cli import main
from srcsnap.png import decode_png

from genjava import write_labeled_corpus

SAMPLE = (
    "public class A {\n"
    "    // getter\n"
    "    public int getValue() {\n"
    "        return value; /* cached */\n"
    "    }\n"
    "}\n"
)


@pytest.fixture
def sample_file(tmp_path):
    path = tmp_path / "A.java"
    path.write_text(SAMPLE, encoding="utf-8")
    return path


class TestReformatCommand:
    def test_prints_reformatted_text(self, sample_file, capsys):
        assert main(["reformat", str(sample_file)]) == 0
        out = capsys.readouterr().out
        assert "//" not in out and "/*" not in out
        assert "public class A {" in out
        assert "    public int getValue() {" in out
        assert "        return value;" in out

    def test_missing_file_exits_nonzero(self, tmp_path, capsys):
        assert main(["reformat", str(tmp_path / "nope.java")]) == 1
        captured = capsys.readouterr()
        assert captured.err.startswith("error:")
        assert captured.out == ""

    def test_degraded_input_warns_on_stderr(self, tmp_path, capsys):
        path = tmp_path / "B.java"
        path.write_text('class B { String s = "open\n', encoding="utf-8")
        assert main(["reformat", str(path)]) == 0
        assert "warning:" in capsys.readouterr().err

    def test_max_cols_flag_applies(self, tmp_path, capsys):
        path = tmp_path / "C.java"
        path.write_text("x = " + " + ".join(["y"] * 60) + ";\n", encoding="utf-8")
        assert main(["reformat", str(path), "--max-cols", "40"]) == 0
        out = capsys.readouterr().out
        assert out and all(len(line) <= 40 for line in out.splitlines())


class TestRedactCommand:
    def test_prints_redacted_text(self, sample_file, capsys):
        assert main(["redact", str(sample_file)]) == 0
        out = capsys.readouterr().out
        assert "xxxxxx xxxxx x {" in out
        assert "        xxxxxx xxxxx;" in out
        assert {c for c in out if c.isalnum()} == {"x"}


class TestSnapshotCommand:
    def test_writes_png_and_prints_path(self, sample_file, tmp_path, capsys):
        out_png = tmp_path / "a.png"
        assert main(["snapshot", str(sample_file), "-o", str(out_png)]) == 0
        assert capsys.readouterr().out.strip() == str(out_png)
        img = decode_png(out_png.read_bytes())
        assert img.pixels.shape == (512, 512)

    def test_out_size_flag(self, sample_file, tmp_path):
        out_png = tmp_path / "small.png"
        main(["snapshot", str(sample_file), "-o", str(out_png), "--out-size", "128"])
        assert decode_png(out_png.read_bytes()).pixels.shape == (128, 128)

    def test_default_output_name_uses_variant(self, sample_file, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert main(["snapshot", str(sample_file)]) == 0
        assert (tmp_path / "A.reformatted.png").is_file()

    def test_variants_differ(self, sample_file, tmp_path):
        paths = {}
        for variant in ("original", "reformatted", "redacted"):
            paths[variant] = tmp_path / f"{variant}.png"
            main(["snapshot", str(sample_file), "--variant", variant,
                  "-o", str(paths[variant])])
        data = {v: p.read_bytes() for v, p in paths.items()}
        assert len(set(data.values())) == 3

    def test_deterministic_bytes(self, sample_file, tmp_path):
        a, b = tmp_path / "a.png", tmp_path / "b.png"
        main(["snapshot", str(sample_file), "-o", str(a)])
        main(["snapshot", str(sample_file), "-o", str(b)])
        assert a.read_bytes() == b.read_bytes()


@pytest.fixture(scope="module")
def small_corpus(tmp_path_factory):
    root = tmp_path_factory.mktemp("clicorpus")
    plan = {
        "train": {"read": 6, "write": 4, "close": 3},
        "validation": {"read": 1, "write": 1, "close": 1},
        "test": {"read": 1, "write": 1, "close": 1},
    }
    write_labeled_corpus(root, plan, seed=21)
    return root


class TestBuildCommand:
    def test_build_writes_dataset_and_summary(self, small_corpus, tmp_path, capsys):
        out = tmp_path / "ds"
        code = main([
            "build", str(small_corpus), "-o", str(out),
            "--top-k", "2", "--cap", "5", "--out-size", "64",
        ])
        assert code == 0
        stdout = capsys.readouterr().out
        assert "fingerprint:" in stdout
        assert "labels (2): read, write" in stdout
        assert (out / "manifest.jsonl").is_file()
        header = json.loads((out / "manifest.jsonl").read_text().splitlines()[0])
        assert header["counts"]["train"] == {"read": 5, "write": 4}

    def test_tokens_only_via_empty_variants(self, small_corpus, tmp_path):
        out = tmp_path / "tok"
        assert main([
            "build", str(small_corpus), "-o", str(out),
            "--top-k", "2", "--cap", "5", "--variants", "",
        ]) == 0
        assert (out / "tokens" / "train").is_dir()
        assert not (out / "reformatted").exists()

    def test_top_k_too_large_exits_nonzero(self, small_corpus, tmp_path, capsys):
        code = main(["build", str(small_corpus), "-o", str(tmp_path / "x"),
                     "--top-k", "50"])
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_missing_corpus_exits_nonzero(self, tmp_path, capsys):
        code = main(["build", str(tmp_path / "void"), "-o", str(tmp_path / "x")])
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_bad_variant_exits_nonzero(self, small_corpus, tmp_path, capsys):
        code = main(["build", str(small_corpus), "-o", str(tmp_path / "x"),
                     "--variants", "sepia"])
        assert code == 1
        assert "sepia" in capsys.readouterr().err


class TestStatsCommand:
    def test_counts_match_plan(self, small_corpus, capsys):
        assert main(["stats", str(small_corpus)]) == 0
        out = capsys.readouterr().out
        assert "train: 13 methods, 3 distinct labels" in out
        assert "validation: 3 methods, 3 distinct labels" in out
        assert "test: 3 methods, 3 distinct labels" in out


def test_console_script_entry_point(sample_file):
    proc = subprocess.run(
        [sys.executable, "-m", "srcsnap", "reformat", str(sample_file)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "public int getValue() {" in proc.stdout
