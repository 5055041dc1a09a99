"""Shared fixture: a small dataset built end-to-end through the pipeline CLI."""

import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from genstruct import write_corpus


@pytest.fixture(scope="session")
def built(tmp_path_factory):
    """5-label dataset (6/2/2 files per label, 64px) from `srcsnap build`."""
    root = tmp_path_factory.mktemp("data")
    corpus = root / "corpus"
    write_corpus(corpus, {"train": 6, "validation": 2, "test": 2}, seed=3)
    out = root / "ds"
    subprocess.run(
        ["srcsnap", "build", str(corpus), "-o", str(out),
         "--top-k", "5", "--cap", "100", "--out-size", "64", "--seed", "0"],
        check=True, capture_output=True,
    )
    return out
