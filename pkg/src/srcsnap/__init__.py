"""srcsnap: deterministic source-code snapshot pipeline.

Turns Java-like source into labeled grayscale images (original,
reformatted, redacted) and token sequences, and builds top-K
method-name classification datasets with reproducible manifests.
"""

from .dataset import (
    IMAGE_VARIANTS,
    ORIGINAL,
    REDACTED,
    REFORMATTED,
    DatasetManifest,
    InsufficientLabels,
    LabelVocab,
    TokenSequence,
    build_dataset,
    build_vocab,
    cap_per_label,
    load_manifest,
    tokenize_body,
)
from .extract import MethodRecord, extract_methods
from .lexing import LexError, Token, lex, lex_with_degradation
from .png import decode_png, encode_png
from .redact import redact, redact_char
from .reformat import (
    WindowConfig,
    reformat,
    reformat_with_warnings,
    strip_comments,
    truncate_window,
)
from .render import (
    RenderConfig,
    WindowOverflow,
    render_canvas,
    render_snapshot,
    resize_box,
    snapshot_png,
)
from .source import SourceText, ingest

__version__ = "0.1.0"

__all__ = [
    "DatasetManifest",
    "IMAGE_VARIANTS",
    "InsufficientLabels",
    "LabelVocab",
    "LexError",
    "MethodRecord",
    "ORIGINAL",
    "REDACTED",
    "REFORMATTED",
    "RenderConfig",
    "SourceText",
    "Token",
    "TokenSequence",
    "WindowConfig",
    "WindowOverflow",
    "build_dataset",
    "build_vocab",
    "cap_per_label",
    "decode_png",
    "encode_png",
    "extract_methods",
    "ingest",
    "lex",
    "lex_with_degradation",
    "load_manifest",
    "redact",
    "redact_char",
    "reformat",
    "reformat_with_warnings",
    "render_canvas",
    "render_snapshot",
    "resize_box",
    "snapshot_png",
    "strip_comments",
    "tokenize_body",
    "truncate_window",
]
