"""Reformatted-variant production: comment stripping, reindentation, windowing."""

from __future__ import annotations

from dataclasses import dataclass

from .lexing import (
    COMMENT_KINDS,
    NEWLINE,
    PUNCTUATION,
    RAW_TEXT,
    WHITESPACE,
    Token,
    lex_with_degradation,
)
from .source import REFORMATTED, SourceText


@dataclass(frozen=True)
class WindowConfig:
    """Fixed character window every rendered snapshot must fit in."""

    max_rows: int = 30
    max_cols: int = 120
    indent_unit: int = 4
    tab_width: int = 4

    def __post_init__(self):
        if self.max_rows < 1:
            raise ValueError("max_rows must be >= 1")
        if self.max_cols < 1:
            raise ValueError("max_cols must be >= 1")
        if self.indent_unit < 0:
            raise ValueError("indent_unit must be >= 0")
        if self.tab_width < 1:
            raise ValueError("tab_width must be >= 1")


def strip_comments(tokens: list[Token]) -> list[Token]:
    """Drop comment tokens; everything else is preserved in order."""
    return [t for t in tokens if t.kind not in COMMENT_KINDS]


def normalize_layout(
    tokens: list[Token], cfg: WindowConfig = WindowConfig()
) -> SourceText:
    """Re-emit a comment-free token stream with canonical layout.

    Leading indentation becomes brace_depth * indent_unit spaces, runs of
    intra-line whitespace collapse to a single space, blank lines vanish,
    and trailing whitespace is dropped. A RAW_TEXT tail (lexer degradation)
    is passed through verbatim, since its content cannot be relayouted.
    """
    out_lines: list[str] = []
    depth = 0
    # Current line as Token objects with None marking a collapsed space.
    parts: list[Token | None] = []

    def flush(raw_tail: str | None = None) -> None:
        nonlocal depth, parts
        if raw_tail is None:
            while parts and parts[-1] is None:
                parts.pop()
            if not parts:
                parts = []
                return
        closers = 0
        for p in parts:
            if p is not None and p.kind == PUNCTUATION and p.lexeme == "}":
                closers += 1
            else:
                break
        indent = max(0, depth - closers) * cfg.indent_unit
        pieces = [" " if p is None else p.lexeme for p in parts]
        line = " " * indent + "".join(pieces) if parts else ""
        for p in parts:
            if p is not None and p.kind == PUNCTUATION:
                if p.lexeme == "{":
                    depth += 1
                elif p.lexeme == "}":
                    depth = max(0, depth - 1)
        if raw_tail is not None:
            segments = raw_tail.split("\n")
            out_lines.append(line + segments[0])
            out_lines.extend(segments[1:])
        else:
            out_lines.append(line)
        parts = []

    for t in tokens:
        if t.kind == NEWLINE:
            flush()
        elif t.kind == WHITESPACE:
            if parts and parts[-1] is not None:
                parts.append(None)
        elif t.kind == RAW_TEXT:
            flush(raw_tail=t.lexeme)
        else:
            parts.append(t)
    flush()
    return SourceText("\n".join(out_lines), variant=REFORMATTED)


def truncate_window(src: SourceText, cfg: WindowConfig = WindowConfig()) -> SourceText:
    """Hard-cap the text at max_rows lines of max_cols characters each.

    Lines that fit pass through byte-identical. A cut line also loses any
    trailing whitespace the cut exposed, so a cut can never leave a line
    ending in whitespace that a second pipeline pass would collapse away.
    """
    lines = src.lines()
    if len(lines) > cfg.max_rows:
        lines = lines[: cfg.max_rows]
    lines = [
        ln if len(ln) <= cfg.max_cols else ln[: cfg.max_cols].rstrip(" ")
        for ln in lines
    ]
    return SourceText("\n".join(lines), language=src.language, variant=src.variant)


def reformat_with_warnings(
    src: SourceText, cfg: WindowConfig = WindowConfig()
) -> tuple[SourceText, list[str]]:
    """Full reformatting pipeline, also reporting lexer degradations."""
    tokens, warnings = lex_with_degradation(src.text)
    normalized = normalize_layout(strip_comments(tokens), cfg)
    return truncate_window(normalized, cfg), warnings


def reformat(src: SourceText, cfg: WindowConfig = WindowConfig()) -> SourceText:
    """Comment-free, reindented, window-capped version of ``src``."""
    return reformat_with_warnings(src, cfg)[0]
