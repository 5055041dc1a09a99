"""Redacted-variant production: structure survives, identity does not."""

from __future__ import annotations

from .source import REDACTED, SourceText


def redact_char(c: str) -> str:
    """Map any alphanumeric character to 'x'; everything else is kept.

    Unicode letters and digits count as alphanumeric here so no identifier
    content can leak through the redacted variant. Underscore is not
    alphanumeric and survives, like other punctuation.
    """
    return "x" if c.isalnum() else c


def redact(src: SourceText) -> SourceText:
    """Character-wise redaction; line structure and lengths are unchanged."""
    return SourceText(
        "".join(redact_char(c) for c in src.text),
        language=src.language,
        variant=REDACTED,
    )
