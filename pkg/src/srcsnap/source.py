"""Source text container and ingestion normalization."""

from __future__ import annotations

from dataclasses import dataclass

RAW = "raw"
REFORMATTED = "reformatted"
REDACTED = "redacted"

VARIANTS = (RAW, REFORMATTED, REDACTED)


@dataclass(frozen=True)
class SourceText:
    """A piece of program text plus its place in the pipeline.

    ``text`` uses a single ``\\n`` as line delimiter; ingestion guarantees
    there are no carriage returns or tabs left.
    """

    text: str
    language: str = "java-like"
    variant: str = RAW

    def lines(self) -> list[str]:
        return self.text.split("\n") if self.text else []


def ingest(raw: str | bytes, tab_width: int = 4) -> SourceText:
    """Normalize incoming file content to pipeline form.

    CRLF/CR become LF, a leading BOM is dropped, and every tab is expanded
    to ``tab_width`` spaces so all later column accounting (truncation,
    rendering) works in a single width unit. Bytes are decoded as UTF-8
    with replacement so odd corpus files never abort a build.
    """
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8", errors="replace")
    if raw.startswith("\ufeff"):
        raw = raw[1:]
    text = raw.replace("\r\n", "\n").replace("\r", "\n")
    text = text.replace("\t", " " * tab_width)
    return SourceText(text=text)
