"""Method extraction from Java-like source files.

Finds method declarations by scanning the comment-free token stream for an
identifier followed by a balanced parameter list and a brace-delimited body,
with a return type immediately before the name. The extracted text is the
parameter list plus body, "(...) {...}", so the method's own name never
appears in its snapshot. Constructors (no return type) and methods inside
anonymous class bodies are skipped with a warning; nested declarations
inside a kept method are subsumed by the outer one.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lexing
from .lexing import Token
from .source import SourceText

# Keywords that can end a return type ("int foo()", "boolean[] bar()", ...).
_TYPE_KEYWORDS = frozenset(
    {
        "void",
        "boolean",
        "byte",
        "char",
        "short",
        "int",
        "long",
        "float",
        "double",
        "var",
    }
)

# Things that directly precede a *constructor* name rather than a return type.
_DECL_PREFIX_KEYWORDS = frozenset(
    {
        "public",
        "protected",
        "private",
        "static",
        "final",
        "abstract",
        "synchronized",
        "native",
        "strictfp",
        "default",
    }
)


@dataclass(frozen=True)
class MethodRecord:
    """One extracted method body and its provenance within the file.

    ``label`` is the method name; ``body`` starts at the opening parenthesis
    of the parameter list, so the label itself is never part of the body.
    ``span`` is (first_line, last_line), 0-based inclusive, in the ingested
    file. ``split`` names the corpus partition the file came from.
    """

    label: str
    body: SourceText
    source_path: str
    span: tuple[int, int]
    split: str = ""


def _significant(tokens: list[Token]) -> list[Token]:
    drop = lexing.COMMENT_KINDS | lexing.SPACING_KINDS
    return [t for t in tokens if t.kind not in drop]


def _match_forward(tokens: list[Token], start: int, open_ch: str, close_ch: str) -> int:
    """Index of the token closing the bracket at `start`, or -1."""
    depth = 0
    for i in range(start, len(tokens)):
        lex = tokens[i].lexeme
        if tokens[i].kind != lexing.PUNCTUATION:
            continue
        if lex == open_ch:
            depth += 1
        elif lex == close_ch:
            depth -= 1
            if depth == 0:
                return i
    return -1


def _match_backward(tokens: list[Token], close_idx: int, open_ch: str, close_ch: str) -> int:
    depth = 0
    for i in range(close_idx, -1, -1):
        lex = tokens[i].lexeme
        if tokens[i].kind != lexing.PUNCTUATION:
            continue
        if lex == close_ch:
            depth += 1
        elif lex == open_ch:
            depth -= 1
            if depth == 0:
                return i
    return -1


def _is_anonymous_class_brace(tokens: list[Token], brace_idx: int) -> bool:
    """True when the '{' at brace_idx opens `new Type(...) {` (anonymous class)."""
    close = brace_idx - 1
    if close < 0 or tokens[close].lexeme != ")":
        return False
    open_paren = _match_backward(tokens, close, "(", ")")
    if open_paren <= 0:
        return False
    # Walk the type expression back from the '(' to find a `new` keyword:
    # identifiers, dots, and generic brackets are all part of the type name.
    i = open_paren - 1
    while i >= 0:
        tok = tokens[i]
        if tok.kind == lexing.IDENTIFIER:
            i -= 1
        elif tok.kind == lexing.PUNCTUATION and tok.lexeme == ".":
            i -= 1
        elif tok.kind == lexing.OPERATOR and tok.lexeme in ("<", ">", ">>"):
            i -= 1
        else:
            break
    return i >= 0 and tokens[i].kind == lexing.KEYWORD and tokens[i].lexeme == "new"


def _looks_like_return_type(prev: Token | None) -> bool:
    if prev is None:
        return False
    if prev.kind == lexing.IDENTIFIER:
        return True
    if prev.kind == lexing.KEYWORD and prev.lexeme in _TYPE_KEYWORDS:
        return True
    # "String[] names()" / "List<String> items()"
    if prev.lexeme in ("]", ">"):
        return True
    return False


def _looks_like_constructor(prev: Token | None) -> bool:
    if prev is None:
        return True
    if prev.kind == lexing.KEYWORD and prev.lexeme in _DECL_PREFIX_KEYWORDS:
        return True
    return prev.kind == lexing.PUNCTUATION and prev.lexeme in ("{", "}", ";")


def extract_methods(
    text: str, source_path: str = "<memory>", split: str = ""
) -> tuple[list[MethodRecord], list[str]]:
    """Collect top-level-per-scope method bodies plus skip warnings.

    Returns records in source order. A file that lexes with degradation
    still yields the methods found in its clean prefix.
    """
    all_tokens, warnings = lexing.lex_with_degradation(text)
    if any(t.kind == lexing.RAW_TEXT for t in all_tokens):
        all_tokens = [t for t in all_tokens if t.kind != lexing.RAW_TEXT]
    tokens = _significant(all_tokens)
    records: list[MethodRecord] = []
    i = 0
    n = len(tokens)
    while i < n:
        tok = tokens[i]
        if tok.kind == lexing.PUNCTUATION and tok.lexeme == "{":
            if _is_anonymous_class_brace(tokens, i):
                end = _match_forward(tokens, i, "{", "}")
                if end == -1:
                    break
                warnings.append(
                    f"{source_path}:{tok.line + 1}: skipped anonymous class body"
                )
                i = end + 1
                continue
            i += 1
            continue
        if tok.kind != lexing.IDENTIFIER:
            i += 1
            continue
        if i + 1 >= n or tokens[i + 1].lexeme != "(":
            i += 1
            continue
        close_paren = _match_forward(tokens, i + 1, "(", ")")
        if close_paren == -1:
            i += 1
            continue
        # After the parameter list: optionally "throws A, B.C", then '{'.
        j = close_paren + 1
        if j < n and tokens[j].kind == lexing.KEYWORD and tokens[j].lexeme == "throws":
            j += 1
            while j < n and (
                tokens[j].kind == lexing.IDENTIFIER
                or (tokens[j].kind == lexing.PUNCTUATION and tokens[j].lexeme in (",", "."))
            ):
                j += 1
        if j >= n or tokens[j].lexeme != "{":
            i += 1
            continue
        open_brace = j
        close_brace = _match_forward(tokens, open_brace, "{", "}")
        if close_brace == -1:
            i += 1
            continue
        prev = tokens[i - 1] if i > 0 else None
        if _looks_like_return_type(prev):
            open_paren = tokens[i + 1]
            end_tok = tokens[close_brace]
            body_text = text[open_paren.pos : end_tok.pos + len(end_tok.lexeme)]
            records.append(
                MethodRecord(
                    label=tok.lexeme,
                    body=SourceText(body_text),
                    source_path=source_path,
                    span=(tok.line, end_tok.line),
                    split=split,
                )
            )
            i = close_brace + 1
            continue
        if _looks_like_constructor(prev):
            warnings.append(
                f"{source_path}:{tok.line + 1}: skipped constructor-like declaration"
                f" '{tok.lexeme}'"
            )
            i = close_brace + 1
            continue
        i += 1
    return records, warnings
