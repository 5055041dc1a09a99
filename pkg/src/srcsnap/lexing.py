"""Lossless, comment- and string-aware lexer for Java-like source.

The contract that everything downstream relies on: concatenating the
lexemes of the token stream, in order, reproduces the input text exactly.
Token kinds only need to be good enough to tell comments, string contents,
and braces apart; this is not a conforming Java grammar.
"""

from __future__ import annotations

from dataclasses import dataclass

IDENTIFIER = "identifier"
KEYWORD = "keyword"
NUMBER = "number"
STRING_LITERAL = "string-literal"
CHAR_LITERAL = "char-literal"
PUNCTUATION = "punctuation"
OPERATOR = "operator"
LINE_COMMENT = "line-comment"
BLOCK_COMMENT = "block-comment"
WHITESPACE = "whitespace"
NEWLINE = "newline"
# Emitted only by lex_with_degradation() for the unlexable remainder of a
# file; never produced on the normal path.
RAW_TEXT = "raw"

COMMENT_KINDS = frozenset({LINE_COMMENT, BLOCK_COMMENT})
SPACING_KINDS = frozenset({WHITESPACE, NEWLINE})

KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package
    private protected public return short static strictfp super switch
    synchronized this throw throws transient try void volatile while
    var record yield sealed permits true false null
    """.split()
)

_WS_CHARS = " \t\f\v\r"
_PUNCT_CHARS = "(){}[];,.@"
_OPERATOR_CHARS = "+-*/%=<>!&|^~?:"
# Longest first so maximal munch falls out of a linear scan.
_OPERATORS = (
    ">>>=", ">>>", ">>=", "<<=", "<<", ">>", "->", "::", "==", "!=",
    "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=", "/=",
    "&=", "|=", "^=", "%=",
)


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    line: int  # 0-based
    col: int  # 0-based
    pos: int  # absolute character offset


class LexError(ValueError):
    """Lexical error carrying the position of the offending construct."""

    def __init__(self, message: str, line: int, col: int, pos: int):
        # Fields stay 0-based like Token coordinates; the text is 1-based.
        super().__init__(f"{message} at line {line + 1}, col {col + 1}")
        self.message = message
        self.line = line
        self.col = col
        self.pos = pos


class UnterminatedString(LexError):
    pass


class UnterminatedBlockComment(LexError):
    pass


def _is_word_start(c: str) -> bool:
    # Non-ASCII is folded into identifiers: tolerant, and still lossless.
    return c.isalpha() or c in "_$" or ord(c) > 127


def _is_word_part(c: str) -> bool:
    return c.isalnum() or c in "_$" or ord(c) > 127


def _scan_quoted(text: str, i: int, line: int, col: int) -> int:
    """Return the end offset (exclusive) of the quoted literal opening at i.

    A backslash escapes the next character, but never a newline: Java does
    not splice lines inside literals, and allowing it would let a literal
    swallow the rest of the file.
    """
    quote = text[i]
    n = len(text)
    j = i + 1
    while j < n:
        c = text[j]
        if c == "\\":
            if j + 1 >= n or text[j + 1] == "\n":
                break
            j += 2
        elif c == quote:
            return j + 1
        elif c == "\n":
            break
        else:
            j += 1
    what = "string" if quote == '"' else "character"
    raise UnterminatedString(f"unterminated {what} literal", line, col, i)


def _scan_number(text: str, i: int) -> int:
    n = len(text)
    is_hex = text[i] == "0" and text[i + 1 : i + 2] in ("x", "X")
    exp_chars = "pP" if is_hex else "eE"
    j = i
    while j < n:
        c = text[j]
        if c.isalnum() or c in "._":
            j += 1
        elif c in "+-" and j > i and text[j - 1] in exp_chars:
            j += 1
        else:
            break
    return j


def lex(text: str) -> list[Token]:
    """Tokenize ``text`` losslessly; raises LexError on unterminated
    strings, character literals, or block comments."""
    tokens: list[Token] = []
    line = 0
    col = 0
    i = 0
    n = len(text)

    def emit(kind: str, end: int) -> None:
        nonlocal line, col, i
        lexeme = text[i:end]
        tokens.append(Token(kind, lexeme, line, col, i))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            col = len(lexeme) - lexeme.rfind("\n") - 1
        else:
            col += len(lexeme)
        i = end

    while i < n:
        c = text[i]
        if c == "\n":
            emit(NEWLINE, i + 1)
        elif c in _WS_CHARS:
            j = i + 1
            while j < n and text[j] in _WS_CHARS:
                j += 1
            emit(WHITESPACE, j)
        elif c == "/" and text[i + 1 : i + 2] == "/":
            j = text.find("\n", i)
            emit(LINE_COMMENT, n if j == -1 else j)
        elif c == "/" and text[i + 1 : i + 2] == "*":
            j = text.find("*/", i + 2)
            if j == -1:
                raise UnterminatedBlockComment(
                    "unterminated block comment", line, col, i
                )
            emit(BLOCK_COMMENT, j + 2)
        elif c == '"':
            emit(STRING_LITERAL, _scan_quoted(text, i, line, col))
        elif c == "'":
            emit(CHAR_LITERAL, _scan_quoted(text, i, line, col))
        elif c.isdigit() or (c == "." and text[i + 1 : i + 2].isdigit()):
            emit(NUMBER, _scan_number(text, i))
        elif _is_word_start(c):
            j = i + 1
            while j < n and _is_word_part(text[j]):
                j += 1
            emit(KEYWORD if text[i:j] in KEYWORDS else IDENTIFIER, j)
        elif c == "." and text[i : i + 3] == "...":
            emit(PUNCTUATION, i + 3)
        elif c in _PUNCT_CHARS:
            emit(PUNCTUATION, i + 1)
        elif c in _OPERATOR_CHARS:
            for op in _OPERATORS:
                if text.startswith(op, i):
                    emit(OPERATOR, i + len(op))
                    break
            else:
                emit(OPERATOR, i + 1)
        else:
            emit(PUNCTUATION, i + 1)
    return tokens


def lex_with_degradation(text: str) -> tuple[list[Token], list[str]]:
    """Tokenize, keeping any unlexable remainder verbatim.

    On an unterminated string or block comment the cleanly lexed prefix is
    kept and the rest of the file becomes one RAW_TEXT token, so the stream
    stays lossless and the file is never dropped. Returns the tokens plus a
    list of warning strings (empty on the normal path).
    """
    try:
        return lex(text), []
    except LexError as err:
        tokens = lex(text[: err.pos])
        tokens.append(Token(RAW_TEXT, text[err.pos :], err.line, err.col, err.pos))
        warning = (
            f"{err.message} at line {err.line + 1}, col {err.col + 1}; "
            "remainder kept verbatim"
        )
        return tokens, [warning]
