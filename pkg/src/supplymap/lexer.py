"""Token-level lexers for C, C++, and Java source files.

Produces the token streams that trigram fingerprints are built from:
comments and whitespace are dropped, everything else (including
preprocessor directive tokens for C/C++) is kept. Literals are kept
verbatim as single tokens; no identifier normalization is applied.
The lexer is total: malformed input degrades to single-character
tokens or an empty stream, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import LANG_C, LANG_CPP, LANG_JAVA

_IDENT_START = frozenset(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$"
)
_IDENT_CONT = _IDENT_START | frozenset("0123456789")
_DIGITS = frozenset("0123456789")
_WHITESPACE = frozenset(" \t\r\n\f\v")

# Maximal-munch operator table shared by all three languages; unknown
# punctuation falls back to single-character tokens.
_MULTI_OPS = (
    ">>>=",
    "<<=",
    ">>=",
    ">>>",
    "...",
    "->*",
    "::",
    "->",
    "++",
    "--",
    "<<",
    ">>",
    "<=",
    ">=",
    "==",
    "!=",
    "&&",
    "||",
    "+=",
    "-=",
    "*=",
    "/=",
    "%=",
    "&=",
    "^=",
    "|=",
    "##",
    ".*",
)
_OPS_BY_FIRST: dict[str, tuple[str, ...]] = {}
for _op in sorted(_MULTI_OPS, key=len, reverse=True):
    _OPS_BY_FIRST.setdefault(_op[0], ())
    _OPS_BY_FIRST[_op[0]] += (_op,)

# C/C++ string and char literal prefixes (R variants are raw strings).
_LITERAL_PREFIXES = frozenset(
    {"u8", "u", "U", "L", "R", "u8R", "uR", "UR", "LR"}
)


@dataclass(frozen=True)
class TokenStream:
    tokens: tuple[str, ...]
    language: str


def tokenize(content: bytes | str, language: str) -> TokenStream:
    """Lex source bytes into a whitespace/comment-free token stream."""
    if isinstance(content, bytes):
        text = content.decode("utf-8", errors="replace")
    else:
        text = content
    if language in (LANG_C, LANG_CPP):
        # Phase-2 line splicing: backslash-newline disappears before lexing.
        text = text.replace("\\\r\n", "").replace("\\\n", "")
    tokens: list[str] = []
    i = 0
    n = len(text)
    cxx_prefixes = language in (LANG_C, LANG_CPP)
    while i < n:
        c = text[i]
        if c in _WHITESPACE:
            i += 1
            continue
        if c == "/" and i + 1 < n:
            nxt = text[i + 1]
            if nxt == "/":
                j = text.find("\n", i + 2)
                i = n if j < 0 else j + 1
                continue
            if nxt == "*":
                j = text.find("*/", i + 2)
                i = n if j < 0 else j + 2
                continue
        if c == '"' or c == "'":
            tok, i = _scan_quoted(text, i, c)
            tokens.append(tok)
            continue
        if c in _IDENT_START:
            j = i + 1
            while j < n and text[j] in _IDENT_CONT:
                j += 1
            ident = text[i:j]
            if (
                cxx_prefixes
                and ident in _LITERAL_PREFIXES
                and j < n
                and text[j] in "\"'"
            ):
                if "R" in ident and text[j] == '"':
                    tok, i = _scan_raw_string(text, i, j)
                else:
                    lit, i = _scan_quoted(text, j, text[j])
                    tok = ident + lit
                tokens.append(tok)
                continue
            tokens.append(ident)
            i = j
            continue
        if c in _DIGITS or (c == "." and i + 1 < n and text[i + 1] in _DIGITS):
            tok, i = _scan_number(text, i)
            tokens.append(tok)
            continue
        matched = False
        for op in _OPS_BY_FIRST.get(c, ()):
            if text.startswith(op, i):
                tokens.append(op)
                i += len(op)
                matched = True
                break
        if not matched:
            tokens.append(c)
            i += 1
    return TokenStream(tokens=tuple(tokens), language=language)


def _scan_quoted(text: str, start: int, quote: str) -> tuple[str, int]:
    """Scan a quoted literal with backslash escapes; unterminated runs to EOF."""
    i = start + 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\\" and i + 1 < n:
            i += 2
            continue
        if c == quote:
            return text[start : i + 1], i + 1
        if c == "\n":
            # Unterminated on this line; treat the fragment as one token.
            return text[start:i], i
        i += 1
    return text[start:], n


def _scan_raw_string(text: str, start: int, quote_pos: int) -> tuple[str, int]:
    """Scan a C++ raw string literal R"delim( ... )delim"."""
    n = len(text)
    i = quote_pos + 1
    delim_end = i
    while delim_end < n and text[delim_end] not in "(\n" and delim_end - i < 16:
        delim_end += 1
    if delim_end >= n or text[delim_end] != "(":
        # Malformed raw literal; fall back to a plain quoted scan.
        lit, end = _scan_quoted(text, quote_pos, '"')
        return text[start:quote_pos] + lit, end
    closer = ")" + text[i:delim_end] + '"'
    j = text.find(closer, delim_end + 1)
    if j < 0:
        return text[start:], n
    end = j + len(closer)
    return text[start:end], end


def _scan_number(text: str, start: int) -> tuple[str, int]:
    """Scan a preprocessing-number: digits, letters, dots, exponent signs."""
    i = start + 1
    n = len(text)
    while i < n:
        c = text[i]
        if c in _IDENT_CONT or c == ".":
            i += 1
            continue
        if c in "+-" and text[i - 1] in "eEpP":
            i += 1
            continue
        break
    return text[start:i], i


def language_for_path(path: str, extension_map: dict[str, str]) -> str | None:
    """Map a file path to a language via its (lowercased) extension."""
    dot = path.rfind(".")
    if dot < 0:
        return None
    return extension_map.get(path[dot:].lower())


__all__ = [
    "TokenStream",
    "tokenize",
    "language_for_path",
    "LANG_C",
    "LANG_CPP",
    "LANG_JAVA",
]
