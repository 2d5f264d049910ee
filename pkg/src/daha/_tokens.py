"""Tokenizer shared by the text-format parsers.

All the grammars in this package (coefficient scalars, Laurent polynomials,
skein elements, generator words) draw from the same token alphabet: unsigned
integers, single-letter names with an optional numeric index (``s``, ``c``,
``d``, ``X1``, ``a2``, ``y1``), and the punctuation ``^ * + - ( ) [ ] ,``.
Whitespace separates tokens and is otherwise ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError

_PUNCT = set("^*+-()[],")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", one of the punctuation characters, or "end"
    text: str
    pos: int
    letter: str | None = None  # name tokens only
    index: int | None = None   # name tokens only: trailing digits, if any


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            digits = text[i + 1 : j]
            tokens.append(
                Token("name", text[i:j], i, letter=ch, index=int(digits) if digits else None)
            )
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


class TokenStream:
    """A token list with a cursor; supports save/restore for backtracking."""

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        i = min(self.pos + ahead, len(self.tokens) - 1)
        return self.tokens[i]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def accept(self, kind: str) -> Token | None:
        if self.peek().kind == kind:
            return self.advance()
        return None

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(f"expected {what or kind!r}, found {tok.text or 'end of input'!r}")
        return self.advance()

    def save(self) -> int:
        return self.pos

    def restore(self, mark: int) -> None:
        self.pos = mark

    def at_end(self) -> bool:
        return self.peek().kind == "end"

    def fail(self, message: str) -> None:
        raise ParseError(message, self.peek().pos)


def parse_signed_int(ts: TokenStream, what: str = "integer") -> int:
    """Parse an optionally signed integer, e.g. the exponent after ``^``."""
    sign = 1
    if ts.accept("-"):
        sign = -1
    elif ts.accept("+"):
        pass
    tok = ts.expect("int", what)
    return sign * int(tok.text)
