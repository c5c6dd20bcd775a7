"""Lexer for plain-text matrices - numbers, separators and row breaks."""

from dataclasses import dataclass
from enum import Enum, auto
from typing import List, Optional, Union

from blockpoly.errors import MatrixFormatError

Number = Union[int, float, complex]


class TokenType(Enum):
    """Token types of a matrix text."""

    NUMBER = auto()  # 3, -2.5, 1e-3, 4i, 1+2j
    COMMA = auto()
    NEWLINE = auto()
    EOF = auto()


@dataclass
class Token:
    """Represents a lexical token."""

    type: TokenType
    value: str
    line: int
    column: int

    def __repr__(self) -> str:
        return f"Token({self.type.name}, {self.value!r}, L{self.line}:C{self.column})"

    @property
    def number(self) -> Number:
        """Numeric value: int for integer literals, complex when imaginary, float otherwise."""
        if self.value.endswith("j"):
            return complex(self.value)
        if any(ch in self.value for ch in ".eE"):
            return float(self.value)
        return int(self.value)


class Lexer:
    """Tokenizer for whitespace- or comma-separated matrix rows."""

    def __init__(self, source: str, comment_chars: str = "#%"):
        """Start at line 1, column 1 of source."""
        self.source = source
        self.pos = 0
        self.line = 1
        self.column = 1
        self.comment_chars = comment_chars

    def error(self, message: str) -> MatrixFormatError:
        """MatrixFormatError at the current line and column."""
        return MatrixFormatError(message, line=self.line, column=self.column)

    def peek(self, offset: int = 0) -> Optional[str]:
        """Character offset places ahead, None past the end."""
        pos = self.pos + offset
        if pos < len(self.source):
            return self.source[pos]
        return None

    def advance(self) -> Optional[str]:
        """Consume one character, tracking line and column."""
        if self.pos >= len(self.source):
            return None

        char = self.source[self.pos]
        self.pos += 1

        if char == "\n":
            self.line += 1
            self.column = 1
        else:
            self.column += 1

        return char

    def skip_whitespace_inline(self) -> None:
        """Skip spaces, tabs and carriage returns but not newlines."""
        while self.peek() in (" ", "\t", "\r"):
            self.advance()

    def skip_comment(self) -> None:
        """Skip comment (from # or % to end of line)."""
        if (ch := self.peek()) is not None and ch in self.comment_chars:
            while self.peek() and self.peek() != "\n":
                self.advance()

    def read_digits(self) -> str:
        digits = ""
        while (ch := self.peek()) is not None and ch.isdigit():
            digits += self.advance()  # type: ignore
        return digits

    def read_real(self) -> str:
        """Read an unsigned decimal literal with optional fraction and exponent."""
        text = self.read_digits()
        if self.peek() == ".":
            text += self.advance()  # type: ignore
            text += self.read_digits()
        if text in ("", "."):
            raise self.error("Expected digits")

        if (ch := self.peek()) is not None and ch in "eE":
            text += self.advance()  # type: ignore
            if (sign := self.peek()) is not None and sign in "+-":
                text += self.advance()  # type: ignore
            exponent = self.read_digits()
            if not exponent:
                raise self.error("Exponent has no digits")
            text += exponent
        return text

    def read_sign(self) -> str:
        if (ch := self.peek()) is not None and ch in "+-":
            return self.advance()  # type: ignore
        return ""

    def at_imaginary_unit(self) -> bool:
        return (ch := self.peek()) is not None and ch in "ij"

    def read_number(self) -> Token:
        """Read a real, imaginary or complex literal such as -3, 2.5e1, 4i or 1-2j."""
        start_col = self.column
        start_line = self.line

        text = self.read_sign()
        if self.at_imaginary_unit():
            # bare i / -j
            self.advance()
            return Token(TokenType.NUMBER, text + "1j", start_line, start_col)
        text += self.read_real()

        if self.at_imaginary_unit():
            self.advance()
            return Token(TokenType.NUMBER, text + "j", start_line, start_col)

        ch, nxt = self.peek(), self.peek(1)
        if ch is not None and ch in "+-" and nxt is not None and (nxt.isdigit() or nxt in ".ij"):
            text += self.advance()  # type: ignore
            if self.at_imaginary_unit():
                self.advance()
                return Token(TokenType.NUMBER, f"{text}1j", start_line, start_col)
            text += self.read_real()
            if not self.at_imaginary_unit():
                raise self.error("Complex literal must end with 'i' or 'j'")
            self.advance()
            return Token(TokenType.NUMBER, text + "j", start_line, start_col)

        if (ch := self.peek()) is not None and (ch.isalnum() or ch == "."):
            raise self.error(f"Unexpected character in number: {ch!r}")
        return Token(TokenType.NUMBER, text, start_line, start_col)

    def tokenize(self) -> List[Token]:
        """Tokenize the entire source text."""
        tokens = []

        while self.pos < len(self.source):
            self.skip_whitespace_inline()
            self.skip_comment()

            if self.pos >= len(self.source):
                break

            ch = self.peek()
            if ch == "\n":
                self.advance()
                tokens.append(Token(TokenType.NEWLINE, "\\n", self.line - 1, 1))
                continue

            if ch == ",":
                tokens.append(Token(TokenType.COMMA, ",", self.line, self.column))
                self.advance()
                continue

            if ch is not None and (ch.isdigit() or ch in "+-.ij"):
                tokens.append(self.read_number())
                continue

            raise self.error(f"Unexpected character: {ch!r}")

        tokens.append(Token(TokenType.EOF, "", self.line, self.column))
        return tokens


def tokenize(source: str, comment_chars: str = "#%") -> List[Token]:
    """Tokenize matrix text, convenience function."""
    lexer = Lexer(source, comment_chars)
    return lexer.tokenize()


def parse_rows(source: str) -> List[List[Token]]:
    """Group NUMBER tokens into rows.

    Blank and comment-only lines are skipped. Entries may be separated by
    whitespace, commas or both, but a comma must sit between two numbers.
    """
    rows: List[List[Token]] = []
    current: List[Token] = []
    pending_comma: Optional[Token] = None

    for token in tokenize(source):
        if token.type == TokenType.NUMBER:
            current.append(token)
            pending_comma = None
        elif token.type == TokenType.COMMA:
            if not current or pending_comma is not None:
                raise MatrixFormatError("Empty field", line=token.line, column=token.column)
            pending_comma = token
        else:
            if pending_comma is not None:
                raise MatrixFormatError(
                    "Trailing comma", line=pending_comma.line, column=pending_comma.column
                )
            if current:
                rows.append(current)
            current = []
    return rows
