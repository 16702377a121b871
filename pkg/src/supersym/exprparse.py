"""Recursive-descent parser for the polynomial expression language.

Grammar (no implicit multiplication, '^' binds one signed integer):

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' int)?
    atom     := rational | var | '(' expr ')' | '-' atom
    var      := ('x'|'y') posint
    rational := int ('/' posint)?

Errors carry the 0-based position in the input text.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import LAURENT, POLYNOMIAL, LaurentPoly, Signature


class ParseError(ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER | VAR | OP | END
    text: str
    pos: int


_OPS = set("+-*^()/")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append(_Token("OP", ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(_Token("NUMBER", text[start:i], start))
            continue
        if ch in ("x", "y"):
            start = i
            i += 1
            digits_start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            if i == digits_start:
                raise ParseError(f"variable '{ch}' needs a positive index", start)
            tokens.append(_Token("VAR", text[start:i], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], signature: Signature, mode: str) -> None:
        self.tokens = tokens
        self.index = 0
        self.signature = signature
        self.mode = mode

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept_op(self, op: str) -> bool:
        if self.peek().kind == "OP" and self.peek().text == op:
            self.index += 1
            return True
        return False

    def parse_expr(self) -> LaurentPoly:
        value = self.parse_term()
        while True:
            if self.accept_op("+"):
                value = value + self.parse_term()
            elif self.accept_op("-"):
                value = value - self.parse_term()
            else:
                return value

    def parse_term(self) -> LaurentPoly:
        value = self.parse_factor()
        while self.accept_op("*"):
            value = value * self.parse_factor()
        return value

    def parse_factor(self) -> LaurentPoly:
        base = self.parse_atom()
        if self.peek().kind == "OP" and self.peek().text == "^":
            caret = self.advance()
            exponent = self.parse_signed_int()
            try:
                return base ** exponent
            except ValueError as exc:
                raise ParseError(str(exc), caret.pos) from None
        return base

    def parse_signed_int(self) -> int:
        negative = self.accept_op("-")
        token = self.peek()
        if token.kind != "NUMBER":
            raise ParseError("expected an integer exponent", token.pos)
        self.advance()
        value = int(token.text)
        return -value if negative else value

    def parse_atom(self) -> LaurentPoly:
        token = self.peek()
        if token.kind == "OP" and token.text == "-":
            self.advance()
            return -self.parse_atom()
        if token.kind == "OP" and token.text == "(":
            self.advance()
            inner = self.parse_expr()
            if not self.accept_op(")"):
                raise ParseError("expected ')'", self.peek().pos)
            return inner
        if token.kind == "NUMBER":
            self.advance()
            numerator = int(token.text)
            if self.peek().kind == "OP" and self.peek().text == "/":
                slash = self.advance()
                denom_token = self.peek()
                if denom_token.kind != "NUMBER":
                    raise ParseError("expected a denominator", denom_token.pos)
                self.advance()
                denominator = int(denom_token.text)
                if denominator == 0:
                    raise ParseError("denominator must be positive", denom_token.pos)
                return LaurentPoly.constant(
                    self.signature, self.mode, Fraction(numerator, denominator)
                )
            return LaurentPoly.constant(self.signature, self.mode, numerator)
        if token.kind == "VAR":
            self.advance()
            block, index = token.text[0], int(token.text[1:])
            if index == 0:
                raise ParseError(f"variable index must be positive in {token.text!r}", token.pos)
            if block == "x":
                if index > self.signature.m:
                    raise ParseError(
                        f"unknown variable {token.text!r} (signature has m={self.signature.m})",
                        token.pos,
                    )
                flat = index - 1
            else:
                if index > self.signature.n:
                    raise ParseError(
                        f"unknown variable {token.text!r} (signature has n={self.signature.n})",
                        token.pos,
                    )
                flat = self.signature.m + index - 1
            return LaurentPoly.variable(self.signature, self.mode, flat)
        raise ParseError(f"unexpected token {token.text!r}" if token.text else "unexpected end of input", token.pos)


def parse_poly(text: str, signature: Signature, mode: str) -> LaurentPoly:
    """Parse canonical polynomial text; inverse of LaurentPoly.render().

    In polynomial mode negative exponents are rejected (via the mode
    constraint); in laurent mode they are allowed on variables.
    """
    if mode not in (POLYNOMIAL, LAURENT):
        raise ValueError(f"unknown mode {mode!r}")
    parser = _Parser(_tokenize(text), signature, mode)
    value = parser.parse_expr()
    trailing = parser.peek()
    if trailing.kind != "END":
        raise ParseError(f"unexpected token {trailing.text!r}", trailing.pos)
    return value
