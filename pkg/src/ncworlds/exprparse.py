"""Plain-text expression syntax: parser side of the round trip.

Grammar (whitespace-insensitive except inside tokens)::

    expression := term (('+' | '-') term)*
    term       := factor (('*' | '/') factor)*
    factor     := '-' factor | primary ('^' INTEGER)?
    primary    := INTEGER | IDENT | '(' expression ')'
                | '[' expression ',' expression ']'
    INTEGER    := [0-9]+                       (rationals are written p/q)
    IDENT      := [A-Za-z]+ [0-9]* ( '.' | "'" )*

An identifier resolves, in order, to: the shift symbol ``J``; the imaginary
unit ``i``; a declared commuting parameter (``tau``, ``hbar``, ``dt``, ``h``,
``k``, plus anything registered with ``declare_parameter``); otherwise a
generator.  Generator identifiers carry an optional component index (digits),
an optional spelled dot order (``Xdot2`` == ``X2.``), and postfix markers
attached without whitespace: one overdot per ``.`` and one prime (time shift)
per ``'``.  Base names may not contain the substring ``dot``.

``[A, B]`` is the commutator A*B - B*A.  ``/`` divides by a scalar-valued
expression.  ``^`` raises to a non-negative integer power.

The printer is ``Expression.text()``; ``parse(e.text()) == e`` for every
expression, which the test suite asserts.
"""

from __future__ import annotations

import re

from .algebra import Expression, J, commutator, generator
from .errors import ParseError
from .scalars import Scalar, parameter_names

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>[0-9]+)|(?P<ident>[A-Za-z]+[0-9]*[.']*)|(?P<op>[-+*/^()\[\],]))"
)
_IDENT_RE = re.compile(r"^([A-Za-z]+?)((?:dot)*)([0-9]*)([.']*)$")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} at position {pos}")
        pos = m.end()
        if m.lastgroup == "int":
            tokens.append(("int", m.group("int")))
        elif m.lastgroup == "ident":
            tokens.append(("ident", m.group("ident")))
        else:
            tokens.append(("op", m.group("op")))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, value):
        kind, text = self.take()
        if kind != "op" or text != value:
            raise ParseError(f"expected {value!r}, found {text!r}")

    def expression(self) -> Expression:
        out = self.term()
        while True:
            kind, text = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                rhs = self.term()
                out = out + rhs if text == "+" else out - rhs
            else:
                return out

    def term(self) -> Expression:
        out = self.factor()
        while True:
            kind, text = self.peek()
            if kind == "op" and text in "*/":
                self.take()
                rhs = self.factor()
                if text == "*":
                    out = out * rhs
                else:
                    try:
                        out = out / rhs
                    except (ValueError, ZeroDivisionError) as err:
                        raise ParseError(str(err)) from None
            else:
                return out

    def factor(self) -> Expression:
        kind, text = self.peek()
        if kind == "op" and text == "-":
            self.take()
            return -self.factor()
        out = self.primary()
        kind, text = self.peek()
        if kind == "op" and text == "^":
            self.take()
            kind, text = self.take()
            if kind != "int":
                raise ParseError(f"expected integer exponent, found {text!r}")
            out = out ** int(text)
        return out

    def primary(self) -> Expression:
        kind, text = self.take()
        if kind == "int":
            return Expression.from_scalar(int(text))
        if kind == "ident":
            return _resolve_ident(text)
        if kind == "op" and text == "(":
            out = self.expression()
            self.expect(")")
            return out
        if kind == "op" and text == "[":
            a = self.expression()
            self.expect(",")
            b = self.expression()
            self.expect("]")
            return commutator(a, b)
        raise ParseError(f"unexpected token {text!r}")


def _resolve_ident(token: str) -> Expression:
    m = _IDENT_RE.match(token)
    if m is None:
        raise ParseError(f"malformed identifier {token!r}")
    base, dots, digits, postfix = m.groups()
    bare = not dots and not digits and not postfix
    if bare and base == "J":
        return Expression.from_generator(J)
    if bare and base == "i":
        return Expression.from_scalar(Scalar.imaginary())
    if bare and base in parameter_names():
        from .scalars import parameter

        return Expression.from_scalar(parameter(base))
    if token.rstrip(".'") in parameter_names() or token.rstrip(".'") in ("J", "i"):
        raise ParseError(f"postfix markers are only valid on generators: {token!r}")
    dot_order = len(dots) // 3 + postfix.count(".")
    shift_order = postfix.count("'")
    component = int(digits) if digits else None
    try:
        g = generator(base, component, dot_order, shift_order)
    except ValueError as err:
        raise ParseError(str(err)) from None
    return Expression.from_generator(g)


def parse(text: str) -> Expression:
    """Parse the plain-text syntax into an Expression."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    parser = _Parser(tokens)
    out = parser.expression()
    if parser.pos != len(tokens):
        raise ParseError(f"trailing input from token {parser.pos}")
    return out


def parse_scalar(text: str) -> Scalar:
    """Parse text that must denote a bare scalar (no generators)."""
    e = parse(text)
    try:
        return e.as_scalar()
    except ValueError as err:
        raise ParseError(str(err)) from None
