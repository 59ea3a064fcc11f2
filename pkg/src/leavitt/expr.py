"""Parsing of element expressions written against a graph's names.

The accepted grammar, with juxtaposition meaning multiplication:

    expr    := ['-'] term (('+' | '-') term)*
    term    := scalar ['*' factor] factor* | factor ['*' factor | factor]*
    factor  := NAME ['^*'] | '(' expr ')' ['^*']
    scalar  := INT ['/' INT]

A NAME resolves to a vertex or an edge; the shared namespace makes the
lookup unambiguous. ``^*`` applies the involution: on an edge it gives the
ghost edge, on a vertex it does nothing, on a parenthesized expression it
reverses every monomial. A scalar with no following factor multiplies the
identity, so ``0`` and ``2`` are valid expressions. The minus sign may be
written as ``-`` or U+2212. Scalars are parsed by the algebra's field, so
``1/2`` works over the rationals and over GF(p) when 2 is invertible.
"""

from __future__ import annotations

import re

from .algebra import Element, LeavittAlgebra
from .fields import FieldError


class ExprParseError(ValueError):
    """An element expression could not be parsed."""

    def __init__(self, message: str, pos: int | None = None):
        if pos is not None:
            message = "%s (at position %d)" % (message, pos + 1)
        super().__init__(message)
        self.pos = pos


_TOKEN_RE = re.compile(
    r"(?P<name>[A-Za-z_]\w*)|(?P<int>\d+)|(?P<star>\^\*)|(?P<op>[-+*/()])"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    text = text.replace("−", "-")
    tokens = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if not m:
            raise ExprParseError("unexpected character %r" % text[i], i)
        kind = m.lastgroup
        value = m.group()
        tokens.append((kind, value, i))
        i = m.end()
    return tokens


class _Parser:
    def __init__(self, algebra: LeavittAlgebra, tokens: list[tuple[str, str, int]], text: str):
        self.algebra = algebra
        self.tokens = tokens
        self.text = text
        self.at = 0

    def _peek(self) -> tuple[str, str, int] | None:
        if self.at < len(self.tokens):
            return self.tokens[self.at]
        return None

    def _take(self) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None:
            raise ExprParseError("unexpected end of expression", len(self.text))
        self.at += 1
        return tok

    def _take_op(self, op: str) -> tuple[str, str, int]:
        tok = self._take()
        if tok[0] != "op" or tok[1] != op:
            raise ExprParseError("expected %r, got %r" % (op, tok[1]), tok[2])
        return tok

    def expect_end(self) -> None:
        tok = self._peek()
        if tok is not None:
            raise ExprParseError("unexpected %r" % tok[1], tok[2])

    def parse_expr(self) -> Element:
        negate = False
        tok = self._peek()
        if tok is not None and tok[0] == "op" and tok[1] == "-":
            self._take()
            negate = True
        total = self.parse_term()
        if negate:
            total = -total
        while True:
            tok = self._peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                return total
            self._take()
            term = self.parse_term()
            total = total + term if tok[1] == "+" else total - term

    def _at_factor(self) -> bool:
        tok = self._peek()
        return tok is not None and (
            tok[0] == "name" or (tok[0] == "op" and tok[1] == "(")
        )

    def parse_term(self) -> Element:
        coeff = None
        tok = self._peek()
        if tok is not None and tok[0] == "int":
            coeff = self.parse_scalar()
            tok = self._peek()
            if tok is not None and tok[0] == "op" and tok[1] == "*":
                star_pos = tok[2]
                self._take()
                if not self._at_factor():
                    raise ExprParseError("expected a name or '(' after '*'", star_pos)
        result = None
        while True:
            if self._at_factor():
                factor = self.parse_factor()
                result = factor if result is None else result * factor
                tok = self._peek()
                if tok is not None and tok[0] == "op" and tok[1] == "*":
                    star_pos = tok[2]
                    self._take()
                    if not self._at_factor():
                        raise ExprParseError(
                            "expected a name or '(' after '*'", star_pos
                        )
                    continue
                continue
            break
        if result is None:
            if coeff is None:
                tok = self._peek()
                pos = tok[2] if tok else len(self.text)
                got = repr(tok[1]) if tok else "end of expression"
                raise ExprParseError("expected a term, got %s" % got, pos)
            return self.algebra.one()._scaled(coeff)
        if coeff is not None:
            return result._scaled(coeff)
        return result

    def parse_factor(self) -> Element:
        tok = self._take()
        if tok[0] == "name":
            base = self._resolve(tok[1], tok[2])
            starred = self._maybe_star()
            if starred:
                return base.involution()
            return base
        if tok[0] == "op" and tok[1] == "(":
            inner = self.parse_expr()
            self._take_op(")")
            if self._maybe_star():
                return inner.involution()
            return inner
        raise ExprParseError("expected a name or '(', got %r" % tok[1], tok[2])

    def _maybe_star(self) -> bool:
        tok = self._peek()
        if tok is not None and tok[0] == "star":
            self._take()
            return True
        return False

    def _resolve(self, name: str, pos: int) -> Element:
        graph = self.algebra.graph
        if graph.has_vertex(name):
            return self.algebra.vertex(name)
        if graph.has_edge(name):
            return self.algebra.edge(name)
        raise ExprParseError("unknown name %r" % name, pos)

    def parse_scalar(self):
        tok = self._take()
        num = int(tok[1])
        pos = tok[2]
        nxt = self._peek()
        if nxt is not None and nxt[0] == "op" and nxt[1] == "/":
            self._take()
            den_tok = self._take()
            if den_tok[0] != "int":
                raise ExprParseError("expected an integer denominator", den_tok[2])
            try:
                return self.algebra.field.from_pair(num, int(den_tok[1]))
            except FieldError as exc:
                raise ExprParseError(str(exc), pos) from exc
        return self.algebra.field.from_int(num)


def parse_element(algebra: LeavittAlgebra, text: str) -> Element:
    """Parse an expression into a normal-form element of the algebra."""
    parser = _Parser(algebra, _tokenize(text), text)
    result = parser.parse_expr()
    parser.expect_end()
    return result
