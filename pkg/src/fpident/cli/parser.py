"""Polynomial expressions in t.

Grammar, loosest binding first::

    expr    := term (('+' | '-') term)*
    term    := unary ('*'? unary)*        juxtaposition before t or '(' multiplies: 2t, 3(t+1)
    unary   := ('-' | '+') unary | power
    power   := primary ('^' INT)?
    primary := INT | 't' | '(' expr ')'

The coefficient-list form ``[c0, c1, ...]`` (constant term first) is accepted too.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from ..polycore import IntPoly, as_intpoly, format_poly

_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|(\^|\*|\+|-|\(|\)|\[|\]|,))")


def _tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        num, var, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(("int", int(num), start))
        elif var is not None:
            out.append(("t", None, start))
        else:
            out.append((op, None, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(self.text[tok[2]])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> IntPoly:
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> IntPoly:
        acc = self.unary()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                acc = acc * self.unary()
            elif kind in ("t", "("):
                acc = acc * self.unary()
            else:
                return acc

    def unary(self) -> IntPoly:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> IntPoly:
        base = self.primary()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            return base ** tok[1]
        return base

    def primary(self) -> IntPoly:
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return IntPoly([val])
        if kind == "t":
            self.take()
            return IntPoly([0, 1])
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(self.text[pos])
        raise ParseError(f"unexpected {what}", pos)

    def coefficient_list(self) -> IntPoly:
        self.take("[")
        coeffs = []
        if self.peek()[0] != "]":
            while True:
                sign = 1
                while self.peek()[0] in ("-", "+"):
                    if self.take()[0] == "-":
                        sign = -sign
                coeffs.append(sign * self.take("int")[1])
                if self.peek()[0] == ",":
                    self.take()
                    continue
                break
        self.take("]")
        return IntPoly(coeffs)


def parse_polynomial(text: str) -> IntPoly:
    """Parse an integer polynomial in t; raises ParseError with the offending offset."""
    if not isinstance(text, str):
        raise TypeError("expected a string")
    p = _Parser(text)
    if p.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    out = p.coefficient_list() if p.peek()[0] == "[" else p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {text[tok[2]]!r}", tok[2])
    return out


def print_polynomial(p) -> str:
    return format_poly(list(as_intpoly(p).coeffs))


__all__ = ["parse_polynomial", "print_polynomial"]
