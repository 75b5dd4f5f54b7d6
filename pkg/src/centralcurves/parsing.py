"""Polynomial text form: canonical printer and exact parser.

Grammar (whitespace-insensitive):

    expr    := term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := "-" factor | power
    power   := atom ("^" INTEGER)?
    atom    := NUMBER | NAME | "(" expr ")"
    NUMBER  := digits ("/" digits)?          (no spaces inside a rational)
    NAME    := [a-zA-Z][a-zA-Z0-9_]*

Exponents are non-negative integer literals; implicit multiplication is not
part of the grammar.  The printer emits terms in descending grevlex order
with respect to the polynomial's declared variable tuple, so
parse(print(p)) == p bit-exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, UnknownVariableError
from .mpoly import GREVLEX, MPoly

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[a-zA-Z][a-zA-Z0-9_]*)"
    r"|(?P<op>[-+*^()]))"
)


def tokenize(text):
    """Return [(kind, value, position), ...] ending with ("end", "", len)."""
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        if match.group("number") is not None:
            tokens.append(("number", match.group("number"), match.start("number")))
        elif match.group("name") is not None:
            tokens.append(("name", match.group("name"), match.start("name")))
        else:
            tokens.append(("op", match.group("op"), match.start("op")))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, vars):
        self.tokens = tokens
        self.i = 0
        self.vars = vars

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.next()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse_expr(self):
        node = self.parse_term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.next()
                rhs = self.parse_term()
                node = node + rhs if value == "+" else node - rhs
            else:
                return node

    def parse_term(self):
        node = self.parse_factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.next()
                node = node * self.parse_factor()
            else:
                return node

    def parse_factor(self):
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.next()
            return -self.parse_factor()
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        kind, value, pos = self.peek()
        if kind == "op" and value == "^":
            self.next()
            kind, value, pos = self.next()
            if kind != "number" or "/" in value:
                raise ParseError("exponent must be a non-negative integer", pos)
            base = base ** int(value)
        return base

    def parse_atom(self):
        kind, value, pos = self.next()
        if kind == "number":
            return MPoly.constant(Fraction(value), self.vars)
        if kind == "name":
            if value not in self.vars:
                raise UnknownVariableError(
                    f"unknown variable {value!r} (declared: {', '.join(self.vars)})"
                )
            return MPoly.variable(value, self.vars)
        if kind == "op" and value == "(":
            node = self.parse_expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected {value!r}" if value else "unexpected end of input", pos)


def parse_poly(text, vars=None):
    """Parse an expression into an MPoly.

    With `vars` given, undeclared names raise UnknownVariableError; without
    it, the variables are collected from the expression and sorted by name.
    """
    tokens = tokenize(text)
    if vars is None:
        vars = tuple(sorted({v for k, v, _ in tokens if k == "name"}))
    else:
        vars = tuple(vars)
    parser = _Parser(tokens, vars)
    poly = parser.parse_expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected {value!r}", pos)
    return poly


def _format_coeff(c):
    return str(c) if c.denominator != 1 else str(c.numerator)


def _format_monomial(exp, vars):
    parts = []
    for name, e in zip(vars, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(poly, order=GREVLEX):
    """Canonical text form: grevlex-descending terms, explicit '*'."""
    if poly.is_zero:
        return "0"
    pieces = []
    for exp, coeff in poly.sorted_terms(order):
        mono = _format_monomial(exp, poly.vars)
        mag = abs(coeff)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_format_coeff(mag)}*{mono}"
        else:
            body = _format_coeff(mag)
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces)


def parse_point(text, expected_len=None):
    """Parse "(a, b, ...)" with rational entries into a Fraction tuple."""
    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    parts = [p.strip() for p in stripped.split(",")] if stripped else []
    coords = []
    for part in parts:
        if not re.fullmatch(r"-?\d+(?:/\d+)?", part):
            raise ParseError(f"bad rational coordinate {part!r}")
        coords.append(Fraction(part))
    if expected_len is not None and len(coords) != expected_len:
        raise ParseError(
            f"expected {expected_len} coordinates, got {len(coords)}"
        )
    return tuple(coords)
