"""Tokenizer and expression parser shared by polynomial, ring-element and
interval literals.

Parsing produces a small tuple AST which callers evaluate with their own
semantics (polynomial arithmetic, ToyVal arithmetic, algebraic numbers).

    ('num', Fraction)
    ('sym', name)
    ('call', name, [args])
    ('bin', op, left, right)      op in '+-*/^'
    ('neg', operand)
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Callable

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^(),;]))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None, text: str | None = None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            # skip leading whitespace when reporting
            while pos < n and text[pos].isspace():
                pos += 1
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2], self.text)
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            node = ("bin", op, node, self.term())
        return node

    def _starts_primary(self, tok) -> bool:
        return tok[0] in ("num", "name") or (tok[0] == "op" and tok[1] == "(")

    def term(self):
        node = self.unary()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "*/":
                self.take()
                node = ("bin", tok[1], node, self.unary())
            elif self._starts_primary(tok):
                # implicit multiplication: 3x^2, 2(t+1)
                node = ("bin", "*", node, self.power())
            else:
                return node

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            inner = self.unary()
            return ("neg", inner) if tok[1] == "-" else inner
        return self.power()

    def power(self):
        base = self.primary()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            return ("bin", "^", base, self.unary())
        return base

    def primary(self):
        tok = self.take()
        kind, value, pos = tok
        if kind == "num":
            return ("num", Fraction(value))
        if kind == "name":
            if len(value) > 1 and self.peek()[1] == "(":
                self.take()
                args = []
                if self.peek()[1] != ")":
                    args.append(self.expr())
                    while self.peek()[1] == ",":
                        self.take()
                        args.append(self.expr())
                self.expect(")")
                return ("call", value, args)
            return ("sym", value)
        if kind == "op" and value == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos, self.text)


def parse_expression(text: str):
    p = _Parser(text)
    if p.peek()[0] == "end":
        raise ParseError("empty expression", 0, text)
    node = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {tok[1]!r}", tok[2], text)
    return node


def evaluate(node, *, num: Callable[[Fraction], Any], sym: Callable[[str], Any],
             call: Callable[[str, list], Any] | None = None,
             power: Callable[[Any, Any], Any] | None = None):
    """Fold an AST bottom-up.

    ``call`` receives the raw argument ASTs so that callers can interpret
    them in a different context (e.g. the polynomial inside ``root(...)``).
    ``power`` receives the evaluated base and the raw exponent AST.
    """
    kind = node[0]
    rec = lambda n: evaluate(n, num=num, sym=sym, call=call, power=power)  # noqa: E731
    if kind == "num":
        return num(node[1])
    if kind == "sym":
        return sym(node[1])
    if kind == "call":
        if call is None:
            raise ParseError(f"unknown function {node[1]!r}")
        return call(node[1], node[2])
    if kind == "neg":
        return -rec(node[1])
    op, left, right = node[1], node[2], node[3]
    if op == "^":
        base = rec(left)
        if power is not None:
            return power(base, right)
        return base ** int_exponent(right)
    a, b = rec(left), rec(right)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    return a / b


def constant_value(node) -> Fraction:
    """Evaluate an AST made only of numbers."""
    def bad(name, *_):
        raise ParseError(f"expected a rational constant, found {name!r}")
    return evaluate(node, num=lambda q: q, sym=bad, call=bad,
                    power=lambda b, e: b ** int_exponent(e))


def int_exponent(node) -> int:
    q = constant_value(node)
    if q.denominator != 1:
        raise ParseError(f"exponent must be an integer, got {q}")
    return int(q)
