"""Infix expression parser shared by the CLI, the presentation loader and Scalar.parse.

Grammar (EBNF, frozen)::

    expr   = term , { ("+" | "-") , term } ;
    term   = unary , { ("*" | "·" | "/") , unary } ;
    unary  = ("-" | "+") , unary | power ;
    power  = atom , [ "^" , [ "-" ] , INT ] ;
    atom   = INT | NAME | "(" , expr , ")" ;
    NAME   = letter , { letter | digit | "_" } ;

Juxtaposition is not multiplication.  Division is only allowed by
expressions that evaluate to scalars; negative exponents likewise.
Error offsets are byte offsets into the UTF-8 encoded input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = ["ParseError", "parse", "evaluate", "parse_scalar"]


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        self.text = text
        self.pos = pos
        self.offset = len(text[:pos].encode("utf-8"))
        super().__init__(f"{message} at byte {self.offset}")

    def caret(self):
        line = self.text
        return f"{line}\n{' ' * len(line[:self.pos])}^"


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()·]))")


@dataclass(frozen=True)
class Node:
    kind: str          # int, name, neg, add, sub, mul, div, pow
    args: tuple
    pos: int


def _tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "op" and val == "·":
            val = "*"
        toks.append((kind, val, start))
        pos = m.end()
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", self.text, pos)

    def error(self, msg):
        raise ParseError(msg, self.text, self.peek()[2])

    def expr(self):
        node = self.term()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                node = Node("add" if val == "+" else "sub", (node, self.term()), pos)
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                node = Node("mul" if val == "*" else "div", (node, self.unary()), pos)
            else:
                return node

    def unary(self):
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.unary()
            return inner if val == "+" else Node("neg", (inner,), pos)
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            k2, v2, p2 = self.peek()
            if k2 == "op" and v2 == "-":
                self.take()
                sign = -1
            k3, v3, p3 = self.take()
            if k3 != "int":
                raise ParseError("exponent must be an integer", self.text, p3)
            return Node("pow", (base, sign * int(v3)), pos)
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return Node("int", (int(val),), pos)
        if kind == "name":
            return Node("name", (val,), pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "end":
            raise ParseError("unexpected end of input", self.text, pos)
        raise ParseError(f"unexpected {val!r}", self.text, pos)


def parse(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    if p.peek()[0] != "end":
        p.error("trailing input")
    return node


def evaluate(node: Node, ctx, text=""):
    """Evaluate a parse tree against ``ctx``.

    ``ctx`` provides ``const(int)``, ``name(str)``, ``add``, ``sub``, ``mul``,
    ``neg``, ``div`` and ``pow`` and may raise ``ValueError``; those are
    re-raised as ``ParseError`` pointing at the offending node.
    """
    def ev(n):
        try:
            if n.kind == "int":
                return ctx.const(n.args[0])
            if n.kind == "name":
                return ctx.name(n.args[0])
            if n.kind == "neg":
                return ctx.neg(ev(n.args[0]))
            if n.kind == "pow":
                return ctx.pow(ev(n.args[0]), n.args[1])
            a, b = ev(n.args[0]), ev(n.args[1])
            return getattr(ctx, n.kind)(a, b)
        except ParseError:
            raise
        except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
            raise ParseError(str(exc), text, n.pos) from None

    return ev(node)


class _ScalarContext:
    def __init__(self, q):
        self.q = q

    def const(self, k):
        from .qfield import Scalar

        return Scalar(k)

    def name(self, s):
        if s != "q":
            raise ValueError(f"unknown symbol {s!r} in scalar")
        return self.q

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def pow(self, a, k):
        return a ** k


def parse_scalar(text: str):
    from .qfield import q

    return evaluate(parse(text), _ScalarContext(q), text)
