"""Parser for the polynomial expression grammar.

Accepted input: integer literals, declared symbols, the reserved constants
``zeta3``, ``zeta4``, ``sqrt3``, the operators ``+ - * / ^`` and parentheses.
Whitespace is insignificant.  ``/`` builds rational functions; ``^`` takes a
nonnegative integer literal.  Errors carry the offending position.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .cyc12 import I_UNIT, SQRT3, ZETA3
from .mpoly import MPoly
from .ratfunc import RatFunc

RESERVED = {"zeta3": ZETA3, "zeta4": I_UNIT, "sqrt3": SQRT3}


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (at position {pos})")
        self.msg = msg
        self.pos = pos


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_" or text[j] == "'"):
                j += 1
            toks.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()=":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, symbols: Sequence[str]):
        self.text = text
        self.symbols = tuple(symbols)
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def next(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ParseError(f"expected {kind!r}, found {t[1]!r}", t[2])
        return t

    def parse_expr(self) -> RatFunc:
        node = self.parse_term()
        while self.peek()[0] in "+-":
            op = self.next()[0]
            rhs = self.parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term(self) -> RatFunc:
        node = self.parse_unary()
        while self.peek()[0] in "*/":
            op, _, pos = self.next()
            rhs = self.parse_unary()
            if op == "*":
                node = node * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", pos)
                node = node / rhs
        return node

    def parse_unary(self) -> RatFunc:
        sign = 1
        while self.peek()[0] in "+-":
            if self.next()[0] == "-":
                sign = -sign
        node = self.parse_power()
        return node if sign == 1 else -node

    def parse_power(self) -> RatFunc:
        base = self.parse_atom()
        if self.peek()[0] == "^":
            self.next()
            t = self.peek()
            if t[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", t[2])
            self.next()
            return base ** int(t[1])
        return base

    def parse_atom(self) -> RatFunc:
        kind, val, pos = self.next()
        if kind == "int":
            return RatFunc.const(self.symbols, Fraction(int(val)))
        if kind == "name":
            if val in RESERVED:
                return RatFunc.const(self.symbols, RESERVED[val])
            if val in self.symbols:
                return RatFunc(MPoly.var(self.symbols, val))
            raise ParseError(f"unknown symbol {val!r}", pos)
        if kind == "(":
            node = self.parse_expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_ratfunc(text: str, symbols: Sequence[str]) -> RatFunc:
    p = _Parser(text, symbols)
    node = p.parse_expr()
    end = p.next()
    if end[0] != "end":
        raise ParseError(f"trailing input {end[1]!r}", end[2])
    return node


def parse_polynomial(text: str, symbols: Sequence[str]) -> MPoly:
    r = parse_ratfunc(text, symbols)
    if not r.is_polynomial():
        raise ParseError("expression is not a polynomial", 0)
    return r.as_mpoly()


def parse_equation(text: str, symbols: Sequence[str]) -> Tuple[RatFunc, RatFunc]:
    """Split 'lhs = rhs' and parse both sides."""
    eq = text.find("=")
    if eq < 0:
        raise ParseError("expected an equation with '='", 0)
    lhs = parse_ratfunc(text[:eq], symbols)
    rhs_text = text[eq + 1 :]
    p = _Parser(rhs_text, symbols)
    node = p.parse_expr()
    end = p.next()
    if end[0] != "end":
        raise ParseError(f"trailing input {end[1]!r}", eq + 1 + end[2])
    return lhs, node
