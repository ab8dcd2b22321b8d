"""
Text syntax for nilHecke elements and Schubert classes.

Elements::

    expr  := term (("+" | "-") term)*
    term  := unary ("*" unary)*
    unary := "-" unary | power
    power := atom ("^" INT)?
    atom  := INT | "y" INT | "psi[" INT ("," INT)* "]" | "psi[]" | "(" expr ")"

``psi[i,j,...]`` is the product psi_i psi_j ... (zero when the word is not
reduced). Classes are sums of optional ``coeff*`` times ``(a_1,...,a_k)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .combinatorics import nilcoxeter_word
from .grassmann import CohomologyClass, GrassmannRing
from .nilhecke import NilHecke, NilHeckeElement


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Y:
    index: int
    offset: int = 0


@dataclass(frozen=True)
class Psi:
    word: tuple[int, ...]
    offset: int = 0


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


Node = Union[Num, Y, Psi, Neg, Pow, BinOp]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<psi>psi\[)|(?P<y>y(?=\d))|(?P<op>[-+*^(),\]]))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos == len(src):
            break
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, n: int | None):
        self.tokens = _tokenize(src)
        self.i = 0
        self.n = n

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self, kind: str, value: str | None = None):
        k, v, off = self.tok
        if k != kind or (value is not None and v != value):
            want = value or kind
            got = v or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", off)
        self.i += 1
        return v, off

    def at(self, value: str) -> bool:
        k, v, _ = self.tok
        return k == "op" and v == value

    def expr(self) -> Node:
        node = self.term()
        while self.at("+") or self.at("-"):
            op, _ = self.take("op")
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.at("*"):
            self.take("op", "*")
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Node:
        if self.at("-"):
            self.take("op", "-")
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        if self.at("^"):
            self.take("op", "^")
            e, _ = self.take("int")
            node = Pow(node, int(e))
        return node

    def atom(self) -> Node:
        kind, value, off = self.tok
        if kind == "int":
            self.i += 1
            return Num(int(value))
        if kind == "y":
            self.i += 1
            k, koff = self.take("int")
            k = int(k)
            if self.n is not None and not 1 <= k <= self.n:
                raise ParseError(f"y{k} is out of range for n={self.n}", off)
            return Y(k, off)
        if kind == "psi":
            self.i += 1
            word: list[int] = []
            if not self.at("]"):
                while True:
                    r, roff = self.take("int")
                    r = int(r)
                    if self.n is not None and not 1 <= r < self.n:
                        raise ParseError(f"psi index {r} is out of range for n={self.n}", roff)
                    word.append(r)
                    if not self.at(","):
                        break
                    self.take("op", ",")
            self.take("op", "]")
            return Psi(tuple(word), off)
        if self.at("("):
            self.take("op", "(")
            node = self.expr()
            self.take("op", ")")
            return node
        raise ParseError(f"unexpected {value or 'end of input'!r}", off)


def parse(src: str, n: int | None = None) -> Node:
    """Parse an element expression; with ``n`` given, generator indices are range-checked."""
    p = _Parser(src, n)
    node = p.expr()
    kind, value, off = p.tok
    if kind != "end":
        raise ParseError(f"unexpected {value!r}", off)
    return node


def evaluate(node: Node, algebra: NilHecke) -> NilHeckeElement:
    if isinstance(node, Num):
        return algebra.scalar(node.value)
    if isinstance(node, Y):
        if not 1 <= node.index <= algebra.n:
            raise ParseError(f"y{node.index} is out of range for n={algebra.n}", node.offset)
        return algebra.y(node.index)
    if isinstance(node, Psi):
        if any(not 1 <= r < algebra.n for r in node.word):
            raise ParseError(f"psi index out of range for n={algebra.n}", node.offset)
        w = nilcoxeter_word(node.word, algebra.n)
        return algebra.zero() if w is None else algebra.psi_perm(w)
    if isinstance(node, Neg):
        return -evaluate(node.arg, algebra)
    if isinstance(node, Pow):
        return evaluate(node.base, algebra) ** node.exponent
    if isinstance(node, BinOp):
        a, b = evaluate(node.left, algebra), evaluate(node.right, algebra)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        return a * b
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(src: str, algebra: NilHecke) -> NilHeckeElement:
    return evaluate(parse(src, algebra.n), algebra)


_CLASS_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)\s*\*\s*)?\(([\d,\s]*)\)\s*")


def parse_index(src: str) -> tuple[int, ...]:
    """``"(0,1)"``, ``"0,1"`` or ``"0 1"`` -> (0, 1)."""
    body = src.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p for p in re.split(r"[,\s]+", body) if p]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad index {src!r}", 0) from None


def parse_class(src: str, ring: GrassmannRing) -> CohomologyClass:
    """Parse ``"(0,2) + (1,1)"``, ``"2*(2,2)"``, ``"-(0,1)"`` or a bare ``"0,1"``."""
    if src.strip() == "0":
        return ring.zero()
    if "(" not in src:
        return ring.cls(parse_index(src))
    total = ring.zero()
    pos = 0
    first = True
    while pos < len(src.rstrip()):
        m = _CLASS_TERM.match(src, pos)
        if not m or m.end() == pos or (not first and not m.group(1)):
            raise ParseError("expected a term like 2*(0,1)", pos)
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        index = parse_index(m.group(3))
        try:
            total = total + ring.cls(index, sign * coeff)
        except ValueError as e:
            raise ParseError(str(e), m.start(3)) from None
        pos = m.end()
        first = False
    if first:
        raise ParseError("empty class expression", 0)
    return total
