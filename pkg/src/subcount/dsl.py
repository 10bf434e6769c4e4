"""Parser for group specs such as ``"A(4) x Z(5)"`` or ``"PSL(2,7)"``.

Grammar (whitespace is ignored)::

    expr := atom ('x' atom)*
    atom := NAME '(' INT (',' INT)* ')'
    NAME := Z | D | Q | S | A | SL | PSL | SD

``x`` (or ``×``) is the direct product and associates to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple, Union

from .errors import ParseError

ARITY = {"Z": 1, "D": 1, "Q": 1, "S": 1, "A": 1, "SL": 2, "PSL": 2, "SD": 3}

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Z]+)|(?P<times>[x×])|(?P<punct>[(),])|(?P<word>[a-z_]\w*)|(?P<bad>\S))")


@dataclass(frozen=True)
class Atom:
    kind: str
    args: Tuple[int, ...]
    offset: int = 0

    def __str__(self):
        return f"{self.kind}({','.join(map(str, self.args))})"


@dataclass(frozen=True)
class Product:
    factors: Tuple["GroupSpecAST", ...]

    def __str__(self):
        return " x ".join(map(str, self.factors))


GroupSpecAST = Union[Atom, Product]


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str, value: str = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value is not None else kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> GroupSpecAST:
        factors = [self.atom()]
        while self.peek()[0] == "times":
            self.i += 1
            factors.append(self.atom())
        self.take("end")
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def atom(self) -> Atom:
        kind, name, offset = self.peek()
        if kind != "name":
            raise ParseError(f"expected a group name, found {name or 'end of input'!r}", offset)
        if name not in ARITY:
            raise ParseError(f"unknown group name {name!r}", offset)
        self.i += 1
        self.take("punct", "(")
        args = [int(self.take("int")[1])]
        while self.peek()[1] == ",":
            self.i += 1
            args.append(int(self.take("int")[1]))
        close = self.peek()
        if len(args) != ARITY[name]:
            raise ParseError(f"{name} takes {ARITY[name]} argument(s), got {len(args)}", close[2])
        self.take("punct", ")")
        return Atom(name, tuple(args), offset)


def parse_group_spec(text: str) -> GroupSpecAST:
    return _Parser(text).expr()


def build(ast: GroupSpecAST, order_cap: int = None):
    """Construct the group described by ``ast``; domain errors come from the constructors."""
    from . import constructors as c
    from .group import DEFAULT_ORDER_CAP

    cap = order_cap or DEFAULT_ORDER_CAP
    if isinstance(ast, Product):
        groups = [build(f, cap) for f in ast.factors]
        result = groups[0]
        for g in groups[1:]:
            result = c.direct_product(result, g, order_cap=cap)
        return result
    k, args = ast.kind, ast.args
    if k == "Z":
        return c.cyclic(args[0])
    if k == "D":
        return c.dihedral(args[0])
    if k == "Q":
        return c.generalized_quaternion(args[0])
    if k == "S":
        return c.symmetric(args[0])
    if k == "A":
        return c.alternating(args[0])
    if k in ("SL", "PSL"):
        if args[0] != 2:
            raise c.DomainError(f"{k}(n,q) is only implemented for n = 2")
        return (c.sl2 if k == "SL" else c.psl2)(args[1], order_cap=cap)
    if k == "SD":
        return c.semidirect_cyclic(c.SemidirectSpec(*args))
    raise AssertionError(k)  # pragma: no cover


def group_from_spec(text: str, order_cap: int = None):
    return build(parse_group_spec(text), order_cap)
