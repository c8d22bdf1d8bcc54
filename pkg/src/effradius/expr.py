"""A small expression language for real functions of one variable ``x``.

Grammar (``^`` binds tighter than unary minus, which binds tighter than
``*``/``/``; ``^`` is right associative)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := ("-" | "+") unary | power
    power   := primary ("^" unary)?
    primary := NUMBER | "x" | "pi" | "e" | FUNC "(" expr ")" | "(" expr ")"
    FUNC    := sin | cos | tan | exp | ln | sqrt

Implicit multiplication is rejected: write ``3*x``, not ``3x``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from .errors import DomainError, ParseError

FUNCTIONS = ("sin", "cos", "tan", "exp", "ln", "sqrt")
CONSTANTS = {"pi": math.pi, "e": math.e}


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class NamedConst:
    name: str

    @property
    def value(self) -> float:
        return CONSTANTS[self.name]


@dataclass(frozen=True)
class Neg:
    operand: "ExprNode"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "ExprNode"
    right: "ExprNode"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "ExprNode"


ExprNode = Union[Const, Var, NamedConst, Neg, BinOp, Call]


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.tok.pos)
        return self.advance()

    def parse(self) -> ExprNode:
        node = self.expr()
        if self.tok.kind != "end":
            if self.tok.kind in ("num", "name") or self.tok.text == "(":
                raise ParseError(
                    f"unexpected {self.tok.text!r}; implicit multiplication is not supported, use '*'",
                    self.tok.pos,
                )
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> ExprNode:
        node = self.term()
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> ExprNode:
        node = self.unary()
        while self.tok.text in ("*", "/"):
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> ExprNode:
        if self.tok.text == "-":
            self.advance()
            return Neg(self.unary())
        if self.tok.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> ExprNode:
        base = self.primary()
        if self.tok.text != "^":
            return base
        caret = self.advance()
        exponent = self.unary()
        _check_power(base, exponent, caret.pos)
        return BinOp("^", base, exponent)

    def primary(self) -> ExprNode:
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            return Const(float(tok.text))
        if tok.kind == "name":
            self.advance()
            if tok.text == "x":
                return Var()
            if tok.text in CONSTANTS:
                return NamedConst(tok.text)
            if tok.text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(tok.text, arg)
            raise ParseError(f"unknown identifier {tok.text!r}", tok.pos)
        if tok.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        found = tok.text or "end of input"
        raise ParseError(f"unexpected {found!r}", tok.pos)


def _check_power(base: ExprNode, exponent: ExprNode, pos: int) -> None:
    # a variable base needs a constant integer exponent
    if not depends_on_x(base):
        return
    if depends_on_x(exponent):
        raise ParseError("exponent must not depend on x when the base does", pos)
    try:
        value = eval_ast(exponent, 0.0)
    except DomainError as exc:
        raise ParseError(f"invalid exponent: {exc}", pos) from None
    if not math.isfinite(value) or value != int(value):
        raise ParseError(f"non-integer exponent {value!r} needs a constant base", pos)


def parse(text: str) -> ExprNode:
    if not text or not text.strip():
        raise ParseError("empty expression", 0)
    return _Parser(text).parse()


def depends_on_x(node: ExprNode) -> bool:
    match node:
        case Var():
            return True
        case Const() | NamedConst():
            return False
        case Neg(operand):
            return depends_on_x(operand)
        case BinOp(_, left, right):
            return depends_on_x(left) or depends_on_x(right)
        case Call(_, arg):
            return depends_on_x(arg)
    raise TypeError(f"not an expression node: {node!r}")


def _power(base: float, exponent: float, x: float) -> float:
    if base == 0.0 and exponent < 0:
        raise DomainError("0 raised to a negative power", x)
    if exponent == int(exponent) and abs(exponent) < 2**53:
        try:
            return base ** int(exponent)
        except OverflowError:
            return math.copysign(math.inf, base) if int(exponent) % 2 else math.inf
    try:
        return math.pow(base, exponent)
    except ValueError:
        raise DomainError(f"{base!r}^{exponent!r} is not real", x) from None
    except OverflowError:
        return math.inf


def _call(func: str, u: float, x: float) -> float:
    if func == "sin":
        return math.sin(u)
    if func == "cos":
        return math.cos(u)
    if func == "tan":
        c = math.cos(u)
        if c == 0.0:
            raise DomainError("tan at a pole", x)
        return math.sin(u) / c
    if func == "exp":
        try:
            return math.exp(u)
        except OverflowError:
            return math.inf
    if func == "ln":
        if u <= 0.0:
            raise DomainError("ln of a nonpositive value", x)
        return math.log(u)
    if func == "sqrt":
        if u < 0.0:
            raise DomainError("sqrt of a negative value", x)
        return math.sqrt(u)
    raise ValueError(f"unknown function {func!r}")


def eval_ast(node: ExprNode, x: float) -> float:
    """Evaluate ``node`` at ``x`` in IEEE double precision."""
    match node:
        case Const(value):
            return value
        case Var():
            return x
        case NamedConst():
            return node.value
        case Neg(operand):
            return -eval_ast(operand, x)
        case BinOp(op, left, right):
            a = eval_ast(left, x)
            b = eval_ast(right, x)
            if op == "+":
                return a + b
            if op == "-":
                return a - b
            if op == "*":
                return a * b
            if op == "/":
                if b == 0.0:
                    raise DomainError("division by zero", x)
                return a / b
            if op == "^":
                return _power(a, b, x)
            raise ValueError(f"unknown operator {op!r}")
        case Call(func, arg):
            return _call(func, eval_ast(arg, x), x)
    raise TypeError(f"not an expression node: {node!r}")


def to_text(node: ExprNode) -> str:
    """Fully parenthesised rendering; ``parse(to_text(n)) == n``."""
    match node:
        case Const(value):
            return repr(value) if value >= 0 else f"({value!r})"
        case Var():
            return "x"
        case NamedConst(name):
            return name
        case Neg(operand):
            return f"(-{to_text(operand)})"
        case BinOp(op, left, right):
            return f"({to_text(left)} {op} {to_text(right)})"
        case Call(func, arg):
            return f"{func}({to_text(arg)})"
    raise TypeError(f"not an expression node: {node!r}")
