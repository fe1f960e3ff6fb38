"""A tiny expression language with second-order forward-mode differentiation.

Curve pieces are written as formulas in one variable x plus named parameters,
using this grammar (precedence low to high; power binds tighter than unary
minus, so -x^2 means -(x^2)):

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | power
    power  := atom ("^" factor)?
    atom   := NUMBER | "x" | NAME | "sqrt" "(" expr ")" | "abs" "(" expr ")"
            | "(" expr ")"

Exponents must not depend on x; that is enforced at parse time.  Any NAME
other than x, sqrt and abs is a parameter and must be bound to a value before
evaluation.

Evaluation propagates Jet2 triples (value, first, second derivative) through
the tree, so y, y' and y'' come out of a single pass with no symbolic algebra
and no truncation error beyond float rounding.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import DomainError, NonDifferentiable, ParseError


# ---------------------------------------------------------------------------
# jets

@dataclass(frozen=True)
class Jet2:
    """Value and first two derivatives of a scalar function at one point."""

    value: float
    d1: float
    d2: float

    @classmethod
    def constant(cls, c: float) -> "Jet2":
        return cls(c, 0.0, 0.0)

    @classmethod
    def variable(cls, x: float) -> "Jet2":
        return cls(x, 1.0, 0.0)

    def __add__(self, other: "Jet2") -> "Jet2":
        return Jet2(self.value + other.value, self.d1 + other.d1, self.d2 + other.d2)

    def __sub__(self, other: "Jet2") -> "Jet2":
        return Jet2(self.value - other.value, self.d1 - other.d1, self.d2 - other.d2)

    def __neg__(self) -> "Jet2":
        return Jet2(-self.value, -self.d1, -self.d2)

    def __mul__(self, other: "Jet2") -> "Jet2":
        return Jet2(
            self.value * other.value,
            self.d1 * other.value + self.value * other.d1,
            self.d2 * other.value + 2.0 * self.d1 * other.d1 + self.value * other.d2,
        )

    def __truediv__(self, other: "Jet2") -> "Jet2":
        if other.value == 0.0:
            raise DomainError("division by zero")
        q = self.value / other.value
        q1 = (self.d1 - q * other.d1) / other.value
        q2 = (self.d2 - 2.0 * q1 * other.d1 - q * other.d2) / other.value
        return Jet2(q, q1, q2)


def _pow(base: float, r: float) -> float:
    """Real power with explicit domain errors instead of complex results."""
    try:
        if base > 0.0:
            return base ** r
        if base == 0.0:
            if r > 0.0:
                return 0.0
            if r == 0.0:
                return 1.0
            raise DomainError("zero raised to a negative power")
        if float(r).is_integer():
            return base ** r
    except OverflowError as exc:
        raise DomainError(f"power overflow: {base} ** {r}") from exc
    raise DomainError(f"negative base {base} with non-integer exponent {r}")


def jet_pow(j: Jet2, r: float) -> Jet2:
    """Power rule for a constant exponent r."""
    v = _pow(j.value, r)
    d1 = r * _pow(j.value, r - 1.0) * j.d1 if r != 0.0 else 0.0
    # u'^2 and u'' shortcuts keep exact-zero inner derivatives from forcing
    # a spurious 0^negative evaluation
    t1 = 0.0 if j.d1 == 0.0 or r == 0.0 or r == 1.0 else r * (r - 1.0) * _pow(j.value, r - 2.0) * j.d1 * j.d1
    t2 = 0.0 if j.d2 == 0.0 or r == 0.0 else r * _pow(j.value, r - 1.0) * j.d2
    return Jet2(v, d1, t1 + t2)


def jet_sqrt(j: Jet2) -> Jet2:
    if j.value < 0.0:
        raise DomainError(f"sqrt of negative value {j.value}")
    return jet_pow(j, 0.5)


def jet_abs(j: Jet2) -> Jet2:
    if j.value == 0.0:
        raise NonDifferentiable("abs is not differentiable at 0")
    return j if j.value > 0.0 else -j


# ---------------------------------------------------------------------------
# syntax tree

class ExprNode:
    """Base class for parsed expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Const(ExprNode):
    value: float


@dataclass(frozen=True)
class Var(ExprNode):
    pass


@dataclass(frozen=True)
class Param(ExprNode):
    name: str


@dataclass(frozen=True)
class Neg(ExprNode):
    operand: ExprNode


@dataclass(frozen=True)
class BinOp(ExprNode):
    op: str  # one of + - * /
    left: ExprNode
    right: ExprNode


@dataclass(frozen=True)
class Pow(ExprNode):
    base: ExprNode
    exponent: ExprNode  # never contains the variable


@dataclass(frozen=True)
class Call(ExprNode):
    fn: str  # "sqrt" or "abs"
    arg: ExprNode


def contains_var(e: ExprNode) -> bool:
    if isinstance(e, Var):
        return True
    if isinstance(e, Neg):
        return contains_var(e.operand)
    if isinstance(e, BinOp):
        return contains_var(e.left) or contains_var(e.right)
    if isinstance(e, Pow):
        return contains_var(e.base) or contains_var(e.exponent)
    if isinstance(e, Call):
        return contains_var(e.arg)
    return False


def substitute_var(e: ExprNode, replacement: ExprNode) -> ExprNode:
    """Tree with every occurrence of x replaced by the given subtree."""
    if isinstance(e, Var):
        return replacement
    if isinstance(e, Neg):
        return Neg(substitute_var(e.operand, replacement))
    if isinstance(e, BinOp):
        return BinOp(e.op, substitute_var(e.left, replacement), substitute_var(e.right, replacement))
    if isinstance(e, Pow):
        # exponents contain no x by construction
        return Pow(substitute_var(e.base, replacement), e.exponent)
    if isinstance(e, Call):
        return Call(e.fn, substitute_var(e.arg, replacement))
    return e


# ---------------------------------------------------------------------------
# tokenizer / parser

_TOKEN_RE = re.compile(
    r"(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()])"
)

_FUNCTIONS = ("sqrt", "abs")


class _Tokens:
    def __init__(self, src: str):
        self.src = src
        self.items: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(src):
            if src[pos].isspace():
                pos += 1
                continue
            m = _TOKEN_RE.match(src, pos)
            if m is None:
                raise ParseError(f"unexpected character {src[pos]!r}", pos)
            self.items.append((m.lastgroup, m.group(), pos))
            pos = m.end()
        self.items.append(("end", "", len(src)))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.items[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.items[self.i]
        self.i += 1
        return tok


class _Parser:
    def __init__(self, src: str):
        self.toks = _Tokens(src)

    def parse(self) -> ExprNode:
        node = self.expr()
        kind, text, pos = self.toks.peek()
        if kind != "end":
            raise ParseError(f"expected operator or end of input, found {text!r}", pos)
        return node

    def expr(self) -> ExprNode:
        node = self.term()
        while True:
            kind, text, _ = self.toks.peek()
            if kind == "op" and text in "+-":
                self.toks.advance()
                node = BinOp(text, node, self.term())
            else:
                return node

    def term(self) -> ExprNode:
        node = self.factor()
        while True:
            kind, text, _ = self.toks.peek()
            if kind == "op" and text in "*/":
                self.toks.advance()
                node = BinOp(text, node, self.factor())
            else:
                return node

    def factor(self) -> ExprNode:
        kind, text, _ = self.toks.peek()
        if kind == "op" and text == "-":
            self.toks.advance()
            return Neg(self.factor())
        return self.power()

    def power(self) -> ExprNode:
        base = self.atom()
        kind, text, pos = self.toks.peek()
        if kind == "op" and text == "^":
            self.toks.advance()
            exponent = self.factor()
            if contains_var(exponent):
                raise ParseError("exponent may not depend on x", pos)
            return Pow(base, exponent)
        return base

    def atom(self) -> ExprNode:
        kind, text, pos = self.toks.advance()
        if kind == "num":
            return Const(float(text))
        if kind == "name":
            if text == "x":
                return Var()
            if text in _FUNCTIONS:
                k, t, p = self.toks.advance()
                if not (k == "op" and t == "("):
                    raise ParseError(f"expected '(' after {text}", p)
                arg = self.expr()
                k, t, p = self.toks.advance()
                if not (k == "op" and t == ")"):
                    raise ParseError("expected ')'", p)
                return Call(text, arg)
            return Param(text)
        if kind == "op" and text == "(":
            node = self.expr()
            k, t, p = self.toks.advance()
            if not (k == "op" and t == ")"):
                raise ParseError("expected ')'", p)
            return node
        what = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"expected a number, name or '(', found {what}", pos)


def parse_expression(src: str) -> ExprNode:
    """Parse source text into an expression tree; ParseError on bad input."""
    return _Parser(src).parse()


# ---------------------------------------------------------------------------
# evaluation

def _param_value(name: str, params: dict[str, float] | None) -> float:
    if params is None or name not in params:
        raise DomainError(f"unbound parameter {name!r}")
    return float(params[name])


def eval_jet2(e: ExprNode, x: float, params: dict[str, float] | None = None) -> Jet2:
    """Evaluate value, first and second derivative with respect to x."""
    if isinstance(e, Const):
        return Jet2.constant(e.value)
    if isinstance(e, Var):
        return Jet2.variable(x)
    if isinstance(e, Param):
        return Jet2.constant(_param_value(e.name, params))
    if isinstance(e, Neg):
        return -eval_jet2(e.operand, x, params)
    if isinstance(e, BinOp):
        left = eval_jet2(e.left, x, params)
        right = eval_jet2(e.right, x, params)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return left * right
        return left / right
    if isinstance(e, Pow):
        r = eval_value(e.exponent, x, params)
        return jet_pow(eval_jet2(e.base, x, params), r)
    if isinstance(e, Call):
        arg = eval_jet2(e.arg, x, params)
        return jet_sqrt(arg) if e.fn == "sqrt" else jet_abs(arg)
    raise TypeError(f"not an expression node: {e!r}")


def eval_value(e: ExprNode, x: float, params: dict[str, float] | None = None) -> float:
    """Evaluate the value only; usable where derivatives do not exist."""
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Var):
        return x
    if isinstance(e, Param):
        return _param_value(e.name, params)
    if isinstance(e, Neg):
        return -eval_value(e.operand, x, params)
    if isinstance(e, BinOp):
        left = eval_value(e.left, x, params)
        right = eval_value(e.right, x, params)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return left * right
        if right == 0.0:
            raise DomainError("division by zero")
        return left / right
    if isinstance(e, Pow):
        return _pow(eval_value(e.base, x, params), eval_value(e.exponent, x, params))
    if isinstance(e, Call):
        arg = eval_value(e.arg, x, params)
        if e.fn == "sqrt":
            if arg < 0.0:
                raise DomainError(f"sqrt of negative value {arg}")
            return math.sqrt(arg)
        return abs(arg)
    raise TypeError(f"not an expression node: {e!r}")


# ---------------------------------------------------------------------------
# pretty printing

_PREC_ADD, _PREC_MUL, _PREC_UNARY, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def _prec(e: ExprNode) -> int:
    if isinstance(e, BinOp):
        return _PREC_ADD if e.op in "+-" else _PREC_MUL
    if isinstance(e, Neg):
        return _PREC_UNARY
    if isinstance(e, Pow):
        return _PREC_POW
    if isinstance(e, Const) and e.value < 0:
        return _PREC_UNARY
    return _PREC_ATOM


def _wrap(e: ExprNode, minimum: int) -> str:
    s = to_source(e)
    return f"({s})" if _prec(e) < minimum else s


def to_source(e: ExprNode) -> str:
    """Render a tree back to parseable text that evaluates identically."""
    if isinstance(e, Const):
        return repr(e.value)
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Param):
        return e.name
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, _PREC_UNARY)
    if isinstance(e, BinOp):
        left = _wrap(e.left, _prec(e))
        right = _wrap(e.right, _prec(e) + 1)
        return f"{left} {e.op} {right}"
    if isinstance(e, Pow):
        # the exponent sits below unary minus in the grammar, so -2 needs no parens
        base = _wrap(e.base, _PREC_ATOM)
        exp = to_source(e.exponent)
        if _prec(e.exponent) < _PREC_UNARY:
            exp = f"({exp})"
        return f"{base}^{exp}"
    if isinstance(e, Call):
        return f"{e.fn}({to_source(e.arg)})"
    raise TypeError(f"not an expression node: {e!r}")
