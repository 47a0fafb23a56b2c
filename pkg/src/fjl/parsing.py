"""Infix expression grammar shared by the catalog fixture and the command line.

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/" | <juxtaposition>) unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" unary)?
    atom   := number | name | name "(" expr ")" | "(" expr ")"

Names are resolved by a :class:`Context`; anything it does not know is an
error.  Values are built as jet expressions so that constants, ring
variables and jets all share one arithmetic.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import exponents as ex
from .exponents import Exponent
from .jets import JetExpr, JetFraction, JetSymbol, scalar_exponent
from .scalars import I, Scalar, PARAMETERS, numeric_radical


class ParseError(ValueError):
    def __init__(self, message: str, column: int, text: str = "", line: int | None = None):
        where = f"column {column}" if line is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.message = message
        self.column = column
        self.text = text
        self.line = line


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[^\W\d]\w*)|(?P<op>\*\*|[-+*/^(),=]))", re.UNICODE)


@dataclass
class Token:
    kind: str
    value: str
    column: int


def tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", col, text)
        kind = mt.lastgroup
        start = mt.start(kind)
        value = mt.group(kind)
        if kind == "num" and "." in value:
            raise ParseError("decimal literals are not exact; write a fraction", start + 1, text)
        if value == "**":
            value = "^"
        out.append(Token(kind, value, start + 1))
        pos = mt.end()
    out.append(Token("end", "", len(text) + 1))
    return out


JET_FUNCTIONS = {"d": (1, False), "d2": (2, False), "d3": (3, False), "dlog": (1, True), "d2log": (2, True)}


@dataclass
class Context:
    """What names mean.

    ``variables`` maps surface names to internal jet-variable names;
    ``functions`` maps ``exp``/``sin``/``cos`` style names to callables taking
    the parsed argument and the column.
    """

    variables: dict = field(default_factory=dict)
    radicals: dict = field(default_factory=dict)
    parameters: tuple = PARAMETERS
    functions: dict = field(default_factory=dict)
    jets: bool = False

    def resolve(self, name: str, column: int, text: str):
        if name == "i":
            return JetExpr.const(I)
        if name in self.variables:
            return JetExpr.var(self.variables[name])
        if name in self.radicals:
            return JetExpr.const(self.radicals[name])
        if name in self.parameters:
            return JetExpr.const(Scalar.param(name))
        raise ParseError(f"unknown identifier {name!r}", column, text)


def jet_context(names=("x", "y", "z", "w", "u", "v")) -> Context:
    return Context(variables={v: v for v in names}, jets=True)


class _Parser:
    def __init__(self, text: str, ctx: Context):
        self.text = text
        self.ctx = ctx
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        raise ParseError(msg, tok.column, self.text)

    def eat(self, value=None, kind=None):
        t = self.tok
        if value is not None and t.value != value:
            self.error(f"expected {value!r}" + (f", found {t.value!r}" if t.value else ", found end of input"))
        if kind is not None and t.kind != kind:
            self.error(f"expected {kind}")
        self.i += 1
        return t

    def parse(self):
        if self.tok.kind == "end":
            self.error("empty expression")
        v = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.value!r}")
        return v

    def expr(self):
        v = self.term()
        while self.tok.value in ("+", "-"):
            op = self.eat().value
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def _starts_atom(self):
        t = self.tok
        return t.kind in ("num", "name") or t.value == "("

    def term(self):
        v = self.unary()
        while True:
            if self.tok.value in ("*", "/"):
                op = self.eat()
                w = self.unary()
                if op.value == "*":
                    v = v * w
                else:
                    v = self._divide(v, w, op)
            elif self._starts_atom():
                v = v * self.power()
            else:
                return v

    def _divide(self, v, w, tok):
        if _is_zero(w):
            self.error("division by zero", tok)
        try:
            return v / w
        except (ZeroDivisionError, ArithmeticError) as exc:
            self.error(str(exc), tok)

    def unary(self):
        if self.tok.value == "-":
            self.eat()
            return -self.unary()
        if self.tok.value == "+":
            self.eat()
            return self.unary()
        return self.power()

    def power(self):
        base_tok = self.tok
        base = self.atom()
        if self.tok.value != "^":
            return base
        caret = self.eat()
        if self.tok.kind == "end":
            self.error("missing exponent after '^'")
        exp_tok = self.tok
        e = self.unary()
        return self._raise(base, e, base_tok, exp_tok, caret)

    def _raise(self, base, e, base_tok, exp_tok, caret):
        k = _as_exponent(e)
        if k is None:
            self.error("exponent must be a rational number or a polynomial in n, m, l", exp_tok)
        if isinstance(base, JetFraction):
            if isinstance(k, int):
                return base ** k
            self.error("only integer powers of fractions", caret)
        if base.is_constant():
            b = base.constant_value()
            if isinstance(k, int):
                if k < 0 and b.is_zero():
                    self.error("zero to a negative power", caret)
                return JetExpr.const(b ** k)
            if isinstance(k, Fraction):
                if not b.is_rational():
                    self.error("fractional powers apply to rational constants only", caret)
                root = numeric_radical(b.rational_value(), k.denominator)
                return JetExpr.const(root ** k.numerator)
            if b.is_one():
                return base
            self.error("symbolic power of a constant", caret)
        try:
            return base ** k
        except (ArithmeticError, ValueError) as exc:
            self.error(str(exc), caret)

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.eat()
            return JetExpr.const(int(t.value))
        if t.value == "(":
            self.eat()
            v = self.expr()
            self.eat(")")
            return v
        if t.kind == "name":
            self.eat()
            if self.tok.value == "(" and (t.value in JET_FUNCTIONS or t.value in self.ctx.functions
                                          or t.value == "sqrt"):
                return self.call(t)
            return self.ctx.resolve(t.value, t.column, self.text)
        if t.kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {t.value!r}")

    def call(self, name_tok):
        self.eat("(")
        if name_tok.value in JET_FUNCTIONS:
            if not self.ctx.jets:
                self.error(f"jets are not available here", name_tok)
            arg = self.eat(kind="name")
            self.eat(")")
            if arg.value not in self.ctx.variables:
                self.error(f"unknown variable {arg.value!r}", arg)
            order, log = JET_FUNCTIONS[name_tok.value]
            return JetExpr.symbol(JetSymbol(self.ctx.variables[arg.value], order, log))
        arg_tok = self.tok
        arg = self.expr()
        self.eat(")")
        if name_tok.value == "sqrt":
            return self._raise(arg, JetExpr.const(Scalar.rational(Fraction(1, 2))), arg_tok, arg_tok, name_tok)
        try:
            return self.ctx.functions[name_tok.value](arg)
        except ParseError:
            raise
        except ValueError as exc:
            self.error(str(exc), arg_tok)


def _is_zero(v):
    return v.is_zero()


def _as_exponent(e):
    if isinstance(e, JetFraction):
        e = e.simplify()
        if isinstance(e, JetFraction):
            return None
    if not e.is_constant():
        return None
    s = e.constant_value()
    if s.is_rational():
        r = s.rational_value()
        return int(r) if r.denominator == 1 else r
    try:
        return ex.coerce(scalar_exponent(s))
    except ValueError:
        return None


def parse(text: str, ctx: Context | None = None):
    """Parse ``text`` into a JetExpr (or JetFraction)."""
    return _Parser(text, ctx or jet_context()).parse()


def parse_scalar(text: str, ctx: Context | None = None) -> Scalar:
    v = parse(text, ctx or Context())
    if isinstance(v, JetFraction):
        v = v.simplify()
    if isinstance(v, JetFraction) or not v.is_constant():
        raise ParseError("expected a constant", 1, text)
    return v.constant_value()


def parse_jet(text: str, names=("x", "y", "z", "w", "u", "v")):
    return parse(text, jet_context(names))


def parse_assignment(line: str, ctx: Context, column_offset: int = 0):
    """``name = expr`` -> (name, value)."""
    left, sep, right = line.partition("=")
    if not sep:
        raise ParseError("expected 'name = expression'", column_offset + 1, line)
    name = left.strip()
    if not name.isidentifier():
        raise ParseError(f"bad name {name!r}", column_offset + 1, line)
    start = len(left) + 1
    try:
        value = parse(right, ctx)
    except ParseError as err:
        raise ParseError(err.message, err.column + start + column_offset, line) from None
    return name, value
