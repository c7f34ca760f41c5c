"""Expression front-end: lexer, recursive-descent parser, AST and evaluator.

Grammar (``'*'`` between factors is optional, ``'/'`` divides by a factor
that must evaluate to a scalar)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'|'/'] factor)*
    factor := atom ('^' int)? ("'")?
    atom   := name | number | '(' expr ')'

Names are ``a as c cs B0 Bp Bm w+ w- wz q s``.  Offsets in
:class:`~qsphere.errors.ParseError` are byte offsets into the UTF-8 input.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .algebra import A, AS, C, CS, AlgebraElement, elem
from .errors import DegreeCapError, ParseError, QSphereError
from .scalar import QScalar

GENERATOR_NAMES = ("a", "as", "c", "cs", "B0", "Bp", "Bm")
FORM_NAMES = ("w+", "w-", "wz")
SCALAR_NAMES = ("q", "s")

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<form>w[+\-z])
  | (?P<name>[A-Za-z][A-Za-z0-9]*)
  | (?P<num>[0-9]+)
  | (?P<op>[-+*/^()'])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def _byte_offsets(text: str) -> list:
    out, pos = [], 0
    for ch in text:
        out.append(pos)
        pos += len(ch.encode("utf-8"))
    out.append(pos)
    return out


def tokenize(text: str) -> list:
    offs = _byte_offsets(text)
    toks, i = [], 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", offs[i])
        kind = m.lastgroup
        if kind != "ws":
            word = m.group()
            if kind == "name" and word not in GENERATOR_NAMES + SCALAR_NAMES:
                raise ParseError(f"unknown name {word!r}", offs[i])
            toks.append(Token(kind, word, offs[i]))
        i = m.end()
    toks.append(Token("end", "", offs[len(text)]))
    return toks


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int
    offset: int = 0


@dataclass(frozen=True)
class Name:
    name: str
    offset: int = 0


@dataclass(frozen=True)
class Neg:
    arg: "Expr"
    offset: int = 0


@dataclass(frozen=True)
class Sum:
    terms: tuple  # ((sign, Expr), ...)
    offset: int = 0


@dataclass(frozen=True)
class Product:
    factors: tuple
    offset: int = 0


@dataclass(frozen=True)
class Quotient:
    num: "Expr"
    den: "Expr"
    offset: int = 0


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exp: int
    offset: int = 0


@dataclass(frozen=True)
class Star:
    arg: "Expr"
    offset: int = 0


@dataclass(frozen=True)
class Group:
    arg: "Expr"
    offset: int = 0


Expr = Union[Num, Name, Neg, Sum, Product, Quotient, Power, Star, Group]


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.text != text or tok.kind == "end":
            raise ParseError(f"expected {text!r}", tok.offset)
        return self.take()

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.offset)
        return node

    def expr(self) -> Expr:
        start = self.peek()
        terms = []
        sign = "+"
        if start.text in "+-" and start.kind == "op":
            sign = self.take().text
        terms.append((sign, self.term()))
        while self.peek().kind == "op" and self.peek().text in ("+", "-"):
            sign = self.take().text
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == "+":
            return terms[0][1]
        if len(terms) == 1:
            return Neg(terms[0][1], start.offset)
        return Sum(tuple(terms), start.offset)

    def _starts_factor(self, tok: Token) -> bool:
        return tok.kind in ("name", "form", "num") or tok.text == "("

    def term(self) -> Expr:
        start = self.peek()
        node = self.factor()
        factors = [node]
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                factors.append(self.factor())
            elif tok.kind == "op" and tok.text == "/":
                self.take()
                den = self.factor()
                lhs = factors[0] if len(factors) == 1 else Product(tuple(factors), start.offset)
                factors = [Quotient(lhs, den, tok.offset)]
            elif self._starts_factor(tok):
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors), start.offset)

    def factor(self) -> Expr:
        node = self.atom()
        if self.peek().text == "^" and self.peek().kind == "op":
            hat = self.take()
            sign = 1
            if self.peek().kind == "op" and self.peek().text in "+-":
                sign = -1 if self.take().text == "-" else 1
            tok = self.peek()
            if tok.kind != "num":
                raise ParseError("expected integer exponent", tok.offset)
            self.take()
            node = Power(node, sign * int(tok.text), hat.offset)
        if self.peek().text == "'" and self.peek().kind == "op":
            node = Star(node, self.take().offset)
        return node

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "num":
            self.take()
            return Num(int(tok.text), tok.offset)
        if tok.kind in ("name", "form"):
            self.take()
            return Name(tok.text, tok.offset)
        if tok.text == "(":
            self.take()
            inner = self.expr()
            self.expect(")")
            return Group(inner, tok.offset)
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"unexpected {what}", tok.offset)


def parse(text: str) -> Expr:
    """Parse ``text`` into an AST; raises :class:`ParseError` with a byte offset."""
    return _Parser(text).parse()


def to_text(node: Expr) -> str:
    """Print an AST with normalized whitespace."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Group):
        return "(" + to_text(node.arg) + ")"
    if isinstance(node, Neg):
        return "-" + to_text(node.arg)
    if isinstance(node, Sum):
        out = []
        for k, (sign, t) in enumerate(node.terms):
            body = to_text(t)
            if k == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)
    if isinstance(node, Product):
        return " ".join(to_text(f) for f in node.factors)
    if isinstance(node, Quotient):
        return to_text(node.num) + "/" + to_text(node.den)
    if isinstance(node, Power):
        return f"{to_text(node.base)}^{node.exp}"
    if isinstance(node, Star):
        return to_text(node.arg) + "'"
    raise TypeError(node)


# -- evaluation ----------------------------------------------------------------


def _atoms() -> dict:
    from . import podles

    return {
        "a": A, "as": AS, "c": C, "cs": CS,
        "B0": podles.B0, "Bp": podles.BP, "Bm": podles.BM,
        "q": elem(QScalar.q_power(1)), "s": elem(QScalar.s_power(1)),
    }


_ATOMS: dict = {}


def _is_form(x) -> bool:
    from .calculus import OneForm

    return isinstance(x, OneForm)


def _mul(x, y, offset: int):
    from .calculus import smulL

    if _is_form(x) and _is_form(y):
        raise ParseError("product of two one-forms", offset)
    if _is_form(y):
        return smulL(x, y)
    return x * y


def _add(x, y, offset: int):
    if _is_form(x) != _is_form(y):
        # a zero function may be added to a form and vice versa
        if not _is_form(x) and x.is_zero():
            return y
        if not _is_form(y) and y.is_zero():
            return x
        raise ParseError("sum of a function and a one-form", offset)
    return x + y


def evaluate(node: Expr):
    """Evaluate to an :class:`AlgebraElement` or, with ``w`` tokens, a ``OneForm``."""
    if not _ATOMS:
        _ATOMS.update(_atoms())
    try:
        return _eval(node)
    except (ParseError, DegreeCapError):
        raise
    except QSphereError as exc:
        raise ParseError(str(exc), getattr(node, "offset", 0)) from exc


def _eval(node: Expr):
    from .calculus import OMEGA, dagger

    if isinstance(node, Num):
        return elem(node.value)
    if isinstance(node, Name):
        if node.name in FORM_NAMES:
            return OMEGA[node.name[1]]
        return _ATOMS[node.name]
    if isinstance(node, Group):
        return _eval(node.arg)
    if isinstance(node, Neg):
        return -_eval(node.arg)
    if isinstance(node, Sum):
        acc = None
        for sign, t in node.terms:
            v = _eval(t)
            if sign == "-":
                v = -v
            acc = v if acc is None else _add(acc, v, getattr(t, "offset", node.offset))
        return acc
    if isinstance(node, Product):
        acc = _eval(node.factors[0])
        for f in node.factors[1:]:
            acc = _mul(acc, _eval(f), f.offset)
        return acc
    if isinstance(node, Quotient):
        num, den = _eval(node.num), _eval(node.den)
        if _is_form(den) or not den.is_scalar():
            raise ParseError("division by a non-scalar", node.offset)
        val = den.scalar_value()
        if val.is_zero():
            raise ParseError("division by zero", node.offset)
        return num.scale(val.inv())
    if isinstance(node, Power):
        base = _eval(node.base)
        if _is_form(base):
            raise ParseError("power of a one-form", node.offset)
        if node.exp >= 0:
            return base ** node.exp
        if not base.is_scalar() or base.is_zero():
            raise ParseError("negative power of a non-invertible element", node.offset)
        return elem(base.scalar_value().inv() ** (-node.exp))
    if isinstance(node, Star):
        v = _eval(node.arg)
        return dagger(v) if _is_form(v) else v.star()
    raise TypeError(node)


def parse_value(text: str):
    return evaluate(parse(text))


def parse_element(text: str) -> AlgebraElement:
    v = parse_value(text)
    if _is_form(v):
        raise ParseError("expected a function, got a one-form", 0)
    return v


def parse_scalar(text: str) -> QScalar:
    v = parse_element(text)
    if not v.is_scalar():
        raise ParseError("expected a scalar in q and s", 0)
    return v.scalar_value()


def parse_oneform(text: str):
    from .calculus import OneForm

    v = parse_value(text)
    if isinstance(v, OneForm):
        return v
    if v.is_zero():
        return OneForm()
    raise ParseError("expected a one-form", 0)
