"""Element and symbol-expression language.

    element = factor {"*" factor}
    factor  = ident ["^" sint] | "1" | "-1"
    symbol  = "(" element {"," element} ")"
    expr    = [sint "*"] symbol {("+" | "-") [sint "*"] symbol}

Parsing yields a small AST that serializes back to text; evaluation against
a tower turns it into ElementClass / SymbolSum values.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DegreeMismatch, ParseError, UnknownGenerator
from .symcalc import SymbolSum
from .tower import minus_one_class

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


@dataclass(frozen=True)
class Factor:
    name: str  # an identifier, or the literals "1" / "-1"
    exp: int | None = None

    def __str__(self):
        return self.name if self.exp is None else f"{self.name}^{self.exp}"


@dataclass(frozen=True)
class Element:
    factors: tuple

    def __str__(self):
        return "*".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class Term:
    sign: str | None  # None for the first term
    coef: int | None
    elements: tuple

    def __str__(self):
        body = "(" + ", ".join(str(e) for e in self.elements) + ")"
        if self.coef is not None:
            body = f"{self.coef}*{body}"
        return body if self.sign is None else f" {self.sign} {body}"


@dataclass(frozen=True)
class Expr:
    terms: tuple

    def __str__(self):
        return "".join(str(t) for t in self.terms)


def _tokenize(text):
    tokens = []
    pos = 0
    while text[pos:].strip():
        mo = _TOKEN.match(text, pos)
        num, ident, ch = mo.groups()
        start = mo.start(mo.lastindex)
        if num is not None:
            tokens.append(("int", int(num), start + 1))
        elif ident is not None:
            tokens.append(("ident", ident, start + 1))
        else:
            if ch not in "()*^,+-":
                raise ParseError(f"unexpected character {ch!r}", start + 1)
            tokens.append((ch, ch, start + 1))
        pos = mo.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, offset=0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def at(self, kind, offset=0):
        return self.peek(offset)[0] == kind

    def sint(self):
        neg = False
        if self.at("-"):
            self.take("-")
            neg = True
        value = self.take("int")[1]
        return -value if neg else value

    def factor(self):
        if self.at("-") and self.at("int", 1):
            col = self.peek()[2]
            self.take("-")
            if self.take("int")[1] != 1:
                raise ParseError("only the literal -1 is allowed", col)
            return Factor("-1")
        if self.at("int"):
            tok = self.take("int")
            if tok[1] != 1:
                raise ParseError("only the literal 1 is allowed", tok[2])
            return Factor("1")
        name = self.take("ident")[1]
        if self.at("^"):
            self.take("^")
            return Factor(name, self.sint())
        return Factor(name)

    def element(self):
        factors = [self.factor()]
        while self.at("*"):
            self.take("*")
            factors.append(self.factor())
        return Element(tuple(factors))

    def symbol(self):
        self.take("(")
        elements = [self.element()]
        while self.at(","):
            self.take(",")
            elements.append(self.element())
        self.take(")")
        return tuple(elements)

    def term(self, sign):
        coef = None
        if not self.at("("):
            coef = self.sint()
            self.take("*")
        return Term(sign, coef, self.symbol())

    def expr(self):
        terms = [self.term(None)]
        while self.at("+") or self.at("-"):
            sign = self.take(self.peek()[0])[1]
            terms.append(self.term(sign))
        return Expr(tuple(terms))

    def finish(self):
        self.take("end")


def parse_element_ast(text):
    p = _Parser(text)
    out = p.element()
    p.finish()
    return out


def parse_expr_ast(text):
    p = _Parser(text)
    out = p.expr()
    p.finish()
    return out


def eval_element(ast, tower):
    x = tower.one()
    for f in ast.factors:
        if f.name == "1":
            y = tower.one()
        elif f.name == "-1":
            y = minus_one_class(tower)
        elif f.name == "c":
            y = tower.base_generator()
        elif f.name in tower.uniformizer_names:
            y = tower.uniformizer(tower.index(f.name))
        else:
            raise UnknownGenerator(f"{f.name!r} is not a generator of {tower}")
        x = x * (y if f.exp is None else y ** f.exp)
    return x


def eval_expr(ast, tower):
    degree = len(ast.terms[0].elements)
    terms = []
    for t in ast.terms:
        if len(t.elements) != degree:
            raise DegreeMismatch(f"symbols of lengths {degree} and {len(t.elements)} in one sum")
        coef = 1 if t.coef is None else t.coef
        if t.sign == "-":
            coef = -coef
        terms.append((coef, tuple(eval_element(e, tower) for e in t.elements)))
    return SymbolSum(tower, degree, tuple(terms))


def parse_element(text, tower):
    return eval_element(parse_element_ast(text), tower)


def parse_symbol_expr(text, tower):
    return eval_expr(parse_expr_ast(text), tower)


_PAIR = re.compile(r"\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*\Z")


def parse_int_pair(text):
    """``"(-1,-3)"`` -> (-1, -3), for quaternion algebra arguments."""
    mo = _PAIR.match(text)
    if not mo:
        raise ParseError(f"expected (a,b) with integers, got {text!r}", 1)
    return int(mo.group(1)), int(mo.group(2))
