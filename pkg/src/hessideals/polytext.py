"""Text form of polynomials: a small recursive-descent parser and a printer.

Grammar (whitespace is ignored between tokens)::

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := ("-" | "+") unary | power
    power   := atom ("^" INTEGER)?
    atom    := RATIONAL | IDENT | "(" expr ")"
    RATIONAL:= INTEGER ("/" INTEGER)?
    IDENT   := [A-Za-z_][A-Za-z0-9_]*

Multiplication is always explicit.  Identifiers must be declared, either as
variables or, for family templates, as parameters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import ArityMismatch, HessError
from .polycore import Polynomial


class PolynomialSyntaxError(HessError, SyntaxError):
    """Malformed input; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int, source: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.source = source


class UnknownIdentifier(PolynomialSyntaxError):
    pass


class NegativeExponent(PolynomialSyntaxError):
    pass


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class PolyText:
    source: str
    variable_names: tuple[str, ...]
    parameter_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "variable_names", tuple(self.variable_names))
        object.__setattr__(self, "parameter_names", tuple(self.parameter_names))
        names = self.variable_names + self.parameter_names
        for name in names:
            if not _IDENT.fullmatch(name):
                raise ValueError(f"invalid identifier {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("variable and parameter names must be pairwise distinct")
        if not self.variable_names:
            raise ValueError("at least one variable is required")


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(src: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            break
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {src[pos]!r}", pos, src)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, names: Sequence[str]):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0
        self.index = {name: k for k, name in enumerate(names)}
        self.nvars = len(names)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise PolynomialSyntaxError(f"expected {op!r}, found {val or 'end of input'!r}", pos, self.src)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise PolynomialSyntaxError("empty expression", 0, self.src)
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise PolynomialSyntaxError(f"unexpected token {val!r}", pos, self.src)
        return p

    def expr(self):
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            p = self.unary()
            return -p if val == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind == "op" and val == "-":
                raise NegativeExponent("negative exponent", pos, self.src)
            if kind != "num" or "/" in val:
                raise PolynomialSyntaxError("exponent must be a nonnegative integer literal", pos, self.src)
            return base ** int(val)
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            num, _, den = val.replace(" ", "").partition("/")
            if den and int(den) == 0:
                raise PolynomialSyntaxError("zero denominator", pos, self.src)
            return Polynomial.constant(Fraction(int(num), int(den) if den else 1), self.nvars)
        if kind == "ident":
            if val not in self.index:
                raise UnknownIdentifier(f"unknown identifier {val!r}", pos, self.src)
            return Polynomial.variable(self.index[val], self.nvars)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise PolynomialSyntaxError(f"unexpected {val or 'end of input'!r}", pos, self.src)


def parse_polynomial(text: PolyText | str, variable_names: Sequence[str] | None = None) -> Polynomial:
    """Parse ``text`` into canonical sparse form.

    Accepts either a :class:`PolyText` or a plain string plus variable names.
    """
    if isinstance(text, str):
        if variable_names is None:
            raise ValueError("variable_names required when parsing a plain string")
        text = PolyText(text, tuple(variable_names))
    if text.parameter_names:
        raise ValueError("template has parameters; use parse_family")
    return _Parser(text.source, text.variable_names).parse()


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_polynomial(p: Polynomial, variable_names: Sequence[str] | None = None) -> str:
    """Deterministic text form, terms in decreasing grevlex order.

    Without explicit names, variables print as x0, x1, ...; the common
    three-variable case uses x, y, z.
    """
    if variable_names is None:
        variable_names = ("x", "y", "z") if p.nvars == 3 else tuple(f"x{i}" for i in range(p.nvars))
    if len(variable_names) != p.nvars:
        raise ArityMismatch(f"{len(variable_names)} names for {p.nvars} variables")
    if p.is_zero:
        return "0"
    pieces = []
    for mono in p.support():
        c = p.coefficient(mono)
        factors = []
        for name, e in zip(variable_names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


def parse_family(text: PolyText, assignments: Sequence[Sequence]) -> list[Polynomial]:
    """Instantiate a parameterized template at each rational tuple."""
    if not text.parameter_names:
        raise ValueError("template declares no parameters")
    nv, npar = len(text.variable_names), len(text.parameter_names)
    template = _Parser(text.source, text.variable_names + text.parameter_names).parse()
    out = []
    for values in assignments:
        if len(values) != npar:
            raise ArityMismatch(f"tuple of length {len(values)} for {npar} parameters")
        vals = [Fraction(v) for v in values]
        terms: dict = {}
        for mono, c in template.items():
            for v, e in zip(vals, mono[nv:]):
                if e:
                    c = c * v**e
            if c:
                key = mono[:nv]
                terms[key] = terms.get(key, 0) + c
        out.append(Polynomial(nv, terms))
    return out


def parse_rational(token: str) -> Fraction:
    """Parse ``p``, ``-p`` or ``p/q`` (used for CSV assignment files)."""
    token = token.strip()
    if not re.fullmatch(r"[-+]?\d+(/\d+)?", token):
        raise ValueError(f"not a rational literal: {token!r}")
    return Fraction(token)

