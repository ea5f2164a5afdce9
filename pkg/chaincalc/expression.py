"""
A small expression language for coefficient fields.

Grammar:

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["-"] INTEGER)?
    atom   := NUMBER | NAME | FUNC "(" expr ")" | "(" expr ")"

NAME is a coordinate ``x1 … xn`` (``x``, ``y``, ``z`` alias the first three),
``pi``, or an extra parameter such as ``t``. FUNC is ``sin``, ``cos`` or
``exp``. Numbers are read as exact rationals, so ``0.5*x1^2`` differentiates
without rounding.

Form specs join ``expr @ index`` pieces with ``;``; the index lists 1-based
axes (``12`` or ``1,2``) and may be omitted for 0-forms, e.g. ``x1 @ 2`` is
x dy.
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

import sympy as sp

from chaincalc.exceptions import ExpressionParseError
from chaincalc.fields.symbolic import coordinate_symbols

_log = logging.getLogger(__name__)

FUNCTIONS = {"sin": sp.sin, "cos": sp.cos, "exp": sp.exp}
ALIASES = ("x", "y", "z")

_TOKEN = re.compile(
    r"(?P<ws>[ \t]+)|(?P<nl>\n)|(?P<num>\d+(?:\.\d*)?(?:[eE][-+]?\d+)?|\.\d+(?:[eE][-+]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str, line: int = 1, col: int = 1) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ExpressionParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = match.lastgroup or ""
        value = match.group()
        if kind == "nl":
            line += 1
            col = 1
        else:
            if kind != "ws":
                tokens.append(Token(kind, value, line, col))
            col += len(value)
        pos = match.end()
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: List[Token], names: Mapping[str, sp.Expr]) -> None:
        self.tokens = tokens
        self.pos = 0
        self.names = names

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _error(self, message: str, token: Token | None = None) -> ExpressionParseError:
        token = token or self.current
        return ExpressionParseError(message, token.line, token.col)

    def _expect(self, text: str) -> Token:
        if self.current.text != text:
            found = self.current.text or "end of input"
            raise self._error(f"expected {text!r}, found {found!r}")
        return self._advance()

    def parse(self) -> sp.Expr:
        expr = self.expr()
        if self.current.kind != "end":
            raise self._error(f"unexpected {self.current.text!r}")
        return expr

    def expr(self) -> sp.Expr:
        value = self.term()
        while self.current.text in ("+", "-"):
            op = self._advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> sp.Expr:
        value = self.unary()
        while self.current.text in ("*", "/"):
            op = self._advance().text
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self) -> sp.Expr:
        if self.current.text in ("+", "-"):
            op = self._advance().text
            operand = self.unary()
            return operand if op == "+" else -operand
        return self.power()

    def power(self) -> sp.Expr:
        base = self.atom()
        if self.current.text != "^":
            return base
        self._advance()
        negative = False
        if self.current.text == "-":
            negative = True
            self._advance()
        token = self.current
        if token.kind != "num" or not token.text.isdigit():
            raise self._error("exponent must be an integer", token)
        self._advance()
        exponent = int(token.text)
        return base ** (-exponent if negative else exponent)

    def atom(self) -> sp.Expr:
        token = self.current
        if token.kind == "num":
            self._advance()
            return sp.Rational(token.text)
        if token.kind == "name":
            self._advance()
            if token.text in FUNCTIONS:
                self._expect("(")
                inner = self.expr()
                self._expect(")")
                return FUNCTIONS[token.text](inner)
            if token.text == "pi":
                return sp.pi
            if token.text in self.names:
                return self.names[token.text]
            raise self._error(f"unknown name {token.text!r}", token)
        if token.text == "(":
            self._advance()
            inner = self.expr()
            self._expect(")")
            return inner
        raise self._error(f"unexpected {token.text or 'end of input'!r}", token)


def _names(dim: int, extra: Sequence[str | sp.Symbol]) -> Dict[str, sp.Expr]:
    xs = coordinate_symbols(dim)
    names: Dict[str, sp.Expr] = {f"x{i + 1}": s for i, s in enumerate(xs)}
    for alias, s in zip(ALIASES, xs):
        names[alias] = s
    for item in extra:
        symbol = item if isinstance(item, sp.Symbol) else sp.Symbol(item, real=True)
        names[str(symbol)] = symbol
    return names


def parse_expression(
    text: str,
    dim: int,
    extra: Sequence[str | sp.Symbol] = (),
    *,
    line: int = 1,
    col: int = 1,
) -> sp.Expr:
    """
    Parse a mini-language expression over the coordinates of R^dim.

    Raises:
        ExpressionParseError: with the line and column of the offending token.
    """
    return _Parser(tokenize(text, line, col), _names(dim, extra)).parse()


def _parse_index(text: str, dim: int, line: int, col: int) -> Tuple[int, ...]:
    text = text.strip()
    if text in ("", "-"):
        return ()
    digits = text.split(",") if "," in text else list(text)
    try:
        axes = tuple(int(d) - 1 for d in digits)
    except ValueError as e:
        raise ExpressionParseError(f"bad index {text!r}", line, col) from e
    if any(a < 0 or a >= dim for a in axes) or list(axes) != sorted(set(axes)):
        raise ExpressionParseError(
            f"index {text!r} must list increasing axes in 1..{dim}", line, col
        )
    return axes


def parse_form_terms(
    text: str,
    dim: int,
    extra: Sequence[str | sp.Symbol] = (),
) -> Tuple[int, Dict[Tuple[int, ...], sp.Expr]]:
    """
    Parse a form spec into its grade and coefficient expressions.

    Example:
    ```python
    parse_form_terms("x1 @ 2; -x2 @ 1", 2)  # (1, {(1,): x1, (0,): -x2})
    ```
    """
    coeffs: Dict[Tuple[int, ...], sp.Expr] = {}
    grade = None
    offset = 0
    for piece in text.split(";"):
        start = offset
        offset += len(piece) + 1
        if not piece.strip():
            continue
        line = text.count("\n", 0, start) + 1
        col = start - (text.rfind("\n", 0, start) + 1) + 1
        expr_text, sep, index_text = piece.partition("@")
        index = _parse_index(index_text, dim, line, col + len(expr_text) + 1) if sep else ()
        if grade is None:
            grade = len(index)
        elif grade != len(index):
            raise ExpressionParseError(
                f"mixed grades {grade} and {len(index)} in one form", line, col
            )
        expr = parse_expression(expr_text, dim, extra, line=line, col=col)
        coeffs[index] = coeffs.get(index, sp.Integer(0)) + expr
    if grade is None:
        raise ExpressionParseError("empty form", 1, 1)
    return grade, coeffs


def parse_components(
    text: str,
    dim: int,
    extra: Sequence[str | sp.Symbol] = (),
) -> List[sp.Expr]:
    """Parse comma-separated component expressions, e.g. ``"-x2, x1"``."""
    out = []
    offset = 0
    for piece in text.split(","):
        out.append(parse_expression(piece, dim, extra, col=offset + 1))
        offset += len(piece) + 1
    return out
