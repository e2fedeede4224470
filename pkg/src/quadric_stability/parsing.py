"""Text format for polynomials: parsing and canonical formatting.

Grammar (whitespace-insensitive, explicit ``*`` and ``^`` required):

    expression := ["+"|"-"] term (("+"|"-") term)*
    term       := factor ("*" factor)*
    factor     := rational | name ["^" integer]
    rational   := integer ["/" integer]
    name       := "x0".."x4" | "y1".."y3" | "c" digits

Projective variables x0..x4 and chart variables y1..y3 may not be mixed in one
expression; parameter symbols c0, c1, ... combine with either family.  Syntax
errors carry the 1-based line and column of the offending token.

``format_polynomial`` emits the canonical form: terms in descending monomial
order (parameter terms within a monomial likewise descending), normalized
signs, coefficients as exact rationals.  Round trip holds:
``parse_polynomial(format_polynomial(p)) == p``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polynomials import Monomial, ParamCoefficient, Polynomial

X_NAMES = ("x0", "x1", "x2", "x3", "x4")
Y_NAMES = ("y1", "y2", "y3")


class ParseError(ValueError):
    """Syntax or semantic error in a polynomial expression, with position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind: str, text: str, line: int, column: int):
        self.kind = kind  # "int", "name", "op", "end"
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, line_start = 1, 0
    pos, n = 0, len(text)
    while pos < n:
        ch = text[pos]
        if ch in " \t\r\n":
            if ch == "\n":
                line += 1
                line_start = pos + 1
            pos += 1
            continue
        column = pos - line_start + 1
        if ch.isdigit():
            end = pos
            while end < n and text[end].isdigit():
                end += 1
            tokens.append(_Token("int", text[pos:end], line, column))
            pos = end
        elif ch.isalpha():
            end = pos
            while end < n and text[end].isalnum():
                end += 1
            tokens.append(_Token("name", text[pos:end], line, column))
            pos = end
        elif ch in "+-*/^":
            tokens.append(_Token("op", ch, line, column))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line, column)
    tokens.append(_Token("end", "", line, n - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0
        self.family: str | None = None  # "x" or "y" once seen

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def error(self, message: str, tok: _Token | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(message, tok.line, tok.column)

    def parse(self):
        terms = []
        tok = self.peek()
        sign = 1
        if tok.kind == "op" and tok.text in "+-":
            sign = -1 if tok.text == "-" else 1
            self.advance()
        elif tok.kind == "end":
            raise self.error("empty expression")
        terms.append(self.parse_term(sign))
        while True:
            tok = self.peek()
            if tok.kind == "end":
                break
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                terms.append(self.parse_term(-1 if tok.text == "-" else 1))
            else:
                raise self.error(f"expected '+' or '-', found {tok.text!r}")
        return terms, self.family

    def parse_term(self, sign: int):
        coeff = Fraction(sign)
        param_exps: dict[int, int] = {}
        var_exps: dict[int, int] = {}
        while True:
            tok = self.peek()
            if tok.kind == "int":
                coeff *= self.parse_rational()
            elif tok.kind == "name":
                self.parse_power(param_exps, var_exps)
            else:
                raise self.error(f"expected a number or variable, found {tok.text or 'end of input'!r}")
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "*":
                self.advance()
                continue
            break
        return coeff, param_exps, var_exps

    def parse_rational(self) -> Fraction:
        tok = self.advance()
        value = Fraction(int(tok.text))
        nxt = self.peek()
        if nxt.kind == "op" and nxt.text == "/":
            self.advance()
            den_tok = self.peek()
            if den_tok.kind != "int":
                raise self.error("expected an integer denominator")
            self.advance()
            den = int(den_tok.text)
            if den == 0:
                raise self.error("zero denominator", den_tok)
            value /= den
        return value

    def parse_power(self, param_exps: dict[int, int], var_exps: dict[int, int]) -> None:
        tok = self.advance()
        name = tok.text
        exponent = 1
        nxt = self.peek()
        if nxt.kind == "op" and nxt.text == "^":
            self.advance()
            exp_tok = self.peek()
            if exp_tok.kind == "op" and exp_tok.text == "-":
                raise self.error("negative exponents are not allowed", exp_tok)
            if exp_tok.kind != "int":
                raise self.error("expected an integer exponent")
            self.advance()
            exponent = int(exp_tok.text)

        if name in X_NAMES:
            self.note_family("x", tok)
            var_exps[X_NAMES.index(name)] = var_exps.get(X_NAMES.index(name), 0) + exponent
        elif name in Y_NAMES:
            self.note_family("y", tok)
            var_exps[Y_NAMES.index(name)] = var_exps.get(Y_NAMES.index(name), 0) + exponent
        elif re.fullmatch(r"c\d+", name):
            index = int(name[1:])
            param_exps[index] = param_exps.get(index, 0) + exponent
        else:
            raise self.error(f"unknown variable {name!r} (use x0..x4, y1..y3 or c0, c1, ...)", tok)

    def note_family(self, family: str, tok: _Token) -> None:
        if self.family is None:
            self.family = family
        elif self.family != family:
            raise self.error("cannot mix x- and y-variables in one expression", tok)


def parse_polynomial(text: str, arity: int | None = None) -> Polynomial:
    """Parse an expression into a Polynomial.

    The arity is inferred from the variable family (x -> 5, y -> 3).  For
    expressions without variables (constants, pure parameters) it defaults to
    5 unless ``arity`` is given; when given, ``arity`` must agree with the
    variables actually used.
    """
    terms, family = _Parser(text).parse()
    inferred = {"x": 5, "y": 3, None: None}[family]
    if arity is None:
        arity = inferred if inferred is not None else 5
    elif inferred is not None and arity != inferred:
        raise ParseError(
            f"expression uses {'x' if inferred == 5 else 'y'}-variables but arity {arity} was requested",
            1,
            1,
        )
    if arity not in (3, 5):
        raise ValueError("only arity 5 (x0..x4) and arity 3 (y1..y3) are supported")

    poly_terms = []
    for coeff, param_exps, var_exps in terms:
        exps = [0] * arity
        for index, e in var_exps.items():
            exps[index] += e
        n_params = max(param_exps) + 1 if param_exps else 0
        p_exps = tuple(param_exps.get(i, 0) for i in range(n_params))
        pc = ParamCoefficient._canonical({p_exps: coeff})
        poly_terms.append((Monomial(tuple(exps)), pc))
    return Polynomial.from_terms(arity, poly_terms)


def _variable_names(arity: int) -> tuple[str, ...]:
    if arity == 5:
        return X_NAMES
    if arity == 3:
        return Y_NAMES
    raise ValueError(f"no variable names defined for arity {arity}")


def format_monomial(m: Monomial) -> str:
    """Render a bare monomial, e.g. ``x0*x3^3``; the empty product is ``1``."""
    names = _variable_names(m.arity)
    parts = [
        name if e == 1 else f"{name}^{e}"
        for name, e in zip(names, m.exponents)
        if e
    ]
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial) -> str:
    """Canonical text form; parsing it back yields ``p`` exactly."""
    if p.is_zero():
        return "0"
    names = _variable_names(p.arity)
    pieces: list[tuple[Fraction, str]] = []
    for m, coeff in p.terms:
        var_part = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, m.exponents)
            if e
        ]
        for p_exps, q in coeff.terms:
            parts = [f"c{i}" if e == 1 else f"c{i}^{e}" for i, e in enumerate(p_exps) if e]
            parts.extend(var_part)
            if abs(q) != 1 or not parts:
                parts.insert(0, str(abs(q)))
            pieces.append((q, "*".join(parts)))

    out: list[str] = []
    for i, (q, body) in enumerate(pieces):
        if i == 0:
            out.append(f"-{body}" if q < 0 else body)
        else:
            out.append(f" - {body}" if q < 0 else f" + {body}")
    return "".join(out)
