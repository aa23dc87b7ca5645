"""Canonical text form for exact polynomials, and a tolerant parser.

Writer conventions, used for every printed polynomial and for
certificate files:

* a standalone univariate polynomial prints highest power first, with
  explicit signs and ASCII carets::

      8*z^4 - 4*z^3 - 4*z^2 - z + 1

* a polynomial in w prints as a w-polynomial with parenthesised
  z-coefficients, each written lowest power first::

      (z - z^2)*w^2 + (-1 + z)*w + (1 - z - z^2)

The parser accepts much more: arbitrary whitespace, ``**`` as a synonym
for ``^``, fractional coefficients ``p/q``, any term order, and products
of parenthesised groups.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polynomials import BiPoly, UPoly


def _term_text(magnitude: Fraction, var: str, power: int) -> str:
    if power == 0:
        return str(magnitude)
    head = "" if magnitude == 1 else f"{magnitude}*"
    tail = var if power == 1 else f"{var}^{power}"
    return head + tail


def format_upoly(p: UPoly, *, descending: bool = True, compact: bool = False) -> str:
    """Render a univariate polynomial; ``compact`` drops all spaces."""
    if p.is_zero():
        return "0"
    indices = range(p.degree, -1, -1) if descending else range(p.degree + 1)
    out: list[str] = []
    for i in indices:
        c = p.coefficient(i)
        if not c:
            continue
        text = _term_text(abs(c), p.var, i)
        if not out:
            out.append(("-" if c < 0 else "") + text)
        elif compact:
            out.append(("-" if c < 0 else "+") + text)
        else:
            out.append(("- " if c < 0 else "+ ") + text)
    return ("" if compact else " ").join(out)


def format_bipoly(p: BiPoly) -> str:
    """Render highest w-power first; z-coefficients ascending in parens."""
    if p.is_zero():
        return "0"
    parts = []
    for j in range(p.deg_w, -1, -1):
        c = p.wcoeff(j)
        if c.is_zero():
            continue
        inner = format_upoly(c, descending=False)
        if j == 0:
            parts.append(f"({inner})")
        elif j == 1:
            parts.append(f"({inner})*w")
        else:
            parts.append(f"({inner})*w^{j}")
    return " + ".join(parts)


class PolyParseError(ValueError):
    pass


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<op>\*\*|[\^*/+\-()]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise PolyParseError(
                    f"unexpected character {text[pos:].strip()[0]!r}"
                )
            break
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            op = m.group("op")
            tokens.append(("op", "^" if op == "**" else op))
    return tokens


class _Parser:
    """Recursive descent over sums of products of atomic factors."""

    def __init__(self, tokens: list[tuple[str, str]], zvar: str, wvar: str | None):
        self.tokens = tokens
        self.pos = 0
        self.zvar = zvar
        self.wvar = wvar

    def peek(self) -> tuple[str, str] | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise PolyParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok != ("op", op):
            raise PolyParseError(f"expected {op!r}, found {tok[1]!r}")

    def parse_sum(self) -> BiPoly:
        total = BiPoly.zero()
        sign = 1
        tok = self.peek()
        if tok == ("op", "+"):
            self.take()
        elif tok == ("op", "-"):
            self.take()
            sign = -1
        while True:
            term = self.parse_product()
            total = total + term if sign > 0 else total - term
            tok = self.peek()
            if tok == ("op", "+"):
                self.take()
                sign = 1
            elif tok == ("op", "-"):
                self.take()
                sign = -1
            else:
                return total

    def parse_product(self) -> BiPoly:
        value = self.parse_factor()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                value = value * self.parse_factor()
            elif tok is not None and (
                tok[0] in ("num", "name") or tok == ("op", "(")
            ):
                # Implicit product such as "2z" or "2(1 - z)".
                value = value * self.parse_factor()
            else:
                return value

    def parse_factor(self) -> BiPoly:
        tok = self.take()
        if tok == ("op", "("):
            inner = self.parse_sum()
            self.expect_op(")")
            return self._maybe_power(inner)
        if tok[0] == "num":
            value = Fraction(int(tok[1]))
            if self.peek() == ("op", "/"):
                self.take()
                den = self.take()
                if den[0] != "num":
                    raise PolyParseError("expected integer denominator")
                value = value / int(den[1])
            return BiPoly((UPoly.constant(value, "z"),))
        if tok[0] == "name":
            name = tok[1]
            if name == self.zvar:
                base = BiPoly.from_upoly(UPoly.variable("z"))
            elif self.wvar is not None and name == self.wvar:
                base = BiPoly.w()
            else:
                raise PolyParseError(f"unknown variable {name!r}")
            return self._maybe_power(base)
        raise PolyParseError(f"unexpected token {tok[1]!r}")

    def _maybe_power(self, base: BiPoly) -> BiPoly:
        if self.peek() == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise PolyParseError("expected integer exponent")
            exponent = int(tok[1])
            result = BiPoly.one()
            for _ in range(exponent):
                result = result * base
            return result
        return base


def _parse(text: str, zvar: str, wvar: str | None) -> BiPoly:
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial text")
    parser = _Parser(tokens, zvar, wvar)
    result = parser.parse_sum()
    if parser.pos != len(tokens):
        raise PolyParseError(
            f"trailing input at token {parser.tokens[parser.pos][1]!r}"
        )
    return result


def parse_bipoly(text: str) -> BiPoly:
    """Parse a polynomial in z and w."""
    return _parse(text, "z", "w")


def parse_upoly(text: str, var: str = "z") -> UPoly:
    """Parse a univariate polynomial in ``var``."""
    result = _parse(text, var, None)
    if result.deg_w > 0:
        raise PolyParseError("unexpected second variable")
    inner = result.wcoeff(0)
    return UPoly(inner.coeffs, var)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PolyParseError(f"bad rational {text.strip()!r}") from exc
