"""The textual element syntax: rendering and parsing of tensor elements,
as in ``x1*x2 - z(3)^1*x2*x1``. Scalar subexpressions follow the scalar
syntax of :mod:`nicholskit.scalars`."""

from __future__ import annotations

import re

from .scalars import ONE, CycScalar, parse_scalar, rational, render_scalar, root_of_unity
from .tensor_algebra import TensorElement


def render_word(w: tuple) -> str:
    if not w:
        return "1"
    return "*".join(f"x{letter}" for letter in w)


def _coeff_prefix(c: CycScalar) -> str:
    text = render_scalar(c)
    if " " in text or "/" in text or "*" in text:
        return f"({text})*"
    if text == "1":
        return ""
    if text == "-1":
        return "-"
    return f"{text}*"


def render_tensor_element(e: TensorElement) -> str:
    if e.is_zero():
        return "0"
    parts = []
    for w in sorted(e.coeffs):
        c = e.coeffs[w]
        if not w:
            parts.append(render_scalar(c))
        else:
            prefix = _coeff_prefix(c)
            parts.append(prefix + render_word(w))
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out


_TOKEN = re.compile(r"\s*(\d+|x\d+|[zZ]|\^|\(|\)|\+|-|\*|/)")


class _ElementParser:
    """Recursive descent over sums of products of scalar atoms and letters."""

    def __init__(self, text: str, theta: int):
        self.theta = theta
        self.tokens = []
        pos = 0
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if not match:
                if text[pos:].strip():
                    raise ValueError(f"bad element syntax at {text[pos:]!r}")
                break
            self.tokens.append(match.group(1))
            pos = match.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected or 'token'}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> dict:
        terms = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input {self.peek()!r}")
        return terms

    def expr(self) -> dict:
        out = self.term()
        while self.peek() in ("+", "-"):
            sign = ONE if self.take() == "+" else -ONE
            for w, c in self.term().items():
                add = sign * c
                prev = out.get(w)
                total = add if prev is None else prev + add
                if total.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = total
        return out

    def term(self) -> dict:
        scalar, word = self.factor()
        while self.peek() in ("*", "/"):
            if self.take() == "*":
                s2, w2 = self.factor()
                scalar = scalar * s2
                word = word + w2
            else:
                s2, w2 = self.factor()
                if w2:
                    raise ValueError("cannot divide by a word")
                scalar = scalar / s2
        if scalar.is_zero():
            return {}
        return {word: scalar}

    def factor(self):
        sign = 1
        while self.peek() == "-":
            self.take()
            sign = -sign
        scalar, word = self.atom()
        if self.peek() == "^":
            self.take()
            esign = 1
            if self.peek() == "-":
                self.take()
                esign = -1
            e = esign * int(self.take())
            if word:
                if len(word) != 1 or e < 0:
                    raise ValueError("powers apply to single letters or scalars")
                word = word * e
            else:
                scalar = scalar ** e
        if sign == -1:
            scalar = -scalar
        return scalar, word

    def atom(self):
        tok = self.take()
        if tok.startswith("x"):
            letter = int(tok[1:])
            if not 1 <= letter <= self.theta:
                raise ValueError(f"letter {tok} outside x1..x{self.theta}")
            return ONE, (letter,)
        if tok in ("z", "Z"):
            self.take("(")
            m = int(self.take())
            self.take(")")
            return root_of_unity(m, 1), ()
        if tok == "(":
            inner = self.expr()
            self.take(")")
            if len(inner) == 1 and () in inner:
                return inner[()], ()
            raise ValueError("parenthesized words are not supported")
        if tok.isdigit():
            return rational(int(tok)), ()
        raise ValueError(f"unexpected token {tok!r}")


def parse_element(text: str, theta: int) -> TensorElement:
    """Parse a homogeneous element; all words must share one length."""
    terms = _ElementParser(text, theta).parse()
    if not terms:
        return TensorElement(theta, 0, {})
    lengths = {len(w) for w in terms}
    if len(lengths) != 1:
        raise ValueError(f"element mixes word lengths {sorted(lengths)}")
    return TensorElement(theta, lengths.pop(), terms)
