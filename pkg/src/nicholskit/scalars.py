"""Exact arithmetic in cyclotomic fields: the ground field of the package.

The scalar class itself comes from one of two interchangeable backends:
a compiled Cython kernel (``_scalar_c``) or a pure-Python twin
(``_scalar_py``). The compiled one is preferred; set ``NICHOLSKIT_PURE=1``
to force the fallback. Everything above raw arithmetic (roots of unity,
multiplicative orders, the textual scalar syntax) lives here and is shared.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import _cycdata
from .errors import ZeroInputError

if os.environ.get("NICHOLSKIT_PURE"):
    from ._scalar_py import BACKEND, CycScalar
else:
    try:
        from ._scalar_c import BACKEND, CycScalar  # type: ignore[attr-defined]
    except ImportError:
        from ._scalar_py import BACKEND, CycScalar

ZERO = CycScalar(1, (0,), 1)
ONE = CycScalar(1, (1,), 1)
MINUS_ONE = CycScalar(1, (-1,), 1)


def rational(p, q: int = 1) -> CycScalar:
    return CycScalar.from_rational(Fraction(p, q))


def root_of_unity(m: int, k: int) -> CycScalar:
    """The canonical scalar for zeta_m^k, kept in conductor m unless the
    value is rational (then conductor 1)."""
    if m < 1:
        raise ValueError("order must be a positive integer")
    k %= m
    order = m // gcd(m, k) if k else 1
    if order == 1:
        return ONE
    if order == 2:
        return MINUS_ONE
    num, den = _cycdata.normalize(list(_cycdata.power_table(m)[k]), 1)
    return CycScalar(m, num, den)


def cyc_arith(a: CycScalar, b: CycScalar, op: str) -> CycScalar:
    """Dispatch helper for the four field operations, by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def multiplicative_order(a: CycScalar):
    """Minimal n with a**n == 1, or None when a is not a root of unity.

    Roots of unity in Q(zeta_m) all have order dividing lcm(2, m), so the
    membership test a**lcm(2, m) == 1 is rigorous; the order is then the
    least divisor that works.
    """
    if a.is_zero():
        raise ZeroInputError("zero has no multiplicative order")
    bound = a.m if a.m % 2 == 0 else 2 * a.m
    if a ** bound != ONE:
        return None
    for d in _divisors(bound):
        if a ** d == ONE:
            return d
    raise AssertionError("unreachable: bound itself divides bound")


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_m^k with exact order bookkeeping; hashable, unlike CycScalar."""

    m: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % self.m)

    @property
    def order(self) -> int:
        return self.m // gcd(self.m, self.k) if self.k else 1

    def scalar(self) -> CycScalar:
        return root_of_unity(self.m, self.k)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        m = self.m * other.m // gcd(self.m, other.m)
        return RootOfUnity(m, self.k * (m // self.m) + other.k * (m // other.m))

    def __pow__(self, e: int) -> "RootOfUnity":
        return RootOfUnity(self.m, self.k * (e % self.m))

    @staticmethod
    def from_scalar(a: CycScalar) -> "RootOfUnity":
        n = multiplicative_order(a)
        if n is None:
            raise ZeroInputError("scalar is not a root of unity")
        if n == 1:
            return RootOfUnity(1, 0)
        for k in range(1, n):
            if gcd(k, n) == 1 and root_of_unity(n, k) == a:
                return RootOfUnity(n, k)
        raise AssertionError("order-n scalar must be a primitive n-th root")


def q_int(q: CycScalar, n: int) -> CycScalar:
    """(n)_q = 1 + q + ... + q^(n-1)."""
    total = ZERO
    power = ONE
    for _ in range(n):
        total = total + power
        power = power * q
    return total


def q_factorial(q: CycScalar, n: int) -> CycScalar:
    total = ONE
    for k in range(1, n + 1):
        total = total * q_int(q, k)
    return total


# -- textual scalar syntax ---------------------------------------------------
#
#   expr   := term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := '-'* atom ('^' '-'? INT)?
#   atom   := INT | 'z' '(' INT ')' | '(' expr ')'

_TOKEN = re.compile(r"\s*(\d+|[zZ]|\^|\(|\)|\+|-|\*|/)")


class _Parser:
    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if not match:
                if text[pos:].strip():
                    raise ValueError(f"bad scalar syntax at {text[pos:]!r}")
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

    def parse(self) -> CycScalar:
        value = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input {self.peek()!r}")
        return value

    def expr(self) -> CycScalar:
        value = self.term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                value = value + self.term()
            else:
                value = value - self.term()
        return value

    def term(self) -> CycScalar:
        value = self.factor()
        while self.peek() in ("*", "/"):
            if self.take() == "*":
                value = value * self.factor()
            else:
                value = value / self.factor()
        return value

    def factor(self) -> CycScalar:
        sign = 1
        while self.peek() == "-":
            self.take()
            sign = -sign
        value = self.atom()
        if self.peek() == "^":
            self.take()
            esign = 1
            if self.peek() == "-":
                self.take()
                esign = -1
            value = value ** (esign * int(self.take()))
        return value if sign == 1 else -value

    def atom(self) -> CycScalar:
        tok = self.take()
        if tok in ("z", "Z"):
            self.take("(")
            m = int(self.take())
            self.take(")")
            return root_of_unity(m, 1)
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        if tok.isdigit():
            return rational(int(tok))
        raise ValueError(f"unexpected token {tok!r}")


def parse_scalar(text: str) -> CycScalar:
    return _Parser(text).parse()


def _render_coeff(frac: Fraction) -> str:
    return str(frac.numerator) if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"


def render_scalar(a: CycScalar) -> str:
    """Render in the parseable syntax; parse(render(a)) == a."""
    if a.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(a.num):
        if not c:
            continue
        coeff = Fraction(c, a.den)
        if i == 0:
            parts.append(_render_coeff(coeff))
        elif coeff == 1:
            parts.append(f"z({a.m})^{i}")
        elif coeff == -1:
            parts.append(f"-z({a.m})^{i}")
        else:
            parts.append(f"{_render_coeff(coeff)}*z({a.m})^{i}")
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out
