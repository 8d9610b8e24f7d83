"""Pure-Python cyclotomic scalar arithmetic.

This is the fallback twin of the compiled kernel in ``_scalar_c.pyx``; the
two expose the same class with the same representation and must stay
behaviourally identical (tests/test_backend_parity.py compares them).
"""

from fractions import Fraction
from math import gcd

from ._cycdata import (
    euler_phi,
    invert_vector,
    lift_vector,
    normalize,
    power_table,
    reduction_rows,
)

BACKEND = "pure"


class CycScalar:
    """Exact element of Q(zeta_m), stored as an integer coefficient vector
    of length phi(m) in the power basis over a positive denominator.

    Values are immutable; arithmetic lifts mixed conductors to the
    compositum lcm. Equality compares canonical forms after such a lift.
    """

    __slots__ = ("m", "num", "den")

    def __init__(self, m, num, den):
        self.m = m
        self.num = num
        self.den = den

    @staticmethod
    def from_rational(value):
        if isinstance(value, CycScalar):
            return value
        frac = Fraction(value)
        return CycScalar(1, (frac.numerator,), frac.denominator)

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not any(self.num)

    def is_one(self):
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self):
        return not any(self.num[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("scalar is not rational")
        return Fraction(self.num[0], self.den)

    def lift(self, M):
        if M == self.m:
            return self
        if M % self.m:
            raise ValueError(f"conductor {self.m} does not divide {M}")
        num = lift_vector(self.m, self.num, M)
        num, den = normalize(num, self.den)
        return CycScalar(M, num, den)

    # -- arithmetic --------------------------------------------------------

    def _pair(self, other):
        if not isinstance(other, CycScalar):
            other = CycScalar.from_rational(other)
        if self.m == other.m:
            return self, other
        M = self.m * other.m // gcd(self.m, other.m)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        a, b = self._pair(other)
        if a.den == b.den:
            num, den = normalize([x + y for x, y in zip(a.num, b.num)], a.den)
        else:
            g = gcd(a.den, b.den)
            fa = b.den // g
            fb = a.den // g
            num, den = normalize(
                [x * fa + y * fb for x, y in zip(a.num, b.num)], a.den * fa
            )
        return CycScalar(a.m, num, den)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        if a.den == b.den:
            num, den = normalize([x - y for x, y in zip(a.num, b.num)], a.den)
        else:
            g = gcd(a.den, b.den)
            fa = b.den // g
            fb = a.den // g
            num, den = normalize(
                [x * fa - y * fb for x, y in zip(a.num, b.num)], a.den * fa
            )
        return CycScalar(a.m, num, den)

    def __rsub__(self, other):
        return CycScalar.from_rational(other) - self

    def __neg__(self):
        return CycScalar(self.m, tuple(-c for c in self.num), self.den)

    def __mul__(self, other):
        a, b = self._pair(other)
        phi = len(a.num)
        if phi == 1:
            num, den = normalize([a.num[0] * b.num[0]], a.den * b.den)
            return CycScalar(a.m, num, den)
        conv = [0] * (2 * phi - 1)
        bn = b.num
        for i, ai in enumerate(a.num):
            if ai:
                for j, bj in enumerate(bn):
                    if bj:
                        conv[i + j] += ai * bj
        rows = reduction_rows(a.m)
        out = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = rows[k - phi]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        num, den = normalize(out, a.den * b.den)
        return CycScalar(a.m, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        if self.is_rational():
            p = self.num[0]
            num, den = normalize([self.den if p > 0 else -self.den] + [0] * (len(self.num) - 1), abs(p))
            return CycScalar(self.m, num, den)
        num, den = invert_vector(self.m, self.num, self.den)
        return CycScalar(self.m, num, den)

    def __truediv__(self, other):
        if not isinstance(other, CycScalar):
            other = CycScalar.from_rational(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycScalar.from_rational(other) * self.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycScalar(1, (1,), 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycScalar.from_rational(other)
        elif not isinstance(other, CycScalar):
            return NotImplemented
        a, b = self._pair(other)
        return a.den == b.den and a.num == b.num

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None  # canonical forms differ across conductors; do not key on scalars

    def __bool__(self):
        return any(self.num)

    def __repr__(self):
        from .scalars import render_scalar

        return f"CycScalar({render_scalar(self)!r})"
