"""Per-conductor arithmetic tables for cyclotomic fields Q(zeta_m).

Everything here is cold-path setup shared by both scalar backends: the
compiled kernel and the pure-Python one call into the same tables, so the
two implementations cannot drift on the field structure itself.

A residue is stored as (num, den): an integer coefficient vector of length
phi(m) in the power basis 1, zeta, ..., zeta^(phi(m)-1), over a positive
integer denominator, with gcd(*num, den) == 1.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("conductor must be >= 1")
    result = m
    n, p = m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divexact(a, b):
    # exact division of integer polynomials, b monic up to the leading coeff
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        if c % b[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        c //= b[-1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a):
        raise ArithmeticError("non-exact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple:
    """Coefficients of Phi_m, low degree first, leading coefficient 1."""
    if m == 1:
        return (-1, 1)
    num = [0] * m + [1]
    num[0] = -1  # x^m - 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, cyclotomic_poly(d))
    return tuple(_poly_divexact(num, den))


@lru_cache(maxsize=None)
def reduction_rows(m: int) -> tuple:
    """Rows k = phi..2*phi-2: x^k mod Phi_m as integer vectors of length phi."""
    phi = euler_phi(m)
    if phi == 1:
        return ()
    poly = cyclotomic_poly(m)
    top = [-c for c in poly[:phi]]  # x^phi
    rows = [tuple(top)]
    cur = top
    for _ in range(phi - 2):
        shifted = [0] + cur[:-1]
        lead = cur[-1]
        if lead:
            shifted = [s + lead * t for s, t in zip(shifted, top)]
        rows.append(tuple(shifted))
        cur = shifted
    return tuple(rows)


@lru_cache(maxsize=None)
def power_table(m: int) -> tuple:
    """zeta_m^e in the power basis, for e = 0..m-1."""
    phi = euler_phi(m)
    vecs = []
    cur = [0] * phi
    cur[0] = 1
    rows = reduction_rows(m) if phi > 1 else None
    poly = cyclotomic_poly(m)
    for _ in range(m):
        vecs.append(tuple(cur))
        if phi == 1:
            # Phi_1 = x - 1 or Phi_2 = x + 1: zeta is +-1
            cur = [cur[0] * -poly[0]]
        else:
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                cur = [c + lead * t for c, t in zip(cur, rows[0])]
    return tuple(vecs)


def normalize(num, den):
    """Reduce an integer vector / denominator pair to canonical form."""
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        num = [c // g for c in num]
        den //= g
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if all(c == 0 for c in num):
        den = 1
    return tuple(num), den


def lift_vector(m: int, num, M: int):
    """Re-express a conductor-m residue in conductor M (m must divide M)."""
    step = M // m
    if step * m != M:
        raise ValueError(f"{m} does not divide {M}")
    table = power_table(M)
    phi_M = euler_phi(M)
    out = [0] * phi_M
    for i, c in enumerate(num):
        if c:
            vec = table[(i * step) % M]
            for j, v in enumerate(vec):
                if v:
                    out[j] += c * v
    return out


def invert_vector(m: int, num, den):
    """Inverse of a nonzero residue, via extended Euclid over Q[x] mod Phi_m."""
    phi = euler_phi(m)
    modulus = [Fraction(c) for c in cyclotomic_poly(m)]
    a = [Fraction(c) for c in num]
    while a and a[-1] == 0:
        a.pop()
    if not a:
        raise ZeroDivisionError("inverse of zero cyclotomic scalar")
    # invariant: s*num0 == r (mod Phi), where num0 is the input polynomial
    r0, r1 = modulus, a
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while True:
        if len(r1) == 1:
            inv_c = 1 / r1[0]
            u = [c * inv_c for c in s1]
            break
        q, rem = _frac_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _frac_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ArithmeticError("input not invertible mod Phi_m")
    # reduce u mod Phi and clear denominators; the value inverted was num/den
    u = _frac_mod(u, modulus)
    u += [Fraction(0)] * (phi - len(u))
    lcm_den = 1
    for c in u:
        lcm_den = lcm_den * c.denominator // gcd(lcm_den, c.denominator)
    out_num = [int(c * lcm_den) * den for c in u]
    return normalize(out_num, lcm_den)


def _frac_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    inv = 1 / b[-1]
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] * inv
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _frac_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, bj in enumerate(b):
        a[j] -= bj
    while a and a[-1] == 0:
        a.pop()
    return a


def _frac_mod(a, modulus):
    _, rem = _frac_divmod(list(a), modulus)
    return rem
