"""Diagonal braided vector spaces, realizations over finite abelian groups,
and the Lie algebras of Yetter-Drinfeld endomorphisms acting on them.

A braiding is the matrix q with c(x_i (x) x_j) = q_ij x_j (x) x_i. A
principal realization over Gamma = Z/N_1 x ... x Z/N_r assigns to each basis
vector a group element g_i and a character chi_i with chi_j(g_i) = q_ij;
endomorphisms preserving every isotypic component (g, chi) form the Lie
algebra bd_V, which contains the diagonal torus part t_V.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import NotClosedError, NotRootOfUnityError, NotYDMorphismError
from .linalg import Echelon, linear_solve
from .scalars import ONE, ZERO, CycScalar, RootOfUnity, multiplicative_order

# An End(V) map is a theta x theta tuple-of-rows matrix over CycScalar;
# column j holds the image of x_j: d(x_j) = sum_i rows[i][j] x_i.
EndoMatrix = tuple


@dataclass(frozen=True)
class DiagonalBraiding:
    theta: int
    q: tuple  # theta x theta tuple-of-tuples of nonzero CycScalar

    def __post_init__(self):
        if self.theta < 1:
            raise ValueError("theta must be >= 1")
        if len(self.q) != self.theta or any(len(row) != self.theta for row in self.q):
            raise ValueError("q must be a theta x theta matrix")
        for i, row in enumerate(self.q):
            for j, entry in enumerate(row):
                if entry.is_zero():
                    raise ValueError(f"q[{i+1}][{j+1}] must be nonzero")

    def entry(self, i: int, j: int) -> CycScalar:
        """q_ij with 1-based letters, as everywhere in the element syntax."""
        return self.q[i - 1][j - 1]


def braiding_from_lists(rows) -> DiagonalBraiding:
    q = tuple(tuple(CycScalar.from_rational(x) if not isinstance(x, CycScalar) else x for x in row) for row in rows)
    return DiagonalBraiding(len(q), q)


@dataclass(frozen=True)
class AbelianGroup:
    """Z/N_1 x ... x Z/N_r; elements are exponent tuples reduced mod N_t."""

    exponents: tuple

    def __post_init__(self):
        if any(n < 1 for n in self.exponents):
            raise ValueError("group exponents must be positive")

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def order(self) -> int:
        n = 1
        for e in self.exponents:
            n *= e
        return n

    def element(self, coords) -> tuple:
        return tuple(c % n for c, n in zip(coords, self.exponents))

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.exponents))

    def neg(self, a: tuple) -> tuple:
        return tuple((-x) % n for x, n in zip(a, self.exponents))

    def zero(self) -> tuple:
        return (0,) * self.rank

    def elements(self) -> list:
        out = [()]
        for n in self.exponents:
            out = [e + (k,) for e in out for k in range(n)]
        return out


@dataclass(frozen=True)
class Character:
    """A character of an AbelianGroup, stored by its values on the standard
    generators; the t-th value is a root of unity of order dividing N_t."""

    values: tuple  # tuple of RootOfUnity

    def evaluate(self, element: tuple) -> CycScalar:
        out = ONE
        for value, e in zip(self.values, element):
            if e:
                out = out * (value ** e).scalar()
        return out


def character_from_scalars(group: AbelianGroup, scalars_on_gens) -> Character:
    values = []
    for t, s in enumerate(scalars_on_gens):
        r = RootOfUnity.from_scalar(s)
        if group.exponents[t] % r.order:
            raise ValueError(
                f"character value #{t+1} has order {r.order}, not dividing {group.exponents[t]}"
            )
        values.append(RootOfUnity(group.exponents[t], r.k * (group.exponents[t] // r.m)))
    return Character(tuple(values))


@dataclass(frozen=True)
class YDRealization:
    group: AbelianGroup
    pairs: tuple  # theta pairs (group element, Character)
    braiding: DiagonalBraiding

    @property
    def theta(self) -> int:
        return self.braiding.theta

    def isotypic_classes(self) -> list:
        """Indices 1..theta grouped by equal (g_i, chi_i), in first-seen order."""
        classes: list = []
        for i in range(1, self.theta + 1):
            key = self.pairs[i - 1]
            for cls in classes:
                if self.pairs[cls[0] - 1] == key:
                    cls.append(i)
                    break
            else:
                classes.append([i])
        return classes

    def same_pair(self, i: int, j: int) -> bool:
        return self.pairs[i - 1] == self.pairs[j - 1]


def derive_realization(braiding: DiagonalBraiding) -> YDRealization:
    """The canonical principal realization over (Z/m)^theta, m = lcm of the
    orders of the braiding entries; g_i is the i-th standard generator and
    chi_j(g_i) = q_ij by construction."""
    m = 1
    for i, row in enumerate(braiding.q):
        for j, entry in enumerate(row):
            n = multiplicative_order(entry)
            if n is None:
                raise NotRootOfUnityError(i + 1, j + 1)
            m = m * n // gcd(m, n)
    theta = braiding.theta
    group = AbelianGroup((m,) * theta)
    gens = [group.element(tuple(1 if t == i else 0 for t in range(theta))) for i in range(theta)]
    pairs = []
    for j in range(theta):
        values = []
        for i in range(theta):
            r = RootOfUnity.from_scalar(braiding.q[i][j])
            values.append(RootOfUnity(m, r.k * (m // r.m)))
        pairs.append((gens[j], Character(tuple(values))))
    return YDRealization(group, tuple(pairs), braiding)


@dataclass
class RealizationReport:
    violations: list  # (i, j, lhs, rhs) with chi_j(g_i) != q_ij, rendered

    @property
    def passed(self) -> bool:
        return not self.violations


def validate_realization(r: YDRealization) -> RealizationReport:
    from .scalars import render_scalar

    violations = []
    for i in range(1, r.theta + 1):
        g_i = r.pairs[i - 1][0]
        for j in range(1, r.theta + 1):
            chi_j = r.pairs[j - 1][1]
            lhs = chi_j.evaluate(g_i)
            rhs = r.braiding.entry(i, j)
            if lhs != rhs:
                violations.append((i, j, render_scalar(lhs), render_scalar(rhs)))
    return RealizationReport(violations)


# -- Lie algebras of YD endomorphisms ---------------------------------------


@dataclass(frozen=True)
class LieAction:
    """A Lie algebra given by a basis of End(V) matrices plus structure
    constants. The basis maps need not be linearly independent as matrices
    (an abstract Lie algebra may map non-injectively into bd_V), but the
    declared brackets must hold at the level of matrices."""

    dim: int
    basis_maps: tuple  # dim EndoMatrix entries
    structure: dict = field(default_factory=dict)  # (i, j) -> {k: scalar}, i < j

    def bracket_coeffs(self, i: int, j: int) -> dict:
        """Structure constants of [e_i, e_j], 0-based, antisymmetrized."""
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {k: -c for k, c in self.structure.get((j, i), {}).items()}

    @property
    def is_abelian(self) -> bool:
        return all(not v for v in self.structure.values())


def endo_from_lists(rows) -> EndoMatrix:
    return tuple(
        tuple(x if isinstance(x, CycScalar) else CycScalar.from_rational(x) for x in row)
        for row in rows
    )


def zero_endo(theta: int) -> EndoMatrix:
    return tuple((ZERO,) * theta for _ in range(theta))


def elementary_endo(theta: int, i: int, j: int) -> EndoMatrix:
    """E_ij (1-based): x_j -> x_i, every other letter to zero."""
    return tuple(
        tuple(ONE if (r == i - 1 and c == j - 1) else ZERO for c in range(theta))
        for r in range(theta)
    )


def endo_mul(a: EndoMatrix, b: EndoMatrix) -> EndoMatrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), ZERO) for j in range(n))
        for i in range(n)
    )


def endo_sub(a: EndoMatrix, b: EndoMatrix) -> EndoMatrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def endo_bracket(a: EndoMatrix, b: EndoMatrix) -> EndoMatrix:
    return endo_sub(endo_mul(a, b), endo_mul(b, a))


def endo_is_zero(a: EndoMatrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def _endo_vec(a: EndoMatrix) -> dict:
    return {
        (i, j): x for i, row in enumerate(a) for j, x in enumerate(row) if not x.is_zero()
    }


def is_yd_morphism(a: EndoMatrix, r: YDRealization) -> bool:
    """Whether a preserves every isotypic component V_g^chi of the
    realization: entries may only connect letters with equal (g, chi)."""
    for i in range(len(a)):
        for j in range(len(a)):
            if not a[i][j].is_zero() and not r.same_pair(i + 1, j + 1):
                return False
    return True


def torus_action(h) -> EndoMatrix:
    """The diagonal map D_h with D_h(x_i) = h_i x_i; always lies in t_V."""
    h = [x if isinstance(x, CycScalar) else CycScalar.from_rational(x) for x in h]
    theta = len(h)
    return tuple(
        tuple(h[i] if i == j else ZERO for j in range(theta)) for i in range(theta)
    )


def torus_lie(h_vectors) -> LieAction:
    """The abelian Lie algebra spanned by the diagonal maps D_h, one per
    given h vector (duplicates allowed: this is an abstract abelian Lie
    algebra mapped into t_V)."""
    maps = tuple(torus_action(h) for h in h_vectors)
    return LieAction(len(maps), maps, {})


def close_under_bracket(maps, r: YDRealization) -> LieAction:
    """Verify the given independent maps are YD morphisms spanning a Lie
    subalgebra, and compute structure constants. Raises NotYDMorphismError
    or NotClosedError (with the first witness pair) otherwise."""
    maps = tuple(maps)
    for idx, m in enumerate(maps):
        if not is_yd_morphism(m, r):
            raise NotYDMorphismError(idx)
    ech = Echelon()
    for idx, m in enumerate(maps):
        if ech.insert(_endo_vec(m)) is None:
            raise ValueError(f"map #{idx} is linearly dependent on the previous ones")
    columns = [(k, _endo_vec(m)) for k, m in enumerate(maps)]
    structure = {}
    for i in range(len(maps)):
        for j in range(i + 1, len(maps)):
            br = endo_bracket(maps[i], maps[j])
            if endo_is_zero(br):
                continue
            combo = linear_solve(columns, _endo_vec(br))
            if combo is None:
                raise NotClosedError((i, j))
            structure[(i, j)] = combo
    return LieAction(len(maps), maps, structure)


def biderivation_algebra(r: YDRealization) -> LieAction:
    """A basis of the full Lie algebra bd_V = End of V in the YD category:
    the elementary matrices E_ij over every isotypic class. Its dimension is
    the sum of the squared class sizes."""
    maps = []
    for cls in r.isotypic_classes():
        for i in cls:
            for j in cls:
                maps.append(elementary_endo(r.theta, i, j))
    return close_under_bracket(maps, r)
