"""Finite and truncated Hopf algebras as explicit tables: group algebras,
truncated enveloping algebras, bosonizations of graded quotients, axiom
verification, antipode solving, and skew-primitive spaces.

A TruncatedHopf is a basis with degree tags plus multiplication,
comultiplication, counit and (once solved) antipode tables. Products whose
filtration degrees sum beyond the cap are overflow: they are simply not
defined, and every verifier quantifies only over tuples whose degree sum
stays within the cap, so overflow entries are never read.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .braided_space import AbelianGroup, LieAction, YDRealization
from .errors import (
    CapTooSmallError,
    NoAntipodeError,
    NotGrouplikeError,
    RealizationMismatchError,
)
from .linalg import kernel_of_columns, linear_solve, vec_axpy_inplace, vec_eq
from .nichols import GradedQuotient
from .scalars import ONE, ZERO, CycScalar, parse_scalar, render_scalar
from .tensor_algebra import multidegree


@dataclass(frozen=True)
class BasisTag:
    label: str
    degree: int
    multidegree: tuple | None = None
    grouplike: bool = False
    u_degree: int | None = None  # enveloping-factor degree inside smash products


class TruncatedHopf:
    """Tables are populated lazily through mult_fn and cached, so cheap
    queries (basis tags, counts) never force the full multiplication table.
    The object is append-only: entries never change once computed."""

    def __init__(self, tags, cap, unit, mult_fn, comult, counit, antipode=None, meta=None):
        self.tags = list(tags)
        self.cap = cap
        self.unit = unit
        self._mult_fn = mult_fn
        self._mult_cache: dict = {}
        self.comult = comult  # list of dicts (j, k) -> CycScalar
        self.counit = counit  # list of CycScalar
        self.antipode = antipode  # list of dicts or None
        self.meta = meta or {}

    @property
    def dim(self) -> int:
        return len(self.tags)

    def degree(self, i: int) -> int:
        return self.tags[i].degree

    def grouplikes(self) -> list:
        return [i for i, t in enumerate(self.tags) if t.grouplike]

    def can_multiply(self, i: int, j: int) -> bool:
        return self.tags[i].degree + self.tags[j].degree <= self.cap

    def mult(self, i: int, j: int) -> dict:
        if not self.can_multiply(i, j):
            raise CapTooSmallError(
                f"product {self.tags[i].label} * {self.tags[j].label} overflows cap {self.cap}"
            )
        key = (i, j)
        out = self._mult_cache.get(key)
        if out is None:
            out = self._mult_fn(i, j)
            self._mult_cache[key] = out
        return out

    # -- element-level operations (sparse dicts index -> scalar) -----------

    def mult_vec(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, ci in u.items():
            for j, cj in v.items():
                vec_axpy_inplace(out, ci * cj, self.mult(i, j))
        return out

    def comult_vec(self, u: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            vec_axpy_inplace(out, c, self.comult[i])
        return out

    def counit_vec(self, u: dict) -> CycScalar:
        total = ZERO
        for i, c in u.items():
            total = total + c * self.counit[i]
        return total

    def antipode_vec(self, u: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            vec_axpy_inplace(out, c, self.antipode[i])
        return out

    def render_vec(self, u: dict) -> str:
        if not u:
            return "0"
        parts = []
        for i in sorted(u):
            c = render_scalar(u[i])
            label = self.tags[i].label
            if c == "1":
                parts.append(label)
            elif c == "-1":
                parts.append(f"-{label}")
            elif " " in c:
                parts.append(f"({c})*{label}")
            else:
                parts.append(f"{c}*{label}")
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out

    def indices_by_degree(self) -> dict:
        by_degree: dict = {}
        for i, t in enumerate(self.tags):
            by_degree.setdefault(t.degree, []).append(i)
        return by_degree


# -- axiom reports -----------------------------------------------------------


@dataclass
class CheckEntry:
    axiom: str
    status: str  # "pass" | "fail" | "auto"
    witness: tuple | None = None
    left: str | None = None
    right: str | None = None
    cases: int = 0

    def to_dict(self) -> dict:
        out = {"axiom": self.axiom, "status": self.status, "cases": self.cases}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.left is not None:
            out["left"] = self.left
            out["right"] = self.right
        return out


@dataclass
class AxiomReport:
    entries: list

    @property
    def passed(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    def violations(self) -> list:
        return [e for e in self.entries if e.status == "fail"]

    def failed_axioms(self) -> set:
        return {e.axiom for e in self.violations()}

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "entries": [e.to_dict() for e in self.entries],
        }

    def summary(self) -> str:
        lines = []
        for e in self.entries:
            line = f"{e.status.upper():4} {e.axiom} ({e.cases} cases)"
            if e.status == "fail":
                line += f" witness={e.witness} left={e.left} right={e.right}"
            lines.append(line)
        return "\n".join(lines)


class _Checker:
    """Collects per-axiom outcomes; stores the first witness per axiom and
    counts all cases."""

    def __init__(self, host: TruncatedHopf):
        self.host = host
        self.order: list = []
        self.passes: dict = {}
        self.fails: dict = {}

    def check(self, axiom, ok, witness, left, right):
        if axiom not in self.passes and axiom not in self.fails:
            self.order.append(axiom)
        if ok:
            self.passes[axiom] = self.passes.get(axiom, 0) + 1
        else:
            entry = self.fails.get(axiom)
            if entry is None:
                self.fails[axiom] = {
                    "witness": witness,
                    "left": left() if callable(left) else left,
                    "right": right() if callable(right) else right,
                    "cases": 1,
                }
            else:
                entry["cases"] += 1

    def report(self, auto_entries=()) -> AxiomReport:
        entries = []
        for axiom in self.order:
            if axiom in self.fails:
                f = self.fails[axiom]
                entries.append(
                    CheckEntry(
                        axiom,
                        "fail",
                        witness=f["witness"],
                        left=f["left"],
                        right=f["right"],
                        cases=f["cases"] + self.passes.get(axiom, 0),
                    )
                )
            else:
                entries.append(CheckEntry(axiom, "pass", cases=self.passes.get(axiom, 0)))
        for axiom, note in auto_entries:
            entries.append(CheckEntry(axiom, "auto", left=note, right=note))
        return AxiomReport(entries)


def verify_hopf(H: TruncatedHopf, cap: int | None = None) -> AxiomReport:
    """Check every Hopf axiom on all basis tuples whose filtration degrees
    sum to at most the cap; antipode identities only if one is present."""
    cap = H.cap if cap is None else min(cap, H.cap)
    chk = _Checker(H)
    by_degree = H.indices_by_degree()
    degrees = sorted(by_degree)
    indices = [i for d in degrees if d <= cap for i in by_degree[d]]

    unit_vec = {H.unit: ONE}
    for i in indices:
        e_i = {i: ONE}
        left = H.mult_vec(unit_vec, e_i)
        right = H.mult_vec(e_i, unit_vec)
        ok = vec_eq(left, e_i) and vec_eq(right, e_i)
        chk.check("unit", ok, (H.tags[i].label,), lambda l=left: H.render_vec(l), H.tags[i].label)

    for i in indices:
        di = H.degree(i)
        for j in indices:
            dij = di + H.degree(j)
            if dij > cap:
                continue
            ij = H.mult(i, j)
            for k in indices:
                if dij + H.degree(k) > cap:
                    continue
                lhs = H.mult_vec(ij, {k: ONE})
                rhs = H.mult_vec({i: ONE}, H.mult(j, k))
                chk.check(
                    "associativity",
                    vec_eq(lhs, rhs),
                    (H.tags[i].label, H.tags[j].label, H.tags[k].label),
                    lambda l=lhs: H.render_vec(l),
                    lambda r=rhs: H.render_vec(r),
                )

    for i in indices:
        lhs: dict = {}
        rhs: dict = {}
        for (j, k), c in H.comult[i].items():
            for (a, b), c2 in H.comult[j].items():
                vec_axpy_inplace(lhs, c * c2, {(a, b, k): ONE})
            for (a, b), c2 in H.comult[k].items():
                vec_axpy_inplace(rhs, c * c2, {(j, a, b): ONE})
        chk.check(
            "coassociativity",
            vec_eq(lhs, rhs),
            (H.tags[i].label,),
            lambda: "(Delta x id) Delta",
            lambda: "(id x Delta) Delta",
        )

    for i in indices:
        left_counit: dict = {}
        right_counit: dict = {}
        for (j, k), c in H.comult[i].items():
            vec_axpy_inplace(left_counit, c * H.counit[j], {k: ONE})
            vec_axpy_inplace(right_counit, c * H.counit[k], {j: ONE})
        ok = vec_eq(left_counit, {i: ONE}) and vec_eq(right_counit, {i: ONE})
        chk.check(
            "counit",
            ok,
            (H.tags[i].label,),
            lambda l=left_counit: H.render_vec(l),
            H.tags[i].label,
        )

    for i in indices:
        di = H.degree(i)
        for j in indices:
            if di + H.degree(j) > cap:
                continue
            lhs = H.comult_vec(H.mult(i, j))
            rhs: dict = {}
            for (a, b), c in H.comult[i].items():
                for (x, y), c2 in H.comult[j].items():
                    coeff = c * c2
                    for p, cp in H.mult(a, x).items():
                        for q, cq in H.mult(b, y).items():
                            vec_axpy_inplace(rhs, coeff * cp * cq, {(p, q): ONE})
            chk.check(
                "comult_is_algebra_map",
                vec_eq(lhs, rhs),
                (H.tags[i].label, H.tags[j].label),
                lambda l=lhs: str(sorted((H.tags[a].label, H.tags[b].label, render_scalar(c)) for (a, b), c in l.items())),
                lambda r=rhs: str(sorted((H.tags[a].label, H.tags[b].label, render_scalar(c)) for (a, b), c in r.items())),
            )
            eps_lhs = H.counit_vec(H.mult(i, j))
            eps_rhs = H.counit[i] * H.counit[j]
            chk.check(
                "counit_is_algebra_map",
                eps_lhs == eps_rhs,
                (H.tags[i].label, H.tags[j].label),
                lambda l=eps_lhs: render_scalar(l),
                lambda r=eps_rhs: render_scalar(r),
            )

    if H.antipode is not None:
        for i in indices:
            left_conv: dict = {}
            right_conv: dict = {}
            for (j, k), c in H.comult[i].items():
                vec_axpy_inplace(left_conv, c, H.mult_vec(H.antipode[j], {k: ONE}))
                vec_axpy_inplace(right_conv, c, H.mult_vec({j: ONE}, H.antipode[k]))
            expected = {} if H.counit[i].is_zero() else {H.unit: H.counit[i]}
            ok = vec_eq(left_conv, expected)
            chk.check(
                "antipode_left",
                ok,
                (H.tags[i].label,),
                lambda l=left_conv: H.render_vec(l),
                lambda r=expected: H.render_vec(r),
            )
            chk.check(
                "antipode_right",
                vec_eq(right_conv, expected),
                (H.tags[i].label,),
                lambda l=right_conv: H.render_vec(l),
                lambda r=expected: H.render_vec(r),
            )
    return chk.report()


# -- constructors ------------------------------------------------------------


def group_algebra(G: AbelianGroup, theta: int = 0) -> TruncatedHopf:
    """kG for a finite abelian group: all basis elements group-like in
    filtration degree 0 (and Z^theta-degree zero)."""
    elements = G.elements()
    index = {g: i for i, g in enumerate(elements)}
    zero_deg = (0,) * theta
    tags = [
        BasisTag(label=_group_label(g), degree=0, multidegree=zero_deg, grouplike=True)
        for g in elements
    ]

    def mult_fn(i, j):
        return {index[G.add(elements[i], elements[j])]: ONE}

    comult = [{(i, i): ONE} for i in range(len(elements))]
    counit = [ONE] * len(elements)
    antipode = [{index[G.neg(g)]: ONE} for g in elements]
    return TruncatedHopf(
        tags,
        cap=0,
        unit=index[G.zero()],
        mult_fn=mult_fn,
        comult=comult,
        counit=counit,
        antipode=antipode,
        meta={"kind": "group_algebra", "group": G, "element_of": elements},
    )


def _group_label(g: tuple) -> str:
    if not any(g):
        return "1"
    return "g(" + ",".join(str(c) for c in g) + ")"


def _pbw_monomials(dim: int, cap: int) -> list:
    """Exponent tuples with total degree <= cap, by degree and then with
    earlier generators first (d1^2 before d1*d2 before d2^2)."""
    out = [(0,) * dim]
    frontier = {(0,) * dim}
    for _ in range(cap):
        nxt = set()
        for mono in frontier:
            for i in range(dim):
                nxt.add(mono[:i] + (mono[i] + 1,) + mono[i + 1 :])
        frontier = nxt
        out.extend(frontier)
    return sorted(set(out), key=lambda m: (sum(m), tuple(-e for e in m)))


def _pbw_label(mono: tuple) -> str:
    if not any(mono):
        return "1"
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"d{i+1}")
        elif e > 1:
            parts.append(f"d{i+1}^{e}")
    return "*".join(parts)


class _Straightener:
    """Rewrites words in Lie generators into the PBW basis using the
    declared structure constants, with memoization."""

    def __init__(self, lie: LieAction):
        self.lie = lie
        self.memo: dict = {}

    def straighten(self, word: tuple) -> dict:
        if all(word[i] <= word[i + 1] for i in range(len(word) - 1)):
            mono = [0] * self.lie.dim
            for g in word:
                mono[g] += 1
            return {tuple(mono): ONE}
        cached = self.memo.get(word)
        if cached is not None:
            return cached
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                break
        a, b = word[i], word[i + 1]
        swapped = word[:i] + (b, a) + word[i + 2 :]
        out = dict(self.straighten(swapped))
        for k, c in self.lie.bracket_coeffs(a, b).items():
            vec_axpy_inplace(out, c, self.straighten(word[:i] + (k,) + word[i + 2 :]))
        self.memo[word] = out
        return out


def _expand(mono: tuple) -> tuple:
    word = ()
    for i, e in enumerate(mono):
        word += (i,) * e
    return word


def enveloping_truncated(g: LieAction, cap: int) -> TruncatedHopf:
    """U(g) up to PBW degree cap: primitively generated, S(x) = -x, with
    products straightened through the structure constants."""
    monos = _pbw_monomials(g.dim, cap)
    index = {m: i for i, m in enumerate(monos)}
    straightener = _Straightener(g)
    tags = [
        BasisTag(label=_pbw_label(m), degree=sum(m), grouplike=not any(m), u_degree=sum(m))
        for m in monos
    ]

    def mult_fn(i, j):
        word = _expand(monos[i]) + _expand(monos[j])
        return {index[m]: c for m, c in straightener.straighten(word).items()}

    comult = []
    for m in monos:
        terms: dict = {}
        splits = [((), ())]
        coeffs = [ONE]
        for e in m:
            new_splits = []
            new_coeffs = []
            for (l, r), c in zip(splits, coeffs):
                for k in range(e + 1):
                    new_splits.append((l + (k,), r + (e - k,)))
                    new_coeffs.append(c * comb(e, k))
            splits, coeffs = new_splits, new_coeffs
        for (l, r), c in zip(splits, coeffs):
            terms[(index[l], index[r])] = c if isinstance(c, CycScalar) else CycScalar.from_rational(c)
        comult.append(terms)
    counit = [ONE if not any(m) else ZERO for m in monos]
    antipode = []
    for m in monos:
        image = straightener.straighten(_expand(m)[::-1])
        sign = -ONE if sum(m) % 2 else ONE
        antipode.append({index[t]: sign * c for t, c in image.items()})
    return TruncatedHopf(
        tags,
        cap=cap,
        unit=index[(0,) * g.dim],
        mult_fn=mult_fn,
        comult=comult,
        counit=counit,
        antipode=antipode,
        meta={"kind": "enveloping", "lie": g, "mono_of": monos},
    )


def bosonize(B: GradedQuotient, r: YDRealization, cap: int) -> TruncatedHopf:
    """The Radford biproduct B # kGamma: basis words tensor group elements,
    smash multiplication through the characters, smash comultiplication
    through the braided coproduct and the multidegree coaction."""
    if r.braiding != B.braiding:
        raise RealizationMismatchError("realization braiding differs from the quotient's")
    if cap > B.cap:
        raise CapTooSmallError(f"bosonization cap {cap} exceeds quotient cap {B.cap}")
    theta = B.braiding.theta
    group = r.group
    elements = group.elements()
    g_index = {g: i for i, g in enumerate(elements)}
    basis = []  # (word, group element)
    for n in range(cap + 1):
        for w in B.basis[n]:
            for g in elements:
                basis.append((w, g))
    index = {wg: i for i, wg in enumerate(basis)}
    zero = group.zero()

    tags = []
    for w, g in basis:
        if not w:
            label = _group_label(g)
        else:
            word_text = "*".join(f"x{letter}" for letter in w)
            label = f"{word_text}#{_group_label(g)}"
        tags.append(
            BasisTag(
                label=label,
                degree=len(w),
                multidegree=multidegree(w, theta),
                grouplike=not w,
            )
        )

    chi_cache: dict = {}

    def chi_weight(beta: tuple, g: tuple) -> CycScalar:
        """Product of chi_i(g)^beta_i: the Gamma-action weight on degree beta."""
        key = (beta, g)
        out = chi_cache.get(key)
        if out is None:
            out = ONE
            for i, e in enumerate(beta):
                if e:
                    out = out * r.pairs[i][1].evaluate(g) ** e
            chi_cache[key] = out
        return out

    def coaction_element(beta: tuple) -> tuple:
        """g_w = product of g_i^beta_i for a word of multidegree beta."""
        acc = zero
        for i, e in enumerate(beta):
            for _ in range(e):
                acc = group.add(acc, r.pairs[i][0])
        return acc

    def mult_fn(i, j):
        (w1, g1), (w2, g2) = basis[i], basis[j]
        weight = chi_weight(multidegree(w2, theta), g1)
        g12 = group.add(g1, g2)
        product = B.mult_nf(B.nf_of_word(w1), len(w1), B.nf_of_word(w2), len(w2))
        return {
            index[(u, g12)]: weight * c for u, c in product.items()
        }

    comult = []
    for w, g in basis:
        n = len(w)
        terms: dict = {}
        for p in range(n + 1):
            for (u1, u2), c in B.coproduct_basis(w, p).items():
                left = (u1, group.add(coaction_element(multidegree(u2, theta)), g))
                right = (u2, g)
                key = (index[left], index[right])
                prev = terms.get(key)
                total = c if prev is None else prev + c
                if total.is_zero():
                    terms.pop(key, None)
                else:
                    terms[key] = total
        comult.append(terms)
    counit = [ONE if not w else ZERO for w, g in basis]
    return TruncatedHopf(
        tags,
        cap=cap,
        unit=index[((), zero)],
        mult_fn=mult_fn,
        comult=comult,
        counit=counit,
        meta={
            "kind": "bosonization",
            "quotient": B,
            "realization": r,
            "pair_of": basis,
            "pair_index": index,
        },
    )


# -- antipode ----------------------------------------------------------------


def _grouplike_inverses(H: TruncatedHopf) -> dict:
    inverses = {}
    grouplikes = H.grouplikes()
    unit_vec = {H.unit: ONE}
    for i in grouplikes:
        if H.degree(i) != 0:
            continue
        for j in grouplikes:
            if H.degree(j) == 0 and vec_eq(H.mult(i, j), unit_vec) and vec_eq(H.mult(j, i), unit_vec):
                inverses[i] = j
                break
    return inverses


def solve_antipode(H: TruncatedHopf, cap: int | None = None) -> TruncatedHopf:
    """Solve m(S (x) id)Delta = unit counit degree by degree and install the
    antipode table on H. Group-likes invert through the multiplication
    table; a degree-d equation involves S only below d plus that group-like
    part, so each element is solved directly (with a joint linear solve as a
    fallback when the top of a coproduct is not a single group-like term)."""
    cap = H.cap if cap is None else min(cap, H.cap)
    antipode: list = [None] * H.dim
    inverses = _grouplike_inverses(H)
    by_degree = H.indices_by_degree()
    for i in by_degree.get(0, []):
        if not H.tags[i].grouplike:
            raise NoAntipodeError(0, f"degree-0 element {H.tags[i].label} is not group-like")
        inv = inverses.get(i)
        if inv is None:
            raise NoAntipodeError(0, f"group-like {H.tags[i].label} has no inverse")
        antipode[i] = {inv: ONE}
    for d in sorted(by_degree):
        if d == 0 or d > cap:
            continue
        pending = []
        for i in by_degree[d]:
            tops = []
            rest: dict = {}
            for (j, k), c in H.comult[i].items():
                if H.degree(j) == d:
                    tops.append((j, k, c))
                else:
                    vec_axpy_inplace(rest, c, H.mult_vec({a: x for a, x in antipode[j].items()}, {k: ONE}))
            rhs = {} if H.counit[i].is_zero() else {H.unit: H.counit[i]}
            vec_axpy_inplace(rhs, -ONE, rest)
            if len(tops) == 1 and tops[0][0] == i and tops[0][1] in inverses:
                j, k, c = tops[0]
                scaled = {a: c.inverse() * x for a, x in rhs.items()}
                antipode[i] = H.mult_vec(scaled, {inverses[k]: ONE})
            else:
                pending.append((i, tops, rhs))
        if pending:
            _joint_antipode_solve(H, d, pending, antipode, by_degree)
    for i, value in enumerate(antipode):
        if value is None:
            antipode[i] = {}
    H.antipode = antipode
    return H


def _joint_antipode_solve(H, d, pending, antipode, by_degree):
    unknowns = sorted({j for _, tops, _ in pending for j, _, _ in tops})
    value_indices = [t for dd in sorted(by_degree) if dd <= d for t in by_degree[dd]]
    columns = []
    for j in unknowns:
        for t in value_indices:
            col: dict = {}
            for i, tops, _ in pending:
                for jj, k, c in tops:
                    if jj == j:
                        for s, m in H.mult(t, k).items():
                            vec_axpy_inplace(col, c * m, {(i, s): ONE})
            columns.append(((j, t), col))
    target: dict = {}
    for i, _, rhs in pending:
        for s, c in rhs.items():
            vec_axpy_inplace(target, c, {(i, s): ONE})
    solution = linear_solve(columns, target)
    if solution is None:
        raise NoAntipodeError(d)
    for j in unknowns:
        antipode[j] = {}
    for (j, t), c in solution.items():
        vec_axpy_inplace(antipode[j], c, {t: ONE})


def skew_primitive_space(H: TruncatedHopf, g: int, t: int) -> list:
    """Basis of P_{g,t} = {a : Delta(a) = g (x) a + a (x) t}, solved exactly
    inside the truncation."""
    if not H.tags[g].grouplike or not H.tags[t].grouplike:
        raise NotGrouplikeError("skew-primitive spaces need group-like anchors")
    columns = []
    for i in range(H.dim):
        col: dict = dict(H.comult[i])
        vec_axpy_inplace(col, -ONE, {(g, i): ONE})
        vec_axpy_inplace(col, -ONE, {(i, t): ONE})
        columns.append((i, col))
    return kernel_of_columns(columns)


# -- serialization -----------------------------------------------------------

FORMAT_NAME = "nicholskit-hopf"
FORMAT_VERSION = 1


def to_json_dict(H: TruncatedHopf) -> dict:
    """Materialize the tables (within the cap) into a stable, documented
    JSON structure; scalars use the textual scalar syntax."""
    mult_entries = []
    for i in range(H.dim):
        for j in range(H.dim):
            if H.can_multiply(i, j):
                entry = H.mult(i, j)
                mult_entries.append(
                    [i, j, [[k, render_scalar(c)] for k, c in sorted(entry.items())]]
                )
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "cap": H.cap,
        "unit": H.unit,
        "basis": [
            {
                "label": t.label,
                "degree": t.degree,
                "multidegree": list(t.multidegree) if t.multidegree is not None else None,
                "grouplike": t.grouplike,
                "u_degree": t.u_degree,
            }
            for t in H.tags
        ],
        "mult": mult_entries,
        "comult": [
            [[j, k, render_scalar(c)] for (j, k), c in sorted(H.comult[i].items())]
            for i in range(H.dim)
        ],
        "counit": [render_scalar(c) for c in H.counit],
        "antipode": None
        if H.antipode is None
        else [
            [[k, render_scalar(c)] for k, c in sorted(H.antipode[i].items())]
            for i in range(H.dim)
        ],
    }


def from_json_dict(data: dict) -> TruncatedHopf:
    if data.get("format") != FORMAT_NAME:
        raise ValueError("not a serialized truncated Hopf algebra")
    if data.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format version {data.get('version')}")
    tags = [
        BasisTag(
            label=b["label"],
            degree=b["degree"],
            multidegree=tuple(b["multidegree"]) if b["multidegree"] is not None else None,
            grouplike=b["grouplike"],
            u_degree=b["u_degree"],
        )
        for b in data["basis"]
    ]
    table = {
        (i, j): {k: parse_scalar(c) for k, c in entry}
        for i, j, entry in data["mult"]
    }

    def mult_fn(i, j):
        return table.get((i, j), {})

    comult = [
        {(j, k): parse_scalar(c) for j, k, c in row} for row in data["comult"]
    ]
    counit = [parse_scalar(c) for c in data["counit"]]
    antipode = None
    if data["antipode"] is not None:
        antipode = [{k: parse_scalar(c) for k, c in row} for row in data["antipode"]]
    return TruncatedHopf(
        tags,
        cap=data["cap"],
        unit=data["unit"],
        mult_fn=mult_fn,
        comult=comult,
        counit=counit,
        antipode=antipode,
        meta={"kind": "deserialized"},
    )
