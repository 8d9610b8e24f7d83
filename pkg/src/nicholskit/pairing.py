"""Hopf pairings between truncated (braided) Hopf algebras: the graded dual
pairing on tensor algebras, verification of the pairing axioms and
action compatibility, and the desk-scale transfer lemma (each side is a
module Hopf algebra iff the other is).

The convention throughout extends the form to tensor squares with a flip,
(a (x) a' | u (x) u') = (a|u')(a'|u), which is what makes the product on one
side dual to the flipped coproduct on the other."""

from __future__ import annotations

from dataclasses import dataclass

from .braided_space import DiagonalBraiding, torus_action, torus_lie
from .errors import MismatchedLieAlgebrasError, PreconditionFailedError
from .hopf_core import AxiomReport, BasisTag, TruncatedHopf, _Checker
from .linalg import Echelon, linear_solve, vec_axpy_inplace
from .scalars import ONE, ZERO, CycScalar, render_scalar
from .tensor_algebra import BraidedOps, words_of_length
from .unrolled import HopfAction, check_biderivation, check_module_algebra


def tensor_hopf_container(b: DiagonalBraiding, cap: int, letter: str = "x") -> TruncatedHopf:
    """T(V) up to the cap, packaged in the table data model: free product,
    braided shuffle coproduct, braided antipode. This is a braided Hopf
    algebra, so only the pieces the pairing axioms read are meaningful; the
    ordinary Delta-multiplicativity axiom is not expected to hold."""
    ops = BraidedOps(b)
    words = []
    for n in range(cap + 1):
        words.extend(words_of_length(b.theta, n))
    index = {w: i for i, w in enumerate(words)}
    tags = []
    for w in words:
        label = "1" if not w else "*".join(f"{letter}{c}" for c in w)
        md = tuple(sum(1 for c in w if c == i + 1) for i in range(b.theta))
        tags.append(BasisTag(label=label, degree=len(w), multidegree=md, grouplike=not w))

    def mult_fn(i, j):
        return {index[words[i] + words[j]]: ONE}

    comult = []
    for w in words:
        terms: dict = {}
        full = ops.full_coproduct(len(w)).get(w, {})
        if not w:
            terms[(index[()], index[()])] = ONE
        else:
            for (w1, w2), c in full.items():
                terms[(index[w1], index[w2])] = c
        comult.append(terms)
    counit = [ONE if not w else ZERO for w in words]
    antipode: list = [None] * len(words)
    antipode[index[()]] = {index[()]: ONE}
    for n in range(1, cap + 1):
        for w in words_of_length(b.theta, n):
            i = index[w]
            value = {i: -ONE}
            for (j, k), c in comult[i].items():
                dj = len(words[j])
                if dj == 0 or dj == n:
                    continue
                term: dict = {}
                for t, ct in antipode[j].items():
                    vec_axpy_inplace(term, ct, {index[words[t] + words[k]]: ONE})
                vec_axpy_inplace(value, -c, term)
            antipode[i] = value
    return TruncatedHopf(
        tags,
        cap=cap,
        unit=index[()],
        mult_fn=mult_fn,
        comult=comult,
        counit=counit,
        antipode=antipode,
        meta={"kind": "tensor_container", "braiding": b, "word_of": words, "word_index": index},
    )


@dataclass
class PairingTable:
    left: TruncatedHopf
    right: TruncatedHopf
    values: dict  # (left index, right index) -> CycScalar, zeros omitted

    def value(self, i: int, j: int) -> CycScalar:
        return self.values.get((i, j), ZERO)

    def pair_vecs(self, a: dict, u: dict) -> CycScalar:
        total = ZERO
        for i, ci in a.items():
            for j, cj in u.items():
                v = self.values.get((i, j))
                if v is not None:
                    total = total + ci * cj * v
        return total

    def gram_columns(self, n: int) -> list:
        """Columns of the degree-n Gram matrix, keyed by right basis index."""
        left_n = [i for i in range(self.left.dim) if self.left.degree(i) == n]
        right_n = [j for j in range(self.right.dim) if self.right.degree(j) == n]
        cols = []
        for j in right_n:
            col = {}
            for i in left_n:
                v = self.values.get((i, j))
                if v is not None:
                    col[i] = v
            cols.append((j, col))
        return cols

    def rank_per_degree(self) -> dict:
        out = {}
        for n in range(min(self.left.cap, self.right.cap) + 1):
            ech = Echelon()
            for _, col in self.gram_columns(n):
                ech.insert(col)
            dim_left = sum(1 for i in range(self.left.dim) if self.left.degree(i) == n)
            dim_right = sum(1 for j in range(self.right.dim) if self.right.degree(j) == n)
            out[n] = (ech.rank, dim_left, dim_right)
        return out

    def nondegenerate_within(self, cap: int) -> bool:
        ranks = self.rank_per_degree()
        return all(
            rank == dl == dr for n, (rank, dl, dr) in ranks.items() if n <= cap
        )


def dual_braiding(b: DiagonalBraiding) -> DiagonalBraiding:
    """Braiding carried by the dual generators so that the degreewise dual
    pairing satisfies both multiplication/comultiplication identities under
    the flip convention. For that convention the matrix is q itself."""
    return b


def graded_dual_pairing(b: DiagonalBraiding, cap: int) -> PairingTable:
    """The pairing of T(V) with T(V*) determined by <x_i, y_j> = delta_ij in
    degree one, extended degreewise by duality of multiplication against the
    flipped coproduct; different degrees pair to zero."""
    left = tensor_hopf_container(b, cap, letter="x")
    right = tensor_hopf_container(dual_braiding(b), cap, letter="y")
    lw = left.meta["word_index"]
    rw = right.meta["word_index"]
    right_words = right.meta["word_of"]
    values: dict = {(lw[()], rw[()]): ONE}
    pair_words: dict = {((), ()): ONE}

    def pair(w: tuple, u: tuple) -> CycScalar:
        if len(w) != len(u):
            return ZERO
        key = (w, u)
        cached = pair_words.get(key)
        if cached is not None:
            return cached
        if not w:
            return ONE
        head, rest = w[0], w[1:]
        total = ZERO
        for (j1, j2), c in right.comult[rw[u]].items():
            u1, u2 = right_words[j1], right_words[j2]
            if len(u2) != 1 or u2[0] != head:
                continue
            total = total + c * pair(rest, u1)
        pair_words[key] = total
        return total

    for n in range(1, cap + 1):
        for w in words_of_length(b.theta, n):
            for u in words_of_length(b.theta, n):
                v = pair(w, u)
                if not v.is_zero():
                    values[(lw[w], rw[u])] = v
    return PairingTable(left, right, values)


@dataclass
class PairingReport:
    axioms: AxiomReport
    ranks: dict  # degree -> (rank, dim left, dim right)

    @property
    def passed(self) -> bool:
        return self.axioms.passed

    def nondegenerate_within(self, cap: int) -> bool:
        return all(rank == dl == dr for n, (rank, dl, dr) in self.ranks.items() if n <= cap)

    def to_dict(self) -> dict:
        return {
            "axioms": self.axioms.to_dict(),
            "rank_per_degree": {str(n): list(v) for n, v in sorted(self.ranks.items())},
        }


def verify_hopf_pairing(p: PairingTable, cap: int | None = None) -> PairingReport:
    """The three pairing identity families, on basis tuples within the cap;
    degeneracy is reported per degree alongside, as a property rather than
    an axiom."""
    left, right = p.left, p.right
    cap = min(left.cap, right.cap) if cap is None else cap
    chk = _Checker(left)
    l_indices = [i for i in range(left.dim) if left.degree(i) <= cap]
    r_indices = [j for j in range(right.dim) if right.degree(j) <= cap]

    for j in r_indices:
        lhs = p.value(left.unit, j)
        chk.check(
            "unit_pairs_to_counit",
            lhs == right.counit[j],
            ("1", right.tags[j].label),
            lambda a=lhs: render_scalar(a),
            lambda bb=right.counit[j]: render_scalar(bb),
        )
    for i in l_indices:
        lhs = p.value(i, right.unit)
        chk.check(
            "counit_pairs_to_unit",
            lhs == left.counit[i],
            (left.tags[i].label, "1"),
            lambda a=lhs: render_scalar(a),
            lambda bb=left.counit[i]: render_scalar(bb),
        )
    for i1 in l_indices:
        d1 = left.degree(i1)
        for i2 in l_indices:
            if d1 + left.degree(i2) > cap:
                continue
            product = left.mult(i1, i2)
            for j in r_indices:
                lhs = p.pair_vecs(product, {j: ONE})
                rhs = ZERO
                for (j1, j2), c in right.comult[j].items():
                    rhs = rhs + c * p.value(i1, j2) * p.value(i2, j1)
                chk.check(
                    "product_dual_to_coproduct",
                    lhs == rhs,
                    (left.tags[i1].label, left.tags[i2].label, right.tags[j].label),
                    lambda a=lhs: render_scalar(a),
                    lambda bb=rhs: render_scalar(bb),
                )
    for j1 in r_indices:
        d1 = right.degree(j1)
        for j2 in r_indices:
            if d1 + right.degree(j2) > cap:
                continue
            product = right.mult(j1, j2)
            for i in l_indices:
                lhs = p.pair_vecs({i: ONE}, product)
                rhs = ZERO
                for (a1, a2), c in left.comult[i].items():
                    rhs = rhs + c * p.value(a2, j1) * p.value(a1, j2)
                chk.check(
                    "coproduct_dual_to_product",
                    lhs == rhs,
                    (left.tags[i].label, right.tags[j1].label, right.tags[j2].label),
                    lambda a=lhs: render_scalar(a),
                    lambda bb=rhs: render_scalar(bb),
                )
    if left.antipode is not None and right.antipode is not None:
        for i in l_indices:
            for j in r_indices:
                lhs = p.pair_vecs(left.antipode[i], {j: ONE})
                rhs = p.pair_vecs({i: ONE}, right.antipode[j])
                chk.check(
                    "antipodes_adjoint",
                    lhs == rhs,
                    (left.tags[i].label, right.tags[j].label),
                    lambda a=lhs: render_scalar(a),
                    lambda bb=rhs: render_scalar(bb),
                )
    return PairingReport(chk.report(), p.rank_per_degree())


def container_torus_action(H: TruncatedHopf, weights) -> HopfAction:
    """D_h on a graded container, acting on a homogeneous basis element of
    multidegree beta by the weight sum beta . h."""
    hs = [w if isinstance(w, CycScalar) else CycScalar.from_rational(w) for w in weights]
    table = []
    for i, tag in enumerate(H.tags):
        weight = ZERO
        for e, h in zip(tag.multidegree, hs):
            if e:
                weight = weight + h * e
        table.append({} if weight.is_zero() else {i: weight})
    return HopfAction(H, torus_lie([hs]), [table])


def contragredient_torus_action(H: TruncatedHopf, weights) -> HopfAction:
    """The matched dual-side torus action: D_h on V forces D_{-h} on V*,
    exactly the sign flip of the action-compatibility identity."""
    return container_torus_action(H, [-(w if isinstance(w, CycScalar) else CycScalar.from_rational(w)) for w in weights])


def verify_action_compatibility(
    p: PairingTable, actL: HopfAction, actR: HopfAction, cap: int | None = None
) -> AxiomReport:
    """(x.a | u) = -(a | x.u) for every Lie basis element, i.e. the pairing
    intertwines the actions through the antipode S(x) = -x."""
    if actL.lie.dim != actR.lie.dim:
        raise MismatchedLieAlgebrasError("the two sides must share the Lie algebra")
    left, right = p.left, p.right
    cap = min(left.cap, right.cap) if cap is None else cap
    chk = _Checker(left)
    l_indices = [i for i in range(left.dim) if left.degree(i) <= cap]
    r_indices = [j for j in range(right.dim) if right.degree(j) <= cap]
    for x in range(actL.lie.dim):
        for i in l_indices:
            acted_left = actL.tables[x][i]
            for j in r_indices:
                lhs = p.pair_vecs(acted_left, {j: ONE})
                rhs = -p.pair_vecs({i: ONE}, actR.tables[x][j])
                chk.check(
                    "action_compatibility",
                    lhs == rhs,
                    (f"d{x+1}", left.tags[i].label, right.tags[j].label),
                    lambda a=lhs: render_scalar(a),
                    lambda bb=rhs: render_scalar(bb),
                )
    return chk.report()


def transport_action(p: PairingTable, actL: HopfAction, cap: int | None = None) -> HopfAction:
    """Solve for the right-side action forced by the compatibility identity;
    requires the pairing to be nondegenerate per degree (each degree's Gram
    matrix is inverted through a linear solve)."""
    left, right = p.left, p.right
    cap = min(left.cap, right.cap) if cap is None else cap
    if not p.nondegenerate_within(cap):
        raise PreconditionFailedError("transport needs a nondegenerate pairing")
    tables = []
    for x in range(actL.lie.dim):
        table = []
        for j in range(right.dim):
            n = right.degree(j)
            if n > cap:
                table.append({})
                continue
            left_n = [i for i in range(left.dim) if left.degree(i) == n]
            target = {}
            for i in left_n:
                v = -p.pair_vecs(actL.tables[x][i], {j: ONE})
                if not v.is_zero():
                    target[i] = v
            columns = p.gram_columns(n)
            solution = linear_solve(columns, target)
            if solution is None:
                raise PreconditionFailedError("transport target outside the Gram image")
            table.append(solution)
        tables.append(table)
    return HopfAction(right, actL.lie, tables)


@dataclass
class TransferVerdict:
    left_passed: bool
    right_passed: bool
    left_report: AxiomReport
    right_report: AxiomReport

    @property
    def agree(self) -> bool:
        return self.left_passed == self.right_passed

    def to_dict(self) -> dict:
        return {
            "left_passed": self.left_passed,
            "right_passed": self.right_passed,
            "verdicts_agree": self.agree,
            "note": "disagreement would certify a counterexample candidate (an implementation bug)",
        }


def _module_hopf_suite(act: HopfAction, cap: int) -> AxiomReport:
    first = check_module_algebra(act, cap)
    second = check_biderivation(act, cap)
    return AxiomReport(first.entries + second.entries)


def lemma_transfer_check(
    p: PairingTable, actL: HopfAction, actR: HopfAction, cap: int | None = None
) -> TransferVerdict:
    """Run the full module-Hopf condition suite independently on both sides
    of a nondegenerate, compatible Hopf pairing. The transfer lemma forces
    the two verdicts to coincide, making this a metamorphic test: both pass
    together or fail together."""
    cap = min(p.left.cap, p.right.cap) if cap is None else cap
    pairing_report = verify_hopf_pairing(p, cap)
    if not pairing_report.passed:
        raise PreconditionFailedError("pairing axioms fail", pairing_report.axioms)
    if not pairing_report.nondegenerate_within(cap):
        raise PreconditionFailedError("pairing is degenerate within the cap")
    compat = verify_action_compatibility(p, actL, actR, cap)
    if not compat.passed:
        raise PreconditionFailedError("actions are not pairing-compatible", compat)
    left_report = _module_hopf_suite(actL, cap)
    right_report = _module_hopf_suite(actR, cap)
    return TransferVerdict(
        left_passed=left_report.passed,
        right_passed=right_report.passed,
        left_report=left_report,
        right_report=right_report,
    )
