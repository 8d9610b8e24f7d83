"""Degreewise presentation of Nichols algebras and pre-Nichols quotients.

The defining ideal of B(V) is computed degree by degree as the kernel of
the quantum symmetrizer; user-supplied homogeneous Hopf ideals give
pre-Nichols quotients. Each degree carries an echelonized relation space
whose complement (the standard words, in lex order) serves as the normal
form basis, with the projection given by reduction against the relations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braided_space import DiagonalBraiding, EndoMatrix
from .errors import (
    CapTooSmallError,
    CounitNonzeroError,
    NotCoidealError,
    NotHomogeneousError,
)
from .linalg import Echelon, kernel_of_columns
from .scalars import ONE
from .tensor_algebra import (
    BraidedOps,
    TensorElement,
    extend_derivation,
    multidegree,
    words_of_length,
)


def relations_in_degree(n: int, b: DiagonalBraiding, ops: BraidedOps | None = None) -> list:
    """Echelonized basis of ker S_n, as TensorElements. The symmetrizer
    preserves the Z^theta multidegree, so the kernel is assembled from the
    multidegree blocks (processed in sorted order for determinism)."""
    if n < 2:
        raise ValueError("relation degrees start at 2")
    ops = ops or BraidedOps(b)
    return [TensorElement(b.theta, n, v) for v in _symmetrizer_kernel(ops, n)]


def _symmetrizer_kernel(ops: BraidedOps, n: int) -> list:
    if n < 2:
        return []
    sym = ops.symmetrizer(n)
    blocks: dict = {}
    for w in ops.words(n):
        blocks.setdefault(multidegree(w, ops.braiding.theta), []).append(w)
    kernel = []
    for beta in sorted(blocks):
        columns = [(w, sym.cols.get(w, {})) for w in blocks[beta]]
        kernel.extend(kernel_of_columns(columns))
    return kernel


@dataclass
class PreNicholsDegreeInfo:
    ideal_dim: int
    kernel_dim: int
    contained_in_kernel: bool
    strict: bool  # containment is strict: the quotient is bigger than B(V) here


class GradedQuotient:
    """T(V)/I presented degree by degree up to a cap: relation echelons,
    standard-word bases, normal forms, graded products and coproducts."""

    def __init__(self, braiding: DiagonalBraiding, cap: int, kind: str):
        if cap < 1:
            raise CapTooSmallError("cap must be >= 1")
        self.braiding = braiding
        self.cap = cap
        self.kind = kind  # "nichols" or "quotient"
        self.ops = BraidedOps(braiding)
        self.relations: list = []  # per degree, Echelon over words
        self.basis: list = []  # per degree, standard words in lex order
        self.dims: list = []
        self.pre_nichols_info: dict = {}  # degree -> PreNicholsDegreeInfo
        self._nf_cache: dict = {}
        self._cop_cache: dict = {}

    # -- construction helpers ----------------------------------------------

    def _install_degree(self, n: int, ech: Echelon) -> None:
        assert len(self.relations) == n
        self.relations.append(ech)
        pivots = set(ech.rows)
        std = [w for w in self.ops.words(n) if w not in pivots]
        self.basis.append(std)
        self.dims.append(len(std))

    # -- normal forms --------------------------------------------------------

    def normal_form(self, element: TensorElement) -> dict:
        """Image in the standard-word basis of degree len(element)."""
        n = element.length
        if n > self.cap:
            raise CapTooSmallError(f"degree {n} exceeds cap {self.cap}")
        return self.relations[n].reduce(element.coeffs)

    def nf_of_word(self, w: tuple) -> dict:
        cached = self._nf_cache.get(w)
        if cached is None:
            cached = self.relations[len(w)].reduce({w: ONE})
            self._nf_cache[w] = cached
        return cached

    def mult_nf(self, nf_a: dict, deg_a: int, nf_b: dict, deg_b: int) -> dict:
        """Product of two normal forms, back in normal form."""
        n = deg_a + deg_b
        if n > self.cap:
            raise CapTooSmallError(f"product degree {n} exceeds cap {self.cap}")
        out: dict = {}
        for wa, ca in nf_a.items():
            for wb, cb in nf_b.items():
                c = ca * cb
                for w, x in self.nf_of_word(wa + wb).items():
                    y = out.get(w)
                    z = c * x if y is None else y + c * x
                    if z.is_zero():
                        out.pop(w, None)
                    else:
                        out[w] = z
        return out

    def coproduct_basis(self, w: tuple, p: int) -> dict:
        """(p, n-p) coproduct component of a standard word, with both tensor
        factors reduced to normal form: dict (word, word) -> coeff."""
        key = (w, p)
        cached = self._cop_cache.get(key)
        if cached is not None:
            return cached
        n = len(w)
        comp = self.ops.coproduct_component(n, p)
        out: dict = {}
        for (w1, w2), c in comp.cols.get(w, {}).items():
            for u1, c1 in self.nf_of_word(w1).items():
                for u2, c2 in self.nf_of_word(w2).items():
                    coeff = c * c1 * c2
                    key2 = (u1, u2)
                    prev = out.get(key2)
                    total = coeff if prev is None else prev + coeff
                    if total.is_zero():
                        out.pop(key2, None)
                    else:
                        out[key2] = total
        self._cop_cache[key] = out
        return out


@dataclass
class HilbertData:
    dims: list
    finite_flag: bool
    vanishes_from: int | None
    total_dim: int | None

    def certificate(self) -> str:
        if self.finite_flag:
            return f"dims vanish from degree {self.vanishes_from} <= cap (total {self.total_dim})"
        return "unknown beyond cap"


def nichols_truncated(b: DiagonalBraiding, cap: int) -> GradedQuotient:
    """B(V) up to the cap: relation space at degree n is ker S_n."""
    gq = GradedQuotient(b, cap, "nichols")
    for n in range(cap + 1):
        ech = Echelon()
        if n >= 2 and gq.dims[n - 1] > 0:
            for v in _symmetrizer_kernel(gq.ops, n):
                ech.insert(v)
        elif n >= 2:
            # quotient already vanished; everything is a relation
            for w in gq.ops.words(n):
                ech.insert({w: ONE})
        gq._install_degree(n, ech)
    return gq


def hilbert_series(gq: GradedQuotient) -> HilbertData:
    dims = list(gq.dims)
    vanishes_from = None
    for n, d in enumerate(dims):
        if d == 0:
            vanishes_from = n
            break
    finite = vanishes_from is not None
    if finite:
        assert all(d == 0 for d in dims[vanishes_from:]), "generation in degree 1"
    total = sum(dims) if finite else None
    return HilbertData(dims, finite, vanishes_from, total)


def pre_nichols_quotient(b: DiagonalBraiding, gens, cap: int) -> GradedQuotient:
    """Quotient of T(V) by the two-sided ideal generated by Z^theta
    homogeneous elements, verified up to the cap to be a Hopf ideal
    (coideal with zero counit) that is contained in ker S degreewise."""
    gens = list(gens)
    for idx, g in enumerate(gens):
        if not isinstance(g, TensorElement):
            raise TypeError("generators must be TensorElements")
        if g.is_zero():
            continue
        if not g.is_multihomogeneous():
            raise NotHomogeneousError(idx)
        if g.length == 0:
            raise CounitNonzeroError(_render(g))
    gq = GradedQuotient(b, cap, "quotient")
    theta = b.theta
    by_degree: dict = {}
    for g in gens:
        if not g.is_zero():
            by_degree.setdefault(g.length, []).append(g)
    for n in range(cap + 1):
        ech = Echelon()
        for d, gens_d in by_degree.items():
            if d > n:
                continue
            for g in gens_d:
                for p in range(n - d + 1):
                    q = n - d - p
                    for u in words_of_length(theta, p):
                        for v in words_of_length(theta, q):
                            vec = {}
                            for w, c in g.coeffs.items():
                                vec[u + w + v] = c
                            ech.insert(vec)
        gq._install_degree(n, ech)
    _verify_hopf_ideal(gq)
    _record_kernel_containment(gq)
    return gq


def _render(element) -> str:
    from .render import render_tensor_element

    return render_tensor_element(element)


def _verify_hopf_ideal(gq: GradedQuotient) -> None:
    """Delta(r) must vanish in (T/I) (x) (T/I) for every ideal basis element
    r, for every proper split; the counit must kill the ideal."""
    for n in range(2, gq.cap + 1):
        for row in gq.relations[n].basis():
            element = TensorElement(gq.braiding.theta, n, row)
            for p in range(1, n):
                comp = gq.ops.coproduct_component(n, p)
                image: dict = {}
                for w, c in row.items():
                    for (w1, w2), c2 in comp.cols.get(w, {}).items():
                        for u1, c3 in gq.nf_of_word(w1).items():
                            for u2, c4 in gq.nf_of_word(w2).items():
                                key = (u1, u2)
                                add = c * c2 * c3 * c4
                                prev = image.get(key)
                                total = add if prev is None else prev + add
                                if total.is_zero():
                                    image.pop(key, None)
                                else:
                                    image[key] = total
                if image:
                    raise NotCoidealError(_render(element), n)
    # counit: ideal elements have degree >= 1, where the counit vanishes;
    # degree-0 generators were rejected at entry


def _record_kernel_containment(gq: GradedQuotient) -> None:
    for n in range(2, gq.cap + 1):
        ideal_rows = gq.relations[n].basis()
        sym = gq.ops.symmetrizer(n)
        contained = True
        for row in ideal_rows:
            if sym.apply_vec(row):
                contained = False
                break
        kernel_dim = len(_symmetrizer_kernel(gq.ops, n))
        gq.pre_nichols_info[n] = PreNicholsDegreeInfo(
            ideal_dim=len(ideal_rows),
            kernel_dim=kernel_dim,
            contained_in_kernel=contained,
            strict=contained and len(ideal_rows) < kernel_dim,
        )


@dataclass
class StabilityReport:
    violations: list  # (map index, degree, rendered element)

    @property
    def passed(self) -> bool:
        return not self.violations


def stability_check(gq: GradedQuotient, maps) -> StabilityReport:
    """Whether each End(V) map, extended as a derivation, preserves the
    degreewise relation spaces of the quotient."""
    theta = gq.braiding.theta
    violations = []
    for idx, d in enumerate(maps):
        for n in range(2, gq.cap + 1):
            ech = gq.relations[n]
            if not ech.rows:
                continue
            op = extend_derivation(d, n, theta)
            for row in ech.basis():
                image = op.apply_vec(row)
                if not ech.contains(image):
                    violations.append((idx, n, _render(TensorElement(theta, n, row))))
                    break
    return StabilityReport(violations)
