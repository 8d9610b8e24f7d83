"""The tensor algebra T(V) of a diagonal braided vector space: graded word
bases, braid group lifts, the quantum symmetrizer, the braided shuffle
coproduct, and Leibniz extensions of endomorphisms of V.

Words are tuples over the letters 1..theta; T^n(V) has the theta^n words of
length n as its basis, enumerated lexicographically. Linear maps between
graded pieces are kept column-sparse. Per-braiding caches (symmetrizers,
coproduct components) live on BraidedOps; inputs are immutable and results
are memoized per degree, so repeated queries are cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .braided_space import DiagonalBraiding, EndoMatrix
from .errors import PositionOutOfRangeError
from .linalg import vec_axpy_inplace
from .scalars import ONE, CycScalar

Word = tuple  # tuple of letters in 1..theta


def words_of_length(theta: int, n: int) -> list:
    return [tuple(w) for w in itertools.product(range(1, theta + 1), repeat=n)]


def multidegree(word: Word, theta: int) -> tuple:
    counts = [0] * theta
    for letter in word:
        counts[letter - 1] += 1
    return tuple(counts)


@dataclass(frozen=True)
class TensorElement:
    """A homogeneous element of T^n(V): sparse word -> coefficient map."""

    theta: int
    length: int
    coeffs: dict

    def __post_init__(self):
        for w in self.coeffs:
            if len(w) != self.length:
                raise ValueError(f"word {w} does not have length {self.length}")

    def is_zero(self) -> bool:
        return not self.coeffs

    def scaled(self, c: CycScalar) -> "TensorElement":
        if c.is_zero():
            return TensorElement(self.theta, self.length, {})
        return TensorElement(self.theta, self.length, {w: c * x for w, x in self.coeffs.items()})

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.length != other.length:
            raise ValueError("cannot add elements of different lengths")
        out = dict(self.coeffs)
        vec_axpy_inplace(out, ONE, other.coeffs)
        return TensorElement(self.theta, self.length, out)

    def __neg__(self) -> "TensorElement":
        return self.scaled(-ONE)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.length != other.length:
            return False
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(self.coeffs[w] == other.coeffs[w] for w in self.coeffs)

    __hash__ = None

    def is_multihomogeneous(self) -> bool:
        degrees = {multidegree(w, self.theta) for w in self.coeffs}
        return len(degrees) <= 1


def word_element(theta: int, word: Word) -> TensorElement:
    return TensorElement(theta, len(word), {tuple(word): ONE})


def concat(a: TensorElement, b: TensorElement) -> TensorElement:
    """Free multiplication: bilinear word concatenation."""
    out: dict = {}
    for wa, ca in a.coeffs.items():
        for wb, cb in b.coeffs.items():
            w = wa + wb
            c = ca * cb
            prev = out.get(w)
            if prev is None:
                out[w] = c
            else:
                s = prev + c
                if s.is_zero():
                    del out[w]
                else:
                    out[w] = s
    return TensorElement(a.theta, a.length + b.length, out)


@dataclass
class LinOp:
    """A linear map between graded pieces, stored column-sparse: for each
    source basis key, the image as a sparse vector over target keys. Keys
    are words, or (word, word) pairs for maps into a tensor square."""

    source_length: int
    target_length: int
    cols: dict

    def apply_vec(self, vec: dict) -> dict:
        out: dict = {}
        for key, c in vec.items():
            col = self.cols.get(key)
            if col:
                vec_axpy_inplace(out, c, col)
        return out

    def apply(self, element: TensorElement) -> TensorElement:
        if element.length != self.source_length:
            raise ValueError("length mismatch")
        return TensorElement(element.theta, self.target_length, self.apply_vec(element.coeffs))

    def compose(self, inner: "LinOp") -> "LinOp":
        """self after inner."""
        if inner.target_length != self.source_length:
            raise ValueError("length mismatch in composition")
        cols = {}
        for key, col in inner.cols.items():
            image = self.apply_vec(col)
            if image:
                cols[key] = image
        return LinOp(inner.source_length, self.target_length, cols)

    def __add__(self, other: "LinOp") -> "LinOp":
        cols = {k: dict(v) for k, v in self.cols.items()}
        for key, col in other.cols.items():
            if key in cols:
                vec_axpy_inplace(cols[key], ONE, col)
                if not cols[key]:
                    del cols[key]
            else:
                cols[key] = dict(col)
        return LinOp(self.source_length, self.target_length, cols)

    def equals(self, other: "LinOp", keys) -> bool:
        for key in keys:
            a = self.cols.get(key, {})
            b = other.cols.get(key, {})
            if set(a) != set(b) or any(a[t] != b[t] for t in a):
                return False
        return True


def identity_op(theta: int, n: int) -> LinOp:
    return LinOp(n, n, {w: {w: ONE} for w in words_of_length(theta, n)})


def braid_generator(n: int, i: int, b: DiagonalBraiding) -> LinOp:
    """The braiding acting on tensor slots (i, i+1) of T^n, identity
    elsewhere: ...a b... -> q_ab (...b a...)."""
    if not 1 <= i <= n - 1:
        raise PositionOutOfRangeError(f"position {i} not in 1..{n-1}")
    cols = {}
    for w in words_of_length(b.theta, n):
        a, c = w[i - 1], w[i]
        target = w[: i - 1] + (c, a) + w[i + 1 :]
        cols[w] = {target: b.entry(a, c)}
    return LinOp(n, n, cols)


def reduced_word(perm) -> list:
    """A reduced expression (list of adjacent transposition positions, 1-based)
    for the permutation given in one-line notation on 1..n."""
    p = list(perm)
    word_rev = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word_rev.append(i + 1)
                changed = True
    return word_rev[::-1]


def braid_lift(perm, b: DiagonalBraiding) -> LinOp:
    """The Matsumoto lift of a permutation: compose braid generators along
    any reduced word. Diagonal braidings satisfy the braid relations, so the
    result does not depend on the chosen word."""
    n = len(perm)
    out = identity_op(b.theta, n)
    for i in reduced_word(perm):
        out = out.compose(braid_generator(n, i, b))
    return out


def quantum_symmetrizer(n: int, b: DiagonalBraiding) -> LinOp:
    """S_n = sum of the braid lifts of all of S_n, via the shuffle recursion
    S_n = U_n (S_{n-1} (x) id) with U_n = sum_j sigma_{n-1}...sigma_{j+1};
    the n!-term definition is kept as a test oracle only."""
    return BraidedOps(b).symmetrizer(n)


def brute_force_symmetrizer(n: int, b: DiagonalBraiding) -> LinOp:
    """The n!-term definition, for oracle testing at small n."""
    out = None
    for perm in itertools.permutations(range(1, n + 1)):
        lift = braid_lift(perm, b)
        out = lift if out is None else out + lift
    return out


def shuffle_coproduct(n: int, p: int, b: DiagonalBraiding) -> LinOp:
    """The (p, n-p) component of the braided coproduct of T(V), as a map
    from T^n to T^p (x) T^{n-p} with (word, word) target keys."""
    return BraidedOps(b).coproduct_component(n, p)


def extend_derivation(d: EndoMatrix, n: int, theta: int) -> LinOp:
    """Leibniz extension of d in End(V) to T^n: sum over positions of
    id (x) ... (x) d (x) ... (x) id; the empty tensor is sent to zero."""
    cols = {}
    for w in words_of_length(theta, n):
        image: dict = {}
        for pos in range(n):
            letter = w[pos]
            for target_letter in range(1, theta + 1):
                c = d[target_letter - 1][letter - 1]
                if c.is_zero():
                    continue
                target = w[:pos] + (target_letter,) + w[pos + 1 :]
                prev = image.get(target)
                if prev is None:
                    image[target] = c
                else:
                    s = prev + c
                    if s.is_zero():
                        del image[target]
                    else:
                        image[target] = s
        if image:
            cols[w] = image
    return LinOp(n, n, cols)


def bicharacter(b: DiagonalBraiding, beta, gamma) -> CycScalar:
    """q_{beta,gamma} = prod q_ij^(beta_i gamma_j), the braiding scalar
    between multidegrees."""
    out = ONE
    for i in range(b.theta):
        if not beta[i]:
            continue
        for j in range(b.theta):
            e = beta[i] * gamma[j]
            if e:
                out = out * b.q[i][j] ** e
    return out


class BraidedOps:
    """Memoized per-braiding operators. Instances may be shared; concurrent
    duplicate computation of a cache entry is harmless (results are equal
    and immutable once stored)."""

    def __init__(self, b: DiagonalBraiding):
        self.braiding = b
        self._symmetrizers: dict = {}
        self._coproducts: dict = {}

    def words(self, n: int) -> list:
        return words_of_length(self.braiding.theta, n)

    def symmetrizer(self, n: int) -> LinOp:
        cached = self._symmetrizers.get(n)
        if cached is not None:
            return cached
        theta = self.braiding.theta
        if n <= 1:
            result = identity_op(theta, n)
        else:
            prev = self.symmetrizer(n - 1)
            # S_{n-1} (x) id
            ext_cols = {}
            for w in self.words(n):
                head, tail = w[:-1], w[-1:]
                col = prev.cols.get(head)
                if col:
                    ext_cols[w] = {wt + tail: c for wt, c in col.items()}
            ext = LinOp(n, n, ext_cols)
            # U_n = sum over j of sigma_{n-1} ... sigma_{j+1} (identity at
            # j = n-1), the written word acting left factor first
            u_n = identity_op(theta, n)
            partial = identity_op(theta, n)
            for j in range(n - 2, -1, -1):
                partial = braid_generator(n, j + 1, self.braiding).compose(partial)
                u_n = u_n + partial
            result = u_n.compose(ext)
        self._symmetrizers[n] = result
        return result

    def coproduct_component(self, n: int, p: int) -> LinOp:
        if not 0 <= p <= n:
            raise PositionOutOfRangeError(f"split {p} not in 0..{n}")
        cached = self._coproducts.get((n, p))
        if cached is not None:
            return cached
        cols: dict = {}
        values = range(1, n + 1)
        for chosen in itertools.combinations(values, p):
            # the (p, n-p) shuffle increasing on both blocks with image sets
            # chosen / complement on the first / last slots
            rest = [v for v in values if v not in chosen]
            perm = tuple(chosen) + tuple(rest)
            inverse = [0] * n
            for pos, value in enumerate(perm):
                inverse[value - 1] = pos + 1
            lift = braid_lift(tuple(inverse), self.braiding)
            for w, col in lift.cols.items():
                out = cols.setdefault(w, {})
                for wt, c in col.items():
                    key = (wt[:p], wt[p:])
                    prev = out.get(key)
                    if prev is None:
                        out[key] = c
                    else:
                        s = prev + c
                        if s.is_zero():
                            del out[key]
                        else:
                            out[key] = s
        result = LinOp(n, None, cols)
        self._coproducts[(n, p)] = result
        return result

    def full_coproduct(self, n: int) -> dict:
        """All components at once: word -> {(left word, right word): coeff}."""
        out: dict = {}
        for p in range(n + 1):
            comp = self.coproduct_component(n, p)
            for w, col in comp.cols.items():
                vec_axpy_inplace(out.setdefault(w, {}), ONE, col)
        return out
