"""Shared builders for actions used across the unrolled/pairing tests."""

from nicholskit.braided_space import braiding_from_lists, derive_realization, torus_lie
from nicholskit.hopf_core import TruncatedHopf, bosonize
from nicholskit.linalg import vec_axpy_inplace
from nicholskit.nichols import nichols_truncated
from nicholskit.scalars import ONE
from nicholskit.unrolled import HopfAction


def rank_one_bosonization(q, cap):
    b = braiding_from_lists([[q]])
    gq = nichols_truncated(b, cap)
    r = derive_realization(b)
    return bosonize(gq, r, cap)


def rank_one_derivation(H: TruncatedHopf, image_of_x: dict) -> HopfAction:
    """Extend x |-> image_of_x to the whole rank-one bosonization by the
    Leibniz rule (zero on group-likes): the image of x^a g^b is
    sum_i x^i (Dx) x^(a-1-i) g^b, computed through the product table.

    The result is an honest linear action table; whether it is a derivation
    or a coderivation is for the checkers to decide."""
    pair_of = H.meta["pair_of"]
    pair_index = H.meta["pair_index"]
    table = []
    for w, g in pair_of:
        a = len(w)
        out: dict = {}
        for i in range(a):
            vec = {pair_index[((1,) * i, H.meta["realization"].group.zero())]: ONE}
            vec = H.mult_vec(vec, image_of_x)
            vec = H.mult_vec(vec, {pair_index[((1,) * (a - 1 - i), g)]: ONE})
            vec_axpy_inplace(out, ONE, vec)
        table.append(out)
    return HopfAction(H, torus_lie([[1]]), [table])


def grouplike_times_x_action(H: TruncatedHopf, power: int = 1) -> HopfAction:
    """The classic non-coderivation fault: D(x) = g^power * x. This is a
    derivation trivial on the group-likes, but the coaction twist breaks the
    coderivation law."""
    pair_index = H.meta["pair_index"]
    group = H.meta["realization"].group
    g_elt = group.element((power,))
    gx = H.mult_vec({pair_index[((), g_elt)]: ONE}, {pair_index[((1,), group.zero())]: ONE})
    return rank_one_derivation(H, gx)


def torus_action_table(H: TruncatedHopf, weights) -> HopfAction:
    """D_h on a bosonization, built directly from the degree tags: scales a
    basis element of multidegree beta by sum_i beta_i h_i."""
    from nicholskit.braided_space import torus_action
    from nicholskit.scalars import CycScalar, ZERO

    hs = [w if isinstance(w, CycScalar) else CycScalar.from_rational(w) for w in weights]
    table = []
    for i, tag in enumerate(H.tags):
        weight = ZERO
        for e, h in zip(tag.multidegree, hs):
            if e:
                weight = weight + h * e
        table.append({} if weight.is_zero() else {i: weight})
    lie = torus_lie([[h for h in hs]])
    return HopfAction(H, lie, [table])
