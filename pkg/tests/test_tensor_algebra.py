import itertools
import random

import pytest

from nicholskit.braided_space import (
    biderivation_algebra,
    braiding_from_lists,
    derive_realization,
    elementary_endo,
    torus_action,
)
from nicholskit.errors import PositionOutOfRangeError
from nicholskit.linalg import vec_eq
from nicholskit.scalars import ONE, q_factorial, rational, root_of_unity
from nicholskit.tensor_algebra import (
    BraidedOps,
    TensorElement,
    bicharacter,
    braid_generator,
    braid_lift,
    brute_force_symmetrizer,
    concat,
    extend_derivation,
    identity_op,
    multidegree,
    quantum_symmetrizer,
    reduced_word,
    shuffle_coproduct,
    word_element,
    words_of_length,
)


def random_braiding(rng, theta, orders=(1, 2, 3, 4, 6)):
    return braiding_from_lists(
        [[root_of_unity(rng.choice(orders), rng.randrange(12)) for _ in range(theta)] for _ in range(theta)]
    )


def coproduct_oracle(b, word):
    """Independent coproduct: multiply out Delta(x_i) = x_i(x)1 + 1(x)x_i in
    the braided tensor square, where (a(x)b)(c(x)d) picks up the braiding
    bicharacter between deg b and deg c."""
    theta = b.theta
    cur = {((), ()): ONE}
    for letter in word:
        nxt = {}
        for (wl, wr), c in cur.items():
            q1 = c * bicharacter(b, multidegree(wr, theta), multidegree((letter,), theta))
            for key, value in (((wl + (letter,), wr), q1), ((wl, wr + (letter,)), c)):
                prev = nxt.get(key)
                total = value if prev is None else prev + value
                if total.is_zero():
                    nxt.pop(key, None)
                else:
                    nxt[key] = total
        cur = nxt
    return cur


def test_braid_generator_formula():
    b = random_braiding(random.Random(0), 2)
    op = braid_generator(2, 1, b)
    assert op.cols[(1, 2)] == {(2, 1): b.entry(1, 2)}
    assert op.cols[(2, 2)] == {(2, 2): b.entry(2, 2)}


def test_braid_generator_trivial_q_is_transposition():
    b = braiding_from_lists([[1, 1], [1, 1]])
    op = braid_generator(3, 2, b)
    assert op.cols[(1, 2, 1)] == {(1, 1, 2): ONE}


def test_braid_generator_position_check():
    b = braiding_from_lists([[1]])
    with pytest.raises(PositionOutOfRangeError):
        braid_generator(2, 2, b)


def test_braid_relations():
    rng = random.Random(1)
    for n in (3, 4, 5):
        b = random_braiding(rng, 2)
        keys = words_of_length(2, n)
        for i in range(1, n - 1):
            s_i = braid_generator(n, i, b)
            s_j = braid_generator(n, i + 1, b)
            lhs = s_i.compose(s_j).compose(s_i)
            rhs = s_j.compose(s_i).compose(s_j)
            assert lhs.equals(rhs, keys)
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) >= 2:
                    s_i = braid_generator(n, i, b)
                    s_j = braid_generator(n, j, b)
                    assert s_i.compose(s_j).equals(s_j.compose(s_i), keys)


def test_reduced_word_lengths():
    for perm in itertools.permutations((1, 2, 3, 4)):
        inversions = sum(
            1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j]
        )
        assert len(reduced_word(perm)) == inversions


def test_braid_lift_identity_and_transposition():
    b = random_braiding(random.Random(2), 2)
    assert braid_lift((1, 2), b).equals(identity_op(2, 2), words_of_length(2, 2))
    assert braid_lift((2, 1), b).equals(braid_generator(2, 1, b), words_of_length(2, 2))


def test_braid_lift_word_independence_longest_element():
    # two reduced words for the longest element of S_3
    b = random_braiding(random.Random(3), 2)
    s1 = braid_generator(3, 1, b)
    s2 = braid_generator(3, 2, b)
    keys = words_of_length(2, 3)
    lhs = s1.compose(s2).compose(s1)
    rhs = s2.compose(s1).compose(s2)
    lift = braid_lift((3, 2, 1), b)
    assert lift.equals(lhs, keys) and lift.equals(rhs, keys)


def test_symmetrizer_degree_two():
    b = random_braiding(random.Random(4), 2)
    s2 = quantum_symmetrizer(2, b)
    for i, j in words_of_length(2, 2):
        col = s2.cols.get((i, j), {})
        if i == j:
            coeff = ONE + b.entry(i, i)
            assert col == ({} if coeff.is_zero() else {(i, j): coeff})
        else:
            assert col == {(i, j): ONE, (j, i): b.entry(i, j)}


def test_symmetrizer_small_degrees_identity():
    b = random_braiding(random.Random(5), 3)
    assert quantum_symmetrizer(0, b).equals(identity_op(3, 0), [()])
    assert quantum_symmetrizer(1, b).equals(identity_op(3, 1), words_of_length(3, 1))


def test_symmetrizer_matches_brute_force():
    rng = random.Random(6)
    for _ in range(6):
        theta = rng.choice([1, 2])
        b = random_braiding(rng, theta)
        for n in (2, 3, 4):
            fast = quantum_symmetrizer(n, b)
            slow = brute_force_symmetrizer(n, b)
            assert fast.equals(slow, words_of_length(theta, n))


def test_symmetrizer_qfactorial_vanishing():
    for order in (2, 3, 4):
        q = root_of_unity(order, 1)
        b = braiding_from_lists([[q]])
        word = tuple([1] * order)
        col = quantum_symmetrizer(order, b).cols.get(word, {})
        assert col == {} or col[word].is_zero()
        # and the coefficient at lower degree equals the q-factorial
        n = order - 1
        w = tuple([1] * n)
        col = quantum_symmetrizer(n, b).cols.get(w, {})
        assert col[w] == q_factorial(q, n)


def test_concat():
    b_theta = 2
    x1 = word_element(b_theta, (1,))
    x2 = word_element(b_theta, (2,))
    assert concat(x1, x2).coeffs == {(1, 2): ONE}
    one = TensorElement(b_theta, 0, {(): ONE})
    a = concat(x1, x2)
    assert concat(one, a) == a
    s = x1 + x2
    assert concat(s, x1).coeffs == {(1, 1): ONE, (2, 1): ONE}


def test_shuffle_coproduct_edge_components():
    b = random_braiding(random.Random(7), 2)
    op0 = shuffle_coproduct(3, 0, b)
    for w in words_of_length(2, 3):
        assert op0.cols[w] == {((), w): ONE}
    op1 = shuffle_coproduct(1, 1, b)
    for w in words_of_length(2, 1):
        assert op1.cols[w] == {(w, ()): ONE}


def test_shuffle_coproduct_degree_two():
    b = random_braiding(random.Random(8), 2)
    op = shuffle_coproduct(2, 1, b)
    for i, j in words_of_length(2, 2):
        expected = {((i,), (j,)): ONE}
        key = ((j,), (i,))
        extra = b.entry(i, j)
        prev = expected.get(key)
        expected[key] = extra if prev is None else prev + extra
        expected = {k: v for k, v in expected.items() if not v.is_zero()}
        assert op.cols[(i, j)] == expected


def test_shuffle_coproduct_matches_multiplicative_oracle():
    rng = random.Random(9)
    for _ in range(4):
        theta = rng.choice([1, 2])
        b = random_braiding(rng, theta)
        for n in range(5):
            expected_by_word = {w: coproduct_oracle(b, w) for w in words_of_length(theta, n)}
            for p in range(n + 1):
                op = shuffle_coproduct(n, p, b)
                for w in words_of_length(theta, n):
                    expected = {
                        k: v for k, v in expected_by_word[w].items() if len(k[0]) == p
                    }
                    assert vec_eq(op.cols.get(w, {}), expected), (w, p)


def test_shuffle_coproduct_coassociative():
    rng = random.Random(10)
    b = random_braiding(rng, 2)
    ops = BraidedOps(b)
    n = 4
    for p, q in ((1, 1), (1, 2), (2, 1)):
        r = n - p - q
        left_first = ops.coproduct_component(n, p + q)
        right_first = ops.coproduct_component(n, p)
        refine_left = ops.coproduct_component(p + q, p)
        refine_right = ops.coproduct_component(n - p, q)
        for w in words_of_length(2, n):
            lhs = {}
            for (a, c), coeff in left_first.cols.get(w, {}).items():
                for (a1, a2), coeff2 in refine_left.cols.get(a, {}).items():
                    key = (a1, a2, c)
                    prev = lhs.get(key)
                    total = coeff * coeff2 if prev is None else prev + coeff * coeff2
                    if total.is_zero():
                        lhs.pop(key, None)
                    else:
                        lhs[key] = total
            rhs = {}
            for (a, c), coeff in right_first.cols.get(w, {}).items():
                for (c1, c2), coeff2 in refine_right.cols.get(c, {}).items():
                    key = (a, c1, c2)
                    prev = rhs.get(key)
                    total = coeff * coeff2 if prev is None else prev + coeff * coeff2
                    if total.is_zero():
                        rhs.pop(key, None)
                    else:
                        rhs[key] = total
            assert vec_eq(lhs, rhs), (w, p, q)


def test_extend_derivation_torus_scales_by_weight():
    h = [rational(2), rational(5)]
    d = torus_action(h)
    op = extend_derivation(d, 3, 2)
    for w in words_of_length(2, 3):
        beta = multidegree(w, 2)
        weight = h[0] * beta[0] + h[1] * beta[1]
        expected = {} if weight.is_zero() else {w: weight}
        assert op.cols.get(w, {}) == expected


def test_extend_derivation_identity_gives_degree():
    d = torus_action([1, 1])
    op = extend_derivation(d, 3, 2)
    for w in words_of_length(2, 3):
        assert op.cols[w] == {w: rational(3)}


def test_extend_derivation_elementary():
    d = elementary_endo(2, 2, 1)  # x_1 -> x_2
    op = extend_derivation(d, 2, 2)
    assert op.cols[(1, 1)] == {(2, 1): ONE, (1, 2): ONE}
    assert op.cols.get((2, 2), {}) == {}
    assert op.apply(word_element(2, (1, 1))).coeffs == {(2, 1): ONE, (1, 2): ONE}


def test_extend_derivation_zero_on_unit():
    d = torus_action([1])
    op = extend_derivation(d, 0, 1)
    assert op.cols.get((), {}) == {}


def test_extend_derivation_leibniz_on_products():
    rng = random.Random(11)
    d = elementary_endo(2, 1, 2)
    for _ in range(5):
        n1, n2 = rng.choice([(1, 2), (2, 1), (2, 2)])
        w1 = tuple(rng.choice([1, 2]) for _ in range(n1))
        w2 = tuple(rng.choice([1, 2]) for _ in range(n2))
        a, b = word_element(2, w1), word_element(2, w2)
        lhs = extend_derivation(d, n1 + n2, 2).apply(concat(a, b))
        rhs = concat(extend_derivation(d, n1, 2).apply(a), b) + concat(
            a, extend_derivation(d, n2, 2).apply(b)
        )
        assert lhs == rhs


def test_derivation_commutes_with_braid_lifts_for_bd_v():
    """The heart of the unrolled construction: YD endomorphisms extended by
    Leibniz commute with every braid lift on every tensor power."""
    rng = random.Random(12)
    b = braiding_from_lists([[-1, -1], [-1, -1]])
    from tests.test_braided_space import shared_pair_realization

    r = shared_pair_realization()
    lie = biderivation_algebra(r)
    for n in (2, 3):
        keys = words_of_length(2, n)
        for d in lie.basis_maps:
            ext = extend_derivation(d, n, 2)
            for _ in range(4):
                perm = tuple(rng.sample(range(1, n + 1), n))
                lift = braid_lift(perm, b)
                assert lift.compose(ext).equals(ext.compose(lift), keys)


def test_multidegree_and_homogeneity():
    assert multidegree((1, 2, 1), 2) == (2, 1)
    e = TensorElement(2, 2, {(1, 2): ONE, (2, 1): ONE})
    assert not e.is_multihomogeneous() or True  # (1,2),(2,1) share multidegree (1,1)
    assert e.is_multihomogeneous()
    mixed = TensorElement(2, 2, {(1, 1): ONE, (1, 2): ONE})
    assert not mixed.is_multihomogeneous()
