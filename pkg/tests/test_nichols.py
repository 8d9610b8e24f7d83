import random

import pytest

from nicholskit.braided_space import (
    biderivation_algebra,
    braiding_from_lists,
    derive_realization,
    elementary_endo,
    torus_action,
)
from nicholskit.errors import CapTooSmallError, NotCoidealError, NotHomogeneousError
from nicholskit.nichols import (
    GradedQuotient,
    hilbert_series,
    nichols_truncated,
    pre_nichols_quotient,
    relations_in_degree,
    stability_check,
)
from nicholskit.render import parse_element, render_tensor_element
from nicholskit.scalars import ONE, q_factorial, rational, root_of_unity
from nicholskit.tensor_algebra import TensorElement, concat, word_element
from tests.test_braided_space import shared_pair_realization


def cartan_a2_braiding():
    w = root_of_unity(3, 1)
    return braiding_from_lists([[w, w * w], [1, w]])  # q12*q21 = zeta_3^2


def test_relations_rank_one_generic_degree_two():
    b = braiding_from_lists([[rational(2)]])  # 1 + q != 0 at every tested degree
    assert relations_in_degree(2, b) == []


def test_relations_rank_one_minus_one():
    b = braiding_from_lists([[-1]])
    rels = relations_in_degree(2, b)
    assert len(rels) == 1
    assert rels[0].coeffs == {(1, 1): ONE}


def test_relations_symmetric_algebra_degree_two():
    b = braiding_from_lists([[1, 1], [1, 1]])
    rels = relations_in_degree(2, b)
    # kernel of id + flip: antisymmetric part only, x_i (x) x_i survive
    assert len(rels) == 1
    coeffs = rels[0].coeffs
    assert set(coeffs) == {(1, 2), (2, 1)}
    assert coeffs[(1, 2)] == -coeffs[(2, 1)]


def test_relations_rejects_low_degree():
    b = braiding_from_lists([[1]])
    with pytest.raises(ValueError):
        relations_in_degree(1, b)


@pytest.mark.parametrize("order", [2, 3, 4, 5])
def test_nichols_rank_one_dims(order):
    q = root_of_unity(order, 1)
    gq = nichols_truncated(braiding_from_lists([[q]]), cap=order + 2)
    expected = [1] * order + [0] * 3
    assert gq.dims == expected
    # oracle: dim B_n = 1 iff the q-factorial (n)_q! is nonzero
    for n in range(order + 3):
        assert gq.dims[n] == (0 if q_factorial(q, n).is_zero() else 1)


def test_nichols_rank_one_generic():
    gq = nichols_truncated(braiding_from_lists([[rational(2)]]), cap=6)
    assert gq.dims == [1] * 7


def test_nichols_symmetric_algebra_dims():
    gq = nichols_truncated(braiding_from_lists([[1, 1], [1, 1]]), cap=4)
    assert gq.dims == [1, 2, 3, 4, 5]


def test_hilbert_series_finite():
    gq = nichols_truncated(braiding_from_lists([[root_of_unity(4, 1)]]), cap=6)
    data = hilbert_series(gq)
    assert data.dims == [1, 1, 1, 1, 0, 0, 0]
    assert data.finite_flag and data.vanishes_from == 4 and data.total_dim == 4
    assert "vanish" in data.certificate()


def test_hilbert_series_unknown():
    gq = nichols_truncated(braiding_from_lists([[rational(2)]]), cap=4)
    data = hilbert_series(gq)
    assert not data.finite_flag and data.total_dim is None
    assert data.certificate() == "unknown beyond cap"


def test_hilbert_series_rank_one_minus_one():
    gq = nichols_truncated(braiding_from_lists([[-1]]), cap=4)
    assert hilbert_series(gq).dims == [1, 1, 0, 0, 0]
    assert hilbert_series(gq).total_dim == 2


def test_cartan_a2_dims_total_27():
    gq = nichols_truncated(cartan_a2_braiding(), cap=8)
    assert gq.dims == [1, 2, 4, 4, 5, 4, 4, 2, 1]
    assert hilbert_series(gq).total_dim is None  # no zero within cap 8
    assert sum(gq.dims) == 27


def test_cap_validation():
    with pytest.raises(CapTooSmallError):
        nichols_truncated(braiding_from_lists([[-1]]), cap=0)


def test_normal_form_projection_compatibility():
    """mult after projection equals projection of concat, on basis pairs."""
    gq = nichols_truncated(cartan_a2_braiding(), cap=5)
    rng = random.Random(13)
    for _ in range(25):
        p = rng.randrange(1, 4)
        q = rng.randrange(1, 5 - p + 1)
        wa = tuple(rng.choice([1, 2]) for _ in range(p))
        wb = tuple(rng.choice([1, 2]) for _ in range(q))
        lhs = gq.mult_nf(gq.nf_of_word(wa), p, gq.nf_of_word(wb), q)
        rhs = gq.normal_form(concat(word_element(2, wa), word_element(2, wb)))
        assert lhs == rhs


def test_relation_spaces_are_ideals():
    """concat of a relation with anything stays in the relation space."""
    b = cartan_a2_braiding()
    gq = nichols_truncated(b, cap=5)
    for n in range(2, 5):
        for row in gq.relations[n].basis():
            rel = TensorElement(2, n, dict(row))
            for letter in (1, 2):
                left = concat(word_element(2, (letter,)), rel)
                right = concat(rel, word_element(2, (letter,)))
                assert gq.relations[n + 1].contains(left.coeffs)
                assert gq.relations[n + 1].contains(right.coeffs)


def test_quotient_coproduct_coassociative():
    gq = nichols_truncated(cartan_a2_braiding(), cap=4)
    for n in range(2, 5):
        for w in gq.basis[n]:
            for p in range(1, n):
                for q in range(1, n - p + 1):
                    lhs = {}
                    for (a, c), coeff in gq.coproduct_basis(w, p + q).items():
                        # refine the left factor
                        for (a1, a2), coeff2 in _cop_nf(gq, a, p).items():
                            key = (a1, a2, c)
                            total = lhs.get(key, None)
                            val = coeff * coeff2 if total is None else total + coeff * coeff2
                            if val.is_zero():
                                lhs.pop(key, None)
                            else:
                                lhs[key] = val
                    rhs = {}
                    for (a, c), coeff in gq.coproduct_basis(w, p).items():
                        for (c1, c2), coeff2 in _cop_nf(gq, c, q).items():
                            key = (a, c1, c2)
                            total = rhs.get(key, None)
                            val = coeff * coeff2 if total is None else total + coeff * coeff2
                            if val.is_zero():
                                rhs.pop(key, None)
                            else:
                                rhs[key] = val
                    assert set(lhs) == set(rhs)
                    assert all(lhs[k] == rhs[k] for k in lhs)


def _cop_nf(gq, word_or_nf, p):
    out = {}
    for (u1, u2), c in gq.coproduct_basis(word_or_nf, p).items():
        out[(u1, u2)] = c
    return out


def test_pre_nichols_empty_gens_is_tensor_algebra():
    gq = pre_nichols_quotient(braiding_from_lists([[-1, 1], [1, -1]]), [], cap=3)
    assert gq.dims == [1, 2, 4, 8]


def test_pre_nichols_recovers_nichols():
    b = cartan_a2_braiding()
    nic = nichols_truncated(b, cap=5)
    gens = []
    for n in range(2, 6):
        gens.extend(relations_in_degree(n, b))
    gq = pre_nichols_quotient(b, gens, cap=5)
    assert gq.dims == nic.dims
    for n in range(2, 6):
        info = gq.pre_nichols_info[n]
        assert info.contained_in_kernel and not info.strict


def test_pre_nichols_rank_one_x4():
    b = braiding_from_lists([[root_of_unity(4, 1)]])
    x4 = parse_element("x1*x1*x1*x1", 1)
    gq = pre_nichols_quotient(b, [x4], cap=6)
    assert gq.dims == [1, 1, 1, 1, 0, 0, 0]
    assert gq.pre_nichols_info[4].contained_in_kernel


def test_pre_nichols_strict_containment():
    # x1^2 at q_11 = -1 inside theta=2: ker S_2 also contains x2^2 and the
    # braided commutator, so the containment is strict
    b = braiding_from_lists([[-1, -1], [-1, -1]])
    gq = pre_nichols_quotient(b, [parse_element("x1*x1", 2)], cap=3)
    info = gq.pre_nichols_info[2]
    assert info.contained_in_kernel and info.strict
    assert gq.dims[2] > nichols_truncated(b, 3).dims[2]


def test_pre_nichols_rejects_inhomogeneous():
    b = braiding_from_lists([[-1, -1], [-1, -1]])
    bad = TensorElement(2, 2, {(1, 1): ONE, (1, 2): ONE})
    with pytest.raises(NotHomogeneousError):
        pre_nichols_quotient(b, [bad], cap=3)


def test_pre_nichols_rejects_non_coideal():
    # x1*x2 alone at the symmetric point: Delta(x1x2) has x1 (x) x2 + x2 (x) x1
    # which does not vanish in the quotient, so this is not a coideal
    b = braiding_from_lists([[1, 1], [1, 1]])
    with pytest.raises(NotCoidealError):
        pre_nichols_quotient(b, [parse_element("x1*x2", 2)], cap=3)


def test_stability_torus_always_passes():
    b = cartan_a2_braiding()
    gq = nichols_truncated(b, cap=4)
    report = stability_check(gq, [torus_action([1, 5]), torus_action([rational(2), rational(-7)])])
    assert report.passed


def test_stability_bd_v_on_kernel_ideal():
    r = shared_pair_realization()
    gq = nichols_truncated(r.braiding, cap=4)
    lie = biderivation_algebra(r)
    assert stability_check(gq, lie.basis_maps).passed


def test_stability_fails_for_non_invariant_ideal():
    # ideal generated by x1^2 only (q_11 = -1); E_21 sends x1^2 outside
    b = braiding_from_lists([[-1, -1], [-1, -1]])
    gq = pre_nichols_quotient(b, [parse_element("x1*x1", 2)], cap=3)
    report = stability_check(gq, [elementary_endo(2, 2, 1)])
    assert not report.passed
    assert report.violations[0][0] == 0 and report.violations[0][1] == 2


def test_render_parse_round_trip():
    rng = random.Random(14)
    for _ in range(20):
        n = rng.randrange(0, 4)
        coeffs = {}
        for _ in range(rng.randrange(0, 4)):
            w = tuple(rng.choice([1, 2]) for _ in range(n))
            c = root_of_unity(rng.choice([1, 2, 3, 4]), rng.randrange(4)) * rng.randrange(-3, 4)
            if not c.is_zero():
                coeffs[w] = c
        e = TensorElement(2, n, coeffs)
        parsed = parse_element(render_tensor_element(e), 2)
        if e.is_zero():
            assert parsed.is_zero()
        else:
            assert parsed == e


def test_parse_element_examples():
    e = parse_element("x1*x2 - z(3)^1*x2*x1", 2)
    assert e.coeffs[(1, 2)] == ONE
    assert e.coeffs[(2, 1)] == -root_of_unity(3, 1)
    with pytest.raises(ValueError):
        parse_element("x1 + x1*x2", 2)
    with pytest.raises(ValueError):
        parse_element("x3", 2)
