import pytest

from nicholskit.braided_space import (
    AbelianGroup,
    braiding_from_lists,
    close_under_bracket,
    derive_realization,
    elementary_endo,
    torus_lie,
)
from nicholskit.errors import CapTooSmallError, NotGrouplikeError, RealizationMismatchError
from nicholskit.hopf_core import (
    BasisTag,
    TruncatedHopf,
    bosonize,
    enveloping_truncated,
    from_json_dict,
    group_algebra,
    skew_primitive_space,
    solve_antipode,
    to_json_dict,
    verify_hopf,
)
from nicholskit.linalg import vec_eq
from nicholskit.nichols import nichols_truncated
from nicholskit.scalars import ONE, rational, root_of_unity
from tests.test_braided_space import shared_pair_realization


def sweedler():
    b = braiding_from_lists([[-1]])
    gq = nichols_truncated(b, 3)
    return bosonize(gq, derive_realization(b), 3)


def zeta4_bosonization(cap=5):
    b = braiding_from_lists([[root_of_unity(4, 1)]])
    gq = nichols_truncated(b, cap)
    return bosonize(gq, derive_realization(b), cap)


def test_group_algebra_trivial_group_is_ground_field():
    H = group_algebra(AbelianGroup((1,)))
    assert H.dim == 1
    assert verify_hopf(H).passed


def test_group_algebra_z2_self_inverse():
    H = group_algebra(AbelianGroup((2,)))
    assert H.dim == 2
    H = solve_antipode(H)
    assert H.antipode[1] == {1: ONE}
    assert verify_hopf(H).passed


def test_group_algebra_klein_four():
    H = group_algebra(AbelianGroup((2, 2)))
    assert H.dim == 4
    assert verify_hopf(H).passed


def test_enveloping_zero_lie_algebra():
    from nicholskit.braided_space import LieAction

    U = enveloping_truncated(LieAction(0, (), {}), 4)
    assert U.dim == 1
    assert verify_hopf(U).passed


def test_enveloping_rank_one_binomial_coproduct():
    U = enveloping_truncated(torus_lie([[1]]), 3)
    assert [t.label for t in U.tags] == ["1", "d1", "d1^2", "d1^3"]
    # Delta(d1^2) = d1^2 (x) 1 + 2 d1 (x) d1 + 1 (x) d1^2
    assert U.comult[2] == {(2, 0): ONE, (1, 1): rational(2), (0, 2): ONE}
    assert verify_hopf(U).passed


def test_enveloping_dim2_abelian_pbw_count():
    U = enveloping_truncated(torus_lie([[1, 0], [0, 1]]), 2)
    assert U.dim == 6  # C(2+2, 2)
    # commutative multiplication table
    for i in range(U.dim):
        for j in range(U.dim):
            if U.can_multiply(i, j):
                assert vec_eq(U.mult(i, j), U.mult(j, i))
    assert verify_hopf(U).passed


def test_enveloping_nonabelian_borel():
    # basis E11, E22, E12 in gl(2): [E11,E12]=E12, [E22,E12]=-E12
    r = shared_pair_realization()
    maps = [elementary_endo(2, 1, 1), elementary_endo(2, 2, 2), elementary_endo(2, 1, 2)]
    lie = close_under_bracket(maps, r)
    U = enveloping_truncated(lie, 3)
    assert verify_hopf(U).passed
    d1, d2, d12 = 1, 2, 3  # degree-1 monomials come in lex order e1, e2, e3
    assert [U.tags[i].label for i in (d1, d2, d12)] == ["d1", "d2", "d3"]
    # e3*e1 = e1*e3 - e3  (since [e1, e3] = e3)
    lhs = U.mult(d12, d1)
    e1e3 = U.mult(d1, d12)
    expected = dict(e1e3)
    expected[d12] = expected.get(d12, rational(0)) - ONE
    assert vec_eq(lhs, {k: v for k, v in expected.items() if not v.is_zero()})


def test_enveloping_cocommutative():
    U = enveloping_truncated(torus_lie([[1, 2]]), 4)
    for i in range(U.dim):
        flipped = {(k, j): c for (j, k), c in U.comult[i].items()}
        assert vec_eq(flipped, U.comult[i])


def test_bosonize_trivial_quotient_is_group_algebra():
    b = braiding_from_lists([[-1]])
    gq = nichols_truncated(b, 1)
    r = derive_realization(b)
    H = bosonize(gq, r, 0)
    assert H.dim == 2
    assert all(t.grouplike for t in H.tags)


def test_bosonize_sweedler_structure():
    H = sweedler()
    assert H.dim == 4
    labels = {t.label: i for i, t in enumerate(H.tags)}
    one, g = labels["1"], labels["g(1)"]
    x, xg = labels["x1#1"], labels["x1#g(1)"]
    # x^2 = 0
    assert H.mult(x, x) == {}
    # g x = -x g
    assert H.mult(g, x) == {xg: -ONE}
    assert H.mult(x, g) == {xg: ONE}
    # Delta x = x (x) 1 + g (x) x
    assert H.comult[x] == {(x, one): ONE, (g, x): ONE}
    assert verify_hopf(H).passed


def test_bosonize_dimension_count_zeta_n():
    for order in (3, 4):
        b = braiding_from_lists([[root_of_unity(order, 1)]])
        gq = nichols_truncated(b, order - 1)
        H = bosonize(gq, derive_realization(b), order - 1)
        assert H.dim == order * order  # dim B(V) * |Gamma|


def test_bosonize_realization_mismatch():
    b1 = braiding_from_lists([[-1]])
    b2 = braiding_from_lists([[root_of_unity(4, 1)]])
    gq = nichols_truncated(b1, 2)
    with pytest.raises(RealizationMismatchError):
        bosonize(gq, derive_realization(b2), 2)


def test_bosonize_cap_exceeds_quotient():
    b = braiding_from_lists([[-1]])
    gq = nichols_truncated(b, 1)
    with pytest.raises(CapTooSmallError):
        bosonize(gq, derive_realization(b), 2)


def test_verify_hopf_passes_on_finite_cases():
    for H in (sweedler(), zeta4_bosonization(4)):
        H = solve_antipode(H)
        report = verify_hopf(H)
        assert report.passed, report.summary()


def test_verify_hopf_catches_corruption():
    H = sweedler()
    labels = {t.label: i for i, t in enumerate(H.tags)}
    x, g = labels["x1#1"], labels["g(1)"]
    # corrupt one multiplication entry behind the cache
    H.mult(g, x)
    H._mult_cache[(g, x)] = {labels["x1#g(1)"]: rational(5)}
    report = verify_hopf(H)
    assert not report.passed
    failed = report.failed_axioms()
    assert "associativity" in failed or "comult_is_algebra_map" in failed
    witness_entry = report.violations()[0]
    assert witness_entry.witness is not None


def test_solve_antipode_group_algebra():
    H = solve_antipode(group_algebra(AbelianGroup((4,))))
    # S(g) = g^-1 = g^3
    assert H.antipode[1] == {3: ONE}
    assert verify_hopf(H).passed


def test_solve_antipode_sweedler_convolution():
    H = solve_antipode(sweedler())
    labels = {t.label: i for i, t in enumerate(H.tags)}
    x, xg = labels["x1#1"], labels["x1#g(1)"]
    # S(x) = -g^{-1} x = x # g in this table convention
    assert H.antipode[x] == {xg: ONE}
    assert verify_hopf(H).passed


def test_solve_antipode_enveloping_primitives():
    U = solve_antipode(enveloping_truncated(torus_lie([[1]]), 3))
    assert U.antipode[1] == {1: -ONE}
    assert verify_hopf(U).passed


def test_skew_primitive_space_group_algebra():
    H = group_algebra(AbelianGroup((3,)))
    for g in range(3):
        for t in range(3):
            basis = skew_primitive_space(H, g, t)
            if g == t:
                assert basis == []
            else:
                assert len(basis) == 1
                vec = basis[0]
                # P_{g,t} = span{g - t}
                assert set(vec) == {g, t}
                assert vec[g] == -vec[t]


def test_skew_primitive_space_sweedler():
    H = sweedler()
    labels = {t.label: i for i, t in enumerate(H.tags)}
    one, g, x = labels["1"], labels["g(1)"], labels["x1#1"]
    basis = skew_primitive_space(H, g, one)
    assert len(basis) == 2
    # contains x and 1 - g
    found_x = any(set(v) == {x} for v in basis)
    found_1mg = any(set(v) == {one, g} and v[one] == -v[g] for v in basis)
    assert found_x and found_1mg


def test_skew_primitive_space_enveloping_primitives():
    U = enveloping_truncated(torus_lie([[1]]), 3)
    basis = skew_primitive_space(U, U.unit, U.unit)
    assert any(set(v) == {1} for v in basis)  # d1 is primitive


def test_skew_primitive_requires_grouplikes():
    H = sweedler()
    labels = {t.label: i for i, t in enumerate(H.tags)}
    with pytest.raises(NotGrouplikeError):
        skew_primitive_space(H, labels["x1#1"], 0)


def test_skew_primitive_stable_under_larger_cap():
    small = zeta4_bosonization(3)
    large = zeta4_bosonization(5)
    labels_small = {t.label: i for i, t in enumerate(small.tags)}
    labels_large = {t.label: i for i, t in enumerate(large.tags)}
    g_s, g_l = labels_small["g(1)"], labels_large["g(1)"]
    basis_small = skew_primitive_space(small, g_s, labels_small["1"])
    basis_large = skew_primitive_space(large, g_l, labels_large["1"])
    rendered_small = sorted(
        small.render_vec(v) for v in basis_small
    )
    rendered_large = sorted(
        large.render_vec(v) for v in basis_large
    )
    assert rendered_small == rendered_large


def test_serialization_round_trip():
    H = solve_antipode(sweedler())
    data = to_json_dict(H)
    H2 = from_json_dict(data)
    assert to_json_dict(H2) == data
    assert verify_hopf(H2).passed


def test_serialization_rejects_foreign_data():
    with pytest.raises(ValueError):
        from_json_dict({"format": "something-else"})
