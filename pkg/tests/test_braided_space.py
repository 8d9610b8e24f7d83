import random

import pytest

from nicholskit.braided_space import (
    AbelianGroup,
    Character,
    DiagonalBraiding,
    YDRealization,
    biderivation_algebra,
    braiding_from_lists,
    character_from_scalars,
    close_under_bracket,
    derive_realization,
    elementary_endo,
    endo_bracket,
    endo_is_zero,
    is_yd_morphism,
    torus_action,
    torus_lie,
    validate_realization,
)
from nicholskit.errors import NotClosedError, NotRootOfUnityError
from nicholskit.scalars import ONE, CycScalar, RootOfUnity, rational, root_of_unity


def rank_one(q) -> DiagonalBraiding:
    return braiding_from_lists([[q]])


def test_derive_realization_sweedler():
    r = derive_realization(rank_one(rational(-1)))
    assert r.group.exponents == (2,)
    assert r.pairs[0][0] == (1,)
    assert r.pairs[0][1].evaluate((1,)) == rational(-1)


def test_derive_realization_zeta4():
    r = derive_realization(rank_one(root_of_unity(4, 1)))
    assert r.group.exponents == (4,)
    assert r.pairs[0][1].evaluate(r.pairs[0][0]) == root_of_unity(4, 1)


def test_derive_realization_trivial():
    b = braiding_from_lists([[1, 1], [1, 1]])
    r = derive_realization(b)
    assert r.group.exponents == (1, 1)
    assert all(chi.evaluate(g) == ONE for g, chi in r.pairs)


def test_derive_realization_rejects_non_root():
    with pytest.raises(NotRootOfUnityError):
        derive_realization(rank_one(rational(2)))


def test_validate_realization_passes_on_derived():
    rng = random.Random(3)
    for _ in range(5):
        theta = rng.choice([1, 2, 3])
        q = [[root_of_unity(rng.choice([1, 2, 3, 4, 6]), rng.randrange(12)) for _ in range(theta)] for _ in range(theta)]
        r = derive_realization(braiding_from_lists(q))
        assert validate_realization(r).passed


def test_validate_realization_catches_corruption():
    w = root_of_unity(3, 1)
    r = derive_realization(rank_one(w))
    bad_chi = Character((RootOfUnity(3, 2),))  # chi(g) = w^2 instead of w
    bad = YDRealization(r.group, ((r.pairs[0][0], bad_chi),), r.braiding)
    report = validate_realization(bad)
    assert not report.passed
    assert report.violations[0][:2] == (1, 1)


def test_validate_theta2_diagonal_minus_one():
    b = braiding_from_lists([[-1, 1], [1, -1]])
    assert validate_realization(derive_realization(b)).passed


def shared_pair_realization():
    """theta = 2, all q_ij = -1, over Z/2 with g_1 = g_2 and chi_1 = chi_2."""
    b = braiding_from_lists([[-1, -1], [-1, -1]])
    group = AbelianGroup((2,))
    chi = Character((RootOfUnity(2, 1),))
    return YDRealization(group, (((1,), chi), ((1,), chi)), b)


def test_shared_pair_realization_is_valid():
    assert validate_realization(shared_pair_realization()).passed


def test_biderivation_algebra_distinct_pairs_is_torus():
    b = braiding_from_lists([[-1, 1], [1, -1]])
    lie = biderivation_algebra(derive_realization(b))
    assert lie.dim == 2
    for m in lie.basis_maps:
        assert m[0][1].is_zero() and m[1][0].is_zero()


def test_biderivation_algebra_shared_pair_is_gl2():
    lie = biderivation_algebra(shared_pair_realization())
    assert lie.dim == 4
    assert not lie.is_abelian


def test_biderivation_algebra_rank_one():
    lie = biderivation_algebra(derive_realization(rank_one(root_of_unity(3, 1))))
    assert lie.dim == 1


def test_torus_action_basics():
    assert endo_is_zero(torus_action([0, 0]))
    ident = torus_action([1, 1])
    assert ident[0][0].is_one() and ident[1][1].is_one()
    # the torus is abelian
    br = endo_bracket(torus_action([1, 2]), torus_action([5, -3]))
    assert endo_is_zero(br)


def test_torus_inside_bd_v():
    r = shared_pair_realization()
    assert is_yd_morphism(torus_action([rational(2), rational(3)]), r)
    lie = torus_lie([[1, 0], [0, 1]])
    assert lie.is_abelian and lie.dim == 2


def test_close_under_bracket_accepts_full_gl2():
    r = shared_pair_realization()
    maps = [elementary_endo(2, i, j) for i in (1, 2) for j in (1, 2)]
    lie = close_under_bracket(maps, r)
    assert lie.dim == 4
    # [E_12, E_21] = E_11 - E_22
    coeffs = lie.bracket_coeffs(1, 2)  # maps[1] = E_12, maps[2] = E_21
    assert coeffs == {0: ONE, 3: -ONE}


def test_close_under_bracket_detects_escape():
    r = shared_pair_realization()
    with pytest.raises(NotClosedError) as err:
        close_under_bracket([elementary_endo(2, 1, 2), elementary_endo(2, 2, 1)], r)
    assert err.value.pair == (0, 1)


def test_close_under_bracket_single_torus_map():
    r = derive_realization(braiding_from_lists([[-1, 1], [1, -1]]))
    lie = close_under_bracket([torus_action([1, 7])], r)
    assert lie.dim == 1 and lie.is_abelian


def test_character_from_scalars_validates_order():
    group = AbelianGroup((2,))
    with pytest.raises(ValueError):
        character_from_scalars(group, [root_of_unity(3, 1)])


def test_group_arithmetic():
    g = AbelianGroup((2, 3))
    assert g.order == 6
    assert g.add((1, 2), (1, 2)) == (0, 1)
    assert g.neg((1, 2)) == (1, 1)
    assert len(g.elements()) == 6
    assert g.element((5, 7)) == (1, 1)
