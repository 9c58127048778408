import random

import pytest

from ccgrowth.coxeter import element_inv, element_mul, project_to_finite, reflection, translation_element
from ccgrowth.growth import ball_enumerate
from ccgrowth.linalg import matrix_rank
from ccgrowth.movement import (
    AffineSubspace,
    ReflectionNotFound,
    dimension_profile,
    fix_set,
    is_elliptic,
    move_set,
    reflection_factorization_oracle,
    reflection_length,
    reflection_length_oracle,
    root_dimension,
    translation_elliptic_factorisation,
)

from checks import check_mov_shift

# Example naming in affine A2: r = s0, s = s1, t = s2


def test_move_set_examples(a2):
    mov = move_set(a2.identity)
    assert mov.dim == 0 and mov.representative == (0, 0)
    assert move_set(a2.word(["s1", "s2"])).dim == 2
    lam = move_set(translation_element((3, -1)))
    assert lam.dim == 0 and lam.representative == (3, -1)


def test_fix_set_examples(a2):
    assert fix_set(a2.identity).dim == 2
    rs = a2.word(["s0", "s1"])
    fixed = fix_set(rs)
    assert not fixed.empty and fixed.dim == 0
    x = fixed.representative
    # the point lies on H_{alpha_r,1} and H_{alpha_s,0}
    assert a2.generators["s0"](x) == tuple(x)
    assert a2.generators["s1"](x) == tuple(x)
    assert fix_set(translation_element((1, 0))).empty


def test_affine_subspace_equality():
    a = AffineSubspace(((1, 0),), (0, 5), 2)
    b = AffineSubspace(((2, 0),), (7, 5), 2)
    c = AffineSubspace(((1, 0),), (0, 4), 2)
    assert a == b and a != c
    assert AffineSubspace((), None, 2) == AffineSubspace((), None, 2)
    assert a != AffineSubspace((), None, 2)


def test_is_elliptic_examples(a2):
    for w in a2.finite_part:
        assert is_elliptic(w)
    assert not is_elliptic(a2.word(["s0", "s1", "s2", "s1"]))
    assert is_elliptic(a2.identity)


def test_root_dimension_examples(a2):
    rs = a2.root_system
    assert root_dimension(rs, AffineSubspace((), (0, 0), 2)) == 0
    assert root_dimension(rs, AffineSubspace(((1, 0),), (0, 0), 2)) == 1
    assert root_dimension(rs, AffineSubspace(((1, 2),), (0, 0), 2)) == 2
    # an affine line off the origin through a root direction spans the plane
    assert root_dimension(rs, AffineSubspace(((1, 0),), (0, 1), 2)) == 2
    with pytest.raises(ValueError):
        root_dimension(rs, AffineSubspace((), None, 2))


def test_root_dimension_in_b2():
    from ccgrowth.coxeter import build_affine_group
    rs = build_affine_group("B", 2).root_system
    # alpha_1 + alpha_2 = e1 is a root of B2; alpha_1 + 3 alpha_2 is not parallel to one
    assert root_dimension(rs, AffineSubspace(((1, 1),), (0, 0), 2)) == 1
    assert root_dimension(rs, AffineSubspace(((1, 3),), (0, 0), 2)) == 2


def test_a2_profiles(a2):
    lengths = {(): 0, ("s1",): 1, ("s2",): 1, ("s1", "s2"): 2, ("s2", "s1"): 2, ("s1", "s2", "s1"): 1}
    for word, k in lengths.items():
        p = dimension_profile(a2, a2.word(word))
        assert p.reflection_length == k
        assert p.d == p.dim - p.e and p.reflection_length == 2 * p.d + p.e


def test_translation_profile(a2):
    p = dimension_profile(a2, a2.word(["s0", "s1", "s2", "s1"]))
    assert p.e == 0 and p.d >= 1 and p.reflection_length == 2 * p.d


def test_rs_profile(a2):
    p = dimension_profile(a2, a2.word(["s0", "s1"]))
    assert is_elliptic(a2.word(["s0", "s1"]))
    assert p.dim == 2 and p.reflection_length == 2


def test_factorisation_examples(a2):
    sts = a2.word(["s1", "s2", "s1"])
    assert translation_elliptic_factorisation(a2, sts) == (a2.identity, sts)
    lam = a2.word(["s0", "s1", "s2", "s1"])
    assert translation_elliptic_factorisation(a2, lam) == (lam, a2.identity)
    rs = a2.word(["s0", "s1"])
    t, u = translation_elliptic_factorisation(a2, rs)
    assert u == project_to_finite(rs) and element_mul(t, u) == rs
    assert is_elliptic(u) and t.is_translation()


def test_oracle_examples(a2):
    assert reflection_length_oracle(a2, a2.identity, 1) == 0
    assert reflection_length_oracle(a2, a2.word(["s1", "s2", "s1"]), 1) == 1
    assert reflection_length_oracle(a2, a2.word(["s0", "s1", "s2", "s1"]), 4) == 2


def test_oracle_not_found(a2):
    far = translation_element((40, 0))
    with pytest.raises(ReflectionNotFound):
        reflection_length_oracle(a2, far, 1)


@pytest.mark.parametrize("fixture", ["a2", "b2", "g2"])
def test_profile_length_matches_oracle(fixture, request):
    group = request.getfixturevalue(fixture)
    ball = ball_enumerate(group, 6)
    for w, n in ball.elements.items():
        assert dimension_profile(group, w).reflection_length == reflection_length_oracle(group, w, max(n, 1))


@pytest.mark.parametrize("fixture", ["a2", "b2", "g2"])
def test_conjugation_invariance(fixture, request):
    group = request.getfixturevalue(fixture)
    ball = list(ball_enumerate(group, 4).elements)
    rng = random.Random(11)
    for _ in range(200):
        v, w = rng.choice(ball), rng.choice(ball)
        c = element_mul(element_mul(v, w), element_inv(v))
        assert reflection_length(group, c) == reflection_length(group, w)


@pytest.mark.parametrize("fixture", ["a2", "b2", "g2"])
def test_elliptic_triple_equivalence(fixture, request):
    group = request.getfixturevalue(fixture)
    zero = (0,) * group.rank
    for w in ball_enumerate(group, 6).elements:
        mov = move_set(w)
        a = not fix_set(w).empty
        assert a == (zero in mov) == mov.is_linear()
        assert is_elliptic(w) == a


@pytest.mark.parametrize("fixture", ["a2", "b2", "g2"])
def test_elliptic_witness_roots_independent(fixture, request):
    group = request.getfixturevalue(fixture)
    for w in ball_enumerate(group, 6).elements:
        if not is_elliptic(w):
            continue
        witness = reflection_factorization_oracle(group, w, 6)
        assert len(witness) == reflection_length(group, w)
        if witness:
            assert matrix_rank([a for a, _ in witness]) == len(witness)
        g = group.identity
        for a, j in witness:
            g = element_mul(g, reflection(group.root_system, a, j))
        assert g == w


@pytest.mark.parametrize("fixture", ["a2", "b2", "g2"])
def test_independent_roots_give_full_length(fixture, request):
    group = request.getfixturevalue(fixture)
    rs = group.root_system
    rng = random.Random(5)
    for _ in range(100):
        k = rng.randint(1, group.rank)
        roots = rng.sample(rs.positive_roots, k)
        if matrix_rank(roots) < k:
            continue
        g = group.identity
        for a in roots:
            g = element_mul(g, reflection(rs, a, rng.randint(-3, 3)))
        assert reflection_length(group, g) == k
        assert is_elliptic(g)


def test_mov_shift(a2, b2, g2):
    for group in (a2, b2, g2):
        check_mov_shift(group)
