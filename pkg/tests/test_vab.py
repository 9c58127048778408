import random

import pytest

from ccgrowth.growth import (
    ball_enumerate,
    brute_force_class,
    class_contains,
    commutator,
    conjugacy_descriptor,
    exact_degree,
)
from ccgrowth.linalg import hermite_normal_form
from ccgrowth.vab import VabElement, build_free_abelian, build_klein_bottle, build_sign_flip_group


def _inverse_name(group, name):
    g = group.generators[name]
    gi = group.inv(g)
    return next(k for k, v in group.generators.items() if v == gi)


def _free_reduce(group, word):
    out = []
    for x in word:
        if out and _inverse_name(group, out[-1]) == x:
            out.pop()
        else:
            out.append(x)
    return out


def test_sign_flip_relations():
    g1 = build_sign_flip_group(1)
    assert g1.word(["s1", "t1", "s1"]) == g1.word(["t1^-1"])
    g2 = build_sign_flip_group(2)
    assert g2.word(["s1", "t2", "s1"]) == g2.word(["t2"])
    for d in (1, 2, 3):
        g = build_sign_flip_group(d)
        for i in range(1, d + 1):
            assert g.word([f"s{i}", f"s{i}"]) == g.identity
            assert g.word([f"s{i}", f"t{i}"]) == g.word([f"t{i}^-1", f"s{i}"])
        assert len(g.generators) == 3 * d  # t_i, t_i^-1, s_i


def test_sign_flip_rejects_bad_d():
    with pytest.raises(ValueError):
        build_sign_flip_group(0)
    with pytest.raises(ValueError):
        build_free_abelian(0)


def test_normal_form_coordinates(signflip):
    g = signflip[3]
    w = g.word(["t1", "t1", "t3^-1", "s2", "s3"])
    assert w == VabElement((2, 0, -1), (0, 1, 1))


def test_cocycles(klein, signflip):
    assert klein.check_cocycle()
    for g in signflip.values():
        assert g.check_cocycle()
    assert build_free_abelian(2).check_cocycle()


def test_klein_relations(klein):
    a, b = klein.word(["a"]), klein.word(["b"])
    assert klein.mul(klein.mul(b, a), klein.inv(b)) == klein.inv(a)
    b2 = klein.mul(b, b)
    assert klein.mul(b2, a) == klein.mul(a, b2)
    assert b2 == klein.translation((0, 1))
    assert klein.is_translation(b2) and not klein.is_translation(b)
    # [a, b] = a^2
    assert commutator(klein, a, b) == klein.mul(a, a)


def test_klein_classes_in_a_are_small(klein):
    ball = ball_enumerate(klein, 5).elements
    conj = list(ball_enumerate(klein, 4).elements)
    for h in ball:
        if not klein.is_translation(h):
            continue
        assert len(conjugacy_descriptor(klein, h).cosets) <= 2
        assert len({klein.mul(klein.mul(v, h), klein.inv(v)) for v in conj}) <= 2


def test_klein_commutator_subgroup(klein):
    b = klein.word(["b"])
    rows = []
    for x in range(-3, 4):
        for y in range(-3, 4):
            c = commutator(klein, klein.translation((x, y)), b)
            assert klein.is_translation(c)
            rows.append(c.vec)
    # <a^2> in coordinates a^x b^(2y)
    assert hermite_normal_form(rows, 2).basis == ((2, 0),)


@pytest.mark.parametrize("builder", [lambda: build_sign_flip_group(2), lambda: build_sign_flip_group(3),
                                     build_klein_bottle, lambda: build_free_abelian(2)])
def test_normal_form_matches_free_reduction(builder):
    group = builder()
    names = list(group.generators)
    rng = random.Random(7)
    for _ in range(500):
        word = [rng.choice(names) for _ in range(rng.randint(0, 10))]
        assert group.word(word) == group.word(_free_reduce(group, word))
        cut = rng.randint(0, len(word))
        left, right = group.word(word[:cut]), group.word(word[cut:])
        assert group.mul(left, right) == group.word(word)


@pytest.mark.parametrize("builder", [lambda: build_sign_flip_group(3), build_klein_bottle])
def test_associativity(builder):
    group = builder()
    els = list(ball_enumerate(group, 3).elements)
    rng = random.Random(1)
    for _ in range(500):
        x, y, z = (rng.choice(els) for _ in range(3))
        assert group.mul(group.mul(x, y), z) == group.mul(x, group.mul(y, z))
        assert group.mul(x, group.inv(x)) == group.identity


def _stable_brute_force(group, w, n):
    prev, m = None, 1
    while True:
        found = brute_force_class(group, w, n, m)
        if found == prev:
            return found
        prev, m = found, m + 1


@pytest.mark.parametrize("d", [1, 2, 3])
def test_class_of_product_of_involutions_is_coset(d):
    g = build_sign_flip_group(d)
    n = 6
    ball = ball_enumerate(g, n).elements
    for c in range(1, d + 1):
        word = [f"s{i}" for i in range(1, c + 1)]
        w = g.word(word)
        desc = conjugacy_descriptor(g, w)
        assert exact_degree(desc) == c
        coset = {x for x in ball if x.rep == w.rep and all(v % 2 == 0 for v in x.vec[:c])
                 and all(v == 0 for v in x.vec[c:])}
        assert {x for x in ball if class_contains(desc, x)} == coset
        assert _stable_brute_force(g, w, n) == coset
