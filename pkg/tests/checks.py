"""Invariant checks shared by the module tests and the acceptance suite.

Each check raises AssertionError on the first violation.
"""

import random

from ccgrowth.coxeter import element_mul, project_to_finite
from ccgrowth.growth import ball_enumerate, commutator
from ccgrowth.linalg import adapted_basis_full, hermite_normal_form, solve
from ccgrowth.movement import move_set
from ccgrowth.roots import build_root_system, inner, reflect

SUPPORTED = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 7)] + \
    [("C", n) for n in range(2, 7)] + [("D", n) for n in range(4, 7)] + [("G", 2)]


def random_unimodular_ops(rows, rng, steps=12):
    rows = [list(r) for r in rows]
    k = len(rows)
    for _ in range(steps):
        op = rng.randrange(3)
        i, j = rng.randrange(k), rng.randrange(k)
        if op == 0:
            rows[i], rows[j] = rows[j], rows[i]
        elif op == 1:
            rows[i] = [-x for x in rows[i]]
        elif i != j:
            c = rng.randint(-3, 3)
            rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    return rows


def check_hnf_canonical(seed=0, trials=200):
    rng = random.Random(seed)
    for _ in range(trials):
        d = rng.randint(1, 4)
        k = rng.randint(1, 4)
        g1 = [[rng.randint(-5, 5) for _ in range(d)] for _ in range(k)]
        g2 = random_unimodular_ops(g1, rng)
        assert hermite_normal_form(g1, d) == hermite_normal_form(g2, d), (g1, g2)


def coords_in_basis(basis, v):
    """Rational coordinates of v in the rows of a square basis (independent of any HNF)."""
    cols = list(zip(*basis))
    sol = solve(cols, list(v))
    assert sol is not None and not sol[1]
    return sol[0]


def check_adapted_sandwich(lat, seed=0, samples=200):
    pairs, full = adapted_basis_full(lat)
    gens = [tuple(lam * x for x in b) for b, lam in pairs]
    lam_max = max(lam for _, lam in pairs)
    rng = random.Random(seed)
    for _ in range(samples):
        mu = [rng.randint(-20, 20) for _ in gens]
        h = [sum(m * g[i] for m, g in zip(mu, gens)) for i in range(lat.ambient_dim)]
        c = coords_in_basis(full, h)
        assert all(isinstance(x, int) for x in c)
        l_a = sum(abs(m) for m in mu)
        l_b = sum(abs(x) for x in c)
        assert l_a <= l_b <= lam_max * l_a, (mu, c)


def check_reflections_permute_roots(types=SUPPORTED):
    for t, n in types:
        rs = build_root_system(t, n)
        phi = set(rs.roots)
        assert len(phi) == 2 * len(rs.positive_roots)
        for a in rs.positive_roots:
            assert {reflect(rs, a, b) for b in phi} == phi
            for b in rs.simple_roots:
                rb = reflect(rs, a, b)
                assert reflect(rs, a, rb) == b
                assert inner(rs, rb, rb) == inner(rs, b, b)


def check_pi_homomorphism(group, seed=0, pairs=500, radius=5):
    ball = list(ball_enumerate(group, radius).elements)
    rng = random.Random(seed)
    for _ in range(pairs):
        g, h = rng.choice(ball), rng.choice(ball)
        assert project_to_finite(element_mul(g, h)) == element_mul(project_to_finite(g), project_to_finite(h))


def check_mov_shift(group, seed=0, samples=100):
    ball = list(ball_enumerate(group, 4).elements)
    rng = random.Random(seed)
    basis = group.translation_lattice.basis
    for _ in range(samples):
        w = rng.choice(ball)
        lam = [sum(rng.randint(-3, 3) * b[i] for b in basis) for i in range(group.rank)]
        t = group.translation(lam)
        assert move_set(element_mul(t, w)) == move_set(w).translate(lam)


def check_ball_center_invariance(group, seed=0, centers=20):
    ball3 = list(ball_enumerate(group, 3).elements)
    sizes = ball_enumerate(group, 4).counts()
    rng = random.Random(seed)
    for _ in range(centers):
        h = rng.choice(ball3)
        around = ball_enumerate(group, 4, center=h).counts()
        assert around == sizes


def check_commutator_closure(group, u_words, seed=0, samples=50):
    rng = random.Random(seed)
    basis = group.normal_lattice.basis
    d = group.normal_lattice.ambient_dim
    for word in u_words:
        u = group.word(word)
        for _ in range(samples):
            v1 = [sum(rng.randint(-4, 4) * b[i] for b in basis) for i in range(d)]
            v2 = [sum(rng.randint(-4, 4) * b[i] for b in basis) for i in range(d)]
            t1, t2 = group.translation(v1), group.translation(v2)
            lhs = group.mul(commutator(group, t1, u), commutator(group, t2, u))
            assert lhs == commutator(group, group.mul(t1, t2), u)

