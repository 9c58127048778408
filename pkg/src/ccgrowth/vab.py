"""Virtually abelian groups given as extensions of Z^d by a finite group.

An element is ``(vec, rep)`` standing for ``t^vec * rep``, where ``rep`` is a
coset representative label.  Multiplication uses the conjugation action of the
representatives on Z^d together with a cocycle:

    (v, p)(w, q) = (v + M_p w + c(p, q), p*q)

Split extensions have a zero cocycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Hashable, Sequence

from .linalg import IntLattice, hermite_normal_form, mat_inverse, mat_vec

__all__ = [
    "VabElement",
    "VabGroup",
    "build_sign_flip_group",
    "build_klein_bottle",
    "build_free_abelian",
]


@dataclass(frozen=True)
class VabElement:
    vec: tuple[int, ...]
    rep: Hashable


class VabGroup:
    """Finite extension ``Z^d . F`` with explicit action matrices and cocycle."""

    kind = "vab"

    def __init__(self, name: str, lattice_rank: int, reps: Sequence[Hashable],
                 rep_mul: Callable[[Hashable, Hashable], Hashable],
                 action: dict, cocycle: Callable[[Hashable, Hashable], tuple[int, ...]],
                 generators: dict[str, VabElement]):
        self.name = name
        self.lattice_rank = lattice_rank
        self.reps = list(reps)
        self._rep_mul = rep_mul
        self._action = action
        self._cocycle = cocycle
        self.generators = generators
        self.identity = VabElement((0,) * lattice_rank, self.reps[0])
        self.normal_lattice: IntLattice = hermite_normal_form(
            [tuple(int(i == j) for j in range(lattice_rank)) for i in range(lattice_rank)], lattice_rank)
        self._inv_cache: dict[VabElement, VabElement] = {}

    def __repr__(self) -> str:
        return f"VabGroup({self.name})"

    def mul(self, g: VabElement, h: VabElement) -> VabElement:
        m = self._action[g.rep]
        c = self._cocycle(g.rep, h.rep)
        mw = mat_vec(m, h.vec)
        return VabElement(tuple(a + b + x for a, b, x in zip(g.vec, mw, c)), self._rep_mul(g.rep, h.rep))

    def inv(self, g: VabElement) -> VabElement:
        # the finite quotient is small: find the inverse rep, then solve for vec
        hit = self._inv_cache.get(g)
        if hit is not None:
            return hit
        for q in self.reps:
            if self._rep_mul(g.rep, q) == self.identity.rep:
                # g * (w, q) = (v + M_p w + c(p,q), 1) = 1  =>  w = -M_p^-1 (v + c)
                c = self._cocycle(g.rep, q)
                target = tuple(-(a + b) for a, b in zip(g.vec, c))
                w = mat_vec(_int_inverse(self._action[g.rep]), target)
                out = VabElement(tuple(w), q)
                self._inv_cache[g] = out
                return out
        raise ArithmeticError(f"{g.rep!r} has no inverse among the representatives")

    def word(self, names: Sequence[str]) -> VabElement:
        g = self.identity
        for n in names:
            g = self.mul(g, self.generators[n])
        return g

    def element(self, vec: Sequence[int], rep: Hashable | None = None) -> VabElement:
        return VabElement(tuple(vec), self.identity.rep if rep is None else rep)

    # interface shared with AffineCoxeterGroup -------------------------------

    def coset_reps(self) -> list[VabElement]:
        return [VabElement(self.identity.vec, r) for r in self.reps]

    def split(self, g: VabElement) -> tuple[tuple[int, ...], VabElement]:
        return g.vec, VabElement(self.identity.vec, g.rep)

    def action(self, g: VabElement):
        return self._action[g.rep]

    def translation(self, v: Sequence[int]) -> VabElement:
        return VabElement(tuple(v), self.identity.rep)

    def is_translation(self, g: VabElement) -> bool:
        return g.rep == self.identity.rep

    def check_cocycle(self) -> bool:
        """Associativity of the extension on all triples of representatives."""
        zero = self.identity.vec
        els = [VabElement(zero, r) for r in self.reps]
        return all(self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                   for a, b, c in product(els, repeat=3))


def _int_inverse(m):
    inv = mat_inverse(m)
    if any(not isinstance(x, int) for row in inv for x in row):
        raise ArithmeticError("action matrix is not invertible over Z")
    return inv


def _zero_cocycle(d):
    zero = (0,) * d
    return lambda p, q: zero


def build_sign_flip_group(d: int) -> VabGroup:
    """``Z^d x| (C2)^d`` where the i-th involution negates the i-th coordinate.

    Representatives are 0/1 tuples ``eps``; ``(k, eps)`` is
    ``t1^k1 ... td^kd s1^eps1 ... sd^epsd``.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    reps = list(product((0, 1), repeat=d))
    action = {
        eps: tuple(tuple((-1 if eps[i] else 1) if i == j else 0 for j in range(d)) for i in range(d))
        for eps in reps
    }
    zero = (0,) * d
    gens = {}
    for i in range(d):
        e = tuple(int(i == j) for j in range(d))
        gens[f"t{i + 1}"] = VabElement(e, zero)
        gens[f"t{i + 1}^-1"] = VabElement(tuple(-x for x in e), zero)
    for i in range(d):
        gens[f"s{i + 1}"] = VabElement(zero, tuple(int(i == j) for j in range(d)))
    return VabGroup(
        name=f"signflip:d={d}",
        lattice_rank=d,
        reps=reps,
        rep_mul=lambda p, q: tuple(a ^ b for a, b in zip(p, q)),
        action=action,
        cocycle=_zero_cocycle(d),
        generators=gens,
    )


def build_klein_bottle() -> VabGroup:
    """Fundamental group of the Klein bottle as an index-2 extension of Z^2.

    Lattice coordinates ``(x, y)`` stand for ``a^x b^(2y)``; representatives
    are ``0`` (for 1) and ``1`` (for b).  Conjugation by ``b`` inverts ``a``
    and fixes ``b^2``, and ``b * b`` lands on the lattice vector ``(0, 1)``.
    """
    action = {0: ((1, 0), (0, 1)), 1: ((-1, 0), (0, 1))}

    def cocycle(p, q):
        return (0, 1) if p == 1 and q == 1 else (0, 0)

    gens = {
        "a": VabElement((1, 0), 0),
        "a^-1": VabElement((-1, 0), 0),
        "b": VabElement((0, 0), 1),
        "b^-1": VabElement((0, -1), 1),
    }
    return VabGroup(
        name="klein",
        lattice_rank=2,
        reps=[0, 1],
        rep_mul=lambda p, q: p ^ q,
        action=action,
        cocycle=cocycle,
        generators=gens,
    )


def build_free_abelian(r: int) -> VabGroup:
    """Z^r with its standard generators (trivial finite part)."""
    if r < 1:
        raise ValueError("r must be at least 1")
    gens = {}
    for i in range(r):
        e = tuple(int(i == j) for j in range(r))
        gens[f"t{i + 1}"] = VabElement(e, 0)
        gens[f"t{i + 1}^-1"] = VabElement(tuple(-x for x in e), 0)
    ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    return VabGroup(
        name=f"Z^{r}",
        lattice_rank=r,
        reps=[0],
        rep_mul=lambda p, q: 0,
        action={0: ident},
        cocycle=_zero_cocycle(r),
        generators=gens,
    )
