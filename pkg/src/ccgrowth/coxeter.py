"""Affine Coxeter groups realised as exact affine isometries.

An element is a pair ``(A, b)`` acting by ``x -> A x + b`` on the simple-root
coordinates of V.  The generators are the simple reflections ``s1..sn`` and
``s0``, the reflection in the hyperplane ``<x, highest root> = 1``.  With long
roots of squared length 2 every coroot has integer simple-root coordinates, so
all linear and translation parts produced here are integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .linalg import (
    IntLattice,
    canon,
    hermite_normal_form,
    identity_matrix,
    lattice_contains,
    lattice_coordinates,
    mat_inverse,
    mat_mul,
    mat_vec,
)
from .roots import RootSystem, build_root_system

__all__ = [
    "GroupElement",
    "AffineCoxeterGroup",
    "build_affine_group",
    "element_mul",
    "element_inv",
    "project_to_finite",
    "semidirect_coords",
    "enumerate_finite_part",
    "reflection",
    "coxeter_matrix",
    "is_isometry",
    "identity_element",
    "translation_element",
]


@dataclass(frozen=True)
class GroupElement:
    linear: tuple[tuple, ...]
    trans: tuple

    @property
    def dim(self) -> int:
        return len(self.trans)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return element_mul(self, other)

    def inverse(self) -> GroupElement:
        return element_inv(self)

    def __call__(self, x: Sequence) -> tuple:
        return tuple(canon(y + b) for y, b in zip(mat_vec(self.linear, x), self.trans))

    def is_identity(self) -> bool:
        return not any(self.trans) and self.linear == identity_matrix(self.dim)

    def is_translation(self) -> bool:
        return self.linear == identity_matrix(self.dim)


def identity_element(d: int) -> GroupElement:
    return GroupElement(identity_matrix(d), (0,) * d)


def translation_element(v: Sequence) -> GroupElement:
    return GroupElement(identity_matrix(len(v)), tuple(canon(x) for x in v))


def element_mul(g: GroupElement, h: GroupElement) -> GroupElement:
    """``(A1, b1)(A2, b2) = (A1 A2, A1 b2 + b1)``."""
    if g.dim != h.dim:
        raise ValueError(f"dimension mismatch: {g.dim} vs {h.dim}")
    a1, b1 = g.linear, g.trans
    a2, b2 = h.linear, h.trans
    d = len(b1)
    # inlined for speed; entries stay int in every supported type
    lin = tuple(
        tuple(canon(sum(a1[i][k] * a2[k][j] for k in range(d))) for j in range(d))
        for i in range(d)
    )
    tr = tuple(canon(sum(a1[i][k] * b2[k] for k in range(d)) + b1[i]) for i in range(d))
    return GroupElement(lin, tr)


def element_inv(g: GroupElement) -> GroupElement:
    """``(A, b)^-1 = (A^-1, -A^-1 b)``."""
    ainv = mat_inverse(g.linear)
    return GroupElement(ainv, tuple(canon(-x) for x in mat_vec(ainv, g.trans)))


def reflection(rs: RootSystem, alpha: Sequence[int], level: int = 0) -> GroupElement:
    """The affine reflection fixing ``{x : <x, alpha> = level}`` pointwise.

    ``r(x) = x - (<x, alpha> - level) * coroot(alpha)``.
    """
    n = rs.rank
    co = rs.coroot(alpha)
    # row vector of the linear functional x -> <x, alpha>
    g_alpha = [sum(rs.gram[k][j] * alpha[j] for j in range(n)) for k in range(n)]
    lin = tuple(tuple(canon(int(i == k) - co[i] * g_alpha[k]) for k in range(n)) for i in range(n))
    return GroupElement(lin, tuple(canon(level * c) for c in co))


def project_to_finite(w: GroupElement) -> GroupElement:
    """The homomorphism onto the finite part: forget the translation."""
    return GroupElement(w.linear, (0,) * w.dim)


class AffineCoxeterGroup:
    """The affine Weyl group ``T x| W0`` of a finite crystallographic root system."""

    kind = "affine"

    def __init__(self, root_system: RootSystem):
        rs = root_system
        self.root_system = rs
        self.rank = rs.rank
        self.identity = identity_element(rs.rank)
        gens = {"s0": reflection(rs, rs.highest_root, 1)}
        for i, a in enumerate(rs.simple_roots, start=1):
            gens[f"s{i}"] = reflection(rs, a, 0)
        self.generators: dict[str, GroupElement] = gens
        coroots = [rs.coroot(a) for a in rs.simple_roots]
        self.translation_lattice: IntLattice = hermite_normal_form(coroots, rs.rank)

    def __repr__(self) -> str:
        return f"AffineCoxeterGroup({self.root_system.name})"

    @property
    def name(self) -> str:
        return f"affine:{self.root_system.name}"

    @property
    def simple_generators(self) -> dict[str, GroupElement]:
        """The finite-part generators ``s1..sn``."""
        return {k: v for k, v in self.generators.items() if k != "s0"}

    # group arithmetic -------------------------------------------------------

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return element_mul(g, h)

    def inv(self, g: GroupElement) -> GroupElement:
        return element_inv(g)

    def word(self, names: Sequence[str]) -> GroupElement:
        g = self.identity
        for n in names:
            g = element_mul(g, self.generators[n])
        return g

    def reflection(self, alpha: Sequence[int], level: int = 0) -> GroupElement:
        return reflection(self.root_system, alpha, level)

    def translation(self, v: Sequence) -> GroupElement:
        return translation_element(v)

    @cached_property
    def finite_part(self) -> list[GroupElement]:
        # cached_property may race on first access; the computation is
        # deterministic, so whichever thread stores last stores the same list
        return enumerate_finite_part(self)

    # virtually-abelian interface used by the growth engine -------------------

    @property
    def normal_lattice(self) -> IntLattice:
        return self.translation_lattice

    def coset_reps(self) -> list[GroupElement]:
        return self.finite_part

    def split(self, g: GroupElement) -> tuple[tuple, GroupElement]:
        """``g = translation(vec) * rep`` with rep in the finite part."""
        return g.trans, project_to_finite(g)

    def action(self, g: GroupElement) -> tuple[tuple, ...]:
        """Matrix of ``t_v -> g t_v g^-1`` on translation vectors."""
        return g.linear

    def is_translation(self, g: GroupElement) -> bool:
        return g.is_translation()


def build_affine_group(type_label: str, rank: int) -> AffineCoxeterGroup:
    return AffineCoxeterGroup(build_root_system(type_label, rank))


def enumerate_finite_part(group: AffineCoxeterGroup) -> list[GroupElement]:
    """Closure of the linear simple reflections, in breadth-first order."""
    gens = [project_to_finite(g) for g in group.simple_generators.values()]
    seen = {group.identity}
    order = [group.identity]
    frontier = [group.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = element_mul(g, s)
                if h not in seen:
                    seen.add(h)
                    order.append(h)
                    nxt.append(h)
        frontier = nxt
    return order


def semidirect_coords(group: AffineCoxeterGroup, w: GroupElement) -> tuple[tuple[int, ...], GroupElement]:
    """Split ``w = t u`` with ``u`` fixing the origin.

    Returns the coordinates of ``t`` in the HNF basis of the translation
    lattice together with ``u``.
    """
    u = project_to_finite(w)
    t = element_mul(w, element_inv(u))
    if not t.is_translation() or not lattice_contains(group.translation_lattice, t.trans):
        raise ValueError("element does not factor through the translation lattice")
    return lattice_coordinates(group.translation_lattice, t.trans), u


def coxeter_matrix(group: AffineCoxeterGroup, max_order: int = 12) -> dict[tuple[str, str], int | None]:
    """Orders of pairwise generator products; None marks infinite order."""
    names = list(group.generators)
    out = {}
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            p = element_mul(group.generators[a], group.generators[b])
            g = p
            order = None
            for k in range(1, max_order + 1):
                if g.is_identity():
                    order = k
                    break
                g = element_mul(g, p)
            out[(a, b)] = order
    return out


def is_isometry(rs: RootSystem, a: Sequence[Sequence]) -> bool:
    """Check ``A^T G A == G`` for the Gram matrix of ``rs``."""
    at = tuple(zip(*a))
    return mat_mul(mat_mul(at, rs.gram), a) == tuple(tuple(canon(x) for x in row) for row in rs.gram)
