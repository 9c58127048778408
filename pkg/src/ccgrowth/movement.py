"""Move-sets, fixed spaces, root dimension and reflection length.

Reflection length is computed two ways: from the dimension profile
(``2 * d + e``) and by a bounded bidirectional search over products of affine
reflections.  The two are independent and the test-suite compares them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .coxeter import AffineCoxeterGroup, GroupElement, element_inv, element_mul, project_to_finite, translation_element
from .linalg import identity_matrix, in_span, mat_sub, matrix_rank, solve, span_basis, transpose
from .roots import RootSystem

__all__ = [
    "AffineSubspace",
    "DimensionProfile",
    "ReflectionNotFound",
    "move_set",
    "fix_set",
    "is_elliptic",
    "root_dimension",
    "dimension_profile",
    "reflection_length",
    "translation_elliptic_factorisation",
    "reflection_length_oracle",
    "reflection_factorization_oracle",
    "bounded_reflections",
]


@dataclass(frozen=True, eq=False)
class AffineSubspace:
    """``representative + span(direction)``, or the empty set."""

    direction: tuple[tuple, ...]
    representative: tuple | None
    ambient_dim: int

    @property
    def empty(self) -> bool:
        return self.representative is None

    @property
    def dim(self) -> int:
        return -1 if self.empty else len(self.direction)

    def __contains__(self, p: Sequence) -> bool:
        if self.empty:
            return False
        diff = [a - b for a, b in zip(p, self.representative)]
        return in_span(self.direction, diff)

    def is_linear(self) -> bool:
        return not self.empty and in_span(self.direction, self.representative)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineSubspace):
            return NotImplemented
        if self.empty or other.empty:
            return self.empty and other.empty
        if len(self.direction) != len(other.direction):
            return False
        if not all(in_span(self.direction, v) for v in other.direction):
            return False
        return other.representative in self

    __hash__ = None

    def translate(self, v: Sequence) -> AffineSubspace:
        if self.empty:
            return self
        return AffineSubspace(self.direction, tuple(a + b for a, b in zip(self.representative, v)),
                              self.ambient_dim)

    def linear_hull(self) -> tuple[tuple, ...]:
        """Basis of span(direction, representative)."""
        return span_basis(list(self.direction) + [self.representative])


@dataclass(frozen=True)
class DimensionProfile:
    dim: int
    e: int
    d: int
    reflection_length: int


def _a_minus_i(w: GroupElement):
    return mat_sub(w.linear, identity_matrix(w.dim))


def move_set(w: GroupElement) -> AffineSubspace:
    """``{w(x) - x}`` = ``b + col(A - I)``."""
    direction = span_basis(transpose(_a_minus_i(w)))
    return AffineSubspace(direction, tuple(w.trans), w.dim)


def fix_set(w: GroupElement) -> AffineSubspace:
    """Solutions of ``(A - I) x = -b``; empty when inconsistent."""
    sol = solve(_a_minus_i(w), [-x for x in w.trans])
    if sol is None:
        return AffineSubspace((), None, w.dim)
    particular, kernel = sol
    return AffineSubspace(span_basis(kernel) if kernel else (), particular, w.dim)


def is_elliptic(w: GroupElement) -> bool:
    fixed = not fix_set(w).empty
    mov = move_set(w)
    assert fixed == (tuple(0 for _ in range(w.dim)) in mov) == mov.is_linear(), \
        "ellipticity characterisations disagree"
    return fixed


@lru_cache(maxsize=None)
def _root_dimension(rs: RootSystem, hull: tuple[tuple, ...]) -> int:
    k0 = len(hull)
    if k0 == 0:
        return 0
    roots = rs.positive_roots
    for k in range(k0, rs.rank + 1):
        for subset in combinations(roots, k):
            if matrix_rank(subset) != k:
                continue
            if matrix_rank(list(subset) + list(hull)) == k:
                return k
    raise ArithmeticError("no root space contains the target")


def root_dimension(rs: RootSystem, target: AffineSubspace) -> int:
    """Least dimension of a subspace spanned by roots that contains ``target``."""
    if target.empty:
        raise ValueError("root dimension of the empty set is undefined")
    return _root_dimension(rs, target.linear_hull())


def dimension_profile(group: AffineCoxeterGroup, w: GroupElement) -> DimensionProfile:
    rs = group.root_system
    dim = root_dimension(rs, move_set(w))
    e = root_dimension(rs, move_set(project_to_finite(w)))
    d = dim - e
    return DimensionProfile(dim, e, d, 2 * d + e)


def reflection_length(group: AffineCoxeterGroup, w: GroupElement) -> int:
    return dimension_profile(group, w).reflection_length


def translation_elliptic_factorisation(group: AffineCoxeterGroup, w: GroupElement) -> tuple[GroupElement, GroupElement]:
    """``w = t * u`` with ``u`` the origin-fixing lift of the finite part."""
    u = project_to_finite(w)
    t = element_mul(w, element_inv(u))
    assert t.is_translation()
    return translation_element(t.trans), u


# ---------------------------------------------------------------------------
# brute-force oracle


class ReflectionNotFound(LookupError):
    """The bounded reflection set does not reach the element."""


def bounded_reflections(group: AffineCoxeterGroup, radius_bound: int) -> list[tuple[tuple, int, GroupElement]]:
    """All ``(alpha, j, r_{alpha,j})`` with alpha positive and ``|j| <= radius_bound``."""
    out = []
    for a in group.root_system.positive_roots:
        for j in range(-radius_bound, radius_bound + 1):
            out.append((a, j, group.reflection(a, j)))
    return out


class _ReflectionSearch:
    """Breadth-first layers of reflection products up to half the search depth."""

    def __init__(self, group: AffineCoxeterGroup, radius_bound: int):
        self.group = group
        self.max_len = 2 * group.rank
        self.half = group.rank
        self.refl = bounded_reflections(group, radius_bound)
        ident = group.identity
        self.dist = {ident: 0}
        self.parent: dict[GroupElement, tuple[GroupElement, int]] = {}
        self.layers = [[ident]]
        for depth in range(1, self.half + 1):
            nxt = []
            for g in self.layers[-1]:
                for idx, (_, _, r) in enumerate(self.refl):
                    h = element_mul(g, r)
                    if h not in self.dist:
                        self.dist[h] = depth
                        self.parent[h] = (g, idx)
                        nxt.append(h)
            self.layers.append(nxt)

    def _word(self, g: GroupElement) -> list[int]:
        out = []
        while g in self.parent:
            g, idx = self.parent[g]
            out.append(idx)
        return out[::-1]

    def find(self, w: GroupElement) -> list[int]:
        """Indices into ``self.refl`` of a shortest factorization of ``w``."""
        if w in self.dist:
            return self._word(w)
        for a in range(1, self.max_len - self.half + 1):
            for x in self.layers[a]:
                # x is a product of a reflections; so is x^-1 (reversed word)
                y = element_mul(x, w)
                if y in self.dist:
                    return self._word(x)[::-1] + self._word(y)
        raise ReflectionNotFound(
            f"element not a product of at most {self.max_len} bounded reflections; raise radius_bound")


@lru_cache(maxsize=16)
def _search(group: AffineCoxeterGroup, radius_bound: int) -> _ReflectionSearch:
    return _ReflectionSearch(group, radius_bound)


def reflection_factorization_oracle(group: AffineCoxeterGroup, w: GroupElement,
                                    radius_bound: int) -> list[tuple[tuple, int]]:
    """A shortest factorization of ``w`` into reflections ``r_{alpha,j}``, as ``(alpha, j)`` pairs."""
    s = _search(group, radius_bound)
    return [s.refl[i][:2] for i in s.find(w)]


def reflection_length_oracle(group: AffineCoxeterGroup, w: GroupElement, radius_bound: int) -> int:
    """Reflection length by exhaustive search over bounded-level reflections."""
    return len(reflection_factorization_oracle(group, w, radius_bound))
