"""Finite crystallographic root systems in the simple-root basis.

Every root is an integer coefficient vector over the simple roots; the inner
product is carried by the Gram matrix of the simple roots.  Long roots have
squared length 2.  Simple roots follow Bourbaki numbering:

* ``B_n``: ``alpha_n`` is the short root.
* ``C_n``: ``alpha_n`` is the long root.
* ``G_2``: ``alpha_1`` is short, ``alpha_2`` long.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .linalg import canon, matrix_rank

__all__ = [
    "UnsupportedTypeError",
    "RootSystem",
    "build_root_system",
    "inner",
    "reflect",
    "highest_root",
    "validate_crystallographic",
    "cartan_integer",
]


class UnsupportedTypeError(ValueError):
    """Raised for root system types or ranks this package does not build."""


Root = tuple  # integer coefficients in the simple-root basis


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    gram: tuple[tuple, ...]
    positive_roots: tuple[Root, ...]
    simple_roots: tuple[Root, ...] = field(init=False)

    def __post_init__(self):
        n = self.rank
        simple = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        object.__setattr__(self, "simple_roots", simple)

    @property
    def roots(self) -> tuple[Root, ...]:
        """All of Phi: positive roots followed by their negatives."""
        return self.positive_roots + tuple(tuple(-x for x in a) for a in self.positive_roots)

    @property
    def highest_root(self) -> Root:
        return highest_root(self)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    def norm2(self, a: Sequence) -> Fraction:
        return inner(self, a, a)

    def coroot(self, a: Sequence) -> tuple:
        """``2 a / <a, a>`` in simple-root coordinates."""
        n2 = self.norm2(a)
        return tuple(canon(Fraction(2 * x) / n2) for x in a)


def _gram(type_label: str, n: int) -> list[list[Fraction]]:
    g = [[Fraction(0)] * n for _ in range(n)]
    if type_label == "G":
        g[0][0], g[1][1] = Fraction(2, 3), Fraction(2)
        g[0][1] = g[1][0] = Fraction(-1)
        return g
    for i in range(n):
        g[i][i] = Fraction(2)
    for i in range(n - 1):
        g[i][i + 1] = g[i + 1][i] = Fraction(-1)
    if type_label == "B":
        # e_{n-1} - e_n against the short root e_n
        g[n - 1][n - 1] = Fraction(1)
    elif type_label == "C":
        for i in range(n - 1):
            g[i][i] = Fraction(1)
        g[n - 1][n - 1] = Fraction(2)
        for i in range(n - 2):
            g[i][i + 1] = g[i + 1][i] = Fraction(-1, 2)
        g[n - 2][n - 1] = g[n - 1][n - 2] = Fraction(-1)
    elif type_label == "D":
        g[n - 2][n - 1] = g[n - 1][n - 2] = Fraction(0)
        g[n - 3][n - 1] = g[n - 1][n - 3] = Fraction(-1)
    return g


def _check_supported(type_label: str, rank: int) -> None:
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4}
    if type_label == "G":
        if rank != 2:
            raise UnsupportedTypeError(f"type G exists only in rank 2, got G{rank}")
        return
    if type_label not in minimum:
        raise UnsupportedTypeError(f"unsupported root system type {type_label!r}")
    if rank < minimum[type_label]:
        raise UnsupportedTypeError(f"{type_label}{rank} is not a supported rank")


def inner(rs: RootSystem, a: Sequence, b: Sequence) -> Fraction:
    g = rs.gram
    return sum((a[i] * g[i][j] * b[j] for i in range(rs.rank) for j in range(rs.rank) if a[i] and b[j]),
               Fraction(0))


def cartan_integer(rs: RootSystem, beta: Sequence, alpha: Sequence) -> Fraction:
    """``2 <beta, alpha> / <alpha, alpha>`` (integral in a crystallographic system)."""
    return 2 * inner(rs, beta, alpha) / inner(rs, alpha, alpha)


def reflect(rs: RootSystem, alpha: Sequence, v: Sequence) -> tuple:
    """Reflect ``v`` in the linear hyperplane orthogonal to ``alpha``."""
    n2 = inner(rs, alpha, alpha)
    if n2 == 0:
        raise ValueError("cannot reflect in the zero vector")
    c = 2 * inner(rs, v, alpha) / n2
    return tuple(canon(x - c * a) for x, a in zip(v, alpha))


def _closure(rs_gram: RootSystem) -> tuple[Root, ...]:
    n = rs_gram.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for a in simple:
                img = reflect(rs_gram, a, beta)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    pos = [r for r in seen if all(x >= 0 for x in r)]
    return tuple(sorted(pos, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Build and validate the root system ``type_label`` of the given rank.

    Positive roots are generated by closing the simple roots under simple
    reflections and are ordered by height, then by coefficient vector.
    """
    type_label = type_label.upper()
    _check_supported(type_label, rank)
    gram = tuple(tuple(row) for row in _gram(type_label, rank))
    bare = RootSystem(type_label, rank, gram, ())
    rs = RootSystem(type_label, rank, gram, _closure(bare))
    if not validate_crystallographic(rs):
        raise AssertionError(f"constructed {rs.name} failed validation")
    return rs


def highest_root(rs: RootSystem) -> Root:
    """The positive root dominating all others coefficient-wise."""
    for cand in rs.positive_roots:
        if all(all(x >= y for x, y in zip(cand, b)) for b in rs.positive_roots):
            return cand
    raise ValueError(f"{rs.name} has no dominating positive root")


def _parallel(a: Sequence[int], b: Sequence[int]) -> bool:
    n = len(a)
    return all(a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n))


def validate_crystallographic(rs: RootSystem) -> bool:
    """Check Cartan integrality, reflection closure, reducedness and spanning."""
    phi = rs.roots
    phi_set = set(phi)
    if len(phi_set) != 2 * len(rs.positive_roots):
        return False
    n = rs.rank
    g_phi = {a: [sum(rs.gram[i][j] * a[j] for j in range(n)) for i in range(n)] for a in phi}
    norm = {a: sum(x * y for x, y in zip(a, g_phi[a])) for a in phi}
    if any(v <= 0 for v in norm.values()):
        return False
    for a in rs.positive_roots:
        ga, na = g_phi[a], norm[a]
        image = set()
        for b in phi:
            c = 2 * sum(x * y for x, y in zip(b, ga)) / na
            if c.denominator != 1:
                return False
            image.add(tuple(canon(x - c * y) for x, y in zip(b, a)))
            # reduced: the only multiples of a in Phi are +-a
            if b != a and b != tuple(-x for x in a) and _parallel(a, b):
                return False
        if image != phi_set:
            return False
    return matrix_rank(phi) == rs.rank
