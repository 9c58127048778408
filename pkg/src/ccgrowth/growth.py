"""Ball enumeration and conjugacy-class growth.

Works with any group object exposing ``identity``, ``generators`` (name ->
element), ``mul`` and ``inv``.  The class machinery additionally needs the
virtually abelian interface: ``normal_lattice``, ``coset_reps()``,
``split(g)``, ``action(g)`` and ``translation(v)``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb
from typing import Any, Callable, Iterable, Sequence

from .linalg import IntLattice, hermite_normal_form, lattice_contains, lattice_reduce, mat_vec

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "DegenerateSeries",
    "Ball",
    "Coset",
    "ClassDescriptor",
    "GrowthSeries",
    "ball_enumerate",
    "zr_ball_count",
    "commutator",
    "conjugacy_descriptor",
    "class_contains",
    "class_growth_series",
    "brute_force_class",
    "exact_degree",
    "estimate_degree",
    "subset_growth",
    "evaluate_word",
]

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """Ball enumeration exceeded the element budget."""


class DegenerateSeries(ValueError):
    """A growth series too short or too small for a degree estimate."""


@dataclass(frozen=True)
class Ball:
    radius: int
    elements: dict  # element -> word length
    generating_set: dict

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.elements

    def length(self, g) -> int:
        return self.elements[g]

    def counts(self) -> list[int]:
        """Cumulative sizes ``|B(m)|`` for ``m = 0..radius``."""
        sphere = [0] * (self.radius + 1)
        for n in self.elements.values():
            sphere[n] += 1
        out, acc = [], 0
        for s in sphere:
            acc += s
            out.append(acc)
        return out


def _symmetric_generators(group, generators: dict | None) -> dict:
    gens = dict(group.generators if generators is None else generators)
    present = set(gens.values())
    for name, g in list(gens.items()):
        gi = group.inv(g)
        if gi not in present:
            gens[f"{name}^-1"] = gi
            present.add(gi)
    return gens


def ball_enumerate(group, n: int, budget: int = DEFAULT_BUDGET, generators: dict | None = None,
                   center=None) -> Ball:
    """Breadth-first ball of radius ``n`` in the Cayley graph.

    With ``center`` given, lengths are distances ``l(center^-1 g)``, found by
    right-multiplying from ``center``.
    """
    if n < 0:
        raise ValueError("radius must be nonnegative")
    gens = _symmetric_generators(group, generators)
    gen_list = list(gens.values())
    start = group.identity if center is None else center
    mul = group.mul
    elements = {start: 0}
    frontier = [start]
    for depth in range(1, n + 1):
        nxt = []
        for g in frontier:
            for s in gen_list:
                h = mul(g, s)
                if h not in elements:
                    elements[h] = depth
                    nxt.append(h)
        if len(elements) > budget:
            raise BudgetExceeded(f"ball of radius {depth} exceeds the element budget of {budget}")
        frontier = nxt
    return Ball(n, elements, gens)


def zr_ball_count(r: int, n: int) -> int:
    """``|B(n)|`` in Z^r with standard generators: sum_k 2^k C(r,k) C(n,k)."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    return sum(2**k * comb(r, k) * comb(n, k) for k in range(min(r, n) + 1))


def commutator(group, x, y):
    """``x y x^-1 y^-1``."""
    return group.mul(group.mul(x, y), group.mul(group.inv(x), group.inv(y)))


def evaluate_word(group, tokens: Iterable[str]):
    g = group.identity
    for t in tokens:
        try:
            s = group.generators[t]
        except KeyError:
            raise KeyError(f"unknown generator {t!r}; expected one of {', '.join(group.generators)}") from None
        g = group.mul(g, s)
    return g


# ---------------------------------------------------------------------------
# class descriptors


@dataclass(frozen=True)
class Coset:
    """``lattice * representative``; ``offset`` is the reduced translation part."""

    lattice: IntLattice
    representative: Any
    rep_part: Any
    offset: tuple


@dataclass
class ClassDescriptor:
    cosets: list[Coset]
    base_element: Any
    group: Any = field(repr=False, compare=False)

    def __post_init__(self):
        self._by_rep: dict = {}
        for c in self.cosets:
            self._by_rep.setdefault(c.rep_part, []).append(c)

    def __contains__(self, g) -> bool:
        return class_contains(self, g)

    def find_coset(self, g) -> Coset | None:
        vec, rep = self.group.split(g)
        for c in self._by_rep.get(rep, ()):
            if lattice_contains(c.lattice, [a - b for a, b in zip(vec, c.offset)]):
                return c
        return None

    def verify_closed(self) -> bool:
        """Check that conjugating every coset by every generator stays inside."""
        grp = self.group
        for c in self.cosets:
            for s in grp.generators.values():
                si = grp.inv(s)
                img = grp.mul(grp.mul(s, c.representative), si)
                target = self.find_coset(img)
                if target is None:
                    return False
                m = grp.action(s)
                if not all(lattice_contains(target.lattice, mat_vec(m, b)) for b in c.lattice.basis):
                    return False
        return self.base_element in self


def _commutator_lattice(group, x) -> IntLattice:
    """``[H, x] = {(I - M_x) h}`` as a sublattice of the ambient Z^d."""
    m = group.action(x)
    h = group.normal_lattice
    rows = []
    for b in h.basis:
        mb = mat_vec(m, b)
        rows.append(tuple(p - q for p, q in zip(b, mb)))
    return hermite_normal_form(rows, h.ambient_dim)


def conjugacy_descriptor(group, w) -> ClassDescriptor:
    """The class of ``w`` as a union of lattice cosets, one per coset representative."""
    _, u = group.split(w)
    cosets, seen = [], set()
    for v in group.coset_reps():
        vi = group.inv(v)
        x = group.mul(group.mul(v, u), vi)
        lat = _commutator_lattice(group, group.split(x)[1])
        rep = group.mul(group.mul(v, w), vi)
        vec, rep_part = group.split(rep)
        offset = lattice_reduce(lat, vec)
        key = (rep_part, lat, offset)
        if key in seen:
            continue
        seen.add(key)
        cosets.append(Coset(lat, rep, rep_part, offset))
    return ClassDescriptor(cosets, w, group)


def class_contains(desc: ClassDescriptor, g) -> bool:
    return desc.find_coset(g) is not None


def exact_degree(desc: ClassDescriptor) -> int:
    """Growth degree of the class: the largest coset lattice rank."""
    return max(c.lattice.rank for c in desc.cosets)


# ---------------------------------------------------------------------------
# growth series


@dataclass(frozen=True)
class GrowthSeries:
    counts: tuple[int, ...]
    label: str = ""

    def __len__(self) -> int:
        return len(self.counts)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "count"])
        for n, c in enumerate(self.counts):
            w.writerow([n, c])
        return buf.getvalue()


def subset_growth(ball: Ball, predicate: Callable[[Any], bool], label: str = "") -> GrowthSeries:
    """Cumulative counts of ball elements satisfying ``predicate``."""
    sphere = [0] * (ball.radius + 1)
    for g, n in ball.elements.items():
        if predicate(g):
            sphere[n] += 1
    out, acc = [], 0
    for s in sphere:
        acc += s
        out.append(acc)
    return GrowthSeries(tuple(out), label)


def class_growth_series(group, w, N: int, budget: int = DEFAULT_BUDGET, ball: Ball | None = None,
                        desc: ClassDescriptor | None = None) -> GrowthSeries:
    """Counts of class members of length at most n, for n = 0..N."""
    if ball is None or ball.radius < N:
        ball = ball_enumerate(group, N, budget)
    desc = desc or conjugacy_descriptor(group, w)
    series = subset_growth(ball, desc.__contains__, label=f"class of {w}")
    return GrowthSeries(series.counts[: N + 1], series.label)


def brute_force_class(group, w, n: int, conjugator_radius: int, budget: int = DEFAULT_BUDGET) -> set:
    """``{v w v^-1 : v in B(conjugator_radius)}`` restricted to ``B(n)``."""
    target = ball_enumerate(group, n, budget).elements
    conj = ball_enumerate(group, conjugator_radius, budget).elements
    out = set()
    for v in conj:
        c = group.mul(group.mul(v, w), group.inv(v))
        if c in target:
            out.add(c)
    return out


def estimate_degree(series: GrowthSeries | Sequence[int], places: int = 6) -> Fraction:
    """Two-point estimate ``log2(c[N] / c[N//2])`` rounded to ``places`` decimals.

    Evaluated in decimal arithmetic so the result is reproducible bit for bit.
    """
    counts = series.counts if isinstance(series, GrowthSeries) else tuple(series)
    if len(counts) < 8:
        raise DegenerateSeries("need at least 8 entries to estimate a degree")
    N = len(counts) - 1
    hi, lo = counts[N], counts[N // 2]
    if lo <= 0:
        raise DegenerateSeries(f"counts[{N // 2}] is zero")
    if hi < 2:
        raise DegenerateSeries("series too small to estimate a degree")
    with localcontext() as ctx:
        ctx.prec = 40
        est = (Decimal(hi) / Decimal(lo)).ln() / Decimal(2).ln()
        est = est.quantize(Decimal(1).scaleb(-places))
    return Fraction(est)


def growth_json(group_name: str, word: Sequence[str], series: GrowthSeries, degree: int,
                estimate: Fraction | None, extra: dict | None = None) -> str:
    obj = {
        "schema": 1,
        "group": group_name,
        "word": list(word),
        "counts": list(series.counts),
        "exact_degree": degree,
        "estimated_degree": None if estimate is None else str(estimate),
    }
    if extra:
        obj.update(extra)
    return json.dumps(obj, indent=2) + "\n"
