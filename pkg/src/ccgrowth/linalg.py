"""Exact rational and integer linear algebra.

Vectors are plain tuples and matrices are tuples of row tuples.  Entries are
Python ints or :class:`fractions.Fraction`; a fraction with denominator one is
always stored as an int so that equal values hash equally no matter which
route produced them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]
QVector = tuple
QMatrix = tuple

__all__ = [
    "Rational",
    "IntLattice",
    "canon",
    "qvector",
    "qmatrix",
    "identity_matrix",
    "mat_mul",
    "mat_vec",
    "mat_sub",
    "mat_inverse",
    "transpose",
    "rref",
    "matrix_rank",
    "solve",
    "in_span",
    "span_basis",
    "hermite_normal_form",
    "lattice_contains",
    "lattice_reduce",
    "lattice_coordinates",
    "adapted_basis",
    "adapted_basis_full",
]


def canon(x: Rational) -> Rational:
    """Return ``x`` as an int when it is integral, else as a reduced Fraction."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    return x


def qvector(xs: Iterable) -> QVector:
    return tuple(canon(Fraction(x) if not isinstance(x, int) else x) for x in xs)


def qmatrix(rows: Iterable[Iterable]) -> QMatrix:
    m = tuple(qvector(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("ragged matrix: rows have different lengths")
    return m


def identity_matrix(d: int) -> QMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def transpose(m: Sequence[Sequence]) -> QMatrix:
    return tuple(zip(*m))


def mat_mul(a: QMatrix, b: QMatrix) -> QMatrix:
    if a and len(a[0]) != len(b):
        raise ValueError(f"dimension mismatch: {len(a[0])} columns vs {len(b)} rows")
    bt = tuple(zip(*b))
    return tuple(tuple(canon(sum(x * y for x, y in zip(row, col))) for col in bt) for row in a)


def mat_vec(a: QMatrix, v: QVector) -> QVector:
    if a and len(a[0]) != len(v):
        raise ValueError(f"dimension mismatch: {len(a[0])} columns vs vector of length {len(v)}")
    return tuple(canon(sum(x * y for x, y in zip(row, v))) for row in a)


def mat_sub(a: QMatrix, b: QMatrix) -> QMatrix:
    return tuple(tuple(canon(x - y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_inverse(a: QMatrix) -> QMatrix:
    d = len(a)
    aug = [list(a[i]) + [int(i == j) for j in range(d)] for i in range(d)]
    rows, pivots = rref(aug)
    if pivots[:d] != list(range(d)) or len(rows) < d:
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(canon(x) for x in r[d:]) for r in rows)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q.

    Returns the nonzero rows of the RREF and the list of pivot columns.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def matrix_rank(m: Sequence[Sequence]) -> int:
    """Rank over the rationals.  The empty matrix has rank 0."""
    return len(rref(m)[1])


def span_basis(vectors: Sequence[Sequence]) -> QMatrix:
    """A canonical basis (the RREF rows) of the span of ``vectors``."""
    rows, _ = rref(vectors)
    return tuple(tuple(canon(x) for x in r) for r in rows)


def in_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return matrix_rank(list(basis) + [v]) == matrix_rank(basis)


def solve(m: Sequence[Sequence], rhs: Sequence) -> tuple[QVector, QMatrix] | None:
    """Solve ``m x = rhs`` over Q.

    Returns ``(particular, kernel_basis)`` or None when the system is
    inconsistent.  The particular solution sets every free variable to zero.
    """
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    aug = [list(m[i]) + [rhs[i]] for i in range(n_rows)]
    rows, pivots = rref(aug)
    if n_cols in pivots:
        return None
    x = [Fraction(0)] * n_cols
    for row, c in zip(rows, pivots):
        x[c] = row[n_cols]
    free = [c for c in range(n_cols) if c not in pivots]
    kernel = []
    for f in free:
        k = [Fraction(0)] * n_cols
        k[f] = Fraction(1)
        for row, c in zip(rows, pivots):
            k[c] = -row[f]
        kernel.append(tuple(canon(v) for v in k))
    return tuple(canon(v) for v in x), tuple(kernel)


# ---------------------------------------------------------------------------
# integer lattices


@dataclass(frozen=True)
class IntLattice:
    """A subgroup of Z^d stored by its row-style Hermite normal form.

    Two instances compare equal exactly when they describe the same subgroup.
    Construct through :func:`hermite_normal_form`; the constructor trusts its
    input.
    """

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(row) if x) for row in self.basis]

    def __contains__(self, v) -> bool:
        return lattice_contains(self, v)


def hermite_normal_form(rows: Iterable[Sequence[int]], ambient_dim: int) -> IntLattice:
    """Row-style HNF of the lattice generated by ``rows``.

    Pivots are positive, each pivot is strictly right of the one above, and
    entries above a pivot lie in ``[0, pivot)``.  Zero rows are dropped.
    """
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != ambient_dim:
            raise ValueError(f"row {r} does not have length {ambient_dim}")
        if any(not isinstance(x, int) for x in r):
            raise TypeError(f"row {r} has non-integer entries")
    basis: list[list[int]] = []
    for c in range(ambient_dim):
        live = [r for r in m if r[c] != 0]
        if not live:
            continue
        rest = [r for r in m if r[c] == 0]
        # Euclid on column c until a single row carries a nonzero entry
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[c] // p[c]
                r = [x - q * y for x, y in zip(r, p)]
                if r[c] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        p = live[0]
        if p[c] < 0:
            p = [-x for x in p]
        basis.append(p)
        m = [r for r in rest if any(r)]
    # reduce entries above each pivot into [0, pivot)
    for i, row in enumerate(basis):
        c = next(j for j, x in enumerate(row) if x)
        for k in range(i):
            q = basis[k][c] // row[c]
            if q:
                basis[k] = [x - q * y for x, y in zip(basis[k], row)]
    return IntLattice(ambient_dim, tuple(tuple(r) for r in basis))


def lattice_reduce(lat: IntLattice, v: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative of the coset ``v + lat``.

    Pivot coordinates land in ``[0, pivot)``; two vectors reduce to the same
    tuple iff their difference lies in ``lat``.
    """
    if len(v) != lat.ambient_dim:
        raise ValueError("vector length does not match lattice dimension")
    r = list(v)
    for row in lat.basis:
        c = next(j for j, x in enumerate(row) if x)
        q = r[c] // row[c]
        if q:
            r = [x - q * y for x, y in zip(r, row)]
    return tuple(r)


def lattice_contains(lat: IntLattice, v: Sequence[int]) -> bool:
    """Exact membership by back-substitution against the HNF basis."""
    if len(v) != lat.ambient_dim:
        raise ValueError("vector length does not match lattice dimension")
    if any(isinstance(x, Fraction) for x in v):
        return False
    r = list(v)
    for row in lat.basis:
        c = next(j for j, x in enumerate(row) if x)
        if r[c] % row[c]:
            return False
        q = r[c] // row[c]
        if q:
            r = [x - q * y for x, y in zip(r, row)]
    return not any(r)


def lattice_coordinates(lat: IntLattice, v: Sequence[int]) -> tuple[int, ...]:
    """Integer coefficients of ``v`` in the HNF basis; ValueError if ``v`` is not in ``lat``."""
    r = list(v)
    coeffs = []
    for row in lat.basis:
        c = next(j for j, x in enumerate(row) if x)
        if not isinstance(r[c], int) or r[c] % row[c]:
            raise ValueError(f"{tuple(v)} is not in the lattice")
        q = r[c] // row[c]
        coeffs.append(q)
        r = [x - q * y for x, y in zip(r, row)]
    if any(r):
        raise ValueError(f"{tuple(v)} is not in the lattice")
    return tuple(coeffs)


def _diagonalize(b: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Integer diagonalization ``U B V = D`` with U, V unimodular.

    Pivots are chosen by smallest absolute value; no divisibility chain is
    enforced, so an already diagonal matrix comes back unchanged.
    """
    k, d = len(b), len(b[0])
    m = [row[:] for row in b]
    u = [[int(i == j) for j in range(k)] for i in range(k)]
    v = [[int(i == j) for j in range(d)] for i in range(d)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for mat in (m, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    for t in range(min(k, d)):
        while True:
            nz = [(abs(m[i][j]), i, j) for i in range(t, k) for j in range(t, d) if m[i][j]]
            if not nz:
                return m, u, v
            _, i, j = min(nz)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = m[t][t]
            dirty = False
            for i in range(t + 1, k):
                q = m[i][t] // p
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                dirty |= m[i][t] != 0
            for j in range(t + 1, d):
                q = m[t][j] // p
                if q:
                    for mat in (m, v):
                        for row in mat:
                            row[j] -= q * row[t]
                dirty |= m[t][j] != 0
            if not dirty:
                break
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
    return m, u, v


def _unimodular_inverse(v: list[list[int]]) -> list[list[int]]:
    d = len(v)
    sol = [solve(v, [int(i == j) for i in range(d)]) for j in range(d)]
    cols = [s[0] for s in sol]
    inv = [[cols[j][i] for j in range(d)] for i in range(d)]
    if any(isinstance(x, Fraction) for row in inv for x in row):
        raise ArithmeticError("transform is not unimodular")
    return inv


def adapted_basis(lat: IntLattice) -> list[tuple[tuple[int, ...], int]]:
    """Pairs ``(b_j, lambda_j)`` with ``{lambda_j * b_j}`` a basis of ``lat``.

    The ``b_j`` are primitive and extend to a basis of Z^d (see
    :func:`adapted_basis_full`), so each ``lambda_j`` is the gcd of the coordinates
    of the generator ``lambda_j * b_j``.
    """
    return adapted_basis_full(lat)[0]


def adapted_basis_full(lat: IntLattice):
    """Like :func:`adapted_basis` but also returns the full extended basis of Z^d."""
    if lat.rank == 0:
        raise ValueError("the trivial lattice has no basis to adapt")
    m, _u, v = _diagonalize([list(r) for r in lat.basis])
    vinv = _unimodular_inverse(v)
    pairs = [(tuple(vinv[j]), m[j][j]) for j in range(lat.rank)]
    return pairs, [tuple(r) for r in vinv]
