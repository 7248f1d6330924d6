"""Exact rational linear algebra: row reduction, nullspaces, subspaces.

Everything operates on tuples of Fraction; there is no floating point
anywhere, so subspace comparisons are exact set equalities on canonical
reduced row-echelon bases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def vec(entries: Iterable) -> Vector:
    return tuple(Fraction(x) for x in entries)


def zero_vector(dim: int) -> Vector:
    return (Fraction(0),) * dim


def add_vec(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def scale_vec(c: Fraction, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def dot(a: Vector, b: Vector) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    m = [list(map(Fraction, row)) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = Fraction(1) / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return [m[r] for r in range(row)], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    """Basis of {x : A x = 0} for the matrix with the given rows."""
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis: list[Vector] = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -red[r][f]
        basis.append(tuple(x))
    return basis


def solve_in_span(vectors: Sequence[Vector], target: Vector) -> list[Fraction] | None:
    """Coefficients writing target as a combination of the vectors, or None."""
    if not vectors:
        return None if any(x != 0 for x in target) else []
    dim = len(target)
    n = len(vectors)
    # Augmented system: columns are the vectors, last column the target.
    rows = [[vectors[j][i] for j in range(n)] + [target[i]] for i in range(dim)]
    red, pivots = rref(rows)
    if n in pivots:
        return None  # target has a component outside the span
    coeffs = [Fraction(0)] * n
    for r, p in enumerate(pivots):
        coeffs[p] = red[r][n]
    return coeffs


class SpanSolver:
    """Repeatedly express vectors in a fixed basis (one elimination, many solves)."""

    def __init__(self, basis: Sequence[Vector]):
        self.basis = [vec(b) for b in basis]
        self.dim = len(self.basis[0]) if self.basis else 0
        n = len(self.basis)
        # Rows: [vector | unit coefficient row]; eliminating the vector part
        # keeps track of which combination produced each reduced row.
        rows = []
        for i, b in enumerate(self.basis):
            unit = [Fraction(0)] * n
            unit[i] = Fraction(1)
            rows.append(list(b) + unit)
        red, pivots = rref(rows)
        self._red = red
        self._pivots = [p for p in pivots if p < self.dim]

    def express(self, target: Sequence[Fraction]) -> list[Fraction] | None:
        """Coefficients over the basis, or None if target is outside the span."""
        n = len(self.basis)
        residual = list(map(Fraction, target))
        coeffs = [Fraction(0)] * n
        for r, p in enumerate(self._pivots):
            f = residual[p]
            if f == 0:
                continue
            row = self._red[r]
            for c in range(self.dim):
                residual[c] -= f * row[c]
            for c in range(n):
                coeffs[c] += f * row[self.dim + c]
        if any(x != 0 for x in residual):
            return None
        return coeffs


class Subspace:
    """A linear subspace held as a canonical reduced row-echelon basis."""

    __slots__ = ("ambient", "rows", "_pivots")

    def __init__(self, ambient: int, rows: Sequence[Sequence[Fraction]] = ()):
        red, pivots = rref(rows)
        self.ambient = ambient
        self.rows: tuple[Vector, ...] = tuple(tuple(r) for r in red)
        self._pivots: tuple[int, ...] = tuple(pivots)

    @classmethod
    def spanned_by(cls, vectors: Iterable[Sequence[Fraction]], ambient: int) -> "Subspace":
        return cls(ambient, [vec(v) for v in vectors])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Residual of v after eliminating against the basis (zero iff v is inside)."""
        out = list(map(Fraction, v))
        for row, p in zip(self.rows, self._pivots):
            f = out[p]
            if f != 0:
                for c in range(self.ambient):
                    out[c] -= f * row[c]
        return tuple(out)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked coefficient map."""
        a, b = self.rows, other.rows
        if not a or not b:
            return Subspace(self.ambient)
        # x in both spans: sum u_i a_i = sum w_j b_j; kernel over (u, w).
        n, m = len(a), len(b)
        rows = [[a[i][c] for i in range(n)] + [-b[j][c] for j in range(m)]
                for c in range(self.ambient)]
        vectors = []
        for ker in nullspace(rows, n + m):
            v = [Fraction(0)] * self.ambient
            for i in range(n):
                if ker[i] != 0:
                    for c in range(self.ambient):
                        v[c] += ker[i] * a[i][c]
            vectors.append(tuple(v))
        return Subspace(self.ambient, vectors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ambient, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"
