"""Finite-dimensional Lie algebras over the rationals with designated (q, qbar).

Used two ways: to realize the rank-one extensions of the extension module, and
as an independent oracle - classical matrix algebras graded by a root system,
on which the chain computations run by exact Gaussian elimination with no
knowledge of roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import InternalInconsistency
from .linalg import SpanSolver, Subspace, Vector, nullspace
from .parabolic import ParabolicCRAlgebra

Sparse = dict[int, Fraction]
Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class SubspaceChainReport:
    """Stabilized descending chain of subspaces and the order read from it."""

    chain: tuple[Subspace, ...]
    order: object  # int or chains.INFINITE
    stabilized_at: int
    limit: Subspace


class ExactLieAlgebra:
    """Structure constants over Q with two designated subspaces q and qbar."""

    def __init__(self, labels: Sequence[str],
                 brackets: dict[tuple[int, int], Sparse],
                 q_vectors: Sequence[Vector],
                 qbar_vectors: Sequence[Vector],
                 validate: bool = True):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self._table: list[list[Sparse | None]] = [[None] * self.dim
                                                  for _ in range(self.dim)]
        for (i, j), entry in brackets.items():
            cleaned = {k: Fraction(v) for k, v in entry.items() if v != 0}
            self._table[i][j] = cleaned or None
            if i != j:
                self._table[j][i] = {k: -v for k, v in cleaned.items()} or None
        self.q = Subspace.spanned_by(q_vectors, self.dim)
        self.qbar = Subspace.spanned_by(qbar_vectors, self.dim)
        if validate:
            self._validate()

    # -- brackets --------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Sparse:
        return self._table[i][j] or {}

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            row = self._table[i]
            for j, b in enumerate(v):
                if b == 0:
                    continue
                entry = row[j]
                if entry:
                    ab = a * b
                    for k, c in entry.items():
                        out[k] += ab * c
        return tuple(out)

    # -- validation --------------------------------------------------------------

    def _validate(self) -> None:
        n = self.dim
        for i in range(n):
            if self._table[i][i] is not None:
                raise InternalInconsistency(f"[{self.labels[i]}, itself] != 0")
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    acc: Sparse = {}
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self._table[b][c]
                        if not inner:
                            continue
                        for m, coef in inner.items():
                            entry = self._table[a][m]
                            if entry:
                                for t, c2 in entry.items():
                                    acc[t] = acc.get(t, Fraction(0)) + coef * c2
                    if any(x != 0 for x in acc.values()):
                        raise InternalInconsistency(
                            f"Jacobi identity fails on basis triple ({i}, {j}, {k})")
        for name, space in (("q", self.q), ("qbar", self.qbar)):
            rows = space.rows
            for a in rows:
                for b in rows:
                    if not space.contains(self.bracket(a, b)):
                        raise InternalInconsistency(f"{name} is not bracket-closed")


# -- generic chains -------------------------------------------------------------


def _chain_order(chain: list[Subspace], target: Subspace) -> object:
    from .chains import INFINITE

    if chain[0] == target:
        return 0
    for p, term in enumerate(chain):
        if term == target:
            return p
    return INFINITE


def _constrained_step(alg: ExactLieAlgebra, cur: Subspace,
                      movers: Subspace, landing: Subspace) -> Subspace:
    """{Z in cur | [Z, b] in landing for every spanning b of movers}."""
    basis = cur.rows
    if not basis:
        return cur
    rows: list[list[Fraction]] = []
    for b in movers.rows:
        residuals = [landing.reduce(alg.bracket(v, b)) for v in basis]
        for c in range(alg.dim):
            row = [res[c] for res in residuals]
            if any(x != 0 for x in row):
                rows.append(row)
    if not rows:
        return cur
    vectors = []
    for coeffs in nullspace(rows, len(basis)):
        v = [Fraction(0)] * alg.dim
        for i, x in enumerate(coeffs):
            if x != 0:
                for c in range(alg.dim):
                    v[c] += x * basis[i][c]
        vectors.append(tuple(v))
    return Subspace.spanned_by(vectors, alg.dim)


def _run_subspace_chain(start: Subspace,
                        step: Callable[[Subspace], Subspace],
                        target: Subspace) -> SubspaceChainReport:
    chain = [start]
    while True:
        nxt = step(chain[-1])
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return SubspaceChainReport(chain=tuple(chain),
                               order=_chain_order(chain, target),
                               stabilized_at=len(chain) - 1,
                               limit=chain[-1])


def generic_levi_chain(alg: ExactLieAlgebra) -> SubspaceChainReport:
    """Subspace version of the Levi chain, solved by exact elimination."""
    target = alg.q.intersect(alg.qbar)

    def step(cur: Subspace) -> Subspace:
        return _constrained_step(alg, cur, alg.qbar, cur.sum(alg.qbar))

    return _run_subspace_chain(alg.q, step, target)


def generic_contact_chain(alg: ExactLieAlgebra) -> SubspaceChainReport:
    """Subspace version of the contact chain inside q + qbar."""
    target = alg.q.intersect(alg.qbar)
    h = alg.q.sum(alg.qbar)

    def step(cur: Subspace) -> Subspace:
        return _constrained_step(alg, cur, h, cur)

    return _run_subspace_chain(h, step, target)


# -- classical matrix realizations ------------------------------------------------


def _mat_zero(n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(n)]


def _mat_unit(n: int, a: int, b: int) -> Matrix:
    m = _mat_zero(n)
    m[a][b] = Fraction(1)
    return m


def _matmul(x: Matrix, y: Matrix) -> Matrix:
    n = len(x)
    out = _mat_zero(n)
    for i in range(n):
        xi = x[i]
        for k in range(n):
            c = xi[k]
            if c != 0:
                yk = y[k]
                row = out[i]
                for j in range(n):
                    if yk[j] != 0:
                        row[j] += c * yk[j]
    return out


def _commutator(x: Matrix, y: Matrix) -> Matrix:
    xy = _matmul(x, y)
    yx = _matmul(y, x)
    return [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(xy, yx)]


def _flatten(m: Matrix) -> Vector:
    return tuple(x for row in m for x in row)


def _form_condition(form: Matrix, x: Matrix) -> Matrix:
    """X^T F + F X; zero exactly on the algebra preserving the form."""
    n = len(form)
    xt = [[x[j][i] for j in range(n)] for i in range(n)]
    left = _matmul(xt, form)
    right = _matmul(form, x)
    return [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(left, right)]


def _solve_root_space(form: Matrix, positions: list[tuple[int, int]]) -> Matrix:
    """The 1-dimensional space at the given entries inside the form's algebra."""
    n = len(form)
    images = [_flatten(_form_condition(form, _mat_unit(n, a, b)))
              for a, b in positions]
    rows = [[images[c][e] for c in range(len(positions))] for e in range(n * n)]
    kernel = nullspace(rows, len(positions))
    if len(kernel) != 1:
        raise InternalInconsistency(
            f"root space at {positions} has dimension {len(kernel)}")
    m = _mat_zero(n)
    for (a, b), coef in zip(positions, kernel[0]):
        m[a][b] = coef
    return m


def _matrix_realization(kind: str, rank: int):
    """Matrix size, Cartan matrices, and a map from root coordinates to matrices."""
    if kind == "A":
        n = rank + 1
        cartan = []
        for i in range(rank):
            m = _mat_zero(n)
            m[i][i] = Fraction(1)
            m[i + 1][i + 1] = Fraction(-1)
            cartan.append(m)

        def root_vector(euclid: Vector) -> Matrix:
            i = euclid.index(Fraction(1))
            j = euclid.index(Fraction(-1))
            return _mat_unit(n, i, j)

        return n, cartan, root_vector

    if kind in ("B", "C", "D"):
        n = 2 * rank + 1 if kind == "B" else 2 * rank
        form = _mat_zero(n)
        for i in range(n):
            form[i][n - 1 - i] = Fraction(-1 if (kind == "C" and i >= rank) else 1)

        def eps(a: int) -> dict[int, int]:
            if a < rank:
                return {a: 1}
            if a >= n - rank:
                return {n - 1 - a: -1}
            return {}

        cartan = []
        for i in range(rank):
            m = _mat_zero(n)
            m[i][i] = Fraction(1)
            m[n - 1 - i][n - 1 - i] = Fraction(-1)
            cartan.append(m)

        def root_vector(euclid: Vector) -> Matrix:
            target = {i: x for i, x in enumerate(euclid) if x != 0}
            positions = []
            for a in range(n):
                for b in range(n):
                    if a == b:
                        continue
                    w: dict[int, Fraction] = {}
                    for i, c in eps(a).items():
                        w[i] = w.get(i, Fraction(0)) + c
                    for i, c in eps(b).items():
                        w[i] = w.get(i, Fraction(0)) - c
                    if {i: c for i, c in w.items() if c != 0} == target:
                        positions.append((a, b))
            return _solve_root_space(form, positions)

        return n, cartan, root_vector

    raise ValueError(f"no matrix realization for type {kind}")


def root_graded_algebra(p: ParabolicCRAlgebra, validate: bool = True) -> ExactLieAlgebra:
    """The classical matrix algebra graded by p's root system, with q and qbar
    spanned by the Cartan part plus the root vectors of Q and its conjugate.

    Supports single-factor systems of types A, B, C, D; this is the oracle
    side, so the construction shares nothing with the root-level chains.
    """
    rs = p.rs
    if len(rs.factors) != 1:
        raise ValueError("matrix oracle supports single-factor systems only")
    kind, rank = rs.factors[0]
    n, cartan, root_vector = _matrix_realization(kind, rank)
    matrices = [*cartan, *(root_vector(r.euclid) for r in rs.roots)]
    labels = [f"h{i + 1}" for i in range(rank)] + [str(r) for r in rs.roots]
    solver = SpanSolver([_flatten(m) for m in matrices])
    brackets: dict[tuple[int, int], Sparse] = {}
    for i in range(len(matrices)):
        for j in range(i + 1, len(matrices)):
            coeffs = solver.express(_flatten(_commutator(matrices[i], matrices[j])))
            if coeffs is None:
                raise InternalInconsistency("bracket escaped the algebra")
            entry = {k: c for k, c in enumerate(coeffs) if c != 0}
            if entry:
                brackets[(i, j)] = entry
    dim = len(matrices)

    def unit(i: int) -> Vector:
        return tuple(Fraction(1 if c == i else 0) for c in range(dim))

    q_vectors = [unit(i) for i in range(rank)]
    q_vectors += [unit(rank + i) for i in sorted(p.Q)]
    qbar_vectors = [unit(i) for i in range(rank)]
    qbar_vectors += [unit(rank + i) for i in sorted(p.Qbar)]
    return ExactLieAlgebra(labels, brackets, q_vectors, qbar_vectors,
                           validate=validate)
