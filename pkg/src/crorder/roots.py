"""Root systems of the simple Cartan types and their finite direct sums.

All coordinates are exact rationals (denominators divide 2, which covers the
half-sum roots of E and F types), so membership questions are exact set
lookups.  Simple bases follow the Bourbaki conventions; the G2 basis is the
isometric copy {e1-e2, 2e2-e1-e3} inside the standard 3-coordinate
realization, which keeps the short/long pattern of the Bourbaki plate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import Vector, solve_in_span, vec

HALF = Fraction(1, 2)

#: Valid rank ranges per type.  B/C start at 2: the degenerate low ranks
#: coincide with A-type systems and the standard realizations below stay valid.
RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class Root:
    """A root: factor index, integer simple-basis coefficients, exact coordinates."""

    component: int
    coeffs: tuple[int, ...]
    euclid: Vector

    def __neg__(self) -> "Root":
        return Root(self.component,
                    tuple(-c for c in self.coeffs),
                    tuple(-x for x in self.euclid))

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def norm_sq(self) -> Fraction:
        return sum((x * x for x in self.euclid), Fraction(0))

    def __str__(self) -> str:
        terms = []
        for i, x in enumerate(self.euclid):
            if x == 0:
                continue
            sign = "-" if x < 0 else ("+" if terms else "")
            mag = abs(x)
            coef = "" if mag == 1 else (f"{mag}" if mag.denominator == 1 else f"({mag})")
            terms.append(f"{sign}{coef}e{i + 1}")
        body = "".join(terms)
        return body if self.component == 0 else f"[{self.component + 1}]{body}"


def _unit(dim: int, i: int, value: Fraction | int = 1) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(value)
    return v


def _sum_units(dim: int, entries: Sequence[tuple[int, Fraction | int]]) -> Vector:
    v = [Fraction(0)] * dim
    for i, c in entries:
        v[i] += Fraction(c)
    return tuple(v)


def _classical_pm_pairs(dim: int) -> list[Vector]:
    out = []
    for i, j in itertools.combinations(range(dim), 2):
        for si in (1, -1):
            for sj in (1, -1):
                out.append(_sum_units(dim, [(i, si), (j, sj)]))
    return out


def _realization(kind: str, rank: int) -> tuple[int, list[Vector], list[Vector]]:
    """Ambient dimension, all root vectors, and the simple basis vectors."""
    if kind == "A":
        dim = rank + 1
        roots = [_sum_units(dim, [(i, 1), (j, -1)])
                 for i in range(dim) for j in range(dim) if i != j]
        basis = [_sum_units(dim, [(i, 1), (i + 1, -1)]) for i in range(rank)]
        return dim, roots, basis
    if kind == "B":
        dim = rank
        roots = _classical_pm_pairs(dim)
        roots += [_sum_units(dim, [(i, s)]) for i in range(dim) for s in (1, -1)]
        basis = [_sum_units(dim, [(i, 1), (i + 1, -1)]) for i in range(rank - 1)]
        basis.append(_sum_units(dim, [(rank - 1, 1)]))
        return dim, roots, basis
    if kind == "C":
        dim = rank
        roots = _classical_pm_pairs(dim)
        roots += [_sum_units(dim, [(i, 2 * s)]) for i in range(dim) for s in (1, -1)]
        basis = [_sum_units(dim, [(i, 1), (i + 1, -1)]) for i in range(rank - 1)]
        basis.append(_sum_units(dim, [(rank - 1, 2)]))
        return dim, roots, basis
    if kind == "D":
        dim = rank
        roots = _classical_pm_pairs(dim)
        basis = [_sum_units(dim, [(i, 1), (i + 1, -1)]) for i in range(rank - 1)]
        basis.append(_sum_units(dim, [(rank - 2, 1), (rank - 1, 1)]))
        return dim, roots, basis
    if kind == "G":
        dim = 3
        roots = [_sum_units(dim, [(i, s), (j, -s)])
                 for i, j in itertools.combinations(range(3), 2) for s in (1, -1)]
        for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
            for s in (1, -1):
                roots.append(_sum_units(dim, [(i, 2 * s), (j, -s), (k, -s)]))
        basis = [_sum_units(dim, [(0, 1), (1, -1)]),
                 _sum_units(dim, [(1, 2), (0, -1), (2, -1)])]
        return dim, roots, basis
    if kind == "F":
        dim = 4
        roots = _classical_pm_pairs(dim)
        roots += [_sum_units(dim, [(i, s)]) for i in range(4) for s in (1, -1)]
        roots += [tuple(s * HALF for s in signs)
                  for signs in itertools.product((1, -1), repeat=4)]
        basis = [_sum_units(dim, [(1, 1), (2, -1)]),
                 _sum_units(dim, [(2, 1), (3, -1)]),
                 _sum_units(dim, [(3, 1)]),
                 tuple([HALF, -HALF, -HALF, -HALF])]
        return dim, roots, basis
    if kind == "E":
        dim = 8
        base = [
            vec([HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF]),
            _sum_units(dim, [(0, 1), (1, 1)]),
            _sum_units(dim, [(1, 1), (0, -1)]),
            _sum_units(dim, [(2, 1), (1, -1)]),
            _sum_units(dim, [(3, 1), (2, -1)]),
            _sum_units(dim, [(4, 1), (3, -1)]),
            _sum_units(dim, [(5, 1), (4, -1)]),
            _sum_units(dim, [(6, 1), (5, -1)]),
        ]
        if rank == 8:
            roots = _classical_pm_pairs(dim)
            for signs in itertools.product((1, -1), repeat=8):
                if signs.count(-1) % 2 == 0:
                    roots.append(tuple(s * HALF for s in signs))
            return dim, roots, base
        if rank == 7:
            roots = _classical_pm_pairs(6)
            roots = [r + (Fraction(0), Fraction(0)) for r in roots]
            roots += [_sum_units(dim, [(6, s), (7, -s)]) for s in (1, -1)]
            for signs in itertools.product((1, -1), repeat=6):
                if signs.count(-1) % 2 == 1:
                    for s7 in (1, -1):
                        v = [s * HALF for s in signs] + [-s7 * HALF, s7 * HALF]
                        roots.append(tuple(v))
            return dim, roots, base[:7]
        if rank == 6:
            roots = _classical_pm_pairs(5)
            roots = [r + (Fraction(0),) * 3 for r in roots]
            for signs in itertools.product((1, -1), repeat=5):
                if signs.count(-1) % 2 == 0:
                    for s8 in (1, -1):
                        v = [s * s8 * HALF for s in signs]
                        v += [-s8 * HALF, -s8 * HALF, s8 * HALF]
                        roots.append(tuple(v))
            return dim, roots, base[:6]
    raise ValueError(f"unsupported Cartan type {kind}{rank}")


EXPECTED_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "G": lambda n: 12,
    "F": lambda n: 48,
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
}


class RootSystem:
    """A reduced root system, possibly a direct sum of simple factors."""

    def __init__(self, factors: Sequence[tuple[str, int]],
                 basis: Sequence[Sequence[Root]],
                 roots: Sequence[Root]):
        self.factors = tuple(factors)
        self.basis = tuple(tuple(b) for b in basis)
        self.roots = tuple(sorted(roots, key=lambda r: (r.component, r.euclid)))
        self._pos = {(r.component, r.euclid): i for i, r in enumerate(self.roots)}
        self.neg = tuple(self._pos[(r.component, tuple(-x for x in r.euclid))]
                         for r in self.roots)
        self._sums: list[dict[int, int]] | None = None

    # -- basic queries -------------------------------------------------------

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, root: Root) -> bool:
        return (root.component, root.euclid) in self._pos

    def index(self, root: Root) -> int:
        try:
            return self._pos[(root.component, root.euclid)]
        except KeyError:
            raise ValueError(f"{root} is not a root of this system") from None

    def root_at(self, component: int, euclid: Sequence[Fraction]) -> Root | None:
        i = self._pos.get((component, tuple(euclid)))
        return None if i is None else self.roots[i]

    def simple_root(self, component: int, position: int) -> Root:
        return self.basis[component][position]

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(r for factor in self.basis for r in factor)

    def ambient_dims(self) -> tuple[int, ...]:
        return tuple(len(b[0].euclid) for b in self.basis)

    # -- addition ------------------------------------------------------------

    @property
    def sums(self) -> list[dict[int, int]]:
        """sums[i][j] == k whenever roots[i] + roots[j] == roots[k]."""
        if self._sums is None:
            table: list[dict[int, int]] = [dict() for _ in self.roots]
            for i, a in enumerate(self.roots):
                for j, b in enumerate(self.roots):
                    if a.component != b.component:
                        continue
                    k = self._pos.get((a.component,
                                       tuple(x + y for x, y in zip(a.euclid, b.euclid))))
                    if k is not None:
                        table[i][j] = k
            self._sums = table
        return self._sums

    def add(self, alpha: Root, beta: Root) -> Root | None:
        """alpha + beta when it is again a root, else None (zero sums included)."""
        i, j = self.index(alpha), self.index(beta)
        k = self.sums[i].get(j)
        return None if k is None else self.roots[k]

    # -- derived data ----------------------------------------------------------

    def support(self, beta: Root) -> tuple[Root, ...]:
        """Simple roots appearing with nonzero coefficient in beta."""
        self.index(beta)
        factor = self.basis[beta.component]
        return tuple(factor[i] for i, c in enumerate(beta.coeffs) if c != 0)

    def additive_neighbors(self, beta: Root) -> frozenset[Root]:
        """All roots alpha with beta + alpha again a root."""
        i = self.index(beta)
        return frozenset(self.roots[j] for j in self.sums[i])


def _expand(basis_vectors: Sequence[Vector], v: Vector) -> tuple[int, ...]:
    coeffs = solve_in_span(list(basis_vectors), v)
    if coeffs is None:
        raise ValueError("root outside the span of the simple basis")
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError("non-integral simple-basis coefficient")
        out.append(int(c))
    if not (all(c >= 0 for c in out) or all(c <= 0 for c in out)):
        raise ValueError("simple-basis coefficients change sign")
    return tuple(out)


@lru_cache(maxsize=None)
def build(kind: str, rank: int) -> RootSystem:
    """Construct the root system of the given Cartan type and rank."""
    kind = kind.upper()
    if kind not in RANK_RANGE:
        raise ValueError(f"unknown Cartan type {kind!r}")
    lo, hi = RANK_RANGE[kind]
    if rank < lo or (hi is not None and rank > hi):
        raise ValueError(f"rank {rank} out of range for type {kind}")
    dim, vectors, basis_vectors = _realization(kind, rank)
    expected = EXPECTED_COUNT[kind](rank)
    if len(set(vectors)) != expected:
        raise AssertionError(f"{kind}{rank}: got {len(set(vectors))} roots, "
                             f"expected {expected}")
    roots = [Root(0, _expand(basis_vectors, v), v) for v in set(vectors)]
    basis = [next(r for r in roots if r.euclid == b) for b in basis_vectors]
    return RootSystem([(kind, rank)], [basis], roots)


def direct_sum(systems: Sequence[RootSystem]) -> RootSystem:
    """Concatenate root systems, relabelling roots with fresh factor indices."""
    if not systems:
        raise ValueError("direct_sum of an empty list")
    if len(systems) == 1:
        return systems[0]
    factors: list[tuple[str, int]] = []
    basis: list[list[Root]] = []
    roots: list[Root] = []
    for rs in systems:
        offset = len(factors)
        factors.extend(rs.factors)
        for comp, factor_basis in enumerate(rs.basis):
            basis.append([Root(offset + comp, r.coeffs, r.euclid) for r in factor_basis])
        roots.extend(Root(offset + r.component, r.coeffs, r.euclid) for r in rs.roots)
    return RootSystem(factors, basis, roots)


def add_roots(rs: RootSystem, alpha: Root, beta: Root) -> Root | None:
    """Sum of two roots when it is a root of rs, else None."""
    return rs.add(alpha, beta)


def support(rs: RootSystem, beta: Root) -> tuple[Root, ...]:
    return rs.support(beta)


def additive_neighbors(rs: RootSystem, beta: Root) -> frozenset[Root]:
    return rs.additive_neighbors(beta)
