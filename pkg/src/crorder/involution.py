"""Conjugations of a root system: involutive isometries permuting the roots.

A conjugation is consumed as root-level data (a signed permutation of the
ambient basis, or a full rational matrix on the concatenated ambient space);
nothing here depends on which real form induced it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DoesNotPermuteRoots, NotInvolutive, NotIsometry
from .linalg import Vector, vec
from .roots import Root, RootSystem

#: (from_basis_vector, to_basis_vector, sign); basis vectors are
#: (component, position) pairs, zero-based.
SignedEntry = tuple[tuple[int, int], tuple[int, int], int]


@dataclass(frozen=True)
class CompactFixedSet:
    """Roots sent to their own negative by the conjugation."""

    roots: frozenset[Root]

    def __contains__(self, root: Root) -> bool:
        return root in self.roots

    def __iter__(self):
        return iter(sorted(self.roots, key=lambda r: (r.component, r.euclid)))

    def __len__(self) -> int:
        return len(self.roots)


class RootInvolution:
    """A validated involutive isometry of the ambient space permuting the roots."""

    def __init__(self, rs: RootSystem, matrix: Sequence[Sequence[Fraction]]):
        self.rs = rs
        self.matrix = tuple(vec(row) for row in matrix)
        self._offsets = []
        off = 0
        for d in rs.ambient_dims():
            self._offsets.append(off)
            off += d
        self.total_dim = off
        if len(self.matrix) != off or any(len(r) != off for r in self.matrix):
            raise NotInvolutive(f"map must be {off}x{off} on the ambient space")
        self._validate_matrix()
        self.perm = self._build_permutation()

    # -- construction helpers --------------------------------------------------

    def _apply(self, v: Vector) -> Vector:
        return tuple(sum((row[j] * v[j] for j in range(self.total_dim)),
                         Fraction(0)) for row in self.matrix)

    def _validate_matrix(self) -> None:
        n = self.total_dim
        m = self.matrix
        for i in range(n):
            for j in range(n):
                sq = sum((m[i][k] * m[k][j] for k in range(n)), Fraction(0))
                if sq != (1 if i == j else 0):
                    raise NotInvolutive("map composed with itself is not the identity")
        for i in range(n):
            for j in range(i, n):
                g = sum((m[k][i] * m[k][j] for k in range(n)), Fraction(0))
                if g != (1 if i == j else 0):
                    raise NotIsometry("map does not preserve the inner product")

    def _embed(self, root: Root) -> Vector:
        v = [Fraction(0)] * self.total_dim
        off = self._offsets[root.component]
        for i, x in enumerate(root.euclid):
            v[off + i] = x
        return tuple(v)

    def _extract(self, v: Vector) -> Root | None:
        dims = self.rs.ambient_dims()
        target = None
        for comp, off in enumerate(self._offsets):
            block = v[off:off + dims[comp]]
            if any(x != 0 for x in block):
                if target is not None:
                    return None  # image spread across factors
                target = (comp, block)
        if target is None:
            return None
        return self.rs.root_at(*target)

    def _build_permutation(self) -> tuple[int, ...]:
        perm = []
        for root in self.rs.roots:
            image = self._extract(self._apply(self._embed(root)))
            if image is None:
                raise DoesNotPermuteRoots(f"image of {root} is not a root")
            perm.append(self.rs.index(image))
        for i, j in enumerate(perm):
            if perm[j] != i:
                raise NotInvolutive("root permutation is not involutive")
        return tuple(perm)

    # -- queries ---------------------------------------------------------------

    def conjugate(self, beta: Root) -> Root:
        """The conjugate root sigma(beta)."""
        return self.rs.roots[self.perm[self.rs.index(beta)]]

    def conjugate_index(self, i: int) -> int:
        return self.perm[i]

    def r_bullet(self) -> CompactFixedSet:
        """Roots with sigma(beta) == -beta."""
        fixed = frozenset(self.rs.roots[i]
                          for i in range(len(self.rs.roots))
                          if self.perm[i] == self.rs.neg[i])
        return CompactFixedSet(fixed)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootInvolution):
            return NotImplemented
        return self.rs is other.rs and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((id(self.rs), self.matrix))

    def __repr__(self) -> str:
        return f"RootInvolution(dim={self.total_dim})"


def from_matrix(rs: RootSystem, rows: Sequence[Sequence[Fraction]]) -> RootInvolution:
    """Validate a full rational matrix on the concatenated ambient space."""
    return RootInvolution(rs, rows)


def from_signed_permutation(rs: RootSystem,
                            entries: Iterable[SignedEntry]) -> RootInvolution:
    """Build sigma from basis-vector assignments (from, to, sign)."""
    dims = rs.ambient_dims()
    offsets = []
    off = 0
    for d in dims:
        offsets.append(off)
        off += d
    n = off
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for (fc, fi), (tc, ti), sign in entries:
        if not (0 <= fc < len(dims) and 0 <= fi < dims[fc]):
            raise NotInvolutive(f"source basis vector ({fc}, {fi}) out of range")
        if not (0 <= tc < len(dims) and 0 <= ti < dims[tc]):
            raise NotInvolutive(f"target basis vector ({tc}, {ti}) out of range")
        if sign not in (1, -1):
            raise NotInvolutive(f"sign must be +1 or -1, got {sign}")
        matrix[offsets[tc] + ti][offsets[fc] + fi] = Fraction(sign)
    return RootInvolution(rs, matrix)


def identity(rs: RootSystem) -> RootInvolution:
    entries = [((c, i), (c, i), 1)
               for c, d in enumerate(rs.ambient_dims()) for i in range(d)]
    return from_signed_permutation(rs, entries)


def minus_identity(rs: RootSystem) -> RootInvolution:
    entries = [((c, i), (c, i), -1)
               for c, d in enumerate(rs.ambient_dims()) for i in range(d)]
    return from_signed_permutation(rs, entries)


def conjugate(inv: RootInvolution, beta: Root) -> Root:
    return inv.conjugate(beta)


def r_bullet(inv: RootInvolution) -> CompactFixedSet:
    return inv.r_bullet()


def enumerate_involutions(rs: RootSystem,
                          max_dim: int = 10) -> tuple[RootInvolution, ...]:
    """All signed-permutation involutions of the ambient basis preserving the
    root set, one representative per induced root permutation.

    The candidate space is 2^d * d! for ambient dimension d, so the harness
    refuses dimensions above max_dim.
    """
    n = sum(rs.ambient_dims())
    if n > max_dim:
        raise ValueError(f"ambient dimension {n} too large to enumerate")
    seen: dict[tuple[int, ...], RootInvolution] = {}
    for perm in itertools.permutations(range(n)):
        if any(perm[perm[i]] != i for i in range(n)):
            continue
        # Signs must match across each 2-cycle for the map to be involutive;
        # enumerate one free sign per orbit of the permutation.
        orbits = sorted({tuple(sorted((i, perm[i]))) for i in range(n)})
        for choice in itertools.product((1, -1), repeat=len(orbits)):
            matrix = [[Fraction(0)] * n for _ in range(n)]
            for orbit, s in zip(orbits, choice):
                for i in orbit:
                    matrix[perm[i]][i] = Fraction(s)
            try:
                inv = RootInvolution(rs, matrix)
            except DoesNotPermuteRoots:
                continue
            seen.setdefault(inv.perm, inv)
    return tuple(seen[key] for key in sorted(seen))
