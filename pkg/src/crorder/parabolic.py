"""Parabolic CR algebra data: crossed roots, grading, and the Q-partitions.

Everything is computed at root-set level; the Cartan subalgebra always sits
inside q and its conjugate, so root sets encode the subalgebras losslessly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InternalInconsistency
from .involution import RootInvolution
from .roots import Root, RootSystem


@dataclass(frozen=True, eq=False)
class ParabolicCRAlgebra:
    """A root system with a crossed set of simple roots and a conjugation.

    The index sets (over positions in rs.roots) are the working
    representation; use `roots_of` for Root-level views.
    """

    rs: RootSystem
    phi: tuple[Root, ...]
    sigma: RootInvolution
    xi_values: tuple[int, ...]
    Q: frozenset[int]
    Qr: frozenset[int]
    Qn: frozenset[int]
    Qc: frozenset[int]
    Qbar: frozenset[int]
    Qbar_c: frozenset[int]
    Q_and_Qbar: frozenset[int]
    Q_minus_Qbar: frozenset[int]
    Qc_and_Qbarc: frozenset[int]
    Qc_and_Qbar: frozenset[int]
    Qc_and_Qbarn: frozenset[int]

    def roots_of(self, indices: Iterable[int]) -> frozenset[Root]:
        return frozenset(self.rs.roots[i] for i in indices)

    def sorted_roots_of(self, indices: Iterable[int]) -> tuple[Root, ...]:
        return tuple(self.rs.roots[i] for i in sorted(indices))

    def xi_of(self, index: int) -> int:
        return self.xi_values[index]


def xi(p: ParabolicCRAlgebra, beta: Root) -> int:
    """Sum of beta's simple-basis coefficients over the crossed roots."""
    return p.xi_values[p.rs.index(beta)]


def build_pcr(rs: RootSystem, phi: Iterable[Root],
              sigma: RootInvolution) -> ParabolicCRAlgebra:
    """Assemble the cached partitions and conjugate sets for (rs, phi, sigma)."""
    if sigma.rs is not rs:
        raise ValueError("sigma was validated against a different root system")
    simple = set(rs.simple_roots)
    phi_sorted = tuple(sorted(phi, key=lambda r: (r.component, r.euclid)))
    for alpha in phi_sorted:
        if alpha not in simple:
            raise ValueError(f"{alpha} is not a simple root")
    crossed = {(a.component, rs.basis[a.component].index(a)) for a in phi_sorted}

    xi_values = []
    for root in rs.roots:
        xi_values.append(sum(root.coeffs[i] for c, i in crossed if c == root.component))

    n = len(rs.roots)
    q = frozenset(i for i in range(n) if xi_values[i] <= 0)
    qr = frozenset(i for i in q if xi_values[i] == 0)
    qn = frozenset(i for i in q if xi_values[i] < 0)
    qc = frozenset(i for i in range(n) if xi_values[i] > 0)
    qbar = frozenset(sigma.perm[i] for i in q)
    qbar_c = frozenset(range(n)) - qbar
    qbar_n = frozenset(sigma.perm[i] for i in qn)

    if not (qr.isdisjoint(qn) and (qr | qn | qc) == frozenset(range(n))):
        raise InternalInconsistency("Q-partition identities violated")
    if qc != frozenset(rs.neg[i] for i in qn):
        raise InternalInconsistency("opposite nilradical mismatch")

    return ParabolicCRAlgebra(
        rs=rs,
        phi=phi_sorted,
        sigma=sigma,
        xi_values=tuple(xi_values),
        Q=q,
        Qr=qr,
        Qn=qn,
        Qc=qc,
        Qbar=qbar,
        Qbar_c=qbar_c,
        Q_and_Qbar=q & qbar,
        Q_minus_Qbar=q - qbar,
        Qc_and_Qbarc=qc & qbar_c,
        Qc_and_Qbar=qc & qbar,
        Qc_and_Qbarn=qc & qbar_n,
    )


def cr_dim_codim(p: ParabolicCRAlgebra) -> tuple[int, int]:
    """CR dimension #(Q \\ Qbar) and CR codimension #(R \\ (Q u Qbar))."""
    return len(p.Q_minus_Qbar), len(p.rs.roots) - len(p.Q | p.Qbar)


def minimal_type_criteria(p: ParabolicCRAlgebra) -> tuple[bool, bool, bool]:
    """The containment test and its two grading reformulations."""
    bullet = frozenset(i for i in range(len(p.rs.roots))
                       if p.sigma.perm[i] == p.rs.neg[i])
    containment = p.Qc_and_Qbarn <= bullet
    xi_conj = [p.xi_values[p.sigma.perm[i]] for i in range(len(p.rs.roots))]
    nonneg = all(xi_conj[i] >= 0 for i in p.Qc if i not in bullet)
    vanishing = all(xi_conj[i] == 0 for i in p.Qc_and_Qbar if i not in bullet)
    return containment, nonneg, vanishing


def minimal_type(p: ParabolicCRAlgebra) -> bool:
    """Whether every root of Qc n Qbar^n is fixed by the Cartan involution."""
    a, b, c = minimal_type_criteria(p)
    if not (a == b == c):
        raise InternalInconsistency(f"minimal-type criteria disagree: {a}, {b}, {c}")
    return a
