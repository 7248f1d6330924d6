"""Rank-one extensions realizing every finite Levi order.

The algebra is the semidirect sum of sl2 with the irreducible module of
highest weight k: the Borel spanned by (H, F) plus the negative-weight part of
the module is the designated subalgebra, and the conjugate side is (H, E) plus
the positive-weight part.  For k = 2q the chains shrink by one module
dimension per step, giving Levi order and contact order exactly q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistency
from .liealg import ExactLieAlgebra, Sparse, generic_contact_chain, generic_levi_chain


@dataclass(frozen=True)
class Sl2Module:
    """The (k+1)-dimensional irreducible sl2 module in the lowering basis."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("highest weight must be nonnegative")
        for h in range(self.k + 1):
            if self.ef_commutator(h) != self.weight(h):
                raise InternalInconsistency("module axiom [E,F] = H fails")

    @property
    def dim(self) -> int:
        return self.k + 1

    def weight(self, h: int) -> int:
        return self.k - 2 * h

    def f_image(self, h: int) -> int | None:
        """F v_h = v_{h+1}, absent past the lowest weight vector."""
        return h + 1 if h < self.k else None

    def e_coeff(self, h: int) -> int:
        """E v_h = h (k - h + 1) v_{h-1}."""
        return h * (self.k - h + 1)

    def ef_commutator(self, h: int) -> int:
        return (self.e_coeff(h + 1) if h < self.k else 0) - self.e_coeff(h)


@dataclass(frozen=True)
class LeeExtension:
    k: int
    module: Sl2Module
    algebra: ExactLieAlgebra

    @property
    def negative_part(self) -> tuple[int, ...]:
        return tuple(h for h in range(self.k + 1) if self.module.weight(h) < 0)

    @property
    def positive_part(self) -> tuple[int, ...]:
        return tuple(h for h in range(self.k + 1) if self.module.weight(h) > 0)


def build_lee_extension(k: int, validate: bool = True) -> LeeExtension:
    """Assemble the extension for highest weight k.

    For k = 0 the module is trivial and would only contribute a central line,
    so the degenerate case reduces to sl2 itself with the two opposite Borel
    subalgebras (a totally complex pair).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    module = Sl2Module(k)
    labels = ["H", "E", "F"]
    module_offset = 3
    if k > 0:
        labels += [f"v{h}" for h in range(k + 1)]
    dim = len(labels)
    H, E, F = 0, 1, 2

    brackets: dict[tuple[int, int], Sparse] = {
        (H, E): {E: Fraction(2)},
        (H, F): {F: Fraction(-2)},
        (E, F): {H: Fraction(1)},
    }
    if k > 0:
        for h in range(k + 1):
            v = module_offset + h
            w = module.weight(h)
            if w != 0:
                brackets[(H, v)] = {v: Fraction(w)}
            if module.e_coeff(h) != 0:
                brackets[(E, v)] = {v - 1: Fraction(module.e_coeff(h))}
            if module.f_image(h) is not None:
                brackets[(F, v)] = {v + 1: Fraction(1)}

    def unit(i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(1 if c == i else 0) for c in range(dim))

    q_vectors = [unit(H), unit(F)]
    qbar_vectors = [unit(H), unit(E)]
    if k > 0:
        q_vectors += [unit(module_offset + h) for h in range(k + 1)
                      if module.weight(h) < 0]
        qbar_vectors += [unit(module_offset + h) for h in range(k + 1)
                         if module.weight(h) > 0]
    algebra = ExactLieAlgebra(labels, brackets, q_vectors, qbar_vectors,
                              validate=validate)
    if algebra.q.intersect(algebra.qbar).dim != 1:
        raise InternalInconsistency("q and qbar must meet exactly in the Cartan line")
    return LeeExtension(k=k, module=module, algebra=algebra)


def extension_cr_dim_codim(ext: LeeExtension) -> tuple[int, int]:
    """(dim q - dim q n qbar, total dim - dim(q + qbar)); (q+1, 1) for k = 2q."""
    alg = ext.algebra
    inter = alg.q.intersect(alg.qbar).dim
    total = alg.q.sum(alg.qbar).dim
    return alg.q.dim - inter, alg.dim - total


def lee_levi_order(ext: LeeExtension):
    return generic_levi_chain(ext.algebra).order


def lee_contact_order(ext: LeeExtension):
    return generic_contact_chain(ext.algebra).order
