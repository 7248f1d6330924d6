"""Descending Levi and contact chains at root level, and the derived orders.

A chain term stands for the direct sum of the Cartan subalgebra and the root
spaces it lists, so a vector-space sum like "previous term + conjugate" is the
union of the two root sets: sums of opposite roots land in the Cartan part and
impose no constraint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import InternalInconsistency
from .parabolic import ParabolicCRAlgebra, build_pcr
from .roots import Root


class _Infinite:
    """Order value exceeding every integer; a single shared instance."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "Infinite"

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return isinstance(other, _Infinite)

    def __gt__(self, other: object) -> bool:
        return not isinstance(other, _Infinite)

    def __ge__(self, other: object) -> bool:
        return True


INFINITE = _Infinite()
Order = Union[int, _Infinite]


def is_finite(order: Order) -> bool:
    return isinstance(order, int)


@dataclass(frozen=True)
class ChainReport:
    """A stabilized descending chain of root sets and the order read from it."""

    chain: tuple[frozenset[Root], ...]
    order: Order
    stabilized_at: int
    limit: frozenset[Root]


@dataclass(frozen=True)
class PerRootOrder:
    """Minimal escape depth of a single root, with one minimal witness."""

    beta: Root
    order: Order
    witness: tuple[Root, ...] | None


def _run_chain(start: frozenset[int],
               step: Callable[[frozenset[int]], frozenset[int]],
               target: frozenset[int]) -> tuple[list[frozenset[int]], Order]:
    chain = [start]
    while True:
        nxt = step(chain[-1])
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    if chain[0] == target:
        order: Order = 0
    else:
        order = next((p for p, term in enumerate(chain) if term == target), INFINITE)
    return chain, order


def _report(p: ParabolicCRAlgebra, chain: list[frozenset[int]],
            order: Order) -> ChainReport:
    return ChainReport(
        chain=tuple(p.roots_of(term) for term in chain),
        order=order,
        stabilized_at=len(chain) - 1,
        limit=p.roots_of(chain[-1]),
    )


def _levi_steps(p: ParabolicCRAlgebra) -> tuple[list[frozenset[int]], Order]:
    sums = p.rs.sums
    qbar = p.Qbar

    def step(cur: frozenset[int]) -> frozenset[int]:
        allowed = cur | qbar
        return frozenset(a for a in cur
                         if all(s in allowed
                                for d, s in sums[a].items() if d in qbar))

    return _run_chain(p.Q, step, p.Q_and_Qbar)


def levi_chain(p: ParabolicCRAlgebra) -> ChainReport:
    """Iterated Levi-form kernels starting from Q; order 0 means Q == Qbar."""
    chain, order = _levi_steps(p)
    return _report(p, chain, order)


def q_infinity(p: ParabolicCRAlgebra) -> frozenset[Root]:
    """Limit of the Levi chain; equals Q n Qbar exactly in the finite-order case."""
    chain, _ = _levi_steps(p)
    return p.roots_of(chain[-1])


def per_root_levi_order(p: ParabolicCRAlgebra, beta: Root) -> PerRootOrder:
    """Minimal number of conjugate-set additions taking beta outside Q u Qbar.

    States are roots; moves add an element of Qbar; success is a state outside
    Q u Qbar.  Breadth-first search gives the minimal depth and a subsequent
    depth-bounded search returns the lexicographically first witness (by root
    index at each step).
    """
    b = p.rs.index(beta)
    if b not in p.Q_minus_Qbar:
        raise ValueError(f"{beta} is not in Q \\ Qbar")
    sums = p.rs.sums
    inside = p.Q | p.Qbar
    moves = sorted(p.Qbar)

    depth = None
    frontier = {b}
    visited = {b}
    level = 0
    while frontier and depth is None:
        level += 1
        nxt = set()
        for state in frontier:
            table = sums[state]
            for d in moves:
                s = table.get(d)
                if s is None:
                    continue
                if s not in inside:
                    depth = level
                    break
                if s not in visited:
                    visited.add(s)
                    nxt.add(s)
            if depth is not None:
                break
        frontier = nxt
    if depth is None:
        return PerRootOrder(beta=beta, order=INFINITE, witness=None)

    def first_path(state: int, remaining: int) -> list[int] | None:
        table = sums[state]
        for d in moves:
            s = table.get(d)
            if s is None:
                continue
            if remaining == 1:
                if s not in inside:
                    return [d]
            else:
                tail = first_path(s, remaining - 1) if s in inside else None
                if tail is not None:
                    return [d] + tail
        return None

    path = first_path(b, depth)
    if path is None:
        raise InternalInconsistency("search depth reached but no witness found")
    return PerRootOrder(beta=beta,
                        order=depth,
                        witness=tuple(p.rs.roots[d] for d in path))


def weakly_nondegenerate_criterion(p: ParabolicCRAlgebra) -> bool:
    """Every root of Q \\ Qbar admits a one-step move staying outside Qbar."""
    sums = p.rs.sums
    qbar_only = p.Qbar - p.Q
    for b in p.Q_minus_Qbar:
        table = sums[b]
        if not any(d in qbar_only and s not in p.Qbar
                   for d, s in table.items()):
            return False
    return True


def contact_chains(p: ParabolicCRAlgebra) -> tuple[ChainReport, ChainReport]:
    """Both contact chains; their orders must agree.

    The first starts at Q u Qbar and keeps roots whose moves stay inside the
    previous term; the second starts at Q and allows landing in Qbar as well.
    """
    sums = p.rs.sums
    h = p.Q | p.Qbar
    target = p.Q_and_Qbar

    def step_outer(cur: frozenset[int]) -> frozenset[int]:
        return frozenset(a for a in cur
                         if all(s in cur for d, s in sums[a].items() if d in h))

    def step_inner(cur: frozenset[int]) -> frozenset[int]:
        allowed = cur | p.Qbar
        return frozenset(a for a in cur
                         if all(s in allowed for d, s in sums[a].items() if d in h))

    outer_chain, outer_order = _run_chain(h, step_outer, target)
    inner_chain, inner_order = _run_chain(p.Q, step_inner, target)
    if outer_order != inner_order:
        raise InternalInconsistency(
            f"contact chains disagree: {outer_order} vs {inner_order}")
    return _report(p, outer_chain, outer_order), _report(p, inner_chain, inner_order)


def fundamental_criteria(p: ParabolicCRAlgebra) -> tuple[bool, bool]:
    """Additive-closure test and the crossed-conjugate test, in that order."""
    sums = p.rs.sums
    closure = set(p.Q | p.Qbar)
    grew = True
    while grew:
        grew = False
        for a in list(closure):
            for d, s in sums[a].items():
                if d in closure and s not in closure:
                    closure.add(s)
                    grew = True
    by_closure = len(closure) == len(p.rs.roots)

    phi_circ = [a for a in p.phi if p.sigma.conjugate(a).is_positive]
    if not phi_circ:
        by_crossing = True
    else:
        sub = build_pcr(p.rs, phi_circ, p.sigma)
        by_crossing = all(p.rs.index(a) in sub.Qbar for a in phi_circ)
    return by_closure, by_crossing


def fundamental(p: ParabolicCRAlgebra) -> bool:
    """Whether Q u Qbar additively generates the whole root set."""
    by_closure, by_crossing = fundamental_criteria(p)
    if by_closure != by_crossing:
        raise InternalInconsistency(
            f"fundamentality criteria disagree: {by_closure} vs {by_crossing}")
    return by_closure
