"""The per-root invariant q(beta): longest admissible sequence search.

An admissible sequence for beta is a multiset (a1, ..., aq) of roots, no two
of which (same index included) sum to a root or to zero, such that adding any
sub-multiset to beta lands on a root.  The search is exhaustive depth-first
with candidate pruning, so the reported maximum is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .roots import Root, RootSystem


@dataclass(frozen=True)
class AdmissibleWitness:
    beta: Root
    q: int
    sequence: tuple[Root, ...]


@dataclass(frozen=True)
class TableEntry:
    kind: str
    rank: int
    length_class: str
    expected: int
    got: int
    witness: AdmissibleWitness


@dataclass(frozen=True)
class TableReport:
    entries: tuple[TableEntry, ...]
    mismatches: tuple[TableEntry, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def q_beta(rs: RootSystem, beta: Root) -> tuple[int, AdmissibleWitness | None]:
    """Maximal admissible-sequence length for beta, with one maximal witness.

    Sequences are explored with non-decreasing root indices, which removes
    permutation duplicates (admissibility is permutation invariant); the
    returned witness is the lexicographically first maximal one.
    """
    b = rs.index(beta)
    sums = rs.sums
    neg = rs.neg

    def compatible(c: int, seq: list[int]) -> bool:
        if c in sums[c] or neg[c] == c:
            return False  # 2c a root or c = 0 cannot happen in a reduced system
        return all(s not in sums[c] and neg[s] != c for s in seq)

    best: tuple[int, tuple[int, ...]] = (0, ())

    def extend(seq: list[int], partial: list[int], pool: list[int]) -> None:
        nonlocal best
        if len(seq) > best[0]:
            best = (len(seq), tuple(seq))
        start = seq[-1] if seq else 0
        for c in pool:
            if c < start or not compatible(c, seq):
                continue
            new_sums = []
            for p in partial:
                s = sums[p].get(c)
                if s is None:
                    break
                new_sums.append(s)
            else:
                # Repetition stays legal: the pool keeps c itself as long as
                # it adds to a root with every new partial sum.
                next_pool = [x for x in pool if all(x in sums[s] for s in new_sums)]
                extend(seq + [c], partial + new_sums, next_pool)

    extend([], [b], sorted(sums[b]))
    q, seq = best
    if q == 0:
        return 0, None
    return q, AdmissibleWitness(beta=beta, q=q,
                                sequence=tuple(rs.roots[i] for i in seq))


def expected_q(kind: str, rank: int, long_root: bool) -> int:
    """The classification of q(beta) by type, rank and root length."""
    if kind == "A":
        return 1 if rank == 2 else 2
    if kind == "B":
        if rank == 2:
            return 1 if long_root else 2
        return 4 if long_root else 3
    if kind == "C":
        return 2
    if kind in ("D", "E"):
        return 4
    if kind == "F":
        return 4 if long_root else 3
    if kind == "G":
        return 4 if long_root else 2
    raise ValueError(f"no classification entry for type {kind}{rank}")


def _length_representatives(rs: RootSystem) -> list[tuple[str, Root]]:
    norms = sorted({r.norm_sq() for r in rs.roots})
    if len(norms) == 1:
        return [("all", rs.roots[0])]
    out = []
    for norm, cls in ((norms[0], "short"), (norms[-1], "long")):
        out.append((cls, next(r for r in rs.roots if r.norm_sq() == norm)))
    return out


def verify_table(types: list[tuple[str, int]]) -> TableReport:
    """Compute q(beta) for one representative per root length and compare."""
    from .roots import build

    entries = []
    mismatches = []
    for kind, rank in types:
        rs = build(kind, rank)
        for cls, rep in _length_representatives(rs):
            q, witness = q_beta(rs, rep)
            expected = expected_q(kind, rank, long_root=(cls != "short"))
            entry = TableEntry(kind=kind, rank=rank, length_class=cls,
                               expected=expected, got=q, witness=witness)
            entries.append(entry)
            if q != expected:
                mismatches.append(entry)
            elif q == 4:
                total = rep
                for a in witness.sequence:
                    total = rs.add(total, a)
                    if total is None:
                        mismatches.append(entry)
                        break
                if total is not None and total != -rep:
                    mismatches.append(entry)
    return TableReport(entries=tuple(entries), mismatches=tuple(mismatches))
