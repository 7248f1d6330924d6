"""Named instance documents for the worked examples shipped with the tool.

Every fixture is an ordinary instance document (the same JSON schema the CLI
accepts), so they double as format examples.  Indices are 1-based: crossed
lists address simple roots in Bourbaki order, sigma entries address the
ambient coordinate vectors of each factor.
"""

from __future__ import annotations


def _sp(*entries: tuple[int, int, int]) -> dict:
    """Single-factor signed permutation: (from_index, to_index, sign) triples."""
    return {
        "kind": "signed_permutation",
        "entries": [{"from": [1, f], "to": [1, t], "sign": s} for f, t, s in entries],
    }


def _flags_doc(n: int) -> dict:
    entries = [(1, n + 1, -1), (n + 1, 1, -1)]
    entries += [(i, i, -1) for i in range(2, n + 1)]
    return {
        "components": [["A", n]],
        "crossed": [list(range(2, n))],
        "sigma": _sp(*entries),
    }


def _swap_factors(n_basis: int, pairing: list[tuple[int, int]] | None = None) -> dict:
    """Two-factor conjugation exchanging the factors along the given pairing."""
    pairing = pairing or [(i, i) for i in range(1, n_basis + 1)]
    entries = []
    for a, b in pairing:
        entries.append({"from": [1, a], "to": [2, b], "sign": 1})
        entries.append({"from": [2, a], "to": [1, b], "sign": 1})
    return {"kind": "signed_permutation", "entries": entries}


FIXTURES: dict[str, dict] = {
    "sl4-flags-n3": _flags_doc(3),
    "sl4-flags-n4": _flags_doc(4),
    "sl4-flags-n5": _flags_doc(5),
    "fels-b3-k2": {
        "components": [["B", 3]],
        "crossed": [[2]],
        "sigma": _sp((1, 3, 1), (2, 2, -1), (3, 1, 1)),
    },
    "d4-lines-order3": {
        "components": [["D", 4]],
        "crossed": [[2]],
        "sigma": _sp((1, 4, 1), (2, 2, -1), (3, 3, -1), (4, 1, 1)),
    },
    "g2-order3": {
        "components": [["G", 2]],
        "crossed": [[2]],
        "sigma": _sp((1, 3, 1), (2, 2, 1), (3, 1, 1)),
    },
    "b3-phi13-minimaltype": {
        "components": [["B", 3]],
        "crossed": [[1, 3]],
        "sigma": _sp((1, 2, 1), (2, 1, 1), (3, 3, -1)),
    },
    "su13-grassmannian": {
        "components": [["A", 3]],
        "crossed": [[2]],
        "sigma": _sp((1, 4, -1), (2, 2, -1), (3, 3, -1), (4, 1, -1)),
    },
    "sl3H-grassmannian": {
        "components": [["A", 5]],
        "crossed": [[3]],
        "sigma": _sp((1, 2, 1), (2, 1, 1), (3, 4, 1), (4, 3, 1), (5, 6, 1), (6, 5, 1)),
    },
    "sl7C": {
        "components": [["A", 6], ["A", 6]],
        "crossed": [[1, 4, 5], [2, 3, 6]],
        "sigma": _swap_factors(7),
    },
    "b3-phi1-order2": {
        "components": [["B", 3]],
        "crossed": [[1]],
        "sigma": _sp((1, 2, -1), (2, 1, -1), (3, 3, 1)),
    },
    "sl3C-product-order1": {
        "components": [["A", 3], ["A", 3]],
        "crossed": [[1, 3], [1, 3]],
        "sigma": _swap_factors(4, [(1, 2), (2, 1), (3, 4), (4, 3)]),
    },
    "d4-order1": {
        "components": [["D", 4]],
        "crossed": [[2]],
        "sigma": _sp((1, 4, 1), (2, 3, -1), (3, 2, -1), (4, 1, 1)),
    },
    "c3-order2": {
        "components": [["C", 3]],
        "crossed": [[2]],
        "sigma": _sp((1, 3, 1), (2, 2, -1), (3, 1, 1)),
    },
    "lee-k2": {"lee": {"k": 2}},
    "lee-k4": {"lee": {"k": 4}},
    "lee-k6": {"lee": {"k": 6}},
}
