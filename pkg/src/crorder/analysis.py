"""Instance documents, the analysis pipeline, and the enumeration harness.

Instance documents are JSON obeying one schema (fixtures, user input, and
machine reports all share it).  Reports are deterministic: every set is
emitted in canonical root order and JSON keys are sorted, so identical
instances produce byte-identical reports.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from . import chains as _chains
from .chains import INFINITE, ChainReport, is_finite
from .errors import ParseError
from .extension import (LeeExtension, build_lee_extension, extension_cr_dim_codim,
                        lee_contact_order, lee_levi_order)
from .fixtures import FIXTURES
from .involution import RootInvolution, enumerate_involutions, from_matrix, \
    from_signed_permutation
from .parabolic import ParabolicCRAlgebra, build_pcr, cr_dim_codim, \
    minimal_type_criteria
from .roots import RANK_RANGE, Root, RootSystem, build, direct_sum


@dataclass(frozen=True)
class SigmaSpec:
    kind: str
    entries: tuple[tuple[tuple[int, int], tuple[int, int], int], ...] | None = None
    rows: tuple[tuple[Fraction, ...], ...] | None = None


@dataclass(frozen=True)
class InstanceSpec:
    fixture: str | None = None
    components: tuple[tuple[str, int], ...] | None = None
    crossed: tuple[tuple[int, ...], ...] | None = None
    sigma: SigmaSpec | None = None
    lee_k: int | None = None


# -- parsing ---------------------------------------------------------------------


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise ParseError(message)


def _parse_fraction(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{where}: {value!r} is not a rational") from None
    raise ParseError(f"{where}: expected an integer or 'p/q' string")


def _parse_components(raw: Any) -> tuple[tuple[str, int], ...]:
    _expect(isinstance(raw, list) and raw, "components: expected a nonempty list")
    out = []
    for pos, item in enumerate(raw):
        where = f"components[{pos}]"
        _expect(isinstance(item, (list, tuple)) and len(item) == 2,
                f"{where}: expected [type, rank]")
        kind, rank = item
        _expect(isinstance(kind, str) and kind.upper() in RANK_RANGE,
                f"{where}: unknown Cartan type {kind!r}")
        _expect(isinstance(rank, int) and not isinstance(rank, bool),
                f"{where}: rank must be an integer")
        lo, hi = RANK_RANGE[kind.upper()]
        _expect(rank >= lo and (hi is None or rank <= hi),
                f"{where}: rank {rank} out of range for type {kind.upper()}")
        out.append((kind.upper(), rank))
    return tuple(out)


def _parse_crossed(raw: Any, components: tuple[tuple[str, int], ...]) \
        -> tuple[tuple[int, ...], ...]:
    _expect(isinstance(raw, list), "crossed: expected a list of index lists")
    _expect(len(raw) == len(components),
            f"crossed: expected {len(components)} lists, got {len(raw)}")
    out = []
    for pos, (indices, (kind, rank)) in enumerate(zip(raw, components)):
        where = f"crossed[{pos}]"
        _expect(isinstance(indices, list), f"{where}: expected a list of indices")
        seen = []
        for idx in indices:
            _expect(isinstance(idx, int) and not isinstance(idx, bool),
                    f"{where}: indices must be integers")
            _expect(1 <= idx <= rank,
                    f"{where}: index {idx} out of range 1..{rank}")
            _expect(idx not in seen, f"{where}: duplicate index {idx}")
            seen.append(idx)
        out.append(tuple(sorted(seen)))
    return tuple(out)


def _parse_vector_ref(raw: Any, components: tuple[tuple[str, int], ...],
                      where: str) -> tuple[int, int]:
    _expect(isinstance(raw, (list, tuple)) and len(raw) == 2,
            f"{where}: expected [component, basis index]")
    comp, idx = raw
    _expect(isinstance(comp, int) and 1 <= comp <= len(components),
            f"{where}: component {comp} out of range 1..{len(components)}")
    kind, rank = components[comp - 1]
    dim = _ambient_dim(kind, rank)
    _expect(isinstance(idx, int) and 1 <= idx <= dim,
            f"{where}: basis index {idx} out of range 1..{dim}")
    return comp - 1, idx - 1


def _ambient_dim(kind: str, rank: int) -> int:
    if kind == "A":
        return rank + 1
    if kind == "E":
        return 8
    if kind == "G":
        return 3
    return rank


def _parse_sigma(raw: Any, components: tuple[tuple[str, int], ...]) -> SigmaSpec:
    _expect(isinstance(raw, dict), "sigma: expected an object")
    kind = raw.get("kind")
    if kind == "signed_permutation":
        entries_raw = raw.get("entries")
        _expect(isinstance(entries_raw, list) and entries_raw,
                "sigma.entries: expected a nonempty list")
        entries = []
        for pos, item in enumerate(entries_raw):
            where = f"sigma.entries[{pos}]"
            _expect(isinstance(item, dict), f"{where}: expected an object")
            src = _parse_vector_ref(item.get("from"), components, f"{where}.from")
            dst = _parse_vector_ref(item.get("to"), components, f"{where}.to")
            sign = item.get("sign")
            _expect(sign in (1, -1), f"{where}.sign: expected 1 or -1")
            entries.append((src, dst, sign))
        total = sum(_ambient_dim(k, r) for k, r in components)
        _expect(len({src for src, _, _ in entries}) == len(entries),
                "sigma.entries: duplicate source basis vector")
        _expect(len(entries) == total,
                f"sigma.entries: expected {total} entries, got {len(entries)}")
        return SigmaSpec(kind="signed_permutation", entries=tuple(entries))
    if kind == "matrix":
        rows_raw = raw.get("rows")
        total = sum(_ambient_dim(k, r) for k, r in components)
        _expect(isinstance(rows_raw, list) and len(rows_raw) == total,
                f"sigma.rows: expected {total} rows")
        rows = []
        for i, row in enumerate(rows_raw):
            _expect(isinstance(row, list) and len(row) == total,
                    f"sigma.rows[{i}]: expected {total} entries")
            rows.append(tuple(_parse_fraction(x, f"sigma.rows[{i}][{j}]")
                              for j, x in enumerate(row)))
        return SigmaSpec(kind="matrix", rows=tuple(rows))
    raise ParseError("sigma.kind: expected 'signed_permutation' or 'matrix'")


def parse_instance(document: str | Mapping[str, Any]) -> InstanceSpec:
    """Validate an instance document; messages name the first offending field."""
    if isinstance(document, str):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    else:
        doc = dict(document)
    _expect(isinstance(doc, dict), "document: expected a JSON object")

    fixture = doc.get("fixture")
    if fixture is not None:
        _expect(isinstance(fixture, str), "fixture: expected a name string")
        _expect(fixture in FIXTURES,
                f"fixture: unknown name {fixture!r} "
                f"(see `crorder fixtures --list`)")

    lee = doc.get("lee")
    lee_k = None
    if lee is not None:
        _expect(isinstance(lee, dict), "lee: expected an object")
        lee_k = lee.get("k")
        _expect(isinstance(lee_k, int) and not isinstance(lee_k, bool)
                and lee_k >= 0, "lee.k: expected a nonnegative integer")

    components = crossed = sigma = None
    if doc.get("components") is not None:
        components = _parse_components(doc.get("components"))
        crossed = _parse_crossed(doc.get("crossed"), components)
        sigma = _parse_sigma(doc.get("sigma"), components)
    elif fixture is None and lee_k is None:
        raise ParseError("document: expected 'components', 'lee', or 'fixture'")

    return InstanceSpec(fixture=fixture, components=components,
                        crossed=crossed, sigma=sigma, lee_k=lee_k)


def serialize_instance(spec: InstanceSpec) -> dict[str, Any]:
    """Canonical document for a spec; parse(serialize(s)) == s."""
    doc: dict[str, Any] = {}
    if spec.fixture is not None:
        doc["fixture"] = spec.fixture
    if spec.lee_k is not None:
        doc["lee"] = {"k": spec.lee_k}
    if spec.components is not None:
        doc["components"] = [[k, r] for k, r in spec.components]
        doc["crossed"] = [list(ix) for ix in spec.crossed]
        if spec.sigma.kind == "signed_permutation":
            doc["sigma"] = {
                "kind": "signed_permutation",
                "entries": [{"from": [fc + 1, fi + 1],
                             "to": [tc + 1, ti + 1],
                             "sign": s}
                            for (fc, fi), (tc, ti), s in spec.sigma.entries],
            }
        else:
            doc["sigma"] = {
                "kind": "matrix",
                "rows": [[_fraction_json(x) for x in row]
                         for row in spec.sigma.rows],
            }
    return doc


def _fraction_json(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else str(x)


# -- building --------------------------------------------------------------------


def build_instance(spec: InstanceSpec) -> ParabolicCRAlgebra | LeeExtension:
    """Resolve fixtures and construct the instance object."""
    if spec.fixture is not None:
        return build_instance(parse_instance(FIXTURES[spec.fixture]))
    if spec.lee_k is not None:
        return build_lee_extension(spec.lee_k)
    if spec.components is None:
        raise ParseError("document: nothing to build")
    rs = direct_sum([build(kind, rank) for kind, rank in spec.components])
    phi = [rs.simple_root(comp, idx - 1)
           for comp, indices in enumerate(spec.crossed)
           for idx in indices]
    if spec.sigma.kind == "signed_permutation":
        sigma = from_signed_permutation(rs, spec.sigma.entries)
    else:
        sigma = from_matrix(rs, spec.sigma.rows)
    return build_pcr(rs, phi, sigma)


# -- reports --------------------------------------------------------------------


def _order_json(order: Any) -> int | str:
    return order if is_finite(order) else "infinite"


def _root_json(root: Root) -> dict[str, Any]:
    return {
        "component": root.component + 1,
        "coeffs": list(root.coeffs),
        "label": str(root),
    }


def _root_set_json(roots: Iterable[Root]) -> list[dict[str, Any]]:
    ordered = sorted(roots, key=lambda r: (r.component, r.euclid))
    return [_root_json(r) for r in ordered]


@dataclass(frozen=True)
class AnalysisReport:
    data: dict[str, Any]

    def to_json(self) -> str:
        return json.dumps(self.data, sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        return render_text(self.data)

    def __getitem__(self, key: str) -> Any:
        return self.data[key]


def analyze(spec: InstanceSpec) -> AnalysisReport:
    """Run the full pipeline and cross-check every redundant criterion."""
    built = build_instance(spec)
    if isinstance(built, LeeExtension):
        return _analyze_lee(spec, built)
    return _analyze_parabolic(spec, built)


def _analyze_lee(spec: InstanceSpec, ext: LeeExtension) -> AnalysisReport:
    dim, codim = extension_cr_dim_codim(ext)
    data = {
        "kind": "lee_extension",
        "instance": serialize_instance(spec),
        "k": ext.k,
        "cr_dim": dim,
        "cr_codim": codim,
        "levi_order": _order_json(lee_levi_order(ext)),
        "contact_order": _order_json(lee_contact_order(ext)),
    }
    return AnalysisReport(data)


def _analyze_parabolic(spec: InstanceSpec,
                       pcr: ParabolicCRAlgebra) -> AnalysisReport:
    from .errors import InternalInconsistency

    rs = pcr.rs
    levi = _chains.levi_chain(pcr)
    contact_outer, contact_inner = _chains.contact_chains(pcr)
    fund_closure, fund_crossing = _chains.fundamental_criteria(pcr)
    mt = minimal_type_criteria(pcr)
    criterion = _chains.weakly_nondegenerate_criterion(pcr)
    per_root = [_chains.per_root_levi_order(pcr, rs.roots[i])
                for i in sorted(pcr.Q_minus_Qbar)]

    orders = {rs.index(item.beta): item.order for item in per_root}
    inter = pcr.roots_of(pcr.Q_and_Qbar)
    chain_matches = all(
        term == inter | {rs.roots[i] for i, order in orders.items() if order > p}
        for p, term in enumerate(levi.chain))
    bound_holds = all(not is_finite(item.order)
                      or item.order <= 1 - pcr.xi_values[rs.index(item.beta)]
                      for item in per_root)
    checks = {
        "fundamental_criteria_agree": fund_closure == fund_crossing,
        "minimal_type_criteria_agree": mt[0] == mt[1] == mt[2],
        "contact_chains_agree": contact_outer.order == contact_inner.order,
        "levi_chain_matches_per_root_orders": chain_matches,
        "weak_nondegeneracy_criterion_matches_order": criterion == is_finite(levi.order),
        "per_root_bound_holds": bound_holds,
    }
    if not all(checks.values()):
        failed = sorted(k for k, v in checks.items() if not v)
        raise InternalInconsistency(f"cross-checks failed: {', '.join(failed)}")

    dim, codim = cr_dim_codim(pcr)
    data = {
        "kind": "parabolic",
        "instance": serialize_instance(spec),
        "cr_dim": dim,
        "cr_codim": codim,
        "fundamental": fund_closure,
        "weakly_nondegenerate": is_finite(levi.order),
        "levi_order": _order_json(levi.order),
        "contact_order": _order_json(contact_outer.order),
        "minimal_type": mt[0],
        "levi_chain": [_root_set_json(term) for term in levi.chain],
        "per_root": [
            {
                "root": _root_json(item.beta),
                "order": _order_json(item.order),
                "witness": None if item.witness is None
                else [_root_json(r) for r in item.witness],
            }
            for item in per_root
        ],
        "cross_checks": checks,
    }
    return AnalysisReport(data)


# -- enumeration -----------------------------------------------------------------


def _spec_for(rs: RootSystem, kind: str, rank: int,
              phi_positions: tuple[int, ...],
              inv: RootInvolution) -> InstanceSpec:
    entries = []
    n = inv.total_dim
    for col in range(n):
        row = next(r for r in range(n) if inv.matrix[r][col] != 0)
        entries.append(((0, col), (0, row), int(inv.matrix[row][col])))
    return InstanceSpec(components=((kind, rank),),
                        crossed=(tuple(i + 1 for i in phi_positions),),
                        sigma=SigmaSpec(kind="signed_permutation",
                                        entries=tuple(entries)))


def thread_count() -> int:
    raw = os.environ.get("CRORDER_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def enumerate_reports(kind: str, rank: int, bound: int | None = None,
                      threads: int | None = None) \
        -> tuple[list[AnalysisReport], dict[str, Any]]:
    """Analyze every crossed set against every signed-permutation involution.

    Reports come back sorted by (crossed set, root permutation); the summary
    records the theorem checks over the stream.
    """
    import itertools

    rs = build(kind, rank)
    involutions = enumerate_involutions(rs)
    if bound is not None:
        involutions = involutions[:bound]
    simple_count = len(rs.simple_roots)
    jobs = []
    for size in range(simple_count + 1):
        for positions in itertools.combinations(range(simple_count), size):
            for inv in involutions:
                jobs.append((positions, inv))

    def run(job: tuple[tuple[int, ...], RootInvolution]) -> AnalysisReport:
        positions, inv = job
        spec = _spec_for(rs, kind, rank, positions, inv)
        return analyze(spec)

    workers = threads if threads is not None else thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, jobs))
    else:
        reports = [run(job) for job in jobs]

    violations = []
    max_finite = 0
    for report in reports:
        order = report["levi_order"]
        finite = isinstance(order, int)
        if finite:
            max_finite = max(max_finite, order)
        if report["fundamental"] and report["weakly_nondegenerate"]:
            if not (finite and order <= 3):
                violations.append({"check": "levi_order_le_3",
                                   "instance": report["instance"]})
        if report["minimal_type"] and finite and order > 2:
            violations.append({"check": "minimal_type_order_le_2",
                               "instance": report["instance"]})
    summary = {
        "type": kind,
        "rank": rank,
        "instances": len(reports),
        "involutions": len(involutions),
        "max_finite_levi_order": max_finite,
        "violations": violations,
        "fundamental_weakly_nondegenerate_implies_order_le_3":
            not any(v["check"] == "levi_order_le_3" for v in violations),
        "minimal_type_implies_order_le_2":
            not any(v["check"] == "minimal_type_order_le_2" for v in violations),
    }
    return reports, summary


# -- text rendering ----------------------------------------------------------------


def _label_set(roots: list[dict[str, Any]]) -> str:
    return "{" + ", ".join(r["label"] for r in roots) + "}"


def render_text(data: Mapping[str, Any]) -> str:
    lines = []
    if data.get("kind") == "lee_extension":
        lines.append(f"lee extension, k = {data['k']}")
        lines.append(f"  cr_dim = {data['cr_dim']}, cr_codim = {data['cr_codim']}")
        lines.append(f"  levi_order = {data['levi_order']}")
        lines.append(f"  contact_order = {data['contact_order']}")
        return "\n".join(lines) + "\n"
    instance = data.get("instance", {})
    if "fixture" in instance:
        lines.append(f"instance: fixture {instance['fixture']}")
    elif "components" in instance:
        comps = " + ".join(f"{k}{r}" for k, r in instance["components"])
        crossed = "; ".join(",".join(map(str, ix)) for ix in instance["crossed"])
        lines.append(f"instance: {comps}, crossed [{crossed}]")
    lines.append(f"  cr_dim = {data['cr_dim']}, cr_codim = {data['cr_codim']}")
    for key in ("fundamental", "weakly_nondegenerate", "minimal_type"):
        lines.append(f"  {key} = {str(data[key]).lower()}")
    lines.append(f"  levi_order = {data['levi_order']}")
    lines.append(f"  contact_order = {data['contact_order']}")
    lines.append("  levi chain sizes: "
                 + " > ".join(str(len(term)) for term in data["levi_chain"]))
    lines.append("  per-root orders:")
    for item in data["per_root"]:
        witness = item["witness"]
        tail = "" if witness is None else \
            "  via " + ", ".join(r["label"] for r in witness)
        lines.append(f"    {item['root']['label']}: {item['order']}{tail}")
    return "\n".join(lines) + "\n"
