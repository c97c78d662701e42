"""Per-n analysis reports, theorem sweeps and the oracle comparison harness."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import oracle
from .embedding import SurfaceClass, classify_surface
from .hypergraph import Hypergraph, build_comaximal_graph, build_hypergraph
from .lattice import (
    check_n,
    enumerate_subgroups,
    intersect,
    is_comaximal,
    is_comaximal_closed_form,
    product_size,
    subgroup_order,
)
from .structure import StructureReport, analyze_structure, is_proper_coloring, type_coloring

CHECKS = ("diameter", "girth", "chromatic", "star", "helly", "hypertree", "uniform", "surface")
THREADS_ENV = "COMAX_THREADS"


def fmt_value(x) -> str:
    return "∞" if x == float("inf") else ("-" if x is None else str(x))


@dataclass
class AnalysisReport:
    n: int
    hypergraph: Hypergraph
    structure: StructureReport
    surface: SurfaceClass

    def to_json(self) -> dict:
        h = self.hypergraph
        return {
            "n": self.n,
            "vertices": [str(v) for v in h.vertices],
            "hyperedges": [list(e) for e in h.hyperedges],
            "structure": self.structure.to_json(),
            "surface": self.surface.to_json(h),
        }

    def to_text(self) -> str:
        h, s, c = self.hypergraph, self.structure, self.surface
        lines = [f"Co_H(D_{self.n}): {h.num_vertices} vertices, {h.num_hyperedges} hyperedges"]
        lines.append("vertices: " + " ".join(f"{i}:{v}" for i, v in enumerate(h.vertices)))
        lines.append("hyperedges:")
        for j, e in enumerate(h.hyperedges):
            lines.append(f"  e{j} = {{{', '.join(str(h.vertices[v]) for v in e)}}}")
        p = s.predictions
        lines.append("invariant     computed  predicted")
        for name in ("diameter", "girth", "chromatic", "star", "helly", "hypertree", "uniform"):
            lines.append(f"  {name:<11} {fmt_value(getattr(s, name)):<9} {fmt_value(getattr(p, name))}")
        lines.append(f"agreement: {'yes' if s.agreement else 'NO (' + ', '.join(s.mismatches()) + ')'}")
        verdict = c.planarity
        lines.append(f"surface: {c.surface.value} (basis: {c.basis.value}, consistent: {'yes' if c.consistent else 'NO'})")
        lines.append(f"  planarity: {'embedding' if verdict.is_planar else verdict.kind}")
        lines.append(f"  euler lower bounds (g, ~g): {c.euler_bounds[0]}, {c.euler_bounds[1]}")
        if c.triple is not None:
            labels = ", ".join(str(h.vertices[v]) for v in c.triple.vertices)
            lines.append(f"  K_3,{c.triple.k} triple: {labels}")
        for note in c.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines) + "\n"


def analyze(n: int) -> AnalysisReport:
    check_n(n)
    h = build_hypergraph(n)
    return AnalysisReport(n, h, analyze_structure(n, h), classify_surface(n, h))


# --- sweep ----------------------------------------------------------------------


@dataclass
class SweepRow:
    n: int
    structure: dict
    surface: dict
    mismatches: list[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"n": self.n, "structure": self.structure, "surface": self.surface,
                "mismatches": self.mismatches, "ok": self.ok}


@dataclass
class SweepReport:
    start: int
    stop: int
    checks: tuple[str, ...]
    rows: list[SweepRow] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(not r.ok for r in self.rows)

    def to_json(self) -> dict:
        return {
            "from": self.start,
            "to": self.stop,
            "checks": list(self.checks),
            "rows": [r.to_json() for r in self.rows],
            "summary": {"rows": len(self.rows), "pass": len(self.rows) - self.failures, "fail": self.failures},
        }

    def to_text(self) -> str:
        head = f"{'n':>4} {'diam':>4} {'girth':>5} {'chi':>3} {'star':>5} {'helly':>5} {'htree':>5} {'unif':>4}  {'surface':<24} {'basis':<7} status"
        lines = [head]
        for r in self.rows:
            s, c = r.structure, r.surface
            girth = "∞" if s["girth"] == "inf" else s["girth"]
            diam = "∞" if s["diameter"] == "inf" else s["diameter"]
            lines.append(
                f"{r.n:>4} {diam:>4} {girth:>5} {s['chromatic']:>3} {str(s['star']):>5} "
                f"{str(s['helly']):>5} {str(s['hypertree']):>5} {fmt_value(s['uniform']):>4}  "
                f"{c['class']:<24} {c['basis']:<7} {'ok' if r.ok else 'MISMATCH: ' + ','.join(r.mismatches)}"
            )
        lines.append(f"rows: {len(self.rows)}  pass: {len(self.rows) - self.failures}  fail: {self.failures}")
        return "\n".join(lines) + "\n"


def sweep_row(n: int, checks: tuple[str, ...] = CHECKS) -> SweepRow:
    h = build_hypergraph(n)
    s = analyze_structure(n, h)
    mismatches = [m for m in s.mismatches() if m in checks]
    if "chromatic" in checks and not is_proper_coloring(h, type_coloring(h)):
        mismatches.append("type_coloring")
    if "surface" in checks:
        c = classify_surface(n, h)
        surface = {"class": c.surface.value, "basis": c.basis.value,
                   "planar": c.planarity.is_planar, "genus_lower_bounds": list(c.genus_lower_bounds),
                   "consistent": c.consistent}
        if not c.consistent:
            mismatches.append("surface")
    else:
        surface = {"class": "-", "basis": "-", "planar": None, "genus_lower_bounds": None, "consistent": None}
    return SweepRow(n, s.to_json(), surface, mismatches)


def _row_task(args: tuple[int, tuple[str, ...]]) -> SweepRow:
    return sweep_row(*args)


def thread_count(default: int = 1) -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be >= 1, got {value}")
    return value


def sweep(start: int, stop: int, checks: tuple[str, ...] = CHECKS, threads: int = 1) -> SweepReport:
    """Compare every analyser with its prediction for n in [start, stop].

    Rows are produced in n order regardless of ``threads``.
    """
    if start < 2 or stop < start:
        raise ValueError(f"invalid range {start}..{stop}")
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    tasks = [(n, tuple(checks)) for n in range(start, stop + 1)]
    if threads <= 1:
        rows = [_row_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_row_task, tasks))
    return SweepReport(start, stop, tuple(checks), rows)


# --- oracle comparison ---------------------------------------------------------


def verify_oracle(n: int, cap: int | None = None) -> list[str]:
    """Every formula-level fact for D_n checked against element-level brute force.

    Returns a list of human-readable discrepancies (empty when all agree).
    """
    check_n(n)
    grp = oracle.OracleGroup(n, cap)
    problems: list[str] = []
    subs = enumerate_subgroups(n)

    found = {oracle.canonical(s) for s in oracle.oracle_enumerate_subgroups(n, cap) if 1 < len(s) < 2 * n}
    listed = [oracle.canonical(grp.elements(h)) for h in subs]
    if len(set(listed)) != len(listed) or set(listed) != found:
        problems.append(f"n={n}: subgroup listing differs from closure enumeration")

    for h in subs:
        elems = grp.elements(h)
        if len(elems) != subgroup_order(h, n):
            problems.append(f"n={n}: |{h}| = {len(elems)}, formula says {subgroup_order(h, n)}")
        if oracle.closure(elems, n) != elems:
            problems.append(f"n={n}: {h} is not closed")

    for h, k in combinations(subs, 2):
        meet = grp.meet(h, k)
        if grp.elements(intersect(h, k, n)) != meet:
            problems.append(f"n={n}: {h} ∩ {k} = {intersect(h, k, n)} disagrees with element meet")
        size = grp.product_size(h, k)
        if size != product_size(h, k, n):
            problems.append(f"n={n}: |{h}{k}| = {size}, formula says {product_size(h, k, n)}")
        comax = size == 2 * n
        if comax != is_comaximal(h, k, n) or comax != is_comaximal_closed_form(h, k):
            problems.append(f"n={n}: co-maximality of {h}, {k} disagrees")

    # hyperedges: naive clique growth on the oracle's own vertex set and adjacency
    overt = oracle.oracle_vertex_set(n, cap)
    g = build_comaximal_graph(n)
    vkeys = [oracle.canonical(grp.elements(v)) for v in g.vertices]
    okeys = [oracle.canonical(s) for s in overt]
    if sorted(vkeys) != sorted(okeys):
        problems.append(f"n={n}: vertex set differs from oracle")
        return problems
    adj = [
        {j for j, b in enumerate(overt) if j != i and oracle.product_size_of_sets(a, b, n) == 2 * n}
        for i, a in enumerate(overt)
    ]
    oracle_edges = {frozenset(okeys[v] for v in c) for c in oracle.naive_maximal_cliques(adj)}
    h = build_hypergraph(n)
    built_edges = {frozenset(vkeys[v] for v in e) for e in h.hyperedges}
    if oracle_edges != built_edges:
        problems.append(f"n={n}: hyperedge set differs from oracle ({len(built_edges)} vs {len(oracle_edges)})")
    return problems
