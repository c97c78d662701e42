"""Command-line front end.

Exit codes: 0 success/agreement, 1 property mismatch or I/O failure,
2 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import oracle
from .embedding import (
    Surface,
    classify_surface,
    euler_genus_lower_bounds,
    find_triple_certificate,
    kmn_genus,
    planarity,
)
from .export import FORMATS, WHATS, dumps, render
from .hypergraph import build_comaximal_graph, build_hypergraph, incidence_graph
from .lattice import InvalidParameter
from .report import CHECKS, THREADS_ENV, analyze, sweep, thread_count, verify_oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on its own errors already; keep the message on stderr
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _need_n(n: int) -> None:
    if n < 2:
        raise UsageError(f"n must be >= 2, got {n}")


def _need_range(start: int, stop: int) -> None:
    if start < 2:
        raise UsageError(f"--from must be >= 2, got {start}")
    if stop < start:
        raise UsageError(f"empty range {start}..{stop}")


def _parse_checks(raw: str | None) -> tuple[str, ...]:
    if raw is None:
        return CHECKS
    picked = [c.strip() for c in raw.split(",") if c.strip()]
    unknown = [c for c in picked if c not in CHECKS]
    if unknown or not picked:
        raise UsageError(f"--checks must be a comma list drawn from {','.join(CHECKS)}")
    # canonical order keeps reports identical however the list was typed
    return tuple(c for c in CHECKS if c in picked)


# --- commands ---------------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    _need_n(args.n)
    rep = analyze(args.n)
    sys.stdout.write(dumps(rep.to_json()) if args.format == "json" else rep.to_text())
    return EXIT_OK if rep.structure.agreement and rep.surface.consistent else EXIT_FAIL


def cmd_sweep(args: argparse.Namespace) -> int:
    _need_range(args.start, args.stop)
    checks = _parse_checks(args.checks)
    try:
        threads = args.threads if args.threads is not None else thread_count()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if threads < 1:
        raise UsageError(f"--threads must be >= 1, got {threads}")
    rep = sweep(args.start, args.stop, checks, threads)
    sys.stdout.write(dumps(rep.to_json()) if args.format == "json" else rep.to_text())
    return EXIT_OK if rep.failures == 0 else EXIT_FAIL


def cmd_verify_oracle(args: argparse.Namespace) -> int:
    _need_range(args.start, args.stop)
    if args.stop > args.cap:
        raise UsageError(f"range exceeds the oracle cap ({args.stop} > {args.cap})")
    failed = 0
    for n in range(args.start, args.stop + 1):
        problems = verify_oracle(n, args.cap)
        failed += bool(problems)
        for p in problems:
            print(p, file=sys.stderr)
        print(f"n={n}: {'ok' if not problems else f'{len(problems)} discrepancies'}")
    print(f"checked {args.stop - args.start + 1} values of n, {failed} with discrepancies")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def _certify(n: int, surface: str) -> dict:
    h = build_hypergraph(n)
    if surface == "plane":
        verdict = planarity(incidence_graph(h))
        return {"n": n, "surface": surface, "certificate": verdict.to_json(),
                "embeddable": verdict.is_planar}
    cls = classify_surface(n, h)
    out: dict = {"n": n, "surface": surface, "class": cls.surface.value}
    if surface == "torus":
        cert = find_triple_certificate(h, 7)
        bounds = euler_genus_lower_bounds(incidence_graph(h))
        if cert is not None:
            out["certificate"] = cert.to_json(h)
            out["genus_lower_bound"] = kmn_genus(3, 7)[0]
        elif bounds[0] >= 2:
            out["certificate"] = {"kind": "euler_bound", "orientable": bounds[0], "nonorientable": bounds[1]}
            out["genus_lower_bound"] = bounds[0]
        else:
            out["certificate"] = None
    else:
        cert = find_triple_certificate(h, 5)
        if cert is not None:
            out["certificate"] = cert.to_json(h)
            out["nonorientable_genus_lower_bound"] = kmn_genus(3, 5)[1]
        else:
            out["certificate"] = None
    if out["certificate"] is None:
        if cls.surface is Surface.PLANAR:
            out["notice"] = f"n={n} is planar, so it embeds on the {surface} and there is nothing to obstruct"
        elif cls.surface is Surface.TOROIDAL_AND_PROJECTIVE:
            out["notice"] = f"n={n} embeds on the {surface}; no obstruction exists"
        else:
            out["notice"] = "no certificate found; non-embeddability rests on the theorem alone"
    return out


def _certify_text(obj: dict) -> str:
    lines = [f"n={obj['n']} surface={obj['surface']}"]
    cert = obj.get("certificate")
    if cert is None:
        lines.append(f"notice: {obj['notice']}")
    elif cert["kind"] == "embedding":
        lines.append(f"embedding with {cert['faces']} faces")
        for node, cyc in cert["rotation"].items():
            lines.append(f"  {node}: {' '.join(map(str, cyc))}")
    elif cert["kind"] == "k3k_triple":
        lines.append(f"K_3,{len(cert['common_hyperedges'])} triple: {', '.join(cert['labels'])}")
        lines.append("  common hyperedges: " + " ".join(f"e{j}" for j in cert["common_hyperedges"]))
    elif cert["kind"] == "euler_bound":
        lines.append(f"Euler bound: genus >= {cert['orientable']}, nonorientable genus >= {cert['nonorientable']}")
    else:
        lines.append(f"{cert['kind']}: branch vertices {' '.join(map(str, cert['branch_vertices']))}")
        for p in cert["paths"]:
            lines.append("  " + "-".join(map(str, p)))
    return "\n".join(lines) + "\n"


def cmd_certify(args: argparse.Namespace) -> int:
    _need_n(args.n)
    obj = _certify(args.n, args.surface)
    sys.stdout.write(dumps(obj) if args.format == "json" else _certify_text(obj))
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    _need_n(args.n)
    text = render(args.what, args.format, build_comaximal_graph(args.n), build_hypergraph(args.n))
    if args.out is None or args.out == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        Path(args.out).write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="comax", description="Co-maximal subgroup hypergraphs of dihedral groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="full report for one n")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--format", choices=("json", "text"), default="text")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", help="check every invariant against its prediction over a range")
    s.add_argument("--from", dest="start", type=int, required=True)
    s.add_argument("--to", dest="stop", type=int, required=True)
    s.add_argument("--checks", help=f"comma list from {','.join(CHECKS)} (default: all)")
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.add_argument("--threads", type=int, help=f"worker processes (default: ${THREADS_ENV} or 1)")
    s.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify-oracle", help="compare formulas with brute-force group arithmetic")
    v.add_argument("--from", dest="start", type=int, required=True)
    v.add_argument("--to", dest="stop", type=int, required=True)
    v.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify_oracle)

    c = sub.add_parser("certify", help="embedding or obstruction certificate for a surface")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--surface", choices=("plane", "torus", "projective"), required=True)
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.set_defaults(func=cmd_certify)

    e = sub.add_parser("export", help="write a graph view as JSON, DOT or GraphML")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--what", choices=WHATS, required=True)
    e.add_argument("--format", choices=FORMATS, default="json")
    e.add_argument("--out", help="output file (default: stdout)")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidParameter) as exc:
        print(f"comax: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
