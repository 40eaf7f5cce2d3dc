"""Command-line interface: ``equilines <subcommand> ...``.

Exit codes: 0 when a verdict or report is produced, 1 for bad input,
2 when a certificate fails to replay.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from .designs import Eigenspace, TwoDistanceSpec, project_srg, shifted_lift
from .engine import (
    InvariantViolation,
    Verdict,
    check_certificate,
    lines_verdict,
    render_verdict,
    replay,
    srg_verdict,
    table1_report,
    tight5_report,
)
from .bounds import Threshold
from .exact import format_exact, parse_exact
from .frames import EtfSpec, complementary_etf, welch_angle
from .srg import NonIntegral, SrgDatabase, SrgParams, default_database, waldron_srg_of_etf
from .verifier import (
    AdjacencyError,
    builtin_graph,
    gram_by_projection,
    gram_by_seidel,
    infer_srg,
    ingest_adjacency,
)

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2

_NEGATIVE_VALUE = re.compile(r"^-\d")


def _join_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--b -3/35`` as ``--b=-3/35`` so argparse does not read a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok.startswith("--") and "=" not in tok and nxt is not None and _NEGATIVE_VALUE.match(nxt):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _exact_arg(text: str):
    try:
        return parse_exact(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact number: {text!r}") from exc


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equilines",
        description="Exact reasoning about equiangular lines, ETFs and strongly regular graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--db", type=Path, help="SRG database file (default: bundled seed)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lines", help="decide M equiangular lines in R^n")
    p.add_argument("--dim", type=_positive_int, required=True)
    p.add_argument("--count", type=_positive_int, required=True)
    p.add_argument("--angle", type=_exact_arg)
    p.add_argument("--monotone", action="store_true", help="allow subsumption by a smaller certified count")
    p.add_argument(
        "--neumaier",
        action="store_true",
        help="use the M > 2n+1 angle threshold instead of M > 2n+3",
    )
    _add_json(p)

    p = sub.add_parser("srg", help="decide existence of srg(v,k,lambda,mu)")
    for name in ("v", "k", "lam", "mu"):
        p.add_argument(name, type=int)
    _add_json(p)

    p = sub.add_parser("etf", help="Welch angle, Waldron graph pair and complementary ETF")
    p.add_argument("--dim", type=_positive_int, required=True)
    p.add_argument("--count", type=_positive_int, required=True)
    _add_json(p)

    p = sub.add_parser("project", help="two-distance set from an SRG eigenspace")
    for name in ("v", "k", "lam", "mu"):
        p.add_argument(name, type=int)
    p.add_argument("--eigenspace", choices=["r", "s"], required=True)
    _add_json(p)

    p = sub.add_parser("lift", help="shift a two-distance 2-design to an equiangular set")
    p.add_argument("--dim", type=_positive_int, required=True)
    p.add_argument("--size", type=_positive_int, required=True)
    p.add_argument("--a", type=_exact_arg, required=True)
    p.add_argument("--b", type=_exact_arg, required=True)
    _add_json(p)

    p = sub.add_parser("table1", help="graphs tied to the open ETFs in dimensions 42, 45, 46")
    _add_json(p)

    p = sub.add_parser("tight5", help="tight 5-design parameters and their graph family")
    p.add_argument("--m", type=_positive_int, required=True)
    _add_json(p)

    p = sub.add_parser("verify", help="numerically check a construction from an adjacency matrix")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--adjacency", help="adjacency file, or '-' for stdin")
    src.add_argument("--graph", help="builtin graph, e.g. 'Paley(13)' or 'Complement(Petersen)'")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--projection", choices=["r", "s"])
    mode.add_argument("--seidel-angle", type=_exact_arg)
    p.add_argument("--no-cone", action="store_true", help="do not add an isolated vertex before the Seidel step")
    _add_json(p)

    return parser


def _params(args) -> SrgParams:
    return SrgParams(args.v, args.k, args.lam, args.mu)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _fields(d: dict) -> str:
    return "\n".join(f"{k}: {v}" for k, v in d.items())


def _emit_verdict(args, verdict: Verdict, db) -> None:
    check_certificate(verdict, db)
    _emit(args, verdict.to_dict(), verdict.render_text())


def _cmd_lines(args, db) -> None:
    threshold = Threshold.NEUMAIER_2N1 if args.neumaier else Threshold.STRICT_2N3
    v = lines_verdict(args.dim, args.count, args.angle, threshold=threshold, monotone=args.monotone, db=db)
    _emit_verdict(args, v, db)


def _cmd_srg(args, db) -> None:
    _emit_verdict(args, srg_verdict(_params(args), db), db)


def _cmd_etf(args, db) -> None:
    n, M = args.dim, args.count
    e = EtfSpec(n, M)
    out = {"n": n, "M": M, "welch_angle": format_exact(welch_angle(n, M))}
    if M > n + 1:
        pair = waldron_srg_of_etf(e)
        if isinstance(pair, NonIntegral):
            out["waldron"] = {"k": format_exact(pair.k), "reason": pair.reason}
        else:
            out["waldron"] = {"primary": str(pair.primary), "complementary": str(pair.complementary)}
    else:
        out["waldron"] = None
    if M > n:
        c = complementary_etf(e)
        out["complementary_etf"] = {"n": c.dimension, "M": c.count, "angle": format_exact(c.angle)}
    _emit(args, out, _fields(out))


def _cmd_project(args, db) -> None:
    t = project_srg(_params(args), Eigenspace(args.eigenspace))
    out = {
        "srg": str(_params(args)),
        "eigenspace": args.eigenspace,
        "dimension": t.dimension,
        "size": t.size,
        "inner_a": format_exact(t.inner_a),
        "inner_b": format_exact(t.inner_b),
        "equiangular": t.equiangular,
        "design_strength": t.design_strength,
        "tight_frame": t.tight_frame,
    }
    _emit(args, out, _fields(out))


def _cmd_lift(args, db) -> None:
    t = TwoDistanceSpec(args.dim, args.size, args.a, args.b, design_strength=2, tight_frame=True)
    lift = shifted_lift(t)
    out = {
        "dimension": lift.lifted.dimension,
        "size": lift.lifted.size,
        "angle": format_exact(lift.angle),
        "s2": format_exact(lift.scale),
        "h2": format_exact(lift.height),
        "tight_frame": lift.lifted.tight_frame,
    }
    _emit(args, out, _fields(out))


def _check_report(report: dict, entries_key: str, db) -> None:
    rows = report["rows"] if "rows" in report else [report]
    problems = []
    for row in rows:
        for entry in row[entries_key]:
            problems += replay(entry["certificate"], db)
    problems += replay(report.get("steps", []), db)
    if problems:
        raise InvariantViolation("; ".join(problems))


def _cmd_table1(args, db) -> None:
    report = table1_report(db)
    _check_report(report, "srgs", db)
    lines = ["n    M     c    SRG parameter sets (flag: N = does not exist, E = exists, o = open)"]
    for row in report["rows"]:
        sets = ", ".join(f"({','.join(map(str, e['srg']))}) {e['flag']}" for e in row["srgs"])
        lines.append(f"{row['n']:<4} {row['M']:<5} {row['angle']:<4} {sets}")
        lines.extend(f"     note: {n}" for n in row["notes"])
    _emit(args, report, "\n".join(lines))


def _cmd_tight5(args, db) -> None:
    report = tight5_report(args.m, db)
    _check_report(report, "members", db)
    lines = [
        f"m={report['m']}: n={report['n']}, ETF({report['n']},{report['lines']},{report['angle']}), "
        f"tight 5-design size {report['design_size']}",
        f"zeros of the degree-2 annihilator: {', '.join(report['c2_zeros'])}",
        "tight 4-design: n={n}, size={size}, inner products {inner_a}, {inner_b}".format(**report["tight4"]),
        "graphs:",
    ]
    for m in report["members"]:
        extra = f", implied {m['implied']}" if "implied" in m else ""
        lines.append(f"  srg({','.join(map(str, m['srg']))}): database {m['database']}, engine {m['conclusion']}{extra}")
    lines.extend(f"note: {n}" for n in report["notes"])
    _emit(args, report, "\n".join(lines))


def _cmd_verify(args, db) -> None:
    if args.graph:
        graph = builtin_graph(args.graph)
    elif args.adjacency == "-":
        graph = ingest_adjacency(sys.stdin.read())
    else:
        graph = ingest_adjacency(Path(args.adjacency).read_bytes())
    out: dict = {"order": graph.order}
    params = infer_srg(graph)
    out["srg"] = str(params) if params else None
    if args.projection:
        if not params:
            raise ValueError(f"projection needs a strongly regular graph: {params.reason}")
        report = gram_by_projection(graph, Eigenspace(args.projection))
    else:
        report = gram_by_seidel(graph, float(args.seidel_angle), cone=not args.no_cone)
    out["report"] = report.to_dict()
    text = _fields({k: v for k, v in out.items() if k != "report"})
    rep = out["report"]
    text += "\n" + _fields(
        {
            "size": rep["size"],
            "numeric_rank": rep["numeric_rank"],
            "min_eigenvalue": f"{rep['min_eigenvalue']:.3e}",
            "offdiag values": ", ".join(f"{d['value']:.12g} (x{d['count']})" for d in rep["distinct_offdiag"]),
            "frame_potential": f"{rep['frame_potential']:.12g}",
            "centroid_norm": f"{rep['centroid_norm']:.3e}",
            "verdicts": ", ".join(f"{k}={v}" for k, v in rep["verdicts"].items()),
        }
    )
    _emit(args, out, text)


_COMMANDS = {
    "lines": _cmd_lines,
    "srg": _cmd_srg,
    "etf": _cmd_etf,
    "project": _cmd_project,
    "lift": _cmd_lift,
    "table1": _cmd_table1,
    "tight5": _cmd_tight5,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        # argparse exits 2 on usage errors; usage errors are input errors here
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        db = SrgDatabase.load(args.db) if args.db else default_database()
        _COMMANDS[args.command](args, db)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, ArithmeticError, OSError, AdjacencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
