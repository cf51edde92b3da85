"""Command-line interface.

Subcommands: check, enumerate, family, bounds, table, search, report.
Exit codes: 0 success, 1 domain or usage error, 2 verification failure.
Data output is deterministic; --verbose adds timing on stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Sequence

from . import bounds as bounds_mod
from . import construction, progressions, search

SCHEMA_VERSION = 1

_ELL = "ℓ"  # script l used in the certificate text format


def _parse_k_spec(text: str) -> list[int]:
    """Accepts "4", "3..17" (inclusive), or comma-separated combinations."""
    ks: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo_s, hi_s = part.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise ValueError(f"empty k range {part!r}")
            ks.extend(range(lo, hi + 1))
        else:
            ks.append(int(part))
    if not ks:
        raise ValueError(f"no k values in {text!r}")
    return ks


def _parse_int_set(text: str) -> set[int]:
    try:
        values = {int(part) for part in text.split(",") if part.strip()}
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise ValueError("empty set")
    return values


def _emit(text: str, path: str | None) -> None:
    if path is None:
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _fraction_json(value: Fraction, rendered: str) -> dict:
    return {
        "numerator": str(value.numerator),
        "denominator": str(value.denominator),
        "rendered": rendered,
    }


def _block_json(block: construction.Block) -> dict:
    return {
        "label": block.label,
        "params": dict(block.param_items()),
        "elements": list(block.elements),
    }


def _block_cert_line(block: construction.Block) -> str:
    params = " ".join(
        f"{_ELL if name == 'l' else name}={value}"
        for name, value in block.param_items()
    )
    return f"{block.label} {params} : {','.join(map(str, block.elements))}"


def cmd_check(args: argparse.Namespace) -> int:
    elements = _parse_int_set(args.set)
    witness = progressions.find_gp(elements, args.k)
    if args.format == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "k": args.k,
            "set_size": len(elements),
            "gp_free": witness is None,
            "witness": list(witness) if witness else None,
            "ratio": str(progressions.as_progression(witness).ratio)
            if witness
            else None,
        }
        _emit(json.dumps(payload, indent=2), args.output)
    elif witness is None:
        _emit(f"no {args.k}-term geometric progression", args.output)
    else:
        ratio = progressions.as_progression(witness).ratio
        _emit(
            f"contains a {args.k}-term geometric progression: "
            f"{','.join(map(str, witness))} (ratio {ratio})",
            args.output,
        )
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    gps = progressions.enumerate_gps(args.n, args.k)
    if args.format == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "n": args.n,
            "k": args.k,
            "count": len(gps),
            "progressions": [list(g) for g in gps],
        }
        _emit(json.dumps(payload, indent=2), args.output)
    else:  # table and csv are both the one-progression-per-line format
        _emit(progressions.gps_to_lines(gps), args.output)
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    family = construction.build_family(args.n, args.k)
    verified = False
    if args.verify:
        report = construction.verify_family(family)
        if not report.ok:
            print(f"family verification failed: {report.message}", file=sys.stderr)
            for block in report.offenders:
                print(f"  offending block: {_block_cert_line(block)}", file=sys.stderr)
            return 2
        verified = True
    if args.format == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "n": family.n,
            "k": family.k,
            "L": family.L,
            "blocks": [_block_json(b) for b in family.blocks],
        }
        if args.verify:
            payload["verified"] = True
        _emit(json.dumps(payload, indent=2), args.output)
    elif args.format == "csv":
        lines = ["label,l,a,b,c,elements"]
        for block in family.blocks:
            fields = dict(block.param_items())
            lines.append(
                ",".join(
                    [
                        block.label,
                        str(fields.get("l", "")),
                        str(fields.get("a", "")),
                        str(fields.get("b", "")),
                        str(fields.get("c", "")),
                        " ".join(map(str, block.elements)),
                    ]
                )
            )
        _emit("\n".join(lines), args.output)
    elif verified:
        _emit(f"{len(family.blocks)} blocks, disjoint: yes", args.output)
    else:
        _emit("\n".join(_block_cert_line(b) for b in family.blocks), args.output)
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    ks = _parse_k_spec(args.k)
    reports = [bounds_mod.bound_report(k) for k in ks]
    if args.format == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "bounds": [
                {
                    "k": r.k,
                    "improved": _fraction_json(r.improved, r.improved_rendered),
                    "riddell": _fraction_json(r.riddell, r.riddell_rendered),
                    "brown_gordon": _fraction_json(
                        r.brown_gordon, r.brown_gordon_rendered
                    ),
                }
                for r in reports
            ],
        }
        _emit(json.dumps(payload, indent=2), args.output)
    elif args.format == "csv":
        lines = ["k,improved,riddell,brown_gordon,improved_exact,riddell_exact,brown_gordon_exact"]
        for r in reports:
            lines.append(
                f"{r.k},{r.improved_rendered},{r.riddell_rendered},"
                f"{r.brown_gordon_rendered},{r.improved.numerator}/{r.improved.denominator},"
                f"{r.riddell.numerator}/{r.riddell.denominator},"
                f"{r.brown_gordon.numerator}/{r.brown_gordon.denominator}"
            )
        _emit("\n".join(lines), args.output)
    else:
        lines = ["  k  improved  riddell  brown-gordon"]
        for r in reports:
            lines.append(
                f"{r.k:>3}  {r.improved_rendered:<8}  {r.riddell_rendered:<7}  "
                f"{r.brown_gordon_rendered}"
            )
        _emit("\n".join(lines), args.output)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    ks = _parse_k_spec(args.k) if args.k else list(bounds_mod.DEFAULT_TABLE_KS)
    _emit(bounds_mod.render_table(ks), args.output)
    return 0


def _search_result(args: argparse.Namespace) -> search.SearchResult:
    if args.method == "exact":
        return search.max_gp_free_exact(
            args.n, args.k, node_budget=args.budget_nodes, timeout=args.timeout_secs
        )
    if args.method == "greedy":
        return search.greedy_gp_free(args.n, args.k)
    progressions.validate_nk(args.n, args.k)
    members = tuple(sorted(search.squarefree_set(args.n)))
    return search.SearchResult(
        args.n, args.k, "squarefree", len(members), members, False, 0, 0.0
    )


def cmd_search(args: argparse.Namespace) -> int:
    result = _search_result(args)
    certified = construction.exclusion_lower_bound(args.n, args.k)
    bound = bounds_mod.improved_bound(args.k)
    if args.json:
        payload = {
            "schema": SCHEMA_VERSION,
            "n": result.n,
            "k": result.k,
            "method": result.method,
            "max_size": result.max_size,
            "density": result.max_size / result.n,
            "optimal": result.optimal,
            "nodes_explored": result.nodes_explored,
            "exclusion_lower_bound": certified,
            "improved_bound": _fraction_json(bound, bounds_mod.render_bound(bound)),
            "witness": list(result.witness),
        }
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        lines = [
            f"n: {result.n}",
            f"k: {result.k}",
            f"method: {result.method}",
            f"size: {result.max_size}",
            f"density: {result.max_size / result.n:.6f}",
            f"optimal: {'yes' if result.optimal else 'no'}",
            f"nodes: {result.nodes_explored}",
            f"certified_exclusions: {certified}",
            f"witness: {','.join(map(str, result.witness))}",
        ]
        _emit("\n".join(lines), args.output)
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    report = search.density_report(
        args.n,
        args.k,
        args.method,
        node_budget=args.budget_nodes,
        timeout=args.timeout_secs,
    )
    if args.json:
        payload = {
            "schema": SCHEMA_VERSION,
            "n": report.n,
            "k": report.k,
            "method": report.method,
            "size": report.size,
            "density": report.size / report.n,
            "excluded": report.excluded,
            "certified_exclusions": report.certified_exclusions,
            "improved_bound": _fraction_json(
                report.bound, bounds_mod.render_bound(report.bound)
            ),
            "optimal": report.optimal,
        }
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        lines = [
            f"n: {report.n}",
            f"k: {report.k}",
            f"method: {report.method}",
            f"size: {report.size}",
            f"density: {report.size / report.n:.6f}",
            f"excluded: {report.excluded}",
            f"certified_exclusions: {report.certified_exclusions}",
            f"improved_bound: {bounds_mod.render_bound(report.bound)} "
            f"({report.bound.numerator}/{report.bound.denominator})",
            f"optimal: {'yes' if report.optimal else 'no'}",
        ]
        _emit("\n".join(lines), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpfree",
        description="Geometric-progression-free sets: enumeration, disjoint "
        "block-family certificates, exact density bounds, extremal search.",
    )
    parser.add_argument(
        "--verbose", action="store_true", help="timing information on stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a set for k-term progressions")
    p.add_argument("--set", required=True, help="comma-separated positive integers")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="all k-term progressions inside {1..n}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("family", help="disjoint X/Y/Z block family for (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="audit every invariant")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("bounds", help="density upper bounds, exact and rendered")
    p.add_argument("--k", required=True, help="k value, range 3..17, or list")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--output")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="improved-bound table for the standard k values")
    p.add_argument("--k", help="optional k value, range, or list")
    p.add_argument("--output")
    p.set_defaults(func=cmd_table)

    for name in ("search", "report"):
        p = sub.add_parser(
            name,
            help="maximum progression-free subset"
            if name == "search"
            else "density summary against the certified bounds",
        )
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument(
            "--method", choices=("exact", "greedy", "squarefree"), default="exact"
        )
        p.add_argument("--budget-nodes", type=int, default=search.DEFAULT_NODE_BUDGET)
        p.add_argument("--timeout-secs", type=float, default=None)
        p.add_argument("--json", action="store_true")
        p.add_argument("--output")
        p.set_defaults(func=cmd_search if name == "search" else cmd_report)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    start = time.monotonic()
    try:
        status = args.func(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.verbose:
        print(f"elapsed: {time.monotonic() - start:.3f}s", file=sys.stderr)
    return status


def main() -> None:
    sys.exit(run(sys.argv[1:]))
