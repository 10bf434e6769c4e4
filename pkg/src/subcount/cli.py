"""Command-line interface.

Exit codes: 0 success, 1 a check found violations (the report is still
written), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .dsl import group_from_spec
from .errors import GroupError, ParseError
from .invariants import invariant_record
from .lattice import DEFAULT_LATTICE_CAP, all_subgroups
from .loader import load_group_file
from .report import FORMATS, format_report, format_rows
from .verifier import (FAIL, WITNESS_KINDS, CorpusConfig, build_corpus,
                       compute_entries, errata_report, run_verification, scan_conjecture,
                       sharpness_witness, witness_values)

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default=None, help="output format (default: table)")
    p.add_argument("--out", metavar="PATH", help="write the machine-readable report here")
    p.add_argument("--json", metavar="PATH", help="same as --format json --out PATH")


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lattice-cap", type=int, default=DEFAULT_LATTICE_CAP,
                   help="largest group order for which the subgroup lattice is built")
    p.add_argument("--iso-cap", type=int, default=2000, help="largest order for isomorphism tests")


def _add_corpus(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-order", type=int, required=True, help="largest group order in the corpus")
    p.add_argument("--no-squarefree", action="store_true", help="skip the squarefree-order enumeration")
    p.add_argument("--squarefree-max-order", type=int, default=300)
    p.add_argument("--sub-max-order", type=int, default=500,
                   help="largest order for which sub(G) is computed")
    p.add_argument("--psl-q-max", type=int, default=13, help="include PSL(2,q) for q up to this")
    p.add_argument("--spec", action="append", default=[], metavar="SPEC", help="extra group spec (repeatable)")
    p.add_argument("--ingest", action="append", default=[], metavar="PATH",
                   help="generator file to add to the corpus (repeatable)")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subcount",
        description="Cyclic and total subgroup counts of finite groups, and checks of criteria based on them.",
        epilog="group specs: Z(n), D(n), Q(2^k), S(n), A(n), SL(2,q), PSL(2,q), SD(a,b,r), joined by 'x'",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("invariants", help="invariant row for a group spec or generator files")
    p.add_argument("group_spec", nargs="?", help='e.g. "A(4) x Z(5)"')
    p.add_argument("--ingest", action="append", default=[], metavar="PATH")
    _add_caps(p)
    _add_output(p)

    p = sub.add_parser("lattice", help="list every subgroup of a group")
    p.add_argument("group_spec", nargs="?")
    p.add_argument("--ingest", action="append", default=[], metavar="PATH")
    _add_caps(p)
    _add_output(p)

    p = sub.add_parser("verify", help="run every check over a corpus")
    _add_corpus(p)
    _add_caps(p)
    p.add_argument("--q-max", type=int, default=10**4, help="range of the prime-power inequality check")
    p.add_argument("--t-max", type=int, default=4, help="largest t for sharpness witnesses")
    _add_output(p)

    p = sub.add_parser("conjecture", help="scan the corpus for non-solvable groups with cyc < 2^(t+2)")
    _add_corpus(p)
    _add_caps(p)
    _add_output(p)

    p = sub.add_parser("witness", help="build extremal examples and compare with the expected counts")
    p.add_argument("--t", type=int, action="append", dest="t_values", metavar="T",
                   help="number of prime divisors (repeatable; default 2 3 4)")
    p.add_argument("--kind", choices=WITNESS_KINDS, action="append", dest="kinds")
    _add_output(p)

    p = sub.add_parser("errata", help="compare quoted numeric claims with computed values")
    _add_output(p)
    return parser


def _output_format(args) -> str:
    if args.json:
        if args.out and args.out != args.json:
            raise UsageError("--json and --out name different files")
        if args.format not in (None, "json"):
            raise UsageError("--json conflicts with --format " + args.format)
        args.out, args.format = args.json, "json"
    return args.format or "table"


def _emit(text: str, args, summary: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        print(summary)
    else:
        sys.stdout.write(text)


def _groups(args):
    groups = []
    if args.group_spec:
        groups.append(group_from_spec(args.group_spec))
    for path in args.ingest:
        groups.append(load_group_file(path))
    if not groups:
        raise UsageError(f"{args.command} needs a group spec or --ingest PATH")
    return groups


def _corpus_config(args) -> CorpusConfig:
    if args.max_order < 1:
        raise UsageError("--max-order must be positive")
    return CorpusConfig(
        max_order=args.max_order,
        include_squarefree_enumeration=not args.no_squarefree,
        squarefree_max_order=args.squarefree_max_order,
        spec_list=tuple(args.spec),
        ingest_paths=tuple(args.ingest),
        psl_q_max=args.psl_q_max,
        witness_t_range=(2, getattr(args, "t_max", 4)),
        lattice_cap=args.lattice_cap,
        iso_cap=args.iso_cap,
        sub_max_order=args.sub_max_order,
    )


def _summary(reports) -> str:
    bad = [r.check_id for r in reports if r.status == FAIL]
    lines = [f"{r.check_id}: {r.status} ({r.groups_checked} checked, {len(r.violations)} violations)"
             for r in reports]
    lines.append("all checks passed" if not bad else "violations in: " + ", ".join(bad))
    return "\n".join(lines)


def cmd_invariants(args) -> int:
    fmt = _output_format(args)
    rows = [invariant_record(g, lattice_cap=args.lattice_cap).to_row() for g in _groups(args)]
    _emit(format_rows(rows, fmt), args, f"wrote {len(rows)} row(s) to {args.out}")
    return EXIT_OK


def _label(group, i: int) -> str:
    return str(group.label(i)).replace(" ", "")


def cmd_lattice(args) -> int:
    fmt = _output_format(args)
    rows = []
    for g in _groups(args):
        lat = all_subgroups(g, lattice_cap=args.lattice_cap)
        for i, (h, normal, cyclic, maximal) in enumerate(zip(lat.subgroups, lat.normal, lat.cyclic, lat.maximal)):
            rows.append({"group": g.name, "index": i, "order": h.order, "normal": normal, "cyclic": cyclic,
                         "maximal": maximal, "generators": " ".join(_label(g, x) for x in h.gens) or "e"})
    _emit(format_rows(rows, fmt), args, f"wrote {len(rows)} subgroups to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    fmt = _output_format(args)
    cfg = _corpus_config(args)
    reports, corpus, _ = run_verification(cfg, jobs=args.jobs, q_max=args.q_max)
    for source, message in corpus.errors:
        print(f"skipped {source}: {message}", file=sys.stderr)
    _emit(format_report(reports, fmt), args, _summary(reports))
    return EXIT_VIOLATIONS if any(r.status == FAIL for r in reports) else EXIT_OK


def cmd_conjecture(args) -> int:
    fmt = _output_format(args)
    cfg = _corpus_config(args)
    corpus = build_corpus(cfg)
    for source, message in corpus.errors:
        print(f"skipped {source}: {message}", file=sys.stderr)
    report = scan_conjecture(compute_entries(corpus, cfg, jobs=args.jobs))
    _emit(format_report([report], fmt), args, _summary([report]) + "\n" + report.notes)
    return EXIT_VIOLATIONS if report.status == FAIL else EXIT_OK


def cmd_witness(args) -> int:
    fmt = _output_format(args)
    t_values = args.t_values or [2, 3, 4]
    kinds = args.kinds or list(WITNESS_KINDS)
    if any(t < 2 for t in t_values):
        raise UsageError("--t must be at least 2")
    rows = []
    ok = True
    for t in t_values:
        for kind in kinds:
            if kind == "SOLV_SUB" and t < 3:
                continue
            group, expected = sharpness_witness(t, kind)
            value, prop = witness_values(group, kind)
            good = value == expected and not prop
            ok &= good
            rows.append({"kind": kind, "t": t, "group": group.name, "order": group.order,
                         "computed": value, "expected": expected, "has_property": prop,
                         "sharp": good})
    _emit(format_rows(rows, fmt), args, f"wrote {len(rows)} witnesses to {args.out}")
    return EXIT_OK if ok else EXIT_VIOLATIONS


def cmd_errata(args) -> int:
    # Discrepancies with the source text are informational, not failures.
    fmt = _output_format(args)
    report = errata_report()
    _emit(format_report([report], fmt), args, report.notes)
    return EXIT_OK


COMMANDS = {
    "invariants": cmd_invariants,
    "lattice": cmd_lattice,
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
    "witness": cmd_witness,
    "errata": cmd_errata,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        spec = getattr(args, "group_spec", None) or ""
        print(f"error: {exc}", file=sys.stderr)
        if spec:
            print(f"  {spec}\n  {' ' * exc.offset}^", file=sys.stderr)
        return EXIT_USAGE
    except (GroupError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
