"""Command-line front end: ``fibsum catalog | eval | verify``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import catalog
from .catalog import ParamError
from .config import ConfigError, SuiteConfig, load_config
from .exact import QuadRat, format_rational, quad_to_decimal, quad_to_scientific
from .verifier import SCOPES, run_suite, write_reports

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CONFIG = 3


def format_entry(entry) -> str:
    lines = [f"{entry.id}  {entry.label}",
             f"  hypothesis: {entry.hypothesis}",
             f"  parameters: {', '.join(entry.lhs.params) or 'none'}",
             f"  sum: {entry.lhs.describe()}",
             f"  closed form: {entry.rhs.describe()}",
             f"  lemma: {entry.lemma}; convergence: {entry.convergence}"]
    if entry.parent:
        lines.append(f"  specializes: {entry.parent[0]} with m -> {entry.parent[1]}m")
    if entry.notes:
        lines.append(f"  notes: {entry.notes}")
    return "\n".join(lines)


def cmd_catalog(args, out) -> int:
    entries = catalog.catalog_list(args.prefix)
    for entry in entries:
        out.write(format_entry(entry) + "\n\n")
    out.write(f"{len(entries)} {'entry' if len(entries) == 1 else 'entries'}\n")
    return EXIT_OK


def cmd_eval(args, out, err) -> int:
    try:
        entry = catalog.get_entry(args.entry)
    except KeyError as exc:
        err.write(f"error: {exc.args[0]}\n")
        return EXIT_USAGE
    if args.terms < 1:
        err.write("error: --terms must be a positive integer\n")
        return EXIT_USAGE
    m, n, q, p = args.m, args.n, args.q, args.p
    if entry.fixed:
        m, n, q, p = 1, 1, 1, 0
    else:
        missing = [name for name, v in (("--m", m), ("--n", n), ("--q", q)) if v is None]
        if missing:
            err.write(f"error: {entry.id} needs {', '.join(missing)}\n")
            return EXIT_USAGE
        if p is None:
            p = entry.p_min or 0
    try:
        catalog.check_params(entry, m, n, q, p)
    except ParamError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE

    partial = catalog.partial_sum(entry, m, n, q, p, args.terms)
    closed = catalog.closed_form(entry, m, n, q, p)
    gap = abs(QuadRat.coerce(partial) - closed)
    if entry.fixed:
        where = "no parameters"
    else:
        where = f"m={m}, n={n}, q={q}" + (f", p={p}" if entry.uses_p else "")
    out.write(f"entry: {entry.id} ({where})\n")
    out.write(f"partial sum S_{args.terms}: {format_rational(partial)}\n")
    out.write(f"closed form: {closed}\n")
    out.write(f"partial sum ~ {quad_to_decimal(QuadRat.coerce(partial), args.digits)}\n")
    out.write(f"closed form ~ {quad_to_decimal(closed, args.digits)}\n")
    out.write(f"tail |S_{args.terms} - closed form|: {gap}\n")
    out.write(f"tail ~ {quad_to_scientific(gap)}\n")
    if entry.convergence == "mean":
        out.write("note: terms do not tend to zero; the closed form is the limit of "
                  "averages of consecutive partial sums\n")
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    try:
        config = load_config(args.config) if args.config else SuiteConfig()
    except ConfigError as exc:
        err.write(f"config error: {exc}\n")
        return EXIT_CONFIG
    if args.seed is not None:
        config = replace(config, seed=args.seed)
    try:
        result = run_suite(config, args.scope, timing=args.timing)
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    target = args.output or config.output
    if target == "-":
        write_reports(result, out)
    else:
        with open(target, "w", encoding="utf-8") as handle:
            write_reports(result, handle)
    return EXIT_OK if result.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibsum",
        description="Exact verification of Fibonacci/Lucas reciprocal-sum identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cat = sub.add_parser("catalog", help="list catalog entries")
    p_cat.add_argument("prefix", nargs="?", default=None, help="id prefix filter, e.g. J")

    p_eval = sub.add_parser("eval", help="partial sum and closed form of one entry")
    p_eval.add_argument("entry")
    p_eval.add_argument("--m", type=int)
    p_eval.add_argument("--n", type=int)
    p_eval.add_argument("--q", type=int)
    p_eval.add_argument("--p", type=int)
    p_eval.add_argument("--terms", type=int, default=64, help="number of terms (default 64)")
    p_eval.add_argument("--digits", type=int, default=40, choices=range(0, 10001),
                        metavar="DIGITS", help="decimal digits shown (default 40)")

    p_ver = sub.add_parser("verify", help="run verification suites, JSON lines out")
    p_ver.add_argument("scope", choices=SCOPES)
    p_ver.add_argument("--config", help="key = value suite configuration file")
    p_ver.add_argument("--seed", type=int)
    p_ver.add_argument("--timing", action="store_true", help="add elapsed_ms to the summary")
    p_ver.add_argument("--output", help="report path, '-' for stdout (overrides config)")
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command == "catalog":
        return cmd_catalog(args, out)
    if args.command == "eval":
        return cmd_eval(args, out, err)
    return cmd_verify(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
