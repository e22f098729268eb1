"""Command-line front end.

Subcommands: quintic, local-p2, naive, lemma.  Tables are emitted with
exact rational values in canonical "a/b" form; JSON, CSV and the default
pretty rendering carry identical value strings.  Exit codes: 0 success,
1 mathematical-consistency failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .loglinear import check_a1, check_a2, check_closed_forms, sample_config
from .mirror import (
    localp2_invariants,
    localp2_kd,
    naive_invariants,
    quintic_crosscheck,
    quintic_invariants,
)

FORMATS = ("pretty", "json", "csv")


def _positive(name: str):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer")
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be >= 1")
        return value

    return parse


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gwmirror",
        description=(
            "Exact genus-zero Gromov-Witten invariants of hypersurfaces "
            "via the mirror transformation."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, default_dmax: int) -> None:
        p.add_argument(
            "--dmax",
            type=_positive("--dmax"),
            default=default_dmax,
            help=f"maximum curve degree (default {default_dmax})",
        )
        p.add_argument("--format", choices=FORMATS, default="pretty")
        p.add_argument("--out", metavar="PATH", help="also write the output to PATH")

    p = sub.add_parser("quintic", help="rational-curve counts on the quintic threefold")
    add_common(p, 5)
    p.add_argument(
        "--crosscheck",
        action="store_true",
        help="also run the independent reversion route and compare",
    )

    p = sub.add_parser(
        "local-p2", help="maximal-contact counts for a plane cubic / local P^2"
    )
    add_common(p, 8)
    p.add_argument(
        "--emit-kd",
        action="store_true",
        help="also emit the local invariants K_d",
    )

    p = sub.add_parser(
        "naive", help="correction-free 1-point classes for low-degree hypersurfaces"
    )
    p.add_argument("--ambient", type=_positive("--ambient"), required=True, metavar="N")
    p.add_argument("--degree", type=_positive("--degree"), required=True, metavar="L")
    add_common(p, 4)

    p = sub.add_parser("lemma", help="sampled log-linearity identity checks")
    p.add_argument("which", choices=("a1", "a2"))
    p.add_argument("--vars", type=int, default=2, help="number of x variables (>= 0)")
    p.add_argument("--xdeg", type=_positive("--xdeg"), default=4)
    p.add_argument("--trials", type=_positive("--trials"), default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH", help="also write the output to PATH")
    return parser


# -- rendering ------------------------------------------------------------------


def _render_table(
    case: str,
    params: dict,
    rows: list[dict],
    columns: list[str],
    fmt: str,
    crosscheck: str,
) -> str:
    if fmt == "json":
        record = {
            "case": case,
            "params": params,
            "entries": rows,
            "crosscheck": crosscheck,
        }
        return json.dumps(record, indent=2) + "\n"
    if fmt == "csv":
        lines = [",".join(columns)]
        for row in rows:
            lines.append(",".join(_csv_cell(row[c]) for c in columns))
        return "\n".join(lines) + "\n"
    # pretty
    header = [f"case: {case}"]
    if params:
        header.append("params: " + " ".join(f"{k}={v}" for k, v in params.items()))
    table = [columns] + [[_pretty_cell(row[c]) for c in columns] for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(columns))]
    body = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
    tail = [] if crosscheck == "absent" else [f"crosscheck: {crosscheck}"]
    return "\n".join(header + body + tail) + "\n"


def _csv_cell(value) -> str:
    return str(value)


def _pretty_cell(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def _emit(text: str, out_path: str | None) -> None:
    sys.stdout.write(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- subcommands -----------------------------------------------------------------


def _run_quintic(args) -> int:
    table = quintic_invariants(args.dmax)
    crosscheck = "absent"
    if args.crosscheck:
        other = quintic_crosscheck(args.dmax)
        if other.entries != table.entries:
            print(
                "consistency failure: recursion and reversion tables disagree",
                file=sys.stderr,
            )
            return 1
        crosscheck = "ok"
    rows = [{"d": d, "value": str(v)} for d, v in table.entries]
    text = _render_table(
        "quintic", {"dmax": args.dmax}, rows, ["d", "value"], args.format, crosscheck
    )
    _emit(text, args.out)
    return 0


def _run_local_p2(args) -> int:
    table = localp2_invariants(args.dmax)
    rows = [{"d": d, "value": str(v)} for d, v in table.entries]
    columns = ["d", "value"]
    if args.emit_kd:
        for row, (_, kd) in zip(rows, localp2_kd(args.dmax).entries):
            row["kd"] = str(kd)
        columns.append("kd")
    text = _render_table(
        "local-p2", {"dmax": args.dmax}, rows, columns, args.format, "absent"
    )
    _emit(text, args.out)
    return 0


def _run_naive(args, parser) -> int:
    n, l = args.ambient, args.degree
    if n < 2:
        parser.error("--ambient must be at least 2")
    if not 1 <= l <= n - 1:
        parser.error(
            f"--degree must be at most ambient-1={n - 1}: only degrees up to "
            "n-1 are correction-free"
        )
    classes = naive_invariants(n, l, args.dmax)
    rows = [
        {"d": d, "value": [str(c) for c in cls.coeffs]}
        for d, cls in enumerate(classes, start=1)
    ]
    if args.format == "csv":
        flat = []
        columns = ["d"] + [f"h{k}" for k in range(n + 1)]
        for row in rows:
            entry = {"d": row["d"]}
            entry.update({f"h{k}": v for k, v in enumerate(row["value"])})
            flat.append(entry)
        rows = flat
    else:
        columns = ["d", "value"]
    text = _render_table(
        "naive",
        {"ambient": n, "degree": l, "dmax": args.dmax},
        rows,
        columns,
        args.format,
        "absent",
    )
    _emit(text, args.out)
    return 0


def _run_lemma(args, parser) -> int:
    if args.vars < 0:
        parser.error("--vars must be >= 0")
    rng = random.Random(args.seed)
    check = check_a1 if args.which == "a1" else check_a2
    lines = []
    all_passed = True
    for trial in range(1, args.trials + 1):
        cfg = sample_config(rng, args.vars, args.xdeg, seed=args.seed)
        reports = [check(cfg)]
        if all(c == 0 for c in cfg.cs):
            reports.append(check_closed_forms(cfg))
        for report in reports:
            lines.append(report.line(trial))
            all_passed = all_passed and report.passed
    text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    print(
        f"{args.trials} trials, {'all passed' if all_passed else 'FAILURES above'}",
        file=sys.stderr,
    )
    return 0 if all_passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "quintic":
        return _run_quintic(args)
    if args.command == "local-p2":
        return _run_local_p2(args)
    if args.command == "naive":
        return _run_naive(args, parser)
    if args.command == "lemma":
        return _run_lemma(args, parser)
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
