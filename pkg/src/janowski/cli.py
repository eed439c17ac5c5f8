"""Command-line front end.

Subcommands:

* ``bound``     -- tabulate a bound family over a range of indices
* ``extremal``  -- exact coefficients of a sharpness function, its inverse,
                   and the bounds they attain
* ``verify``    -- run the verification suite from a config file and write a
                   report; exit status 1 on any failed case
* ``search``    -- numeric sharpness sweep over the rotated Schwarz grid

Rationals cross this boundary as exact strings ("5/2"); decimal columns are
display-only.  Exit codes: 0 success, 1 verification failure, 2 usage or
config error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .bounds import BOUND_KINDS, bound_table
from .classes import ClassSpec, Kind, extremal
from .config import SuiteConfig, load_suite_config
from .errors import ConfigError, JanowskiError
from .inversion import LaurentTail, merom_inverse_direct
from .series import as_fraction, revert
from .verify import VerificationReport, run_suite, sharpness_search

FORMATS = ("text", "json", "csv")


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r} ({exc})")


def _index_range(text: str) -> list[int]:
    """Parse '7', '2..5' or '2,3,7' into a sorted index list."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError("empty range")
            return list(range(lo, hi + 1))
        if "," in text:
            return sorted({int(part) for part in text.split(",")})
        return [int(text)]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad index range {text!r}: {exc}")


def _emit(text: str, output: str | None) -> None:
    if output in (None, "", "-"):
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _text_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = []
    for i, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


# ---------------------------------------------------------------------------


def cmd_bound(args) -> int:
    params = {}
    if args.cls in ("starlike", "merom", "merom-inverse", "convex-general"):
        if args.A is None or args.B is None:
            raise ConfigError(f"--class {args.cls} needs --A and --B")
        params = {"A": args.A, "B": args.B}
    elif args.cls in ("convex-beta", "delta-starlike", "delta-convex"):
        if args.beta is None:
            raise ConfigError(f"--class {args.cls} needs --beta")
        params = {"beta": args.beta}
    else:  # noshiro
        if args.B is None:
            raise ConfigError("--class noshiro needs --B")
        params = {"B": args.B}

    table = bound_table(args.cls, params, args.n)
    rows = [[r.n, str(r.bound), float(r.bound), r.proven] for r in table.rows]
    if args.format == "json":
        payload = {
            "kind": table.kind,
            "params": {k: str(v) for k, v in table.params.items()},
            "rows": [
                {"n": r.n, "bound": str(r.bound), "decimal": float(r.bound), "proven": r.proven}
                for r in table.rows
            ],
        }
        _emit(json.dumps(payload, indent=2), args.output)
    elif args.format == "csv":
        _emit(_csv_text(["n", "bound", "decimal", "proven"], rows), args.output)
    else:
        _emit(_text_table(["n", "bound", "decimal", "proven"], rows), args.output)
    return 0


def cmd_extremal(args) -> int:
    spec = ClassSpec(Kind(args.cls), args.A, args.B)
    spec.require_valid()
    N = args.N

    if spec.kind is Kind.MEROMORPHIC:
        g = extremal(spec, N)
        f1 = extremal(ClassSpec(Kind.STARLIKE, spec.A, spec.B), N + 2)
        tail = merom_inverse_direct(f1, N)
        ns = list(range(0, N + 1))
        coeff_rows = bound_table("merom", {"A": spec.A, "B": spec.B}, ns).rows
        inv_rows = bound_table("merom-inverse", {"A": spec.A, "B": spec.B}, ns).rows
        rows = []
        for n in ns:
            bnd, proven = coeff_rows[n].bound, coeff_rows[n].proven
            inv = inv_rows[n].bound
            rows.append(
                {
                    "n": n,
                    "b": str(g[n]),
                    "b_bound": str(bnd),
                    "b_proven": proven,
                    "gtilde": str(tail[n]),
                    "gtilde_bound": str(inv),
                }
            )
        payload = {"class": str(spec), "N": N, "rows": rows}
        if args.format == "json":
            _emit(json.dumps(payload, indent=2), args.output)
        else:
            flat = [
                [r["n"], r["b"], r["b_bound"], r["b_proven"], r["gtilde"], r["gtilde_bound"]]
                for r in rows
            ]
            header = ["n", "b_n", "bound", "proven", "gtilde_n", "inv_bound"]
            text = (
                _csv_text(header, flat) if args.format == "csv" else _text_table(header, flat)
            )
            _emit(text, args.output)
        return 0

    f = extremal(spec, N)
    F = revert(f)
    if spec.kind is Kind.STARLIKE:
        kind, params = "starlike", {"A": spec.A, "B": spec.B}
    elif spec.kind is Kind.NOSHIRO:
        kind, params = "noshiro", {"B": spec.B}
    elif spec.B == 1:
        kind, params = "convex-beta", {"beta": spec.beta}
    else:
        kind, params = "convex-general", {"A": spec.A, "B": spec.B}
    table = bound_table(kind, params, list(range(2, N + 1)))

    rows = [{"n": 1, "a": "1", "gamma": "1", "bound": "", "proven": True, "attained": ""}]
    for row in table.rows:
        n = row.n
        rows.append(
            {
                "n": n,
                "a": str(f[n]),
                "gamma": str(F[n]),
                "bound": str(row.bound),
                "proven": row.proven,
                "attained": abs(F[n]) == row.bound,
            }
        )
    payload = {"class": str(spec), "N": N, "rows": rows}
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        header = ["n", "a_n", "gamma_n", "bound", "proven", "attained"]
        flat = [[r["n"], r["a"], r["gamma"], r["bound"], r["proven"], r["attained"]] for r in rows]
        text = _csv_text(header, flat) if args.format == "csv" else _text_table(header, flat)
        _emit(text, args.output)
    return 0


def _report_csv(report: VerificationReport) -> str:
    header = ["id", "claim", "inputs", "expected", "actual", "verdict", "witness"]
    rows = []
    for case in report.cases:
        d = case.to_dict()
        rows.append(
            [
                d["id"],
                d["claim"],
                json.dumps(d["inputs"], sort_keys=True),
                d["expected"],
                d["actual"],
                d["verdict"],
                d["witness"] or "",
            ]
        )
    return _csv_text(header, rows)


def cmd_verify(args) -> int:
    if args.config:
        config = load_suite_config(args.config)
    else:
        config = SuiteConfig()
    if args.format:
        config.format = args.format
    if args.output:
        config.output = args.output
    if args.exact_only:
        config.exact_only = True
    if args.unproven:
        config.unproven = True
    config.validate()

    report = run_suite(config)
    payload = report.to_dict()
    payload["config"] = config.to_dict()

    if config.format == "json":
        text = json.dumps(payload, indent=2)
    elif config.format == "csv":
        text = _report_csv(report)
    else:
        counts = report.counts
        lines = [
            f"suite: {report.suite}",
            f"total {counts['total']}  pass {counts['pass']}  "
            f"fail {counts['fail']}  skipped {counts['skipped']}",
        ]
        lines += [
            f"FAIL {c.id}: expected {c.expected}, got {c.actual}"
            for c in report.failures()
        ]
        text = "\n".join(lines)
    _emit(text, config.output)

    counts = report.counts
    print(
        f"{counts['pass']}/{counts['total']} cases pass, {counts['fail']} fail, "
        f"{counts['skipped']} skipped -> {config.output or 'stdout'}"
    )
    return 0 if report.all_pass else 1


def cmd_search(args) -> int:
    spec = ClassSpec(Kind(args.cls), args.A, args.B)
    result = sharpness_search(spec, args.n)
    payload = result.to_dict()
    if args.format == "csv":
        header = list(payload)
        row = [json.dumps(payload[k]) if isinstance(payload[k], dict) else payload[k] for k in header]
        _emit(_csv_text(header, [row]), args.output)
    elif args.format == "text":
        _emit(
            "\n".join(f"{k}: {v}" for k, v in payload.items()),
            args.output,
        )
    else:
        _emit(json.dumps(payload, indent=2), args.output)
    ok = (
        result.best <= result.bound + 1e-9 * max(1.0, result.bound)
        and result.attained_at_extremal
    )
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="janowski",
        description="Exact coefficient bounds and verification for generalized "
        "Janowski function classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="tabulate a bound family")
    p_bound.add_argument("--class", dest="cls", required=True, choices=BOUND_KINDS)
    p_bound.add_argument("--A", type=_rational)
    p_bound.add_argument("--B", type=_rational)
    p_bound.add_argument("--beta", type=_rational)
    p_bound.add_argument("--n", type=_index_range, required=True, help="index or range, e.g. 3 or 2..5")
    p_bound.add_argument("--format", choices=FORMATS, default="text")
    p_bound.add_argument("--output", default=None)
    p_bound.set_defaults(func=cmd_bound)

    p_ext = sub.add_parser("extremal", help="coefficients of a sharpness function")
    p_ext.add_argument("--class", dest="cls", required=True, choices=[k.value for k in Kind])
    p_ext.add_argument("--A", type=_rational, required=True)
    p_ext.add_argument("--B", type=_rational, required=True)
    p_ext.add_argument("--N", type=int, default=10)
    p_ext.add_argument("--format", choices=FORMATS, default="text")
    p_ext.add_argument("--output", default=None)
    p_ext.set_defaults(func=cmd_extremal)

    p_ver = sub.add_parser("verify", help="run the verification suite")
    p_ver.add_argument("--config", default=None, help="flat key = value config file")
    p_ver.add_argument("--format", choices=FORMATS, default=None)
    p_ver.add_argument("--output", default=None)
    p_ver.add_argument("--exact-only", action="store_true")
    p_ver.add_argument("--unproven", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search", help="numeric sharpness sweep")
    p_search.add_argument(
        "--class", dest="cls", required=True, choices=["starlike", "convex", "noshiro"]
    )
    p_search.add_argument("--A", type=_rational, required=True)
    p_search.add_argument("--B", type=_rational, required=True)
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--format", choices=FORMATS, default="json")
    p_search.add_argument("--output", default=None)
    p_search.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except JanowskiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
