"""Command-line interface: ``python -m minimaj <command> ...``.

Exit codes: 0 success, 1 a verification instance failed, 2 usage or parse
error, 3 arithmetic overflow / out of memory.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .colored import colored_distributions, colored_inv, colored_minimaj, colored_segmented, format_colored_word, parse_colored
from .distributions import STATISTICS, DistributionKey, distribution
from .partitions import OMPParseError, enum_omp, omp_to_json, parse_omp, print_omp, print_segmented
from .qpoly import QPoly
from .report import Report
from .statistics import segmented_word
from .suites import DEFAULT_N, DEFAULT_R, SUITES, run_suite
from .symfunc import SymFuncExpansion, monomial_to_schur, schur_expansion_formula, val_expansion

FORMATS = ("pretty", "json", "csv")


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not out or any(x < 0 for x in out):
        raise argparse.ArgumentTypeError(f"expected nonnegative integers, got {text!r}")
    return out


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _common(default: bool) -> argparse.ArgumentParser:
    # Shared flags; subcommand copies use SUPPRESS so they never clobber a
    # value given before the subcommand.
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if default else (lambda v: argparse.SUPPRESS)
    p.add_argument("--format", choices=FORMATS, default=d("pretty"), help="output format")
    p.add_argument("--jobs", type=_positive, default=d(1), help="worker processes for sweeps")
    p.add_argument("--seed-bound", type=_positive, default=d(8),
                   help="largest n any sweep or enumeration may use (default 8)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minimaj",
        description="inv and minimaj on ordered (multi)set partitions",
        parents=[_common(True)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(False)

    p = sub.add_parser("stat", parents=[common], help="statistics of one partition")
    p.add_argument("object", help='e.g. "257|6|148|39" or "1^1 2^2|3^0"')
    p.add_argument("--inv", action="store_true")
    p.add_argument("--minimaj", action="store_true")
    p.add_argument("--segmented", action="store_true", help="also print the minimizing segmented word")
    p.add_argument("--r", type=_positive, help="number of colors for colored input")

    def family(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--beta", type=_int_list, help="weight, e.g. 2,2,1")
        g.add_argument("--n", type=_positive, help="ordered set partitions of 1..n")
        p.add_argument("--k", type=_positive, help="number of blocks")
        p.add_argument("--shape", type=_int_list, help="block sizes")
        p.add_argument("--last", type=_positive, help="size of the last block (needs --k)")

    p = sub.add_parser("dist", parents=[common], help="generating function of a statistic")
    family(p)
    p.add_argument("--stat", choices=sorted(STATISTICS), default="minimaj")
    p.add_argument("--r", type=_positive, default=1, help="colors (with --n and --shape)")

    p = sub.add_parser("enum", parents=[common], help="list a family with its statistics")
    family(p)
    p.add_argument("--limit", type=int, default=None, help="stop after this many")

    p = sub.add_parser("val", parents=[common], help="expansion of Val_{n,k} at t=0")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--basis", choices=("monomial", "schur"), default="monomial")
    p.add_argument("--stat", choices=sorted(STATISTICS), default="minimaj")

    p = sub.add_parser("schur", parents=[common], help="Schur expansion of Val_{n,k} from tableaux")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--n", type=_positive, default=DEFAULT_N)
    p.add_argument("--r", type=_positive, default=DEFAULT_R)
    return parser


# -- rendering ----------------------------------------------------------------

def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def render_poly(p: QPoly, fmt: str, label: dict | None = None) -> str:
    if fmt == "json":
        return _dumps({**(label or {}), "coefficients": p.to_json()})
    if fmt == "csv":
        return _csv([("exponent", "coefficient")] + [(e, c) for e, c in enumerate(p.coeffs)])
    return str(p)


def render_expansion(e: SymFuncExpansion, fmt: str, k: int) -> str:
    if fmt == "json":
        return _dumps(e.to_dict(k))
    prefix = "m" if e.basis == "monomial" else "s"
    if fmt == "csv":
        rows = [("partition", "exponent", "coefficient")]
        for lam, p in e.items():
            name = "".join(map(str, lam)) if max(lam) < 10 else ",".join(map(str, lam))
            rows += [(name, d, c) for d, c in enumerate(p.coeffs) if c]
        return _csv(rows)
    lines = []
    for lam, p in e.items():
        lines.append(f"{prefix}({','.join(map(str, lam))}): {p}")
    return "\n".join(lines)


def render_report(report: Report, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        rows = [("theorem", "instance", "lhs", "rhs", "pass")]
        for e in report.entries:
            rows.append((e.theorem, e.instance, str(e.lhs), str(e.rhs), "true" if e.passed else "false"))
        return _csv(rows)
    lines = []
    for e in report.entries:
        status = "PASS" if e.passed else "FAIL"
        line = f"{status} {e.theorem} {e.instance}"
        if not e.passed:
            line += f"  lhs={e.lhs}  rhs={e.rhs}"
        lines.append(line)
    failed = len(report.failures)
    lines.append(f"{len(report) - failed}/{len(report)} passed")
    return "\n".join(lines)


# -- commands -------------------------------------------------------------------

def _bound(args, n: int) -> None:
    if n > args.seed_bound:
        raise UsageError(f"n={n} exceeds --seed-bound {args.seed_bound}")


def cmd_stat(args) -> tuple[str, int]:
    want = [s for s in ("inv", "minimaj") if getattr(args, s)] or ["inv", "minimaj"]
    if "^" in args.object:
        sigma = parse_colored(args.object, args.r)
        values = {"inv": colored_inv(sigma), "minimaj": colored_minimaj(sigma)}
        shown, seg = str(sigma), format_colored_word(*colored_segmented(sigma))
    else:
        mu = parse_omp(args.object)
        values = {name: STATISTICS[name](mu) for name in ("inv", "minimaj")}
        shown, seg = print_omp(mu), print_segmented(segmented_word(mu))
    result = {name: values[name] for name in want}
    if args.format == "json":
        obj = {"object": shown, **result}
        if args.segmented:
            obj["segmented"] = seg
        return _dumps(obj), 0
    if args.format == "csv":
        header = ["object", *want] + (["segmented"] if args.segmented else [])
        row = [shown, *result.values()] + ([seg] if args.segmented else [])
        return _csv([header, row]), 0
    if len(want) == 1 and not args.segmented:
        return str(result[want[0]]), 0
    lines = [f"{name}: {v}" for name, v in result.items()]
    if args.segmented:
        lines.append(f"segmented: {seg}")
    return "\n".join(lines), 0


def _family_key(args, stat: str) -> DistributionKey:
    if args.last is not None and args.k is None:
        raise UsageError("--last needs --k")
    if args.shape is not None and (args.k is not None or args.last is not None):
        raise UsageError("--shape cannot be combined with --k/--last")
    beta = args.beta if args.beta is not None else (1,) * args.n
    _bound(args, sum(beta))
    if args.shape is not None and (0 in args.shape or sum(args.shape) != sum(beta)):
        raise UsageError(f"--shape {args.shape} is not a composition of {sum(beta)}")
    try:
        return DistributionKey(stat, beta, blocks=args.k, shape=args.shape, last_block_size=args.last)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_dist(args) -> tuple[str, int]:
    if args.r > 1:
        if args.n is None or args.shape is None:
            raise UsageError("colored distributions need --n and --shape")
        _bound(args, args.n)
        if 0 in args.shape or sum(args.shape) != args.n:
            raise UsageError(f"--shape {args.shape} is not a composition of {args.n}")
        inv, mm = colored_distributions(args.n, args.r, args.shape)
        poly = inv if args.stat == "inv" else mm
        label = {"statistic": args.stat, "n": args.n, "r": args.r, "shape": list(args.shape)}
        return render_poly(poly, args.format, label), 0
    key = _family_key(args, args.stat)
    label = {"statistic": key.statistic, "beta": list(key.beta)}
    for name, v in (("blocks", key.blocks), ("shape", key.shape), ("last_block_size", key.last_block_size)):
        if v is not None:
            label[name] = list(v) if isinstance(v, tuple) else v
    return render_poly(distribution(key), args.format, label), 0


def cmd_enum(args) -> tuple[str, int]:
    key = _family_key(args, "inv")
    rows = []
    for mu in enum_omp(key.beta, blocks=key.blocks, shape=key.shape):
        if key.last_block_size is not None and len(mu[-1]) != key.last_block_size:
            continue
        if args.limit is not None and len(rows) >= args.limit:
            break
        rows.append((mu, STATISTICS["inv"](mu), STATISTICS["minimaj"](mu)))
    if args.format == "json":
        return _dumps([
            {"partition": omp_to_json(mu), "inv": i, "minimaj": m} for mu, i, m in rows
        ]), 0
    if args.format == "csv":
        return _csv([("partition", "inv", "minimaj")] + [(print_omp(mu), i, m) for mu, i, m in rows]), 0
    return "\n".join(f"{print_omp(mu)}\tinv={i}\tminimaj={m}" for mu, i, m in rows), 0


def _check_nk(args) -> None:
    _bound(args, args.n)
    if not 0 <= args.k < args.n:
        raise UsageError(f"need 0 <= k < n, got n={args.n}, k={args.k}")


def cmd_val(args) -> tuple[str, int]:
    _check_nk(args)
    e = val_expansion(args.n, args.k, args.stat)
    if args.basis == "schur":
        e = monomial_to_schur(e)
    return render_expansion(e, args.format, args.k), 0


def cmd_schur(args) -> tuple[str, int]:
    _check_nk(args)
    return render_expansion(schur_expansion_formula(args.n, args.k), args.format, args.k), 0


def cmd_verify(args) -> tuple[str, int]:
    _bound(args, args.n)
    report = run_suite(args.suite, args.n, args.r, args.jobs)
    return render_report(report, args.format), 0 if report.passed else 1


COMMANDS = {
    "stat": cmd_stat,
    "dist": cmd_dist,
    "enum": cmd_enum,
    "val": cmd_val,
    "schur": cmd_schur,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = COMMANDS[args.command](args)
    except OMPParseError as exc:
        print(f"minimaj: parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"minimaj: error: {exc}", file=sys.stderr)
        return 2
    except (OverflowError, MemoryError) as exc:
        print(f"minimaj: arithmetic error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
