"""Command-line front end.

Subcommands: ``table`` (build/print M_n, k_n, densities), ``cseq`` (emit the
c_{n,i} series), ``alphabeta`` (certified enclosures), ``verify`` (run the
check registry), ``oracle`` (brute-force cross-checks), ``count`` (pattern
occurrences).  Output formats: human, csv, json; the machine formats carry
the same numeric content and are byte-identical across reruns.

Exit codes: 0 success / no blocking FAIL; 1 blocking FAIL, oracle mismatch,
or unusable cache file; 2 usage error; 3 INCONCLUSIVE verdicts only.

Exact fractions drive every verdict; decimals are printed for humans only.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path

from .analytic import Enclosures
from .oracle import SN_SWEEP_CAP, brute_force_Mnq
from .packing import (
    OverflowGuardError,
    PackingTable,
    TableError,
    build_table,
    c_sequence,
    extend_table,
    load_table,
    save_table,
    table_rows,
    truncate_table,
)
from .patterns import Permutation, count_occurrences, qell_pattern
from .verifier import CHECK_IDS, bimodal_shape, exit_code, run_checks

USAGE_ERROR = 2


def _decimal_str(x: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _write_csv(header: list[str], rows: list[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _write_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME")
    root = Path(base) if base else Path.home() / ".cache"
    return root / "packdense"


def _obtain_table(ell: int, nmax: int, cache_dir: Path | None) -> PackingTable:
    """Build the table, reusing and extending a cached copy when allowed."""
    if cache_dir is None:
        return build_table(ell, nmax)
    path = cache_dir / f"table-ell{ell}.txt"
    if path.exists():
        table = load_table(path)
        if table.ell != ell:
            raise TableError(f"cache file {path} holds ell={table.ell}, expected {ell}")
        if table.nmax >= nmax:
            return truncate_table(table, nmax)
        table = extend_table(table, nmax)
    else:
        table = build_table(ell, nmax)
    cache_dir.mkdir(parents=True, exist_ok=True)
    save_table(table, path)
    return table


def _checks_arg(text: str) -> list[str]:
    ids = [part.strip() for part in text.split(",") if part.strip()]
    unknown = [cid for cid in ids if cid not in CHECK_IDS]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown check ids: {unknown}; valid ids: {', '.join(CHECK_IDS)}"
        )
    return ids


def _build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=("human", "csv", "json"),
        default="human",
        help="output format (default: human)",
    )
    cache = argparse.ArgumentParser(add_help=False)
    cache.add_argument(
        "--cache",
        type=Path,
        default=None,
        metavar="DIR",
        help="table cache directory (default: per-user cache dir)",
    )
    cache.add_argument(
        "--no-cache",
        action="store_true",
        help="always recompute; do not read or write the cache",
    )

    parser = argparse.ArgumentParser(
        prog="packdense",
        description="Exact packing tables, certified enclosures, and bound verification "
        "for the patterns 1(l+1)l...2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[fmt, cache], help="build and print M_n / k_n / densities")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)

    p = sub.add_parser("cseq", parents=[fmt, cache], help="emit the c_{n,i} series for one n")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("alphabeta", parents=[fmt], help="print certified alpha/beta enclosures")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--tol", default="1e-12", help="enclosure width (default: 1e-12)")

    p = sub.add_parser("verify", parents=[fmt, cache], help="run the verification suite")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument(
        "--checks",
        type=_checks_arg,
        default=None,
        metavar="LIST",
        help="comma-separated check ids (default: all)",
    )
    p.add_argument(
        "--force-strict-diff",
        action="store_true",
        help="apply the strict difference bound to ell=2 as well",
    )
    p.add_argument(
        "--strict-conjectures",
        action="store_true",
        help="let conjecture FAILs affect the exit code",
    )

    p = sub.add_parser("oracle", parents=[fmt], help="brute-force cross-checks")
    p.add_argument("--ell", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--pattern", type=str)
    p.add_argument("--n", type=int)

    p = sub.add_parser("count", parents=[fmt], help="count pattern occurrences")
    p.add_argument("--perm", type=str, required=True)
    p.add_argument("--pattern", type=str, required=True)

    return parser


def _cache_dir_from(args) -> Path | None:
    if args.no_cache:
        return None
    return args.cache if args.cache is not None else _default_cache_dir()


def _cmd_table(args) -> int:
    table = _obtain_table(args.ell, args.nmax, _cache_dir_from(args))
    rows = list(table_rows(table))
    if args.format == "human":
        print(f"# ell={table.ell} nmax={table.nmax}")
        print("n\tM_n\tk_n\tdensity\t~density")
        for n, m, k, density in rows:
            k_text = "-" if k is None else str(k)
            if density is None:
                print(f"{n}\t{m}\t{k_text}\t-\t-")
            else:
                print(
                    f"{n}\t{m}\t{k_text}\t{_frac_str(density)}\t{_decimal_str(density, 12)}"
                )
    elif args.format == "csv":
        _write_csv(
            ["n", "M_n", "k_n", "density_num", "density_den"],
            [
                [
                    n,
                    m,
                    "" if k is None else k,
                    "" if density is None else density.numerator,
                    "" if density is None else density.denominator,
                ]
                for n, m, k, density in rows
            ],
        )
    else:
        _write_json(
            {
                "ell": table.ell,
                "nmax": table.nmax,
                "rows": [
                    {
                        "n": n,
                        "M_n": m,
                        "k_n": k,
                        "density_num": None if density is None else density.numerator,
                        "density_den": None if density is None else density.denominator,
                    }
                    for n, m, k, density in rows
                ],
            }
        )
    return 0


def _cmd_cseq(args) -> int:
    table = _obtain_table(args.ell, args.n, _cache_dir_from(args))
    cseq = c_sequence(table, args.n)
    k_turn, j_turn, _ = bimodal_shape(cseq)
    if args.format == "human":
        print(
            f"# ell={args.ell} n={args.n} M_{args.n} = {table.m(args.n)}, "
            f"k_{args.n} = {k_turn}, j_turn = {j_turn}"
        )
        for i, value in enumerate(cseq.values, start=1):
            print(f"{i}\t{value}")
    elif args.format == "csv":
        _write_csv(["i", "c"], [[i, v] for i, v in enumerate(cseq.values, start=1)])
    else:
        _write_json(
            {
                "ell": args.ell,
                "n": args.n,
                "M_n": table.m(args.n),
                "k_n": k_turn,
                "j_turn": j_turn,
                "series": [[i, v] for i, v in enumerate(cseq.values, start=1)],
            }
        )
    return 0


def _cmd_alphabeta(args) -> int:
    tol = Fraction(args.tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    enc = Enclosures(args.ell)
    alpha = enc.alpha(tol)
    beta = enc.beta(tol)
    if args.format == "human":
        print(f"ell = {args.ell}  (enclosure width <= {args.tol})")
        print(f"alpha in [{_frac_str(alpha.lo)}, {_frac_str(alpha.hi)}]")
        print(f"      ~  [{_decimal_str(alpha.lo, 15)}, {_decimal_str(alpha.hi, 15)}]")
        print(f"beta  in [{_frac_str(beta.lo)}, {_frac_str(beta.hi)}]")
        print(f"      ~  [{_decimal_str(beta.lo, 15)}, {_decimal_str(beta.hi, 15)}]")
    elif args.format == "csv":
        _write_csv(
            ["quantity", "lo_num", "lo_den", "hi_num", "hi_den", "lo_decimal", "hi_decimal"],
            [
                [
                    name,
                    iv.lo.numerator,
                    iv.lo.denominator,
                    iv.hi.numerator,
                    iv.hi.denominator,
                    _decimal_str(iv.lo, 15),
                    _decimal_str(iv.hi, 15),
                ]
                for name, iv in (("alpha", alpha), ("beta", beta))
            ],
        )
    else:
        _write_json(
            {
                "ell": args.ell,
                "tol": str(args.tol),
                "alpha": {
                    "lo": _frac_str(alpha.lo),
                    "hi": _frac_str(alpha.hi),
                    "lo_decimal": _decimal_str(alpha.lo, 15),
                    "hi_decimal": _decimal_str(alpha.hi, 15),
                },
                "beta": {
                    "lo": _frac_str(beta.lo),
                    "hi": _frac_str(beta.hi),
                    "lo_decimal": _decimal_str(beta.lo, 15),
                    "hi_decimal": _decimal_str(beta.hi, 15),
                },
            }
        )
    return 0


def _cmd_verify(args) -> int:
    table = _obtain_table(args.ell, args.nmax, _cache_dir_from(args))
    reports = run_checks(table, args.checks, force_strict_diff=args.force_strict_diff)
    code = exit_code(reports, strict_conjectures=args.strict_conjectures)
    if args.format == "human":
        for report in reports:
            print(report.format_block())
        blocking_fails = sum(r.fails for r in reports if r.blocking)
        print(
            f"# ell={args.ell} nmax={args.nmax}: {len(reports)} checks, "
            f"{blocking_fails} blocking FAIL instances, exit {code}"
        )
    elif args.format == "csv":
        _write_csv(
            [
                "check_id",
                "ell",
                "domain",
                "category",
                "blocking",
                "pass",
                "fail",
                "inconclusive",
                "not_applicable",
                "threshold",
                "witnesses",
            ],
            [
                [
                    r.check_id,
                    r.ell,
                    r.domain,
                    r.category,
                    int(r.blocking),
                    r.passes,
                    r.fails,
                    r.inconclusive,
                    r.not_applicable,
                    "" if r.threshold is None else r.threshold,
                    "; ".join(f"{param}: {detail}" for param, detail in r.witnesses),
                ]
                for r in reports
            ],
        )
    else:
        _write_json(
            {
                "ell": args.ell,
                "nmax": args.nmax,
                "force_strict_diff": args.force_strict_diff,
                "strict_conjectures": args.strict_conjectures,
                "exit_code": code,
                "reports": [r.to_dict() for r in reports],
            }
        )
    return code


def _cmd_oracle(args) -> int:
    if args.pattern is not None:
        if args.n is None:
            raise ValueError("--pattern mode requires --n")
        q = Permutation.parse(args.pattern)
        result = brute_force_Mnq(args.n, q)
        if args.format == "human":
            print(
                f"max copies of {q} over S_{args.n}: {result.max_count}  "
                f"witness={result.witness}  layered_witness={'yes' if result.layered_witness_exists else 'no'}"
            )
        elif args.format == "csv":
            _write_csv(
                ["n", "pattern", "max_count", "witness", "layered_witness"],
                [[args.n, str(q), result.max_count, str(result.witness), int(result.layered_witness_exists)]],
            )
        else:
            _write_json(
                {
                    "mode": "pattern",
                    "n": args.n,
                    "pattern": str(q),
                    "max_count": result.max_count,
                    "witness": str(result.witness),
                    "layered_witness_exists": result.layered_witness_exists,
                }
            )
        return 0

    if args.ell is None or args.nmax is None:
        raise ValueError("oracle needs either --pattern with --n, or --ell with --nmax")
    if args.nmax > SN_SWEEP_CAP:
        raise ValueError(f"oracle sweep refused: nmax={args.nmax} exceeds the cap {SN_SWEEP_CAP}")
    table = build_table(args.ell, max(args.nmax, args.ell + 1))
    q = qell_pattern(args.ell)
    rows = []
    all_match = True
    for n in range(1, args.nmax + 1):
        result = brute_force_Mnq(n, q)
        expected = table.m(n)
        match = result.max_count == expected and result.layered_witness_exists
        all_match = all_match and match
        rows.append((n, result.max_count, expected, result.layered_witness_exists, match))
    if args.format == "human":
        for n, sweep, expected, layered, match in rows:
            print(
                f"n={n}\tsweep={sweep}\ttable={expected}\t"
                f"layered_witness={'yes' if layered else 'no'}\t{'ok' if match else 'MISMATCH'}"
            )
    elif args.format == "csv":
        _write_csv(
            ["n", "sweep_max", "table_M", "layered_witness", "match"],
            [[n, s, e, int(lw), int(m)] for n, s, e, lw, m in rows],
        )
    else:
        _write_json(
            {
                "mode": "ell",
                "ell": args.ell,
                "nmax": args.nmax,
                "rows": [
                    {"n": n, "sweep_max": s, "table_M": e, "layered_witness": lw, "match": m}
                    for n, s, e, lw, m in rows
                ],
            }
        )
    return 0 if all_match else 1


def _cmd_count(args) -> int:
    p = Permutation.parse(args.perm)
    q = Permutation.parse(args.pattern)
    value = count_occurrences(p, q)
    if args.format == "human":
        print(value)
    elif args.format == "csv":
        _write_csv(["count"], [[value]])
    else:
        _write_json({"perm": str(p), "pattern": str(q), "count": value})
    return 0


_COMMANDS = {
    "table": _cmd_table,
    "cseq": _cmd_cseq,
    "alphabeta": _cmd_alphabeta,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "count": _cmd_count,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OverflowGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except TableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
