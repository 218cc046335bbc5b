"""Machine checks, one per verifiable table-level statement.

Every check takes a completed :class:`~packdense.packing.PackingTable`, walks
its stated hypothesis range, and records a verdict per instance.  All
comparisons are exact: integer statements are compared directly, statements
involving alpha or beta through interval refinement (see
:mod:`packdense.analytic`).  Checks whose statement only holds for
"sufficiently large n" report the least n0 such that it holds from n0 to the
table edge, and only FAIL when violated inside the top quarter of the range.

Conjecture checks are non-blocking: their FAILs are surfaced as flagged
discoveries and do not affect the exit code unless explicitly requested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .analytic import AffineBound, BoundExpr, Enclosures, decide
from .packing import CSeq, PackingTable, c_sequence, descent_run_end
from .report import CheckReport, Verdict

CHECK_IDS: tuple[str, ...] = (
    "C_DENSITY",
    "C_MAIN",
    "C_DIFF_STRICT",
    "C_DIFF_WEAK",
    "C_DIFF_LOWER",
    "C_CRUDE",
    "C_CONT",
    "C_BIMODAL",
    "C_NKUB",
    "C_BASE",
    "C_KFORL",
    "C_NPKUB",
    "C_KFB",
    "C_TECH",
    "C_DD",
    "C_BRUCE",
    "C_KN_L2",
    "C_MARTIN",
    "C_WINDOW",
    "C_CONJ1",
    "C_CONJ2",
    "C_GENLOW",
    "C_CONJ4",
    "C_COUNTEREXAMPLE",
)

#: Checks whose FAILs never break the build by default.  The three conjecture
#: scans plus the general lower bound, which rides in the same non-blocking
#: scan group.
CONJECTURE_CHECKS = frozenset({"C_CONJ1", "C_CONJ2", "C_GENLOW", "C_CONJ4"})


@dataclass
class _Env:
    enclosures: Enclosures
    force_strict_diff: bool = False


def _approx(x: Fraction) -> str:
    return f"{float(x):.6g}"


def _interval_text(iv) -> str:
    return f"[{_approx(iv.lo)}, {_approx(iv.hi)}] = [{iv.lo}, {iv.hi}]"


def _check_bound(
    report: CheckReport,
    env: _Env,
    param: object,
    value: int | Fraction,
    rel: str,
    bound: AffineBound | BoundExpr,
    describe: str,
) -> None:
    ok, iv = decide(value, rel, bound, env.enclosures)
    if ok is True:
        report.add(Verdict.PASS)
    elif ok is False:
        report.add(Verdict.FAIL, param, f"{describe}: {value} !{rel} {_interval_text(iv)}")
    else:
        report.add(
            Verdict.INCONCLUSIVE,
            param,
            f"{describe}: {value} vs {_interval_text(iv)} undecided at floor width",
        )


def _check_exact(
    report: CheckReport, param: object, holds: bool, describe: str
) -> None:
    if holds:
        report.add(Verdict.PASS)
    else:
        report.add(Verdict.FAIL, param, describe)


def _na_report(report: CheckReport, reason: str) -> CheckReport:
    report.add(Verdict.NOT_APPLICABLE, None, reason)
    return report


def _first_last_k(table: PackingTable) -> tuple[dict[int, int], dict[int, int]]:
    """First and last n with k_n = k, for every k observed in the table."""
    firsts: dict[int, int] = {}
    lasts: dict[int, int] = {}
    for n in range(table.ell + 1, table.nmax + 1):
        k = table.k_values[n]
        assert k is not None
        firsts.setdefault(k, n)
        lasts[k] = n
    return firsts, lasts


def _threshold_scan(
    report: CheckReport,
    params: Sequence[int],
    test_one: Callable[[int], tuple[bool | None, str]],
) -> None:
    """Scan a 'sufficiently large n' statement.

    Records PASS for every satisfied instance, NOT_APPLICABLE for violations
    below the reported threshold, FAIL for violations inside the top quarter
    of the range, and sets ``report.threshold`` to the least n0 from which the
    statement holds to the end of the range (None when there is no such n0).
    """
    if not params:
        _na_report(report, "empty range")
        return
    results = [(p, *test_one(p)) for p in params]
    violations = [p for p, ok, _ in results if ok is False]
    n0 = max(violations) + 1 if violations else params[0]
    report.threshold = n0 if n0 <= params[-1] else None
    cutoff = params[-1] - (params[-1] - params[0]) // 4
    for p, ok, detail in results:
        if ok is True:
            report.add(Verdict.PASS)
        elif ok is None:
            report.add(Verdict.INCONCLUSIVE, p, detail)
        elif p >= cutoff:
            report.add(Verdict.FAIL, p, detail)
        else:
            report.add(Verdict.NOT_APPLICABLE, p, f"below threshold: {detail}")


# --- individual checks -----------------------------------------------------


def _c_density(table: PackingTable, env: _Env) -> CheckReport:
    """M_n / C(n, ell+1) is weakly decreasing."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_DENSITY", ell, f"n={ell + 2}..{nmax}")
    if nmax < ell + 2:
        return _na_report(report, "table too short")
    binom = [math.comb(m, ell + 1) for m in range(nmax + 1)]
    mv = table.m_values
    for n in range(ell + 2, nmax + 1):
        _check_exact(
            report,
            n,
            mv[n] * binom[n - 1] <= mv[n - 1] * binom[n],
            f"density rises: M_{n}/C({n},{ell + 1}) > M_{n - 1}/C({n - 1},{ell + 1})",
        )
    return report


def _c_main(table: PackingTable, env: _Env) -> CheckReport:
    """beta*(n-ell)^(ell+1)/(ell+1)! <= M_n <= beta*(n+delta)^(ell+1)/(ell+1)!."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_MAIN", ell, f"n={ell}..{nmax}")
    if nmax < ell:
        return _na_report(report, "table too short")
    for n in range(ell, nmax + 1):
        m = table.m_values[n]
        _check_bound(
            report, env, n, m, "ge", BoundExpr("main_lower", ell, n), f"M_{n} below main lower bound"
        )
        _check_bound(
            report, env, n, m, "le", BoundExpr("main_upper", ell, n), f"M_{n} above main upper bound"
        )
    return report


def _c_diff_strict(table: PackingTable, env: _Env) -> CheckReport:
    """M_n - M_{n-1} <= beta*(n-1)^ell / ell!  (proved only for ell >= 3)."""
    ell, nmax = table.ell, table.nmax
    if ell == 2 and not env.force_strict_diff:
        report = CheckReport("C_DIFF_STRICT", ell, "-")
        return _na_report(report, "hypothesis ell >= 3 (force flag applies it anyway)")
    category = "theorem" if ell >= 3 else "forced"
    report = CheckReport(
        "C_DIFF_STRICT", ell, f"n=1..{nmax}", category=category, blocking=ell >= 3
    )
    mv = table.m_values
    for n in range(1, nmax + 1):
        _check_bound(
            report,
            env,
            n,
            mv[n] - mv[n - 1],
            "le",
            BoundExpr("diff_upper_strict", ell, n),
            f"M_{n}-M_{n - 1} above strict difference bound",
        )
    return report


def _c_diff_weak(table: PackingTable, env: _Env) -> CheckReport:
    """M_n - M_{n-1} <= beta*n^2/2 for ell = 2."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_DIFF_WEAK", ell, f"n={ell}..{nmax}")
    if ell != 2:
        return _na_report(report, "hypothesis ell = 2")
    mv = table.m_values
    for n in range(ell, nmax + 1):
        _check_bound(
            report,
            env,
            n,
            mv[n] - mv[n - 1],
            "le",
            BoundExpr("diff_upper_weak", ell, n),
            f"M_{n}-M_{n - 1} above weak difference bound",
        )
    return report


def _c_diff_lower(table: PackingTable, env: _Env) -> CheckReport:
    """M_n - M_{n-1} >= beta*(n-ell)^ell / ell! for n >= ell."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_DIFF_LOWER", ell, f"n={ell}..{nmax}")
    if nmax < ell:
        return _na_report(report, "table too short")
    mv = table.m_values
    for n in range(ell, nmax + 1):
        _check_bound(
            report,
            env,
            n,
            mv[n] - mv[n - 1],
            "ge",
            BoundExpr("diff_lower", ell, n),
            f"M_{n}-M_{n - 1} below difference lower bound",
        )
    return report


def _c_crude(table: PackingTable, env: _Env) -> CheckReport:
    """(n-ell)/(ell+1) <= k_n < n/ell."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_CRUDE", ell, f"n={ell + 1}..{nmax}")
    if nmax < ell + 1:
        return _na_report(report, "table too short")
    for n in range(ell + 1, nmax + 1):
        k = table.k(n)
        _check_exact(
            report,
            n,
            n - ell <= k * (ell + 1) and k * ell < n,
            f"k_{n}={k} outside [({n}-{ell})/{ell + 1}, {n}/{ell})",
        )
    return report


def _c_cont(table: PackingTable, env: _Env) -> CheckReport:
    """k_{n-1} <= k_n <= k_{n-1} + 1."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_CONT", ell, f"n={ell + 2}..{nmax}")
    if nmax < ell + 2:
        return _na_report(report, "table too short")
    for n in range(ell + 2, nmax + 1):
        prev, cur = table.k(n - 1), table.k(n)
        _check_exact(
            report, n, prev <= cur <= prev + 1, f"k_n jumps at n={n}: {prev} -> {cur}"
        )
    return report


def _c_bimodal(table: PackingTable, env: _Env) -> CheckReport:
    """c_{n,i} is weakly increasing / strictly decreasing / weakly increasing."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_BIMODAL", ell, f"n={ell + 1}..{nmax}")
    if nmax < ell + 1:
        return _na_report(report, "table too short")
    for n in range(ell + 1, nmax + 1):
        k_turn, j_turn, ok = bimodal_shape(c_sequence(table, n))
        _check_exact(
            report,
            n,
            ok,
            f"c_{{{n},i}} not bimodal with turns k={k_turn}, j={j_turn}",
        )
    return report


def _c_nkub(table: PackingTable, env: _Env) -> CheckReport:
    """n_k <= (ell+1)k - 1 for k >= 2."""
    ell = table.ell
    firsts, _ = _first_last_k(table)
    kmax = table.k_values[table.nmax] or 0
    report = CheckReport("C_NKUB", ell, f"k=2..{kmax}")
    if kmax < 2:
        return _na_report(report, "no k >= 2 observed")
    for k in range(2, kmax + 1):
        nk = firsts[k]
        _check_exact(
            report, k, nk <= (ell + 1) * k - 1, f"n_{k}={nk} > {(ell + 1) * k - 1}"
        )
    return report


def _c_base(table: PackingTable, env: _Env) -> CheckReport:
    """n_1 = ell+1 and n_k = (ell+1)k - 1 for 2 <= k <= ell+1."""
    ell = table.ell
    firsts, _ = _first_last_k(table)
    kmax = table.k_values[table.nmax] or 0
    hi = min(ell + 1, kmax)
    report = CheckReport("C_BASE", ell, f"k=1..{hi}")
    if kmax < 1:
        return _na_report(report, "no k observed")
    _check_exact(report, 1, firsts[1] == ell + 1, f"n_1={firsts[1]} != {ell + 1}")
    for k in range(2, hi + 1):
        expected = (ell + 1) * k - 1
        _check_exact(report, k, firsts[k] == expected, f"n_{k}={firsts[k]} != {expected}")
    return report


def _c_kforl(table: PackingTable, env: _Env) -> CheckReport:
    """Every fully observed k occurs ell or ell+1 times in (k_n)."""
    ell = table.ell
    firsts, lasts = _first_last_k(table)
    kmax = table.k_values[table.nmax] or 0
    report = CheckReport("C_KFORL", ell, f"k=1..{kmax - 1}")
    if kmax < 2:
        return _na_report(report, "no fully observed k (table edge censors the last run)")
    for k in range(1, kmax):
        count = lasts[k] - firsts[k] + 1
        _check_exact(
            report,
            k,
            count in (ell, ell + 1),
            f"k={k} occurs {count} times, outside {{{ell}, {ell + 1}}}",
        )
    return report


def _c_npkub(table: PackingTable, env: _Env) -> CheckReport:
    """n'_k <= (ell+1)k + ell - 1 for every fully observed k."""
    ell = table.ell
    _, lasts = _first_last_k(table)
    kmax = table.k_values[table.nmax] or 0
    report = CheckReport("C_NPKUB", ell, f"k=1..{kmax - 1}")
    if kmax < 2:
        return _na_report(report, "no fully observed k")
    for k in range(1, kmax):
        bound = (ell + 1) * k + ell - 1
        _check_exact(report, k, lasts[k] <= bound, f"n'_{k}={lasts[k]} > {bound}")
    return report


def _c_kfb(table: PackingTable, env: _Env) -> CheckReport:
    """k_n <= (n-ell)/ell for n >= (ell+1)*ell."""
    ell, nmax = table.ell, table.nmax
    start = (ell + 1) * ell
    report = CheckReport("C_KFB", ell, f"n={start}..{nmax}")
    if nmax < start:
        return _na_report(report, "table too short")
    for n in range(start, nmax + 1):
        k = table.k(n)
        _check_exact(report, n, k * ell <= n - ell, f"k_{n}={k} > ({n}-{ell})/{ell}")
    return report


def _c_tech(table: PackingTable, env: _Env) -> CheckReport:
    """beta*(k-ell+1)^ell/ell! + C(n-k-1, ell) >= beta*k^ell/ell! + (n-k-ell)^ell/ell!."""
    ell, nmax = table.ell, table.nmax
    start = (ell + 1) * ell
    report = CheckReport("C_TECH", ell, f"n={start}..{nmax}")
    if nmax < start:
        return _na_report(report, "table too short")
    fact = math.factorial(ell)
    for n in range(start, nmax + 1):
        k = table.k(n)
        coef = Fraction((k - ell + 1) ** ell - k**ell, fact)
        rhs = Fraction((n - k - ell) ** ell, fact) - math.comb(n - k - 1, ell)
        # statement: beta*coef >= rhs
        _check_bound(
            report,
            env,
            n,
            rhs,
            "le",
            AffineBound(beta_coef=coef),
            f"technical inequality fails at n={n} (k={k})",
        )
    return report


def _c_dd(table: PackingTable, env: _Env) -> CheckReport:
    """0 <= (M_{n+2}-M_{n+1}) - (M_{n+1}-M_n) <= C(n, ell-1)."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_DD", ell, f"n=0..{nmax - 2}")
    if nmax < 2:
        return _na_report(report, "table too short")
    mv = table.m_values
    for n in range(0, nmax - 1):
        second = mv[n + 2] - 2 * mv[n + 1] + mv[n]
        _check_exact(
            report,
            n,
            0 <= second <= math.comb(n, ell - 1),
            f"second difference {second} outside [0, C({n},{ell - 1})={math.comb(n, ell - 1)}]",
        )
    return report


def _c_bruce(table: PackingTable, env: _Env) -> CheckReport:
    """k_n <= alpha*(n-ell) + 1 for ell >= 3."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_BRUCE", ell, f"n={ell + 1}..{nmax}")
    if ell < 3:
        return _na_report(report, "hypothesis ell >= 3")
    if nmax < ell + 1:
        return _na_report(report, "table too short")
    for n in range(ell + 1, nmax + 1):
        _check_bound(
            report,
            env,
            n,
            table.k(n),
            "le",
            BoundExpr("kn_upper_bruce", ell, n),
            f"k_{n} above alpha*(n-ell)+1",
        )
    return report


def _c_kn_l2(table: PackingTable, env: _Env) -> CheckReport:
    """k_n <= alpha*n + 1/2 for ell = 2, n >= 3."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_KN_L2", ell, f"n=3..{nmax}")
    if ell != 2:
        return _na_report(report, "hypothesis ell = 2")
    if nmax < 3:
        return _na_report(report, "table too short")
    for n in range(3, nmax + 1):
        _check_bound(
            report,
            env,
            n,
            table.k(n),
            "le",
            BoundExpr("kn_upper_l2", ell, n),
            f"k_{n} above alpha*n + 1/2",
        )
    return report


def _c_martin(table: PackingTable, env: _Env) -> CheckReport:
    """k_n >= alpha*(n-ell) - 1 for sufficiently large n (threshold-reported)."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_MARTIN", ell, f"n={ell + 1}..{nmax}")
    if nmax < ell + 1:
        return _na_report(report, "table too short")

    def test_one(n: int) -> tuple[bool | None, str]:
        ok, iv = decide(table.k(n), "ge", BoundExpr("kn_lower_martin", ell, n), env.enclosures)
        return ok, f"k_{n}={table.k(n)} below alpha*(n-ell)-1 in {_interval_text(iv)}"

    _threshold_scan(report, range(ell + 1, nmax + 1), test_one)
    return report


def _c_window(table: PackingTable, env: _Env) -> CheckReport:
    """k_n - alpha*n < 1/4 for ell >= 3; k_n - alpha*n > -2 threshold-reported."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_WINDOW", ell, f"n={ell + 1}..{nmax}")
    if nmax < ell + 1:
        return _na_report(report, "table too short")
    if ell >= 3:
        for n in range(ell + 1, nmax + 1):
            _check_bound(
                report,
                env,
                n,
                table.k(n),
                "lt",
                AffineBound(alpha_coef=Fraction(n), offset=Fraction(1, 4)),
                f"k_{n} - alpha*{n} >= 1/4",
            )
    else:
        report.add(Verdict.NOT_APPLICABLE, None, "upper window requires ell >= 3")

    def test_lower(n: int) -> tuple[bool | None, str]:
        ok, iv = decide(
            table.k(n),
            "gt",
            AffineBound(alpha_coef=Fraction(n), offset=Fraction(-2)),
            env.enclosures,
        )
        return ok, f"k_{n}={table.k(n)} not above alpha*{n}-2 in {_interval_text(iv)}"

    _threshold_scan(report, range(ell + 1, nmax + 1), test_lower)
    return report


def _c_conj1(table: PackingTable, env: _Env) -> CheckReport:
    """Conjectured for ell = 2: M_n <= beta*n^3/3! and k_n <= alpha*(n-2)+1."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_CONJ1", ell, f"n=3..{nmax}", category="conjecture", blocking=False)
    if ell != 2:
        return _na_report(report, "hypothesis ell = 2")
    if nmax < 3:
        return _na_report(report, "table too short")
    for n in range(3, nmax + 1):
        _check_bound(
            report, env, n, table.m_values[n], "le", BoundExpr("conj1_M", ell, n),
            f"M_{n} above conjectured beta*n^3/6",
        )
        _check_bound(
            report, env, n, table.k(n), "le", BoundExpr("conj1_k", ell, n),
            f"k_{n} above conjectured alpha*(n-2)+1",
        )
    return report


def _c_conj2(table: PackingTable, env: _Env) -> CheckReport:
    """Conjectured: k_n >= alpha*(n-ell) for all n > ell."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport("C_CONJ2", ell, f"n={ell + 1}..{nmax}", category="conjecture", blocking=False)
    if nmax < ell + 1:
        return _na_report(report, "table too short")
    for n in range(ell + 1, nmax + 1):
        _check_bound(
            report, env, n, table.k(n), "ge", BoundExpr("conj2_k", ell, n),
            f"k_{n} below conjectured alpha*(n-ell)",
        )
    return report


def _c_genlow(table: PackingTable, env: _Env) -> CheckReport:
    """General lower bound specialized to q_ell: M_n >= beta*(n-ell)^(ell+1)/(ell+1)!.

    Proved (it coincides with the main lower bound for q_ell), but reported
    in the non-blocking scan group alongside the conjectures.
    """
    ell, nmax = table.ell, table.nmax
    report = CheckReport(
        "C_GENLOW", ell, f"n={ell + 1}..{nmax}", category="conjecture", blocking=False
    )
    if nmax < ell + 1:
        return _na_report(report, "table too short")
    for n in range(ell + 1, nmax + 1):
        _check_bound(
            report, env, n, table.m_values[n], "ge",
            BoundExpr("general_lower", ell, n, L=ell + 1),
            f"M_{n} below general lower bound",
        )
    return report


def _c_conj4(table: PackingTable, env: _Env) -> CheckReport:
    """Conjectured for every pattern, specialized to q_ell: M_n <= beta*n^(ell+1)/(ell+1)!."""
    ell, nmax = table.ell, table.nmax
    report = CheckReport(
        "C_CONJ4", ell, f"n={ell + 1}..{nmax}", category="conjecture", blocking=False
    )
    if nmax < ell + 1:
        return _na_report(report, "table too short")
    for n in range(ell + 1, nmax + 1):
        _check_bound(
            report, env, n, table.m_values[n], "le", BoundExpr("conj1_M", ell, n),
            f"M_{n} above conjectured beta*n^(ell+1)/(ell+1)!",
        )
    return report


def counterexample_probe(
    table: PackingTable, enclosures: Enclosures | None = None
) -> CheckReport:
    """Confirm the strict difference bound, forced onto ell = 2, fails at n = 17.

    The bound M_n - M_{n-1} <= beta*(n-1)^2/2 is a theorem only for
    ell >= 3.  On an ell = 2 table the probe PASSES when the bound is
    violated at n = 17, where M_17 - M_16 = 60 exceeds 128*beta ~ 59.405.
    The bound's failure is not isolated (it already fails at n = 3, 6 and
    9), so every other violating n is surfaced as an informational witness.
    """
    report = CheckReport("C_COUNTEREXAMPLE", table.ell, f"n=1..{table.nmax}", category="probe")
    if table.ell != 2:
        return _na_report(report, "hypothesis ell = 2")
    if table.nmax < 17:
        report.add(Verdict.INCONCLUSIVE, None, "range too short: need nmax >= 17")
        return report
    enc = enclosures if enclosures is not None else Enclosures(table.ell)
    mv = table.m_values
    hit_17 = False
    extra: list[tuple[object, str]] = []
    for n in range(1, table.nmax + 1):
        diff = mv[n] - mv[n - 1]
        ok, iv = decide(diff, "le", BoundExpr("diff_upper_strict", 2, n), enc)
        if ok is None:
            report.add(Verdict.INCONCLUSIVE, n, "forced bound undecided")
            return report
        if ok is False:
            if n == 17:
                hit_17 = True
                extra.insert(
                    0, (n, f"expected violation: M_17-M_16={diff} > {_interval_text(iv)}")
                )
            else:
                extra.append(
                    (n, f"also violated: M_{n}-M_{n - 1}={diff} > {_interval_text(iv)}")
                )
    if hit_17:
        report.add(Verdict.PASS)
    else:
        report.add(Verdict.FAIL, 17, "forced strict difference bound not violated at n=17")
    report.witnesses.extend(extra)
    return report


def bimodal_shape(cseq: CSeq) -> tuple[int, int, bool]:
    """Turning indices (k_turn, j_turn) and whether the three-segment shape holds.

    Well-formed means: weakly increasing up to k_turn, strictly decreasing on
    (k_turn, j_turn], weakly increasing after, and j_turn > n/ell.
    """
    v = cseq.values
    n, ell, k = cseq.n, cseq.ell, cseq.k_turn
    j = descent_run_end(v, k)
    ok = j * ell > n
    for i in range(1, k):  # storage index: compares c_{n,i} with c_{n,i+1}
        if v[i - 1] > v[i]:
            ok = False
            break
    if ok:
        for i in range(j, n - 1):
            if v[i - 1] > v[i]:
                ok = False
                break
    return k, j, ok


_REGISTRY: dict[str, Callable[[PackingTable, _Env], CheckReport]] = {
    "C_DENSITY": _c_density,
    "C_MAIN": _c_main,
    "C_DIFF_STRICT": _c_diff_strict,
    "C_DIFF_WEAK": _c_diff_weak,
    "C_DIFF_LOWER": _c_diff_lower,
    "C_CRUDE": _c_crude,
    "C_CONT": _c_cont,
    "C_BIMODAL": _c_bimodal,
    "C_NKUB": _c_nkub,
    "C_BASE": _c_base,
    "C_KFORL": _c_kforl,
    "C_NPKUB": _c_npkub,
    "C_KFB": _c_kfb,
    "C_TECH": _c_tech,
    "C_DD": _c_dd,
    "C_BRUCE": _c_bruce,
    "C_KN_L2": _c_kn_l2,
    "C_MARTIN": _c_martin,
    "C_WINDOW": _c_window,
    "C_CONJ1": _c_conj1,
    "C_CONJ2": _c_conj2,
    "C_GENLOW": _c_genlow,
    "C_CONJ4": _c_conj4,
    "C_COUNTEREXAMPLE": lambda table, env: counterexample_probe(table, env.enclosures),
}


def run_checks(
    table: PackingTable,
    selection: Iterable[str] | None = None,
    *,
    force_strict_diff: bool = False,
    enclosures: Enclosures | None = None,
) -> list[CheckReport]:
    """Run the selected checks (all when ``selection`` is None).

    Reports come back sorted by check id; rerunning with the same inputs
    yields identical reports.
    """
    if selection is None:
        ids = list(CHECK_IDS)
    else:
        ids = sorted(set(selection))
        unknown = [cid for cid in ids if cid not in _REGISTRY]
        if unknown:
            raise ValueError(f"unknown check ids: {unknown}")
    env = _Env(
        enclosures if enclosures is not None else Enclosures(table.ell),
        force_strict_diff,
    )
    return [_REGISTRY[cid](table, env) for cid in sorted(ids)]


def exit_code(reports: Iterable[CheckReport], *, strict_conjectures: bool = False) -> int:
    """0: no blocking FAIL; 1: blocking FAIL; 3: INCONCLUSIVE present, no FAIL."""
    reports = list(reports)
    for r in reports:
        if r.fails and (r.blocking or (strict_conjectures and r.category == "conjecture")):
            return 1
    if any(r.inconclusive for r in reports):
        return 3
    return 0
