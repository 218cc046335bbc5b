"""Exact tables of the packing quantities M_n and k_n for the patterns q_ell.

M_n is the greatest number of copies of q_ell over all n-permutations; it is
attained by a layered permutation and satisfies the last-layer recurrence

    M_n = max over 1 <= k < n of ( M_k + k * C(n-k, ell) ),      n > ell,

with M_n = 0 for n <= ell.  k_n is the largest maximizer.  The derived
sequence c_{n,i} = M_i + i * C(n-i, ell) records the count achieved with the
last layer of length n-i atop an optimal i-prefix; it is bimodal in i.

Tables persist in a diff-able text format (``packdense-table-v1``) and are
re-validated against every structural invariant on load.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .patterns import LayerProfile

TABLE_FORMAT = "packdense-table-v1"

# A-priori certificate that every intermediate count fits comfortably in the
# checked 128-bit range: M_n <= C(n, ell+1), so cap that binomial.
GUARD_LIMIT = 2**120


class OverflowGuardError(Exception):
    """Requested table size fails the a-priori 128-bit overflow certificate."""


class TableError(Exception):
    """Base class for table cache file problems."""


class CorruptTableError(TableError):
    """Table file is malformed or truncated."""


class TableVersionError(TableError):
    """Table file declares an unsupported format version."""


class TableInvariantError(TableError):
    """Table data violates a structural invariant."""


def max_safe_nmax(ell: int) -> int:
    """Largest nmax whose binomial certificate C(nmax, ell+1) stays in range."""
    lo, hi = ell + 1, ell + 2
    while math.comb(hi, ell + 1) <= GUARD_LIMIT:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, ell + 1) <= GUARD_LIMIT:
            lo = mid
        else:
            hi = mid
    return lo


def _check_guard(ell: int, nmax: int) -> None:
    if nmax > ell and math.comb(nmax, ell + 1) > GUARD_LIMIT:
        raise OverflowGuardError(
            f"nmax={nmax} exceeds the overflow guard for ell={ell}; "
            f"largest safe nmax is {max_safe_nmax(ell)}"
        )


@dataclass(frozen=True)
class PackingTable:
    """Exact values M_n (``m_values``) and k_n (``k_values``) for one ell.

    Both arrays are indexed directly by n.  ``m_values[0] = 0`` encodes the
    empty permutation; ``k_values[n]`` is ``None`` for n <= ell, where k_n is
    undefined.
    """

    ell: int
    nmax: int
    m_values: tuple[int, ...]
    k_values: tuple[int | None, ...]

    def __post_init__(self):
        if self.ell < 2:
            raise ValueError(f"ell must be >= 2, got {self.ell}")
        if self.nmax < 1:
            raise ValueError(f"nmax must be >= 1, got {self.nmax}")
        if len(self.m_values) != self.nmax + 1 or len(self.k_values) != self.nmax + 1:
            raise ValueError("table arrays must cover indices 0..nmax")

    def m(self, n: int) -> int:
        """M_n (n = 0 allowed; M_0 = 0)."""
        if not 0 <= n <= self.nmax:
            raise ValueError(f"n={n} outside table range 0..{self.nmax}")
        return self.m_values[n]

    def k(self, n: int) -> int:
        """k_n, defined for ell < n <= nmax."""
        if not self.ell < n <= self.nmax:
            raise ValueError(f"k_n undefined for n={n} (need {self.ell} < n <= {self.nmax})")
        value = self.k_values[n]
        assert value is not None
        return value

    def density(self, n: int) -> Fraction:
        """Exact density M_n / C(n, ell+1), defined for n >= ell+1."""
        if not self.ell + 1 <= n <= self.nmax:
            raise ValueError(f"density undefined for n={n}")
        return Fraction(self.m_values[n], math.comb(n, self.ell + 1))


def build_table(ell: int, nmax: int) -> PackingTable:
    """Fill the recurrence for n = 1..nmax; k_n is the largest maximizer."""
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    if nmax < 1:
        raise ValueError(f"nmax must be >= 1, got {nmax}")
    _check_guard(ell, nmax)
    binom = [math.comb(m, ell) for m in range(nmax + 1)]
    m_values = [0] * (nmax + 1)
    k_values: list[int | None] = [None] * (nmax + 1)
    for n in range(ell + 1, nmax + 1):
        best, best_k = -1, 1
        for k in range(1, n):
            v = m_values[k] + k * binom[n - k]
            if v >= best:
                best, best_k = v, k
        m_values[n] = best
        k_values[n] = best_k
    return PackingTable(ell, nmax, tuple(m_values), tuple(k_values))


def extend_table(table: PackingTable, nmax: int) -> PackingTable:
    """Continue the recurrence of an existing table up to a larger nmax."""
    if nmax <= table.nmax:
        return truncate_table(table, nmax)
    _check_guard(table.ell, nmax)
    ell = table.ell
    binom = [math.comb(m, ell) for m in range(nmax + 1)]
    m_values = list(table.m_values) + [0] * (nmax - table.nmax)
    k_values = list(table.k_values) + [None] * (nmax - table.nmax)
    for n in range(max(ell + 1, table.nmax + 1), nmax + 1):
        best, best_k = -1, 1
        for k in range(1, n):
            v = m_values[k] + k * binom[n - k]
            if v >= best:
                best, best_k = v, k
        m_values[n] = best
        k_values[n] = best_k
    return PackingTable(ell, nmax, tuple(m_values), tuple(k_values))


def truncate_table(table: PackingTable, nmax: int) -> PackingTable:
    """Restrict a table to a smaller nmax (invariants are preserved)."""
    if not 1 <= nmax <= table.nmax:
        raise ValueError(f"nmax={nmax} outside 1..{table.nmax}")
    if nmax == table.nmax:
        return table
    return PackingTable(
        table.ell, nmax, table.m_values[: nmax + 1], table.k_values[: nmax + 1]
    )


@dataclass(frozen=True)
class CSeq:
    """The sequence c_{n,i} = M_i + i*C(n-i, ell) for i = 1..n-1.

    ``k_turn`` is the table's k_n; ``j_turn`` is the end of the maximal
    strictly-decreasing run that starts at k_turn (equal to n-1 when the
    final weakly-increasing segment is empty).
    """

    ell: int
    n: int
    values: tuple[int, ...]
    k_turn: int
    j_turn: int

    def __post_init__(self):
        if len(self.values) != self.n - 1:
            raise ValueError(f"need n-1 = {self.n - 1} values, got {len(self.values)}")
        if not 1 <= self.k_turn <= self.n - 1:
            raise ValueError(f"k_turn={self.k_turn} outside 1..{self.n - 1}")
        if not self.k_turn <= self.j_turn <= self.n - 1:
            raise ValueError(f"j_turn={self.j_turn} outside {self.k_turn}..{self.n - 1}")

    def value(self, i: int) -> int:
        """c_{n,i} for 1 <= i <= n-1."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"i={i} outside 1..{self.n - 1}")
        return self.values[i - 1]


def descent_run_end(values: tuple[int, ...], k: int) -> int:
    """Last index of the maximal strict descent in ``values`` starting at index k.

    ``values`` holds c_{n,i} for i = 1..n-1 (0-based storage).  Returns k
    itself when c_{n,k+1} >= c_{n,k}.
    """
    j = k
    while j + 1 <= len(values) and values[j] < values[j - 1]:
        j += 1
    return j


def c_sequence(table: PackingTable, n: int) -> CSeq:
    """The c_{n,i} sequence for one n, with its two turning indices."""
    if not table.ell < n <= table.nmax:
        raise ValueError(f"n={n} outside table range ({table.ell}, {table.nmax}]")
    ell = table.ell
    mv = table.m_values
    values = tuple(mv[i] + i * math.comb(n - i, ell) for i in range(1, n))
    k_turn = table.k(n)
    j_turn = descent_run_end(values, k_turn)
    return CSeq(ell, n, values, k_turn, j_turn)


def first_n_with_k(table: PackingTable, k: int) -> int | None:
    """n_k: least n with k_n = k, or None if k is not attained in the table."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    for n in range(table.ell + 1, table.nmax + 1):
        if table.k_values[n] == k:
            return n
    return None


def last_n_with_k(table: PackingTable, k: int) -> int | None:
    """n'_k: greatest n with k_n = k; None when right-censored at the table edge.

    The answer is only known when k < k_nmax, since larger tables may extend
    the run of any k that is still active at nmax.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    k_last = table.k_values[table.nmax]
    if k_last is None or k >= k_last:
        return None
    for n in range(table.nmax, table.ell, -1):
        if table.k_values[n] == k:
            return n
    return None


def optimal_layer_profile(table: PackingTable, n: int) -> LayerProfile:
    """An optimal layered witness: peel last layers of length n - k_n.

    For n <= ell any profile attains M_n = 0; the canonical choice is a
    single layer.
    """
    if not 1 <= n <= table.nmax:
        raise ValueError(f"n={n} outside table range 1..{table.nmax}")
    reversed_layers = []
    while n > table.ell:
        k = table.k(n)
        reversed_layers.append(n - k)
        n = k
    reversed_layers.append(n)
    return LayerProfile(tuple(reversed(reversed_layers)))


def validate_table(table: PackingTable) -> None:
    """Re-check every structural invariant; raise TableInvariantError on failure.

    Checks: M_n = 0 for n <= ell; monotonicity of M; the recurrence value and
    the largest-maximizer tie-break for every n; continuity of k_n; and the
    weakly decreasing density M_n / C(n, ell+1).
    """
    ell, nmax = table.ell, table.nmax
    mv, kv = table.m_values, table.k_values
    if mv[0] != 0:
        raise TableInvariantError("M_0 must be 0")
    for n in range(1, min(ell, nmax) + 1):
        if mv[n] != 0:
            raise TableInvariantError(f"M_{n} must be 0 for n <= ell, got {mv[n]}")
        if kv[n] is not None:
            raise TableInvariantError(f"k_{n} must be undefined for n <= ell")
    binom = [math.comb(m, ell) for m in range(nmax + 1)]
    for n in range(ell + 1, nmax + 1):
        best, best_k = -1, None
        for k in range(1, n):
            v = mv[k] + k * binom[n - k]
            if v >= best:
                best, best_k = v, k
        if mv[n] != best:
            raise TableInvariantError(f"M_{n}={mv[n]} violates the recurrence (expected {best})")
        if kv[n] != best_k:
            raise TableInvariantError(
                f"k_{n}={kv[n]} is not the largest maximizer (expected {best_k})"
            )
    for n in range(1, nmax + 1):
        if mv[n] < mv[n - 1]:
            raise TableInvariantError(f"M is decreasing at n={n}")
    for n in range(ell + 2, nmax + 1):
        prev = kv[n - 1]
        cur = kv[n]
        assert prev is not None and cur is not None
        if not prev <= cur <= prev + 1:
            raise TableInvariantError(f"k_n jumps at n={n}: {prev} -> {cur}")
    big = [math.comb(m, ell + 1) for m in range(nmax + 1)]
    for n in range(ell + 2, nmax + 1):
        # M_n / C(n, ell+1) <= M_{n-1} / C(n-1, ell+1), cross-multiplied
        if mv[n] * big[n - 1] > mv[n - 1] * big[n]:
            raise TableInvariantError(f"density increases at n={n}")


def save_table(table: PackingTable, path: str | os.PathLike) -> None:
    """Write the self-describing text format (see TABLE_FORMAT)."""
    m_text = ",".join(str(table.m_values[n]) for n in range(1, table.nmax + 1))
    k_text = ",".join(
        str(table.k_values[n]) for n in range(table.ell + 1, table.nmax + 1)
    )
    body = (
        f"format={TABLE_FORMAT}\n"
        f"ell={table.ell}\n"
        f"nmax={table.nmax}\n"
        f"M={m_text}\n"
        f"K={k_text}\n"
    )
    with open(path, "w", encoding="ascii") as fh:
        fh.write(body)


def load_table(path: str | os.PathLike) -> PackingTable:
    """Read and fully re-validate a saved table.

    Raises CorruptTableError for malformed files, TableVersionError for an
    unknown format version, and TableInvariantError when the data fails
    validation (tamper detection).
    """
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    fields: dict[str, str] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise CorruptTableError(f"malformed line in table file: {line!r}")
        if key in fields:
            raise CorruptTableError(f"duplicate key in table file: {key}")
        fields[key] = value
    missing = {"format", "ell", "nmax", "M", "K"} - fields.keys()
    if missing:
        raise CorruptTableError(f"table file missing keys: {sorted(missing)}")
    if fields["format"] != TABLE_FORMAT:
        raise TableVersionError(f"unsupported table format: {fields['format']!r}")
    try:
        ell = int(fields["ell"])
        nmax = int(fields["nmax"])
        m_list = [int(x) for x in fields["M"].split(",")] if fields["M"] else []
        k_list = [int(x) for x in fields["K"].split(",")] if fields["K"] else []
    except ValueError as exc:
        raise CorruptTableError(f"unparseable integer in table file: {exc}") from None
    if ell < 2 or nmax < 1:
        raise CorruptTableError(f"invalid header values ell={ell}, nmax={nmax}")
    if len(m_list) != nmax or len(k_list) != max(0, nmax - ell):
        raise CorruptTableError(
            f"array lengths inconsistent with nmax={nmax}, ell={ell}: "
            f"|M|={len(m_list)}, |K|={len(k_list)}"
        )
    _check_guard(ell, nmax)
    m_values = tuple([0] + m_list)
    k_values: tuple[int | None, ...] = tuple(
        [None] * (min(ell, nmax) + 1) + k_list
    )
    table = PackingTable(ell, nmax, m_values, k_values)
    validate_table(table)
    return table


def table_rows(table: PackingTable) -> Iterator[tuple[int, int, int | None, Fraction | None]]:
    """Rows (n, M_n, k_n, density) for export; k/density are None where undefined."""
    for n in range(1, table.nmax + 1):
        k = table.k_values[n]
        density = table.density(n) if n >= table.ell + 1 else None
        yield n, table.m_values[n], k, density
