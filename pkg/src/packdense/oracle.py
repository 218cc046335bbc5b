"""Independent brute-force ground truth for the packing tables.

Two exhaustive searches, deliberately independent of the table recurrence:

* a sweep over all of S_n (vectorized over the full permutation matrix),
  establishing M_{n,q} for arbitrary patterns q at tiny n, together with a
  witness and whether any layered permutation attains the maximum;
* a sweep over all layer compositions of n, establishing the layered maximum
  for q_ell.  Small n enumerates every composition directly from the bitmask
  of ascent positions; larger n shares identical subproblems through suffix
  maxima keyed on (prefix length, remaining length), which is the same
  exhaustive maximization without the table's optimal-prefix shortcut or any
  k_n bookkeeping.

Caps are hard errors: an oracle that silently under-searches is worse than
none.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from .patterns import Permutation, decompose_layers, identity
from .report import Verdict

SN_SWEEP_CAP = 10
MASK_SWEEP_CAP = 26
SUFFIX_SWEEP_CAP = 60
DENSITY_PROBE_CAP = 9


@dataclass(frozen=True)
class OracleResult:
    """Outcome of an exhaustive S_n sweep for one pattern."""

    n: int
    q: Permutation
    max_count: int
    witness: Permutation
    layered_witness_exists: bool


def _permutation_matrix(n: int) -> np.ndarray:
    """All of S_n as an (n!, n) int8 matrix, rows in lexicographic order."""
    count = math.factorial(n)
    flat = np.fromiter(
        (v for p in permutations(range(1, n + 1)) for v in p),
        dtype=np.int8,
        count=count * n,
    )
    return flat.reshape(count, n)


def brute_force_Mnq(n: int, q: Permutation, *, max_n: int = SN_SWEEP_CAP) -> OracleResult:
    """Exact maximum of c_q over all of S_n, by exhaustive sweep.

    The witness is the lexicographically least maximizer.  Refuses n beyond
    the cap (cost grows as n! * C(n, |q|)).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise ValueError(f"S_n sweep refused: n={n} exceeds the cap {max_n}")
    length = q.n
    if length > n:
        # every permutation contains 0 copies; the identity is the
        # lexicographically least (layered) witness
        return OracleResult(n, q, 0, identity(n), True)
    matrix = _permutation_matrix(n)
    order = sorted(range(length), key=q.ranks.__getitem__)
    counts = np.zeros(len(matrix), dtype=np.int64)
    for combo in combinations(range(n), length):
        cols = matrix[:, [combo[t] for t in order]]
        counts += np.all(cols[:, :-1] < cols[:, 1:], axis=1)
    max_count = int(counts.max())
    witness_row = int(np.argmax(counts))
    witness = Permutation(tuple(int(x) for x in matrix[witness_row]))
    layered = False
    for row in np.flatnonzero(counts == max_count):
        p = Permutation(tuple(int(x) for x in matrix[row]))
        if decompose_layers(p) is not None:
            layered = True
            break
    return OracleResult(n, q, max_count, witness, layered)


def _layered_max_masks(n: int, ell: int) -> int:
    """Max of the layered count over all 2^(n-1) compositions, via ascent masks."""
    binom = [math.comb(m, ell) for m in range(n + 1)]
    best = 0
    for mask in range(1 << (n - 1)):
        total = prefix = start = 0
        for pos in range(n - 1):
            if (mask >> pos) & 1:
                b = pos + 1 - start
                total += prefix * binom[b]
                prefix += b
                start = pos + 1
        total += prefix * binom[n - start]
        if total > best:
            best = total
    return best


def _layered_max_suffix(n: int, ell: int) -> int:
    """Same maximum via shared suffix subproblems.

    best[t][m]: the most copies contributed by layers covering the last m
    elements when t elements precede them.  Maximizing over the first layer
    length b gives best[t][m] = max_b ( t*C(b, ell) + best[t+b][m-b] ); the
    answer is best[0][n].  This ranges over every composition exactly once
    up to sharing, with no appeal to optimal-prefix structure.
    """
    binom = [math.comb(m, ell) for m in range(n + 1)]
    best = [[0] * (n - t + 1) for t in range(n + 1)]
    for t in range(n, -1, -1):
        for m in range(1, n - t + 1):
            best[t][m] = max(
                t * binom[b] + best[t + b][m - b] for b in range(1, m + 1)
            )
    return best[0][n]


def brute_force_layered(n: int, ell: int, *, method: str = "auto", max_n: int = SUFFIX_SWEEP_CAP) -> int:
    """Exact maximum of the q_ell count over all layered n-permutations.

    ``method``: ``"masks"`` enumerates every composition from its ascent
    bitmask (cost 2^(n-1), capped at n = 26); ``"suffix"`` shares suffix
    subproblems (capped at ``max_n``); ``"auto"`` picks masks for n <= 16.
    """
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if method == "auto":
        method = "masks" if n <= 16 else "suffix"
    if method == "masks":
        if n > MASK_SWEEP_CAP:
            raise ValueError(f"mask sweep refused: n={n} exceeds the cap {MASK_SWEEP_CAP}")
        return _layered_max_masks(n, ell)
    if method == "suffix":
        if n > max_n:
            raise ValueError(f"suffix sweep refused: n={n} exceeds the cap {max_n}")
        return _layered_max_suffix(n, ell)
    raise ValueError(f"unknown method: {method!r}")


def density_sequence(q: Permutation, nmax: int, *, max_n: int = SN_SWEEP_CAP) -> list[Fraction]:
    """Exact densities M_{n,q} / C(n, |q|) for n = |q|..nmax, by brute force."""
    if not q.n <= nmax:
        raise ValueError(f"need |q| <= nmax, got |q|={q.n}, nmax={nmax}")
    return [
        Fraction(brute_force_Mnq(n, q, max_n=max_n).max_count, math.comb(n, q.n))
        for n in range(q.n, nmax + 1)
    ]


def density_monotonicity_probe(q: Permutation, nmax: int) -> Verdict:
    """Check that the brute-force density of q is weakly decreasing up to nmax."""
    if nmax > DENSITY_PROBE_CAP:
        raise ValueError(f"density probe refused: nmax={nmax} exceeds the cap {DENSITY_PROBE_CAP}")
    densities = density_sequence(q, nmax)
    for prev, cur in zip(densities, densities[1:]):
        if cur > prev:
            return Verdict.FAIL
    return Verdict.PASS
