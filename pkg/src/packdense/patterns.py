"""Permutations, pattern containment, and counting inside layered permutations.

Permutations are written in one-line notation with ranks 1..n.  A *layered*
permutation is a concatenation of descending runs (the layers) whose values
increase from each run to the next; it is determined by the composition of
its layer lengths.  The distinguished patterns handled throughout this
package are

    q_ell = 1 (ell+1) ell ... 2

i.e. a singleton layer followed by one descending layer of length ell.

All counts are exact integers.  Counting operations enforce a checked
signed 128-bit range: a result that would leave it raises
:class:`ArithmeticOverflowError` instead of being returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

INT128_MAX = 2**127 - 1
INT128_MIN = -(2**127)


class ArithmeticOverflowError(OverflowError):
    """An exact count left the checked signed 128-bit range."""


def _checked(value: int) -> int:
    if value > INT128_MAX or value < INT128_MIN:
        raise ArithmeticOverflowError(
            f"exact count outside the 128-bit range: {value}"
        )
    return value


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n in one-line notation.

    >>> Permutation((4, 1, 5, 2, 3)).n
    5
    >>> str(Permutation((1, 3, 2)))
    '132'
    """

    ranks: tuple[int, ...]

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        object.__setattr__(self, "ranks", ranks)
        if sorted(ranks) != list(range(1, len(ranks) + 1)):
            raise ValueError(f"not a permutation of 1..{len(ranks)}: {ranks!r}")

    @property
    def n(self) -> int:
        return len(self.ranks)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse one-line notation.

        Accepts whitespace- or comma-separated ranks, or contiguous digits
        when every rank is a single digit (n <= 9), e.g. ``"41523"``.
        """
        cleaned = text.strip().replace(",", " ")
        if not cleaned:
            raise ValueError("empty permutation text")
        if " " in cleaned:
            parts = cleaned.split()
        elif cleaned.isdigit():
            parts = list(cleaned)
        else:
            raise ValueError(f"cannot parse permutation text: {text!r}")
        return cls(tuple(int(p) for p in parts))

    def reverse_complement(self) -> "Permutation":
        """Reverse the sequence and complement ranks (i -> n+1-i)."""
        n = self.n
        return Permutation(tuple(n + 1 - r for r in reversed(self.ranks)))

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(r) for r in self.ranks)
        return " ".join(str(r) for r in self.ranks)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def qell_pattern(ell: int) -> Permutation:
    """The pattern 1 (ell+1) ell ... 2.

    >>> str(qell_pattern(2))
    '132'
    >>> str(qell_pattern(4))
    '15432'
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    return Permutation((1, ell + 1) + tuple(range(ell, 1, -1)))


def _pattern_ranks(seq: Sequence[int]) -> tuple[int, ...]:
    """Rank sequence of ``seq`` (entries assumed distinct): smallest -> 1."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    out = [0] * len(seq)
    for rank, idx in enumerate(order, start=1):
        out[idx] = rank
    return tuple(out)


def same_type(a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether two sequences of distinct entries have the same pairwise comparisons.

    >>> same_type((1, 5, 2), (1, 3, 2))
    True
    >>> same_type((1, 2, 3), (1, 3, 2))
    False
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return _pattern_ranks(a) == _pattern_ranks(b)


def count_occurrences(p: Permutation, q: Permutation) -> int:
    """Number of subsequences of ``p`` of the same type as ``q``.

    Returns 0 when ``q`` is longer than ``p``.  The search walks positions of
    ``p`` left to right, extending partial matches of a prefix of ``q``; each
    extension is constrained to the single value gap that keeps the chosen
    subsequence order-isomorphic to the corresponding prefix of ``q``.

    >>> count_occurrences(Permutation.parse("41523"), Permutation.parse("132"))
    2
    """
    n, length = p.n, q.n
    if length > n:
        return 0
    if length == 0:
        return 1
    seq = p.ranks
    qr = q.ranks
    # prefix_rank[j]: rank of q[j] among q[0..j] (1-based)
    prefix_rank = tuple(
        sum(1 for t in range(j + 1) if qr[t] <= qr[j]) for j in range(length)
    )
    total = 0

    def extend(j: int, start: int, chosen: tuple[int, ...]) -> None:
        nonlocal total
        r = prefix_rank[j]
        lo = chosen[r - 2] if r >= 2 else 0
        hi = chosen[r - 1] if r - 1 < len(chosen) else n + 1
        last = j == length - 1
        for i in range(start, n - (length - 1 - j)):
            v = seq[i]
            if lo < v < hi:
                if last:
                    total += 1
                else:
                    extend(j + 1, i + 1, chosen[: r - 1] + (v,) + chosen[r - 1 :])

    extend(0, 0, ())
    return _checked(total)


def count_occurrences_naive(p: Permutation, q: Permutation) -> int:
    """Reference counter: enumerate every ``|q|``-subsequence of ``p``.

    Obviously correct and exponentially slower than
    :func:`count_occurrences`; intended as the in-module oracle for
    ``p.n <= 12``.
    """
    if q.n > p.n:
        return 0
    target = _pattern_ranks(q.ranks)
    return _checked(
        sum(1 for sub in combinations(p.ranks, q.n) if _pattern_ranks(sub) == target)
    )


@dataclass(frozen=True)
class LayerProfile:
    """Composition of layer lengths of a layered permutation.

    >>> LayerProfile((3, 2, 3, 1)).n
    9
    >>> str(LayerProfile((3, 2, 3, 1)).expand())
    '321548769'
    """

    layers: tuple[int, ...]

    def __post_init__(self):
        layers = tuple(int(b) for b in self.layers)
        object.__setattr__(self, "layers", layers)
        if not layers:
            raise ValueError("layer profile must be nonempty")
        if any(b < 1 for b in layers):
            raise ValueError(f"layer lengths must be positive: {layers!r}")

    @property
    def n(self) -> int:
        return sum(self.layers)

    @classmethod
    def parse(cls, text: str) -> "LayerProfile":
        """Parse comma-separated layer lengths, e.g. ``"3,2,3,1"``."""
        parts = text.replace(",", " ").split()
        if not parts:
            raise ValueError("empty layer profile text")
        return cls(tuple(int(p) for p in parts))

    def expand(self) -> Permutation:
        """The layered permutation with these layer lengths."""
        ranks: list[int] = []
        top = 0
        for b in self.layers:
            ranks.extend(range(top + b, top, -1))
            top += b
        return Permutation(tuple(ranks))

    def __str__(self) -> str:
        return ",".join(str(b) for b in self.layers)


def decompose_layers(p: Permutation) -> LayerProfile | None:
    """Layer-length profile of ``p``, or ``None`` when ``p`` is not layered.

    >>> decompose_layers(Permutation.parse("321548769"))
    LayerProfile(layers=(3, 2, 3, 1))
    >>> decompose_layers(Permutation.parse("2413")) is None
    True
    """
    ranks = p.ranks
    if not ranks:
        return None
    lengths = []
    run = 1
    for i in range(1, len(ranks)):
        if ranks[i] < ranks[i - 1]:
            run += 1
        else:
            lengths.append(run)
            run = 1
    lengths.append(run)
    profile = LayerProfile(tuple(lengths))
    return profile if profile.expand() == p else None


def count_qell_in_layered(profile: LayerProfile, ell: int) -> int:
    """Copies of ``q_ell`` in the layered permutation with this profile.

    Each copy consists of the descending ell-part inside a single layer plus
    one smaller element taken from any earlier layer, giving

        sum over layers j >= 2 of (b_1 + ... + b_{j-1}) * C(b_j, ell).
    """
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    total = 0
    prefix = 0
    for b in profile.layers:
        if prefix:
            total = _checked(total + _checked(prefix * math.comb(b, ell)))
        prefix += b
    return total


def count_layered_in_layered(q_profile: LayerProfile, p_profile: LayerProfile) -> int:
    """Copies of one layered pattern inside another, both given by profiles.

    Every layer of the pattern must embed inside a single layer of the host
    (a descent cannot cross host layers), and distinct pattern layers land in
    distinct host layers in increasing order, so the count is

        sum over j_1 < ... < j_r of prod_i C(b_{j_i}, a_i)

    where (a_i) are the pattern's layers and (b_j) the host's.
    """
    a, b = q_profile.layers, p_profile.layers
    r = len(a)
    # ways[i] = embeddings of pattern layers a[i:] into the host layers
    # processed so far (scanning hosts right to left)
    ways = [0] * r + [1]
    for bj in reversed(b):
        nxt = ways[:]
        for i in range(r - 1, -1, -1):
            nxt[i] = _checked(
                ways[i] + _checked(math.comb(bj, a[i]) * ways[i + 1])
            )
        ways = nxt
    return ways[0]
