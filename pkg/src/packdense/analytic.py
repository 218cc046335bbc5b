"""Certified rational enclosures of the packing constants and bound expressions.

For each ell >= 2 the constant alpha is the unique root of

    f_ell(x) = ell*x^(ell+1) - (ell+1)*x + 1

in (0, 1); it lies strictly between 1/(ell+1) and 1/ell because f_ell is
positive at the left endpoint and negative at the right one.  The packing
density of q_ell is beta = ell*alpha*(1-alpha)^(ell-1).

Enclosures are exact rational intervals produced by bisection; every sign
evaluation is exact, so bracketing is never lost.  Comparisons of table
integers against bound expressions (affine in alpha or beta with rational
coefficients) are decided by refining the enclosure until the integer falls
strictly outside the interval, or a hard refinement floor is reached, in
which case the comparison is reported as undecided.  Binary floating point
never feeds a verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .report import Verdict

#: Enclosure width used for the first attempt at deciding a comparison.
START_WIDTH = Fraction(1, 2**60)
#: Hard floor: a comparison still undecided at this width is INCONCLUSIVE.
FLOOR_WIDTH = Fraction(1, 2**200)


@dataclass(frozen=True)
class RationalInterval:
    """Exact rational enclosure [lo, hi] of a real number."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo = Fraction(self.lo)
        hi = Fraction(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo > hi:
            raise ValueError(f"empty interval: [{lo}, {hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def shift(self, c: Fraction) -> "RationalInterval":
        return RationalInterval(self.lo + c, self.hi + c)

    def scale(self, c: Fraction) -> "RationalInterval":
        if c >= 0:
            return RationalInterval(self.lo * c, self.hi * c)
        return RationalInterval(self.hi * c, self.lo * c)

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: "RationalInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


def f_ell_at(ell: int, x: Fraction) -> Fraction:
    """Exact value of ell*x^(ell+1) - (ell+1)*x + 1."""
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    x = Fraction(x)
    return ell * x ** (ell + 1) - (ell + 1) * x + 1


def _beta_map(ell: int, x: Fraction) -> Fraction:
    """ell*x*(1-x)^(ell-1); increasing on [0, 1/ell], which contains alpha."""
    return ell * x * (1 - x) ** (ell - 1)


class Enclosures:
    """Monotonically refinable alpha/beta enclosures for one ell.

    The bisection state is private to the instance, so sharing one across a
    verification run just caches refinement work; results are identical to
    fresh computation at the same width.
    """

    def __init__(self, ell: int):
        if ell < 2:
            raise ValueError(f"ell must be >= 2, got {ell}")
        self.ell = ell
        lo = Fraction(1, ell + 1)
        hi = Fraction(1, ell)
        if not (f_ell_at(ell, lo) > 0 > f_ell_at(ell, hi)):
            raise AssertionError(f"bracket sign facts failed for ell={ell}")
        self._bracket = (lo, hi)
        self._lo = lo
        self._hi = hi

    def alpha(self, width: Fraction) -> RationalInterval:
        """Enclosure of alpha strictly inside (1/(ell+1), 1/ell), hi - lo <= width."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        ell, lo, hi = self.ell, self._lo, self._hi
        # alpha is strictly interior, so extra bisection steps eventually
        # detach both endpoints from the initial bracket
        while hi - lo > width or lo == self._bracket[0] or hi == self._bracket[1]:
            mid = (lo + hi) / 2
            # f_ell has no rational root inside the bracket (a rational root
            # p/q in lowest terms needs q | ell, so 1/d with d <= ell, none of
            # which lie in (1/(ell+1), 1/ell)), hence the sign is never zero.
            if f_ell_at(ell, mid) > 0:
                lo = mid
            else:
                hi = mid
        self._lo, self._hi = lo, hi
        return RationalInterval(lo, hi)

    def beta(self, width: Fraction) -> RationalInterval:
        """Enclosure of beta = ell*alpha*(1-alpha)^(ell-1) with width <= width."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        ell = self.ell
        alpha_width = width
        while True:
            a = self.alpha(alpha_width)
            iv = RationalInterval(_beta_map(ell, a.lo), _beta_map(ell, a.hi))
            if iv.width <= width:
                return iv
            alpha_width /= 2


def alpha_enclosure(ell: int, tol: Fraction | float | str) -> RationalInterval:
    """Interval [lo, hi] in (1/(ell+1), 1/ell) with f(lo) > 0 > f(hi), width <= tol."""
    return Enclosures(ell).alpha(Fraction(tol))


def beta_enclosure(ell: int, tol: Fraction | float | str) -> RationalInterval:
    """Enclosure of the packing density beta of q_ell, width <= tol."""
    return Enclosures(ell).beta(Fraction(tol))


def check_beta_identity(ell: int, tol: Fraction | float | str = Fraction(1, 10**10)) -> Verdict:
    """Self-test: the intervals for beta and beta*alpha^ell + (1-alpha)^ell overlap.

    The two quantities are equal exactly, so the enclosures must intersect at
    any refinement; disjointness would expose a broken enclosure.
    """
    tol = Fraction(tol)
    enc = Enclosures(ell)
    beta_iv = enc.beta(tol)
    alpha_iv = enc.alpha(tol)
    # beta * alpha^ell: all factors positive
    pow_iv = RationalInterval(alpha_iv.lo**ell, alpha_iv.hi**ell)
    prod = RationalInterval(beta_iv.lo * pow_iv.lo, beta_iv.hi * pow_iv.hi)
    comp = RationalInterval((1 - alpha_iv.hi) ** ell, (1 - alpha_iv.lo) ** ell)
    rhs = prod + comp
    return Verdict.PASS if beta_iv.overlaps(rhs) else Verdict.FAIL


def check_beta_max_expression(ell: int, samples: int = 100) -> Verdict:
    """Sampled sanity check of the extremal expression for beta.

    beta is the maximum over gamma in [0, 1] of
    (ell+1)*gamma*(1-gamma)^(ell-1) / (1 + gamma + ... + gamma^ell), so every
    sampled value must stay below the upper end of the beta enclosure.
    """
    enc = Enclosures(ell)
    hi = enc.beta(START_WIDTH).hi
    for t in range(samples + 1):
        g = Fraction(t, samples)
        numerator = (ell + 1) * g * (1 - g) ** (ell - 1)
        denominator = sum(g**i for i in range(ell + 1))
        if numerator / denominator > hi:
            return Verdict.FAIL
    return Verdict.PASS


BOUND_KINDS = frozenset(
    {
        "main_lower",
        "main_upper",
        "diff_lower",
        "diff_upper_strict",
        "diff_upper_weak",
        "kn_upper_bruce",
        "kn_upper_l2",
        "kn_lower_martin",
        "crude_lower",
        "crude_upper",
        "conj1_M",
        "conj1_k",
        "conj2_k",
        "general_lower",
    }
)


@dataclass(frozen=True)
class AffineBound:
    """alpha_coef*alpha + beta_coef*beta + offset with exact rational coefficients."""

    alpha_coef: Fraction = Fraction(0)
    beta_coef: Fraction = Fraction(0)
    offset: Fraction = Fraction(0)

    def evaluate(self, enclosures: Enclosures, width: Fraction) -> RationalInterval:
        iv = RationalInterval(self.offset, self.offset)
        if self.alpha_coef:
            iv = iv + enclosures.alpha(width).scale(Fraction(self.alpha_coef))
        if self.beta_coef:
            iv = iv + enclosures.beta(width).scale(Fraction(self.beta_coef))
        return iv

    @property
    def is_exact(self) -> bool:
        return not self.alpha_coef and not self.beta_coef


@dataclass(frozen=True)
class BoundExpr:
    """A named bound expression, evaluated as an exact interval.

    ``n`` is the table index the bound is instantiated at; ``L`` is the
    pattern length for ``general_lower`` (defaults to ell+1, i.e. q_ell).
    """

    kind: str
    ell: int
    n: int
    L: int | None = None

    def __post_init__(self):
        if self.kind not in BOUND_KINDS:
            raise ValueError(f"unknown bound kind: {self.kind!r}")
        if self.ell < 2:
            raise ValueError(f"ell must be >= 2, got {self.ell}")

    def affine(self) -> AffineBound:
        ell, n = self.ell, self.n
        kind = self.kind
        if kind == "main_lower":
            return AffineBound(beta_coef=Fraction((n - ell) ** (ell + 1), math.factorial(ell + 1)))
        if kind == "main_upper":
            delta = 1 if ell == 2 else 0
            return AffineBound(beta_coef=Fraction((n + delta) ** (ell + 1), math.factorial(ell + 1)))
        if kind == "diff_lower":
            return AffineBound(beta_coef=Fraction((n - ell) ** ell, math.factorial(ell)))
        if kind == "diff_upper_strict":
            return AffineBound(beta_coef=Fraction((n - 1) ** ell, math.factorial(ell)))
        if kind == "diff_upper_weak":
            return AffineBound(beta_coef=Fraction(n**2, 2))
        if kind == "kn_upper_bruce":
            return AffineBound(alpha_coef=Fraction(n - ell), offset=Fraction(1))
        if kind == "kn_upper_l2":
            return AffineBound(alpha_coef=Fraction(n), offset=Fraction(1, 2))
        if kind == "kn_lower_martin":
            return AffineBound(alpha_coef=Fraction(n - ell), offset=Fraction(-1))
        if kind == "crude_lower":
            return AffineBound(offset=Fraction(n - ell, ell + 1))
        if kind == "crude_upper":
            return AffineBound(offset=Fraction(n, ell))
        if kind == "conj1_M":
            return AffineBound(beta_coef=Fraction(n ** (ell + 1), math.factorial(ell + 1)))
        if kind == "conj1_k":
            return AffineBound(alpha_coef=Fraction(n - ell), offset=Fraction(1))
        if kind == "conj2_k":
            return AffineBound(alpha_coef=Fraction(n - ell))
        if kind == "general_lower":
            L = self.L if self.L is not None else ell + 1
            return AffineBound(beta_coef=Fraction((n - L + 1) ** L, math.factorial(L)))
        raise AssertionError(kind)


def eval_bound(
    expr: BoundExpr,
    enclosures: Enclosures | None = None,
    width: Fraction = START_WIDTH,
) -> RationalInterval:
    """Exact rational interval enclosing the bound's value."""
    enc = enclosures if enclosures is not None else Enclosures(expr.ell)
    return expr.affine().evaluate(enc, width)


def decide(
    value: int | Fraction,
    rel: str,
    bound: AffineBound | BoundExpr,
    enclosures: Enclosures,
) -> tuple[bool | None, RationalInterval]:
    """Decide ``value rel bound`` exactly, refining the enclosure on demand.

    ``rel`` is one of ``"le"``, ``"lt"``, ``"ge"``, ``"gt"``.  Returns the
    verdict (``None`` when the refinement floor is hit without a decision)
    together with the final bound interval, for witness reporting.
    """
    if rel not in ("le", "lt", "ge", "gt"):
        raise ValueError(f"unknown relation: {rel!r}")
    affine = bound.affine() if isinstance(bound, BoundExpr) else bound
    value = Fraction(value)
    width = START_WIDTH
    while True:
        iv = affine.evaluate(enclosures, width)
        if rel == "le":
            if value <= iv.lo:
                return True, iv
            if value > iv.hi:
                return False, iv
        elif rel == "lt":
            if value < iv.lo:
                return True, iv
            if value >= iv.hi:
                return False, iv
        elif rel == "ge":
            if value >= iv.hi:
                return True, iv
            if value < iv.lo:
                return False, iv
        else:  # gt
            if value > iv.hi:
                return True, iv
            if value <= iv.lo:
                return False, iv
        if affine.is_exact or width <= FLOOR_WIDTH:
            return None, iv
        width /= 2
