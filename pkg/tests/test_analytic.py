import math
from fractions import Fraction

import pytest

from packdense import (
    AffineBound,
    BoundExpr,
    Enclosures,
    RationalInterval,
    Verdict,
    alpha_enclosure,
    beta_enclosure,
    check_beta_identity,
    check_beta_max_expression,
    decide,
    eval_bound,
    f_ell_at,
)

CHART = {
    2: (Fraction("0.366"), Fraction("0.464")),
    3: (Fraction("0.253"), Fraction("0.424")),
    4: (Fraction("0.200"), Fraction("0.410")),
    5: (Fraction("0.167"), Fraction("0.402")),
}
WINDOW = Fraction(5, 10**4)


def sqrt3_interval(digits=40):
    """Rational enclosure of sqrt(3) of width 10^-digits."""
    scale = 10**digits
    root = math.isqrt(3 * scale * scale)
    return RationalInterval(Fraction(root, scale), Fraction(root + 1, scale))


def test_f_ell_values():
    for ell in range(2, 9):
        assert f_ell_at(ell, Fraction(1)) == 0
        assert f_ell_at(ell, Fraction(0)) == 1
        assert f_ell_at(ell, Fraction(1, ell + 1)) > 0
        assert f_ell_at(ell, Fraction(1, ell)) < 0
    with pytest.raises(ValueError):
        f_ell_at(1, Fraction(1, 2))


@pytest.mark.parametrize("ell", [2, 3, 4, 5, 7])
def test_alpha_enclosure_bracket(ell):
    for tol in (Fraction(1, 10**4), Fraction(1, 10**12)):
        iv = alpha_enclosure(ell, tol)
        assert iv.width <= tol
        assert Fraction(1, ell + 1) < iv.lo <= iv.hi < Fraction(1, ell)
        assert f_ell_at(ell, iv.lo) > 0 > f_ell_at(ell, iv.hi)
    with pytest.raises(ValueError):
        alpha_enclosure(ell, 0)


def test_chart_values():
    for ell, (alpha_chart, beta_chart) in CHART.items():
        alpha = alpha_enclosure(ell, Fraction(1, 10**9))
        beta = beta_enclosure(ell, Fraction(1, 10**9))
        assert alpha_chart - WINDOW < alpha.lo and alpha.hi < alpha_chart + WINDOW
        assert beta_chart - WINDOW < beta.lo and beta.hi < beta_chart + WINDOW


def test_l2_closed_forms():
    # alpha = (sqrt(3)-1)/2 and beta = 2*sqrt(3)-3
    s3 = sqrt3_interval()
    alpha_target = RationalInterval((s3.lo - 1) / 2, (s3.hi - 1) / 2)
    beta_target = RationalInterval(2 * s3.lo - 3, 2 * s3.hi - 3)
    tol = Fraction(1, 10**13)
    alpha = alpha_enclosure(2, tol)
    beta = beta_enclosure(2, tol)
    assert alpha.overlaps(alpha_target)
    assert beta.overlaps(beta_target)
    assert abs(beta.midpoint - beta_target.midpoint) <= Fraction(1, 10**12)
    # beta = 4*alpha - 1 at every refinement
    enc = Enclosures(2)
    for width in (Fraction(1, 2**20), Fraction(1, 2**60), Fraction(1, 2**100)):
        a = enc.alpha(width)
        b = enc.beta(width)
        assert b.overlaps(RationalInterval(4 * a.lo - 1, 4 * a.hi - 1))


def test_alpha_decreasing_in_ell():
    tol = Fraction(1, 10**6)
    intervals = {ell: alpha_enclosure(ell, tol) for ell in range(2, 8)}
    for ell in range(2, 7):
        assert intervals[ell + 1].hi < intervals[ell].lo


def test_beta_upper_bounds():
    for ell in range(2, 9):
        hi = beta_enclosure(ell, Fraction(1, 10**6)).hi
        cap = Fraction(ell - 1, ell) ** (ell - 1)
        assert hi <= cap <= Fraction(1, 2)


def test_beta_identity():
    assert check_beta_identity(2, Fraction(1, 10**10)) is Verdict.PASS
    assert check_beta_identity(5, Fraction(1, 10**10)) is Verdict.PASS
    # fault injection: a beta interval shifted by 0.01 no longer overlaps
    beta = beta_enclosure(3, Fraction(1, 10**10))
    shifted = beta.shift(Fraction(1, 100))
    assert not beta.overlaps(shifted)


def test_beta_max_expression():
    for ell in (2, 3, 5):
        assert check_beta_max_expression(ell) is Verdict.PASS


def test_eval_bound_examples():
    enc = Enclosures(2)
    # zero coefficient collapses to the exact point 0
    zero = eval_bound(BoundExpr("main_lower", 2, 2), enc)
    assert zero.lo == zero.hi == 0
    # beta * 31^3 / 6 ~ 2304.3, comfortably above M_30 = 1968
    upper = eval_bound(BoundExpr("main_upper", 2, 30), enc)
    assert 2304 < upper.lo <= upper.hi < 2305
    ok, _ = decide(1968, "le", BoundExpr("main_upper", 2, 30), enc)
    assert ok is True
    # beta * 16^2 / 2 ~ 59.405 < 60: the documented strict-bound violation
    strict = eval_bound(BoundExpr("diff_upper_strict", 2, 17), enc)
    assert Fraction("59.404") < strict.lo <= strict.hi < Fraction("59.406")
    ok, iv = decide(60, "le", BoundExpr("diff_upper_strict", 2, 17), enc)
    assert ok is False
    assert iv.hi < 60
    # rational kinds evaluate exactly
    crude = eval_bound(BoundExpr("crude_upper", 2, 30), enc)
    assert crude.lo == crude.hi == Fraction(30, 2)


def test_decide_relations_exact_bound():
    enc = Enclosures(2)
    five = AffineBound(offset=Fraction(5))
    assert decide(5, "le", five, enc)[0] is True
    assert decide(5, "lt", five, enc)[0] is False
    assert decide(5, "ge", five, enc)[0] is True
    assert decide(5, "gt", five, enc)[0] is False
    assert decide(4, "lt", five, enc)[0] is True
    assert decide(6, "gt", five, enc)[0] is True
    with pytest.raises(ValueError):
        decide(5, "eq", five, enc)


def test_decide_inconclusive_is_representable():
    class StuckEnclosures:
        """Never refines: keeps every comparison inside the interval."""

        def alpha(self, width):
            return RationalInterval(Fraction(0), Fraction(1))

        def beta(self, width):
            return RationalInterval(Fraction(0), Fraction(1))

    ok, iv = decide(Fraction(1, 2), "le", AffineBound(alpha_coef=Fraction(1)), StuckEnclosures())
    assert ok is None
    assert iv.lo == 0 and iv.hi == 1


def test_bound_expr_validation():
    with pytest.raises(ValueError):
        BoundExpr("no_such_kind", 2, 10)
    with pytest.raises(ValueError):
        BoundExpr("main_lower", 1, 10)
    # general_lower defaults L to ell+1 and then matches main_lower
    enc = Enclosures(3)
    a = eval_bound(BoundExpr("general_lower", 3, 20), enc)
    b = eval_bound(BoundExpr("main_lower", 3, 20), enc)
    assert a == b


def test_interval_operations():
    iv = RationalInterval(Fraction(1), Fraction(2))
    assert iv.scale(Fraction(-1)) == RationalInterval(Fraction(-2), Fraction(-1))
    assert iv.shift(Fraction(1)) == RationalInterval(Fraction(2), Fraction(3))
    assert (iv + iv).width == 2 * iv.width
    assert iv.contains(Fraction(3, 2))
    assert not iv.contains(Fraction(3))
    assert iv.overlaps(RationalInterval(Fraction(2), Fraction(5)))
    assert not iv.overlaps(RationalInterval(Fraction(3), Fraction(5)))
    with pytest.raises(ValueError):
        RationalInterval(Fraction(2), Fraction(1))
