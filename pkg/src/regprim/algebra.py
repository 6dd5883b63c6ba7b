"""Products of distributions with BV multipliers, integration by parts, Hoelder bounds.

For f with primitive F and g of bounded variation the product fg is the
distribution with primitive

    Psi(x) = F(x) g(x) - int_{[-inf, x]} F dg
             - sum over c < x of [F(c) - F(c+)] [g(c) - g(c+)],

the sum running over points where neither F nor g is right-continuous.
The Stieltjes integral up to x uses the node value g(x), so a jump of g at x
contributes F(x) [g(x) - g(x-)].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bv import bv_norm, inf_abs, normalization_parameter, variation
from .distribution import (
    INF, Distribution, IntervalSpec, alexiewicz_norm, indicator, integrate, norm_prime,
    primitive_of,
)
from .exact import (
    ExactSum, NormValue, Point, PreconditionError, as_fraction, possibly_le, sign_at, value_max,
)
from .regulated import (
    PiecewiseFunction, build, canonicalize, common_refinement, extreme_candidates, is_br, lift,
    ramp,
)
from .stieltjes import hs_sum


def psi_primitive(f: Distribution, g) -> PiecewiseFunction:
    """The primitive of the product fg, built piece by piece."""
    F = primitive_of(f)
    g = lift(g)
    F.require_rational("the product primitive")
    g.require_rational("the product primitive")
    pts, sF, vF, sg, vg = common_refinement(F, g)
    segs = []
    vals = []
    acc = Fraction(0)      # int F dg over [-inf, s+]
    corr = Fraction(0)     # corrections at points <= s
    prev = None
    for j in range(len(sF)):
        p, q = sF[j], sg[j]
        anti = (p * q.derivative()).antiderivative()
        start = anti(prev) if prev is not None else Fraction(0)
        segs.append(p * q - anti - (acc - start) - corr)
        if j == len(pts):
            break
        x = pts[j]
        acc += anti(x) - start
        fx, gx = vF[j](x), vg[j](x)
        gl, gr = q(x), sg[j + 1](x)
        vals.append(fx * gx - (acc + fx * (gx - gl)) - corr)
        acc += fx * (gr - gl)
        corr += (fx - sF[j + 1](x)) * (gx - gr)
        prev = x
    psi = build(list(pts), segs, vals)
    if not is_br(psi):
        raise AssertionError("product primitive failed the left-continuity check")
    return canonicalize(psi)


def product(f: Distribution, g) -> Distribution:
    return Distribution(psi_primitive(f, g))


def common_right_discontinuities(F: PiecewiseFunction, g) -> list[Point]:
    """Points where neither F nor g is right-continuous."""
    pts, sF, vF, sg, vg = common_refinement(F, lift(g))
    return [x for i, x in enumerate(pts)
            if sign_at(vF[i] - sF[i + 1], x) and sign_at(vg[i] - sg[i + 1], x)]


def correction_sum(F: PiecewiseFunction, g) -> ExactSum:
    pts, sF, vF, sg, vg = common_refinement(F, lift(g))
    out = ExactSum()
    for i, x in enumerate(pts):
        out.add_at((vF[i] - sF[i + 1]) * (vg[i] - sg[i + 1]), x)
    return out


def ibp_sum(f: Distribution, g) -> ExactSum:
    F = primitive_of(f)
    g = lift(g)
    out = ExactSum().add(F.right_tail * g.right_tail)
    out.add(hs_sum(F, g, IntervalSpec.real_line()).negated())
    out.add(correction_sum(F, g).negated())
    return out


def integrate_by_parts(f: Distribution, g, eps=None) -> NormValue:
    """int fg = F(inf) g(inf) - int F dg - sum [F(c) - F(c+)][g(c) - g(c+)]."""
    return ibp_sum(f, g).value(eps)


def integrate_product(f: Distribution, g, interval: IntervalSpec | None = None) -> NormValue:
    """int over an interval of fg, via the product's primitive."""
    interval = IntervalSpec.real_line() if interval is None else interval
    return integrate(product(f, g), interval)


@dataclass(frozen=True)
class HolderReport:
    value: NormValue
    first: NormValue      # |int f| |g(inf)| + ||f|| V g
    second: NormValue     # ||f|| ||g||_BV
    holds: bool


def holder_bound(f: Distribution, g, eps=None) -> HolderReport:
    g = lift(g)
    value = integrate_by_parts(f, g, eps)
    norm = alexiewicz_norm(f, eps)
    vg = variation(g, eps)
    first = abs(primitive_of(f).right_tail) * abs(g.right_tail) + norm * vg
    second = norm * bv_norm(g, eps)
    holds = possibly_le(abs(value), first) and possibly_le(first, second)
    return HolderReport(value, first, second, holds)


def holder_alternative(f: Distribution, g, eps=None) -> HolderReport:
    """|int fg| <= |int f| inf|g| + ||f||' V g, for lambda-normalised g."""
    g = lift(g)
    if normalization_parameter(g) is None:
        raise PreconditionError("the alternative bound needs a lambda-normalised multiplier")
    value = integrate_by_parts(f, g, eps)
    bound = abs(primitive_of(f).right_tail) * inf_abs(g, eps) + norm_prime(f, eps) * variation(g, eps)
    return HolderReport(value, bound, bound, possibly_le(abs(value), bound))


def sharpness_pair(height, left, right, anchor, width=1):
    """f with primitive ramping from 0 to height over [0, width]; g = left up to anchor, right after.

    Then int fg = height * right + (left - right) F(anchor); with anchor >= width
    the first Hoelder bound is attained.
    """
    f = Distribution(ramp(0, width, height))
    g = PiecewiseFunction([anchor], [], [left], left, right)
    return f, g


def sharpness_ratio(height, left, right, anchor, width=1) -> Fraction:
    f, g = sharpness_pair(height, left, right, anchor, width)
    rep = holder_bound(f, g)
    return as_fraction(rep.value) / as_fraction(rep.first)


def norm_double_prime_bounds(f: Distribution, eps=None) -> tuple[NormValue, NormValue]:
    """Bounds for sup |int fg| over ||g||_inf <= 1, V g <= 1.

    The lower bound pairs f with half-line indicators through integration
    by parts; the upper bound is twice the Alexiewicz norm.
    """
    F = primitive_of(f)
    best: NormValue = abs(F.right_tail)
    for _, x in extreme_candidates(F, use_values=False):
        if not isinstance(x, Fraction):
            continue
        for closed in (False, True):
            chi = indicator(IntervalSpec(-INF, x, True, closed))
            best = value_max(best, abs(integrate_by_parts(f, chi, eps)))
    return best, 2 * alexiewicz_norm(f, eps)
