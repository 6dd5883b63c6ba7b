"""Functions of bounded variation: variation, BV norms, normalisation."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    ExactSum, NormValue, PreconditionError, as_fraction, max_of, rational_between, sign_at,
)
from .regulated import (
    PiecewiseFunction, _gap_bounds, build, canonicalize, critical_points, extreme_candidates,
    lift, roots_between, sup_norm,
)


def variation_sum(g: PiecewiseFunction) -> ExactSum:
    """Total variation of g on the real line as an exact sum.

    A breakpoint contributes both |g(x) - g(x-)| and |g(x+) - g(x)|, so a
    removable discontinuity counts twice.
    """
    total = ExactSum()
    segs = g.segments()
    for j in range(1, len(segs) - 1):
        p = segs[j]
        if p.is_constant():
            continue
        a, b = _gap_bounds(g, j)
        pts = [a, *critical_points(p, a, b), b]
        d = p.derivative()
        for u, w in zip(pts, pts[1:]):
            s = 1 if d(rational_between(u, w)) > 0 else -1
            total.add_at(p, w, s)
            total.add_at(p, u, -s)
    for i, x in enumerate(g.breakpoints):
        v = g.value_poly(i)
        for diff in (v - segs[i], segs[i + 1] - v):
            s = sign_at(diff, x)
            if s:
                total.add_at(diff, x, s)
    return total


def variation(g, eps=None) -> NormValue:
    return variation_sum(lift(g)).value(eps)


@dataclass(frozen=True, eq=False)
class BVFunction:
    """A piecewise function together with its total variation."""

    base: PiecewiseFunction
    variation: NormValue = field(default=None)

    def __post_init__(self):
        if not isinstance(self.base, PiecewiseFunction):
            raise PreconditionError("BVFunction wraps a PiecewiseFunction")
        if self.variation is None:
            object.__setattr__(self, "variation", variation(self.base))

    def __call__(self, x):
        return self.base(x)

    def __eq__(self, other):
        if isinstance(other, BVFunction):
            return self.base == other.base
        if isinstance(other, PiecewiseFunction):
            return self.base == other
        return NotImplemented

    def __hash__(self):
        return hash(self.base)


def as_bv(g) -> BVFunction:
    return g if isinstance(g, BVFunction) else BVFunction(lift(g))


def bv_norm(g, eps=None) -> NormValue:
    """sup |g| + V g."""
    g = lift(g)
    return sup_norm(g, eps) + variation(g, eps)


def bv_norm_anchored(g, a, eps=None) -> NormValue:
    """|g(a)| + V g.  For a = +-inf this is |g(+-inf)| + V g."""
    g = lift(g)
    return abs(g(a)) + variation(g, eps)


def normalize_lambda(g, lam) -> PiecewiseFunction:
    """Replace each breakpoint value by (1 - lam) g(x-) + lam g(x+)."""
    lam = as_fraction(lam)
    if not 0 <= lam <= 1:
        raise PreconditionError("lambda must lie in [0, 1]")
    g = lift(g)
    segs = g.segments()
    vals = [segs[i] * (1 - lam) + segs[i + 1] * lam for i in range(len(g.breakpoints))]
    return canonicalize(build(list(g.breakpoints), segs, vals))


def normalization_parameter(g) -> Fraction | None:
    """The lambda for which g is lambda-normalised, or None.

    A function with no jumps is normalised for every lambda; 0 is returned.
    """
    g = lift(g)
    segs = g.segments()
    lam = None
    for i, x in enumerate(g.breakpoints):
        jump = segs[i + 1] - segs[i]
        off = g.value_poly(i) - segs[i]
        if sign_at(jump, x) == 0:
            if sign_at(off, x) != 0:
                return None
            continue
        if not isinstance(x, Fraction):
            raise PreconditionError("normalisation check needs rational jump points")
        here = off(x) / jump(x)
        if lam is None:
            lam = here
        elif lam != here:
            return None
    if lam is None:
        return Fraction(0)
    return lam if 0 <= lam <= 1 else None


def inf_abs(g, eps=None) -> NormValue:
    """inf over the real line of |g|."""
    g = lift(g)
    segs = g.segments()
    for j in range(len(segs)):
        p = segs[j]
        a, b = _gap_bounds(g, j)
        if p.is_zero() or roots_between(p, a, b):
            return Fraction(0)
    for i, x in enumerate(g.breakpoints):
        if sign_at(g.value_poly(i), x) == 0:
            return Fraction(0)
    # no zero anywhere; the sign of g is constant on each gap
    cands = []
    for p, x in extreme_candidates(g):
        s = sign_at(p, x)
        cands.append((-p if s > 0 else p, x))
    return -max_of(cands, eps)
