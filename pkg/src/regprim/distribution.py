"""Distributions whose primitives are regulated, and their integrals.

A ``Distribution`` is stored through its unique primitive F: regulated,
left-continuous, with F(-inf) = 0.  Integrals over intervals are read off
one-sided limits of F.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    ExactSum, NormValue, Point, Polynomial, PreconditionError, as_fraction, max_of,
)
from .regulated import (
    LEFT, RIGHT, PiecewiseFunction, _point, build, canonicalize, constant,
    common_refinement, extreme_candidates, is_br, is_continuous, lift, normalize_to_br, sup_norm,
)

INF = math.inf


@dataclass(frozen=True, eq=False)
class Distribution:
    """The distributional derivative of ``primitive``."""

    primitive: PiecewiseFunction

    def __post_init__(self):
        if not isinstance(self.primitive, PiecewiseFunction):
            raise PreconditionError("a distribution is given by a PiecewiseFunction primitive")
        if not is_br(self.primitive):
            raise PreconditionError("primitive must be left-continuous with zero left tail")
        object.__setattr__(self, "primitive", canonicalize(self.primitive))

    @classmethod
    def derivative_of(cls, g) -> "Distribution":
        """g' for any regulated g; its primitive is x -> g(x-) - g(-inf)."""
        return cls(normalize_to_br(lift(g)))

    def __add__(self, other):
        if not isinstance(other, Distribution):
            return NotImplemented
        return Distribution(self.primitive + other.primitive)

    def __sub__(self, other):
        if not isinstance(other, Distribution):
            return NotImplemented
        return Distribution(self.primitive - other.primitive)

    def __neg__(self):
        return Distribution(-self.primitive)

    def __mul__(self, k):
        if isinstance(k, (int, Fraction)):
            return Distribution(self.primitive.scale(k))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Distribution):
            return NotImplemented
        return self.primitive == other.primitive

    def __hash__(self):
        return hash(self.primitive)

    def __repr__(self):
        return f"Distribution({self.primitive!r})"


def zero() -> Distribution:
    return Distribution(constant(0))


def dirac(a=0) -> Distribution:
    return Distribution(PiecewiseFunction([a], [], [0], 0, 1))


def from_density(density: PiecewiseFunction) -> Distribution:
    """The distribution of an integrable piecewise-polynomial density."""
    density = lift(density)
    if density.left_tail != 0 or density.right_tail != 0:
        raise PreconditionError("a density must vanish on both tails")
    density.require_rational("integrating a density")
    bps = density.breakpoints
    segs = [Polynomial()]
    vals = []
    acc = Fraction(0)
    for i, x in enumerate(bps):
        vals.append(acc)
        if i + 1 < len(bps):
            anti = density.pieces[i].antiderivative()
            piece = anti - anti(x) + acc
            segs.append(piece)
            acc = piece(bps[i + 1])
    segs.append(Polynomial.constant(acc))
    return Distribution(canonicalize(build(list(bps), segs, vals)))


def delta_series(coeffs: Sequence) -> Distribution:
    """sum over k = 1..N of a_k times the Dirac mass at k."""
    coeffs = [as_fraction(c) for c in coeffs]
    if not coeffs:
        return zero()
    pts = list(range(1, len(coeffs) + 1))
    partial = [Fraction(0)]
    for c in coeffs:
        partial.append(partial[-1] + c)
    segs = [Polynomial.constant(s) for s in partial]
    return Distribution(canonicalize(build(pts, segs, partial[:-1])))


@dataclass(frozen=True)
class IntervalSpec:
    """An interval with sided endpoints; +-inf endpoints are always 'closed' in the extended line."""

    lower: Point
    upper: Point
    lower_closed: bool = False
    upper_closed: bool = False

    def __post_init__(self):
        lo, hi = _ext(self.lower), _ext(self.upper)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)
        if lo == -INF:
            object.__setattr__(self, "lower_closed", True)
        if hi == INF:
            object.__setattr__(self, "upper_closed", True)
        if hi < lo:
            raise PreconditionError("interval with upper < lower")
        if lo == INF or hi == -INF:
            raise PreconditionError("interval must meet the real line")

    @classmethod
    def real_line(cls) -> "IntervalSpec":
        return cls(-INF, INF, True, True)

    @classmethod
    def point(cls, a) -> "IntervalSpec":
        return cls(a, a, True, True)

    @classmethod
    def open(cls, a, b) -> "IntervalSpec":
        return cls(a, b, False, False)

    @classmethod
    def closed(cls, a, b) -> "IntervalSpec":
        return cls(a, b, True, True)

    @classmethod
    def left_closed(cls, a, b) -> "IntervalSpec":
        return cls(a, b, True, False)

    @classmethod
    def right_closed(cls, a, b) -> "IntervalSpec":
        return cls(a, b, False, True)

    def is_empty(self) -> bool:
        return self.lower == self.upper and not (self.lower_closed and self.upper_closed)

    def contains(self, x) -> bool:
        if self.lower < x < self.upper:
            return True
        if x == self.lower:
            return self.lower_closed and x != -INF
        if x == self.upper:
            return self.upper_closed and x != INF
        return False

    def __str__(self):
        lo = "-inf" if self.lower == -INF else str(self.lower)
        hi = "inf" if self.upper == INF else str(self.upper)
        if self.lower == -INF and self.upper == INF:
            return "R"
        if self.lower == self.upper and self.lower_closed and self.upper_closed:
            return "{" + lo + "}"
        left = "[" if self.lower_closed and self.lower != -INF else "("
        right = "]" if self.upper_closed and self.upper != INF else ")"
        return f"{left}{lo},{hi}{right}"


def _ext(x) -> Point:
    if isinstance(x, float):
        if math.isinf(x):
            return x
        raise PreconditionError("float endpoints must be +-inf")
    if isinstance(x, str):
        t = x.strip().lower()
        if t in ("inf", "+inf", "oo"):
            return INF
        if t in ("-inf", "-oo"):
            return -INF
    return _point(x)


def indicator(interval: IntervalSpec) -> PiecewiseFunction:
    """The characteristic function of an interval."""
    if interval.is_empty():
        return constant(0)
    lo, hi = interval.lower, interval.upper
    if lo == -INF and hi == INF:
        return constant(1)
    if lo == hi:
        return PiecewiseFunction([lo], [], [1], 0, 0)
    if lo == -INF:
        return PiecewiseFunction([hi], [], [int(interval.upper_closed)], 1, 0)
    if hi == INF:
        return PiecewiseFunction([lo], [], [int(interval.lower_closed)], 0, 1)
    return PiecewiseFunction([lo, hi], [Polynomial.constant(1)],
                             [int(interval.lower_closed), int(interval.upper_closed)], 0, 0)


def primitive_of(f) -> PiecewiseFunction:
    if isinstance(f, Distribution):
        return f.primitive
    raise PreconditionError("expected a Distribution")


def primitive_limit(F: PiecewiseFunction, x: Point, side: int) -> NormValue:
    """F(x-) or F(x+), with F(-inf) = 0 and F(inf) the right tail."""
    if x == -INF:
        return Fraction(0)
    if x == INF:
        return F.right_tail
    return F.limit(x, side)


def _limit_term(F: PiecewiseFunction, x: Point, side: int, sums: ExactSum, scale):
    if x == -INF:
        return
    if x == INF:
        sums.add(F.right_tail * scale)
        return
    sums.add_at(F.limit_poly(x, side), x, scale)


def integrate_sum(f: Distribution, interval: IntervalSpec) -> ExactSum:
    F = primitive_of(f)
    out = ExactSum()
    if interval.is_empty():
        return out
    hi_side = RIGHT if interval.upper_closed else LEFT
    lo_side = LEFT if interval.lower_closed else RIGHT
    _limit_term(F, interval.upper, hi_side, out, 1)
    _limit_term(F, interval.lower, lo_side, out, -1)
    return out


def integrate(f: Distribution, interval: IntervalSpec, eps=None) -> NormValue:
    """Integral of f over an interval from one-sided limits of the primitive.

    (a,b) -> F(b-) - F(a+), (a,b] -> F(b+) - F(a+), [a,b) -> F(b-) - F(a-),
    [a,b] -> F(b+) - F(a-), {a} -> F(a+) - F(a-), R -> F(inf).
    """
    return integrate_sum(f, interval).value(eps)


def integrate_oriented(f: Distribution, a1: Point, s1: int, a2: Point, s2: int) -> NormValue:
    """F(a2 s2) - F(a1 s1) for sided endpoints in either order."""
    F = primitive_of(f)
    return primitive_limit(F, _ext(a2), s2) - primitive_limit(F, _ext(a1), s1)


def split(f: Distribution, interval: IntervalSpec, c) -> tuple[NormValue, NormValue]:
    """Integrals over the two parts of interval cut at an interior point c.

    The left part is closed at c and the right part open, so the two add
    up to the integral over the whole interval.
    """
    c = _ext(c)
    if not interval.lower < c < interval.upper:
        raise PreconditionError("split point must be interior")
    left = IntervalSpec(interval.lower, c, interval.lower_closed, True)
    right = IntervalSpec(c, interval.upper, False, interval.upper_closed)
    return integrate(f, left), integrate(f, right)


def alexiewicz_norm(f: Distribution, eps=None) -> NormValue:
    """sup |F| over the real line."""
    return sup_norm(primitive_of(f), eps)


def norm_prime(f: Distribution, eps=None) -> NormValue:
    """sup over intervals of |integral of f|: spread of all one-sided primitive values."""
    F = primitive_of(f)
    cands = extreme_candidates(F) + [(Polynomial(), Fraction(0))]
    hi = max_of(cands, eps)
    lo = -max_of([(-p, x) for p, x in cands], eps)
    return hi - lo


def translate(f: Distribution, t) -> Distribution:
    return Distribution(translate_function(primitive_of(f), t))


def translate_function(F: PiecewiseFunction, t) -> PiecewiseFunction:
    """x -> F(x - t)."""
    t = as_fraction(t)
    pts = []
    for x in F.breakpoints:
        pts.append(x + t if isinstance(x, Fraction) else x.affine(1, t))
    pieces = [p.shift(t) for p in F.pieces]
    vals = [F.value_poly(i).shift(t) for i in range(len(F.breakpoints))]
    return PiecewiseFunction(pts, pieces, vals, F.left_tail, F.right_tail)


def ftc_primitive(f: Distribution, x, closed: bool = False) -> NormValue:
    """Integral over (-inf, x) (closed=False) or (-inf, x] (closed=True)."""
    F = primitive_of(f)
    return F.limit(_ext(x), RIGHT if closed else LEFT)


def hake(f: Distribution) -> tuple[NormValue, NormValue, NormValue]:
    """(integral over (0, inf), integral over (-inf, 0], integral over R)."""
    F = primitive_of(f)
    at0 = F.right_limit(0)
    return F.right_tail - at0, at0, F.right_tail


@dataclass(frozen=True, eq=False)
class TestFunction:
    """Compactly supported piecewise polynomial of class C^(order - 1)."""

    __test__ = False

    spline: PiecewiseFunction
    order: int = 2

    def __post_init__(self):
        s = self.spline
        if self.order < 2:
            raise PreconditionError("test functions need smoothness order at least 2")
        if s.left_tail != 0 or s.right_tail != 0:
            raise PreconditionError("test functions must have compact support")
        s.require_rational("a test function")
        segs = s.segments()
        for i, x in enumerate(s.breakpoints):
            if s.values_at[i] != segs[i](x):
                raise PreconditionError("test function value disagrees with its pieces")
            a, b = segs[i], segs[i + 1]
            for _ in range(self.order):
                if a(x) != b(x):
                    raise PreconditionError("test function is not smooth enough at a breakpoint")
                a, b = a.derivative(), b.derivative()

    def __call__(self, x):
        return self.spline(x)


def bump(a, b, order: int = 2, scale=1) -> TestFunction:
    """scale * ((x - a)(b - x))^order on (a, b), zero elsewhere."""
    a, b = as_fraction(a), as_fraction(b)
    base = Polynomial((-a * b, a + b, -1)) ** order * as_fraction(scale)
    return TestFunction(PiecewiseFunction([a, b], [base], [0, 0], 0, 0), order)


def pair_with_test(f: Distribution, phi: TestFunction, eps=None) -> NormValue:
    """<f, phi> = -integral of F phi'."""
    if not isinstance(phi, TestFunction):
        raise PreconditionError("pairing needs a TestFunction")
    F = primitive_of(f)
    pts, sF, _, sp, _ = common_refinement(F, phi.spline)
    out = ExactSum()
    bounds = [-INF, *pts, INF]
    for j, (p, q) in enumerate(zip(sF, sp)):
        dq = q.derivative()
        if dq.is_zero():
            continue
        anti = (p * dq).antiderivative()
        a, b = bounds[j], bounds[j + 1]
        out.add_at(anti, b, -1)
        out.add_at(anti, a, 1)
    return out.value(eps)


def is_integrable_class(F: PiecewiseFunction) -> bool:
    return is_br(F)


def continuous_primitive(f: Distribution) -> bool:
    return is_continuous(primitive_of(f))
