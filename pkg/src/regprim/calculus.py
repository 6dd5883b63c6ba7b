"""Change of variables, Taylor expansions with integral remainder, convolution."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import integrate_by_parts
from .bv import variation
from .distribution import (
    INF, Distribution, IntervalSpec, alexiewicz_norm, from_density, indicator,
    integrate_oriented, primitive_of,
)
from .exact import (
    AlgebraicPoint, NormValue, Polynomial, PreconditionError, as_fraction, possibly_le,
    rational_between,
)
from .regulated import (
    LEFT, RIGHT, PiecewiseFunction, build, canonicalize, is_continuous, lift, normalize_to_br,
    polynomial_on, sup_norm,
)


@dataclass(frozen=True)
class MonotonePiecewiseMap:
    """Piecewise-linear map; pieces[0] lives on (-inf, x_1) and pieces[-1] on (x_m, inf)."""

    breakpoints: tuple
    pieces: tuple
    values_at: tuple

    def __post_init__(self):
        bps = tuple(as_fraction(x) for x in self.breakpoints)
        pieces = tuple(p if isinstance(p, Polynomial) else Polynomial(p) for p in self.pieces)
        vals = tuple(as_fraction(v) for v in self.values_at)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "values_at", vals)
        if len(pieces) != len(bps) + 1 or len(vals) != len(bps):
            raise PreconditionError("need m + 1 pieces and m values for m breakpoints")
        if any(p.degree > 1 for p in pieces):
            raise PreconditionError("exact change of variables needs pieces of degree <= 1")
        if any(not a < b for a, b in zip(bps, bps[1:])):
            raise PreconditionError("breakpoints must be strictly increasing")

    @classmethod
    def affine(cls, slope, intercept) -> "MonotonePiecewiseMap":
        return cls((), (Polynomial.linear(slope, intercept),), ())

    def _gap(self, y, side: int) -> int:
        if y == -INF:
            return 0
        if y == INF:
            return len(self.breakpoints)
        k = sum(1 for b in self.breakpoints if b < y)
        if k < len(self.breakpoints) and self.breakpoints[k] == y:
            return k if side == LEFT else k + 1
        return k

    def __call__(self, y) -> Fraction:
        y = as_fraction(y)
        if y in self.breakpoints:
            return self.values_at[self.breakpoints.index(y)]
        return self.pieces[self._gap(y, LEFT)](y)

    def slope(self, y, side: int) -> Fraction:
        p = self.pieces[self._gap(y, side)]
        return p.coeffs[1] if p.degree == 1 else Fraction(0)

    def limit(self, y, side: int):
        """G(y-) or G(y+); at +-inf an extended-rational limit."""
        p = self.pieces[self._gap(y, side)]
        if y in (-INF, INF):
            if p.degree <= 0:
                return p.constant_value()
            s = p.coeffs[1] * (1 if y == INF else -1)
            return INF if s > 0 else -INF
        return p(as_fraction(y))

    def direction(self, y, side: int) -> int:
        """+1 increasing, -1 decreasing, 0 constant on the given side of y."""
        s = self.slope(y, side)
        return (s > 0) - (s < 0)


def _compose_function(F: PiecewiseFunction, G: MonotonePiecewiseMap) -> PiecewiseFunction:
    """F o G as a piecewise function."""
    pts, segs, vals = [], [], []
    bounds = [-INF, *G.breakpoints, INF]
    for j, lin in enumerate(G.pieces):
        a, b = bounds[j], bounds[j + 1]
        if lin.degree <= 0:
            segs.append(Polynomial.constant(_value_at(F, lin.constant_value())))
        else:
            alpha, beta = lin.coeffs[1], lin.coeffs[0]
            ya = lin(a) if a != -INF else (-INF if alpha > 0 else INF)
            yb = lin(b) if b != INF else (INF if alpha > 0 else -INF)
            lo, hi = min(ya, yb), max(ya, yb)
            inner = [(k, c) for k, c in enumerate(F.breakpoints) if lo < c < hi]
            if alpha < 0:
                inner.reverse()
            fsegs = F.segments()
            for k, c in inner:
                # F's gap on the y-side just before this preimage
                before = k if alpha > 0 else k + 1
                segs.append(fsegs[before].compose(lin))
                pts.append(_preimage(c, alpha, beta))
                vals.append(F.value_poly(k).compose(lin))
            if inner:
                k, _ = inner[-1]
                last = k + 1 if alpha > 0 else k
            else:
                last = _gap_index(F, lin(rational_between(a, b)))
            segs.append(fsegs[last].compose(lin))
        if j < len(G.breakpoints):
            pts.append(G.breakpoints[j])
            vals.append(Polynomial.constant(_value_at(F, G.values_at[j])))
    return canonicalize(build(pts, segs, vals))


def _preimage(c, alpha, beta):
    if isinstance(c, AlgebraicPoint):
        return c.affine(1 / alpha, -beta / alpha)
    return (c - beta) / alpha


def _gap_index(F: PiecewiseFunction, x) -> int:
    kind, i = F.locate(x)
    if kind == "point":
        raise AssertionError("sample point hit a breakpoint")
    return i


def _value_at(F: PiecewiseFunction, x) -> Fraction:
    v = F(x)
    if not isinstance(v, Fraction):
        raise PreconditionError("composition needs exact values")
    return v


def compose_function(F: PiecewiseFunction, G: MonotonePiecewiseMap) -> PiecewiseFunction:
    return _compose_function(lift(F), G)


def compose(f: Distribution, G: MonotonePiecewiseMap) -> Distribution:
    """The distribution (F o G)', whose primitive is the left-continuous version of F o G."""
    return Distribution(normalize_to_br(_compose_function(primitive_of(f), G)))


def resolve_endpoint(f: Distribution, G: MonotonePiecewiseMap, y, side: int) -> NormValue:
    """F(G(y side) sigma), with sigma read off the monotonicity of G on that side of y.

    Increasing G keeps the side, decreasing G flips it; on a constant piece
    F is evaluated at the constant, which for left-continuous F is F(k-).
    """
    F = primitive_of(f)
    target = G.limit(y, side)
    if target == -INF:
        return Fraction(0)
    if target == INF:
        return F.right_tail
    d = G.direction(y, side)
    if d == 0:
        return F(target)
    sigma = side if d > 0 else -side
    return F.limit(target, sigma)


def change_of_variables(f: Distribution, G: MonotonePiecewiseMap, a1, s1: int, a2, s2: int) -> NormValue:
    """int over (a1 s1, a2 s2) of (f o G) G', resolved at the endpoints."""
    return resolve_endpoint(f, G, _ext(a2), s2) - resolve_endpoint(f, G, _ext(a1), s1)


def change_of_variables_direct(f: Distribution, G: MonotonePiecewiseMap, a1, s1: int, a2, s2: int) -> NormValue:
    """Same integral through the composed distribution's primitive."""
    return integrate_oriented(compose(f, G), _ext(a1), s1, _ext(a2), s2)


def change_of_variables_continuous(f: Distribution, G: MonotonePiecewiseMap, a, b) -> NormValue:
    """int over (a, b) of (f o G) G' as F(G(b-)) - F(G(a+)); continuous F needs no sides."""
    F = primitive_of(f)
    if not is_continuous(F):
        raise PreconditionError("this form needs a continuous primitive")
    vals = []
    for y, side in ((_ext(b), LEFT), (_ext(a), RIGHT)):
        t = G.limit(y, side)
        vals.append(Fraction(0) if t == -INF else F.right_tail if t == INF else F(t))
    return vals[0] - vals[1]


def _ext(y):
    if isinstance(y, float) and math.isinf(y):
        return y
    return as_fraction(y)


# -- Taylor ----------------------------------------------------------------


def derivative_function(f: PiecewiseFunction, k: int) -> PiecewiseFunction:
    """k-th derivative piece by piece, made right-continuous at breakpoints."""
    f = lift(f)
    segs = f.segments()
    for _ in range(k):
        segs = [s.derivative() for s in segs]
    if k == 0:
        return f
    return build(list(f.breakpoints), segs, [segs[i + 1] for i in range(len(f.breakpoints))])


@dataclass(frozen=True)
class TaylorReport:
    x: Fraction
    remainder: NormValue
    pointwise_bound: NormValue
    holds: bool


@dataclass(frozen=True, eq=False)
class TaylorExpansion:
    function: PiecewiseFunction
    anchor: Fraction
    order: int
    horizon: object
    coefficients: tuple      # f^(k)(a) for k = 0..n

    def polynomial(self) -> Polynomial:
        shift = Polynomial.linear(1, -self.anchor)
        out = Polynomial()
        fact = 1
        for k, c in enumerate(self.coefficients):
            if k:
                fact *= k
            out = out + shift ** k * (c / fact)
        return out

    def top_derivative(self) -> PiecewiseFunction:
        return derivative_function(self.function, self.order)

    def remainder(self, x, eps=None) -> NormValue:
        """(1/n!) int over (a, x] of f^(n+1)(t) (x - t)^n dt, by integration by parts."""
        x = as_fraction(x)
        self._check_probe(x)
        n, a = self.order, self.anchor
        kernel = Polynomial.linear(-1, x) ** n
        weight = PiecewiseFunction([a, x], [kernel], [0, kernel(x)], 0, 0)
        top = Distribution.derivative_of(self.top_derivative())
        return integrate_by_parts(top, weight, eps) / math.factorial(n)

    def _check_probe(self, x):
        if not self.anchor < x < self.horizon:
            raise PreconditionError("probe must lie strictly between the anchor and the horizon")

    def oscillation(self, x, eps=None) -> NormValue:
        """sup over a <= t < x of |f^(n)(t) - f^(n)(a)|."""
        top = self.top_derivative()
        base = self.coefficients[-1]
        window = indicator(IntervalSpec(self.anchor, x, True, False))
        return sup_norm((top - base) * window, eps)

    def pointwise_bound(self, x, eps=None) -> NormValue:
        x = as_fraction(x)
        return self.oscillation(x, eps) * (x - self.anchor) ** self.order / math.factorial(self.order)

    def check(self, x, eps=None) -> TaylorReport:
        r = self.remainder(x, eps)
        b = self.pointwise_bound(x, eps)
        return TaylorReport(as_fraction(x), r, b, possibly_le(abs(r), b))

    def remainder_function(self, b) -> PiecewiseFunction:
        """R_n restricted to (a, b), zero outside."""
        b = as_fraction(b)
        r = self.function - polynomial_on(self.polynomial(), self.anchor, b)
        return r * indicator(IntervalSpec.open(self.anchor, b))

    def interval_norm(self, b, eps=None) -> NormValue:
        """Alexiewicz norm of R_n chi_(a,b)."""
        return alexiewicz_norm(from_density(self.remainder_function(b)), eps)

    def interval_bound(self, b, eps=None) -> NormValue:
        b = as_fraction(b)
        n = self.order
        return (b - self.anchor) ** (n + 1) * self.oscillation(b, eps) / math.factorial(n + 1)


def taylor(fn: PiecewiseFunction, a, n: int, horizon=INF) -> TaylorExpansion:
    """Expansion of fn about a of order n, valid on (a, horizon).

    fn must be C^(n-1) on [a, horizon) with f^(n) right-continuous there.
    """
    fn = lift(fn)
    a = as_fraction(a)
    fn.require_rational("a Taylor expansion")
    if n < 0:
        raise PreconditionError("order must be nonnegative")
    horizon = horizon if horizon == INF else as_fraction(horizon)
    if not a < horizon:
        raise PreconditionError("horizon must exceed the anchor")
    segs = fn.segments()
    for i, c in enumerate(fn.breakpoints):
        if not a <= c < horizon:
            continue
        left, right = segs[i], segs[i + 1]
        v = fn.values_at[i]
        if n == 0:
            if v != right(c):
                raise PreconditionError("order 0 needs a right-continuous function")
            continue
        if v != right(c) or (c > a and v != left(c)):
            raise PreconditionError("function is not continuous on [anchor, horizon)")
        for k in range(1, n):
            left, right = left.derivative(), right.derivative()
            if c > a and left(c) != right(c):
                raise PreconditionError(f"derivative of order {k} jumps inside the domain")
    right_piece = fn.limit_poly(a, RIGHT)
    coeffs = []
    p = right_piece
    for _ in range(n + 1):
        coeffs.append(p(a))
        p = p.derivative()
    return TaylorExpansion(fn, a, n, horizon, tuple(coeffs))


# -- convolution -----------------------------------------------------------


def reflect(g: PiecewiseFunction, x) -> PiecewiseFunction:
    """y -> g(x - y)."""
    g = lift(g)
    x = as_fraction(x)
    g.require_rational("reflection")
    flip = Polynomial.linear(-1, x)
    pts = [x - c for c in reversed(g.breakpoints)]
    pieces = [p.compose(flip) for p in reversed(g.pieces)]
    vals = list(reversed(g.values_at))
    return PiecewiseFunction(pts, pieces, vals, g.right_tail, g.left_tail)


def _require_ac(g: PiecewiseFunction):
    if not is_continuous(g):
        raise PreconditionError("convolution needs a continuous multiplier")


def convolve_eval(f: Distribution, g, x, eps=None) -> NormValue:
    """(f * g)(x) = int f(x - y) g(y) dy, through the composition with y -> x - y."""
    g = lift(g)
    _require_ac(g)
    flipped = compose(f, MonotonePiecewiseMap.affine(-1, as_fraction(x)))
    # d/dy F(x - y) = -f(x - y)
    return -integrate_by_parts(flipped, g, eps)


def convolve_eval_swapped(f: Distribution, g, x, eps=None) -> NormValue:
    """(g * f)(x) = int g(x - y) f(y) dy."""
    g = lift(g)
    _require_ac(g)
    return integrate_by_parts(f, reflect(g, x), eps)


def convolution_bound(f: Distribution, g, eps=None) -> NormValue:
    """||f|| (||g||_inf + V g)."""
    g = lift(g)
    return alexiewicz_norm(f, eps) * (sup_norm(g, eps) + variation(g, eps))


def continuity_bound(f: Distribution, g, x, z, eps=None) -> NormValue:
    """||f|| V(g(x - .) - g(z - .)) bounds |f*g(x) - f*g(z)|."""
    return alexiewicz_norm(f, eps) * variation(reflect(g, x) - reflect(g, z), eps)
