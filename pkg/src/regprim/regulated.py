"""Piecewise-polynomial regulated functions on the extended real line.

A ``PiecewiseFunction`` is described by breakpoints x_1 < ... < x_m, a
constant left tail on (-inf, x_1), polynomial pieces on (x_i, x_{i+1}),
a constant right tail on (x_m, inf) and an assigned value at each
breakpoint.  Values at +-inf are the tail constants.

Breakpoints are usually rationals; lattice operations can introduce
``AlgebraicPoint`` breakpoints, at which the assigned value is stored as a
polynomial whose value at that point is the function value.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact import (
    AlgebraicPoint, NormValue, Point, Polynomial,
    PreconditionError, as_fraction, enclose, isolate_roots, max_of,
    rational_between, reduce_at, sign_at,
)

LEFT, RIGHT = -1, 1
ZERO = Polynomial()


def _point(x) -> Point:
    if isinstance(x, (AlgebraicPoint, Fraction)):
        return x
    if isinstance(x, float) and math.isinf(x):
        return x
    return as_fraction(x)


def _value_entry(v, x):
    """Normalise a breakpoint value: a Fraction at rational x, a Polynomial otherwise."""
    if isinstance(v, Polynomial):
        if isinstance(x, AlgebraicPoint):
            v = reduce_at(v, x)
            return v.constant_value() if v.degree <= 0 else v
        return v(x)
    return as_fraction(v)


@dataclass(frozen=True, eq=False)
class PiecewiseFunction:
    breakpoints: tuple = ()
    pieces: tuple = ()
    values_at: tuple = ()
    left_tail: Fraction = Fraction(0)
    right_tail: Fraction = Fraction(0)

    def __post_init__(self):
        bps = tuple(_point(x) for x in self.breakpoints)
        if len(self.values_at) != len(bps):
            raise PreconditionError("need one assigned value per breakpoint")
        pieces = tuple(p if isinstance(p, Polynomial) else Polynomial(p) for p in self.pieces)
        vals = tuple(_value_entry(v, x) for v, x in zip(self.values_at, bps))
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "values_at", vals)
        object.__setattr__(self, "left_tail", as_fraction(self.left_tail))
        object.__setattr__(self, "right_tail", as_fraction(self.right_tail))
        m = len(bps)
        if len(pieces) != max(m - 1, 0):
            raise PreconditionError("need exactly m - 1 pieces between m breakpoints")
        if m == 0 and self.left_tail != self.right_tail:
            raise PreconditionError("a function without breakpoints must be constant")
        for x in bps:
            if isinstance(x, float):
                raise PreconditionError("breakpoints must be finite")
        for a, b in zip(bps, bps[1:]):
            if not a < b:
                raise PreconditionError("breakpoints must be strictly increasing")

    # -- structure -------------------------------------------------------

    @property
    def value_at_minus_infty(self) -> Fraction:
        return self.left_tail

    @property
    def value_at_plus_infty(self) -> Fraction:
        return self.right_tail

    def segments(self) -> list[Polynomial]:
        """Polynomials on the m + 1 open gaps, tails included."""
        if not self.breakpoints:
            return [Polynomial.constant(self.left_tail)]
        return [Polynomial.constant(self.left_tail), *self.pieces,
                Polynomial.constant(self.right_tail)]

    def value_poly(self, i: int) -> Polynomial:
        v = self.values_at[i]
        return v if isinstance(v, Polynomial) else Polynomial.constant(v)

    def has_rational_breakpoints(self) -> bool:
        return all(isinstance(x, Fraction) for x in self.breakpoints)

    def require_rational(self, what: str):
        if not self.has_rational_breakpoints():
            raise PreconditionError(f"{what} needs rational breakpoints")

    def locate(self, x) -> tuple[str, int]:
        """('point', i) when x is breakpoint i, else ('gap', j) for the open gap j."""
        x = _point(x)
        if x == -math.inf:
            return "gap", 0
        if x == math.inf:
            return "gap", len(self.breakpoints)
        bps = self.breakpoints
        if all(isinstance(b, Fraction) for b in bps) and not isinstance(x, AlgebraicPoint):
            i = bisect_left(bps, x)
            if i < len(bps) and bps[i] == x:
                return "point", i
            return "gap", i
        lo, hi = 0, len(bps)
        while lo < hi:
            mid = (lo + hi) // 2
            if bps[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(bps) and bps[lo] == x:
            return "point", lo
        return "gap", lo

    def limit_poly(self, x, side: int) -> Polynomial:
        """Polynomial giving the one-sided limit at x (side LEFT or RIGHT)."""
        kind, i = self.locate(x)
        segs = self.segments()
        if kind == "gap":
            return segs[i]
        return segs[i] if side == LEFT else segs[i + 1]

    def point_poly(self, x) -> Polynomial:
        kind, i = self.locate(x)
        if kind == "point":
            return self.value_poly(i)
        return self.segments()[i]

    # -- evaluation ------------------------------------------------------

    def __call__(self, x) -> NormValue:
        x = _point(x)
        if x == -math.inf:
            return self.left_tail
        if x == math.inf:
            return self.right_tail
        return enclose(self.point_poly(x), x)

    def left_limit(self, x) -> NormValue:
        x = _point(x)
        if x == -math.inf:
            return self.left_tail
        if x == math.inf:
            return self.right_tail
        return enclose(self.limit_poly(x, LEFT), x)

    def right_limit(self, x) -> NormValue:
        x = _point(x)
        if x == -math.inf:
            return self.left_tail
        if x == math.inf:
            return self.right_tail
        return enclose(self.limit_poly(x, RIGHT), x)

    def limit(self, x, side: int) -> NormValue:
        return self.left_limit(x) if side == LEFT else self.right_limit(x)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        return combine(self, lift(other), lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return combine(self, lift(other), lambda a, b: a - b)

    def __rsub__(self, other):
        return combine(lift(other), self, lambda a, b: a - b)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, PiecewiseFunction):
            return combine(self, other, lambda a, b: a * b)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, k) -> "PiecewiseFunction":
        k = as_fraction(k)
        return canonicalize(PiecewiseFunction(
            self.breakpoints, [p * k for p in self.pieces],
            [v * k for v in self.values_at], self.left_tail * k, self.right_tail * k))

    def __eq__(self, other):
        if not isinstance(other, PiecewiseFunction):
            return NotImplemented
        return same_function(self, other)

    def __hash__(self):
        c = canonicalize(self)
        return hash((len(c.breakpoints), c.left_tail, c.right_tail))

    def __repr__(self):
        bps = ", ".join(str(b) for b in self.breakpoints)
        return f"PiecewiseFunction(breakpoints=[{bps}], tails=({self.left_tail}, {self.right_tail}))"


def constant(c) -> PiecewiseFunction:
    c = as_fraction(c)
    return PiecewiseFunction((), (), (), c, c)


def lift(x) -> PiecewiseFunction:
    if isinstance(x, PiecewiseFunction):
        return x
    base = getattr(x, "base", None) or getattr(x, "primitive", None)
    if isinstance(base, PiecewiseFunction):
        return base
    return constant(x)


def heaviside() -> PiecewiseFunction:
    """Jump from 0 to 1 at the origin, value 0 there (left-continuous)."""
    return PiecewiseFunction([0], [], [0], 0, 1)


def heaviside_right() -> PiecewiseFunction:
    """Jump from 0 to 1 at the origin, value 1 there (right-continuous)."""
    return PiecewiseFunction([0], [], [1], 0, 1)


def jump_with_value(a) -> PiecewiseFunction:
    """0 on the negatives, a at the origin, 1 on the positives."""
    return PiecewiseFunction([0], [], [a], 0, 1)


def indicator_point(a) -> PiecewiseFunction:
    return PiecewiseFunction([a], [], [1], 0, 0)


def polynomial_on(p: Polynomial, a, b, left=0, right=0, at_a=None, at_b=None) -> PiecewiseFunction:
    """p on (a, b) with constant tails; endpoint values default to p's limits."""
    a, b = as_fraction(a), as_fraction(b)
    va = p(a) if at_a is None else at_a
    vb = p(b) if at_b is None else at_b
    return PiecewiseFunction([a, b], [p], [va, vb], left, right)


def ramp(a, b, height=1) -> PiecewiseFunction:
    """Continuous: 0 before a, linear up to height on [a, b], height after."""
    a, b, h = as_fraction(a), as_fraction(b), as_fraction(height)
    slope = h / (b - a)
    return PiecewiseFunction([a, b], [Polynomial((-slope * a, slope))], [0, h], 0, h)


# -- merging, canonical form, equality ------------------------------------


def merge_points(a: tuple, b: tuple) -> list:
    """Sorted union of two strictly increasing point sequences."""
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        x, y = a[i], b[j]
        if x == y:
            out.append(x if isinstance(x, Fraction) else y)
            i += 1
            j += 1
        elif x < y:
            out.append(x)
            i += 1
        else:
            out.append(y)
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


def refine_to(f: PiecewiseFunction, points: list) -> tuple[list[Polynomial], list[Polynomial]]:
    """Gap and point polynomials of f over a superset of its breakpoints."""
    segs_f = f.segments()
    bps = f.breakpoints
    segs, vals = [], []
    k = 0
    for x in points:
        while k < len(bps) and bps[k] < x:
            k += 1
        segs.append(segs_f[k])
        if k < len(bps) and bps[k] == x:
            vals.append(f.value_poly(k))
        else:
            vals.append(segs_f[k])
    segs.append(segs_f[len(bps)])
    return segs, vals


def common_refinement(f: PiecewiseFunction, g: PiecewiseFunction):
    pts = merge_points(f.breakpoints, g.breakpoints)
    sf, vf = refine_to(f, pts)
    sg, vg = refine_to(g, pts)
    return pts, sf, vf, sg, vg


def build(points: list, segs: list[Polynomial], vals: list) -> PiecewiseFunction:
    """Assemble from m points, m + 1 gap polynomials and m point values."""
    if any(not s.is_constant() for s in (segs[0], segs[-1])):
        raise PreconditionError("tails must be constant")
    return PiecewiseFunction(points, segs[1:-1], vals,
                             segs[0].constant_value(), segs[-1].constant_value())


def combine(f: PiecewiseFunction, g: PiecewiseFunction,
            op: Callable[[Polynomial, Polynomial], Polynomial]) -> PiecewiseFunction:
    pts, sf, vf, sg, vg = common_refinement(f, g)
    segs = [op(a, b) for a, b in zip(sf, sg)]
    vals = [op(a, b) for a, b in zip(vf, vg)]
    return canonicalize(build(pts, segs, vals))


def canonicalize(f: PiecewiseFunction) -> PiecewiseFunction:
    """Drop removable breakpoints and merge identical adjacent pieces."""
    segs = f.segments()
    keep_pts = []
    keep_vals = []
    out_segs = [segs[0]]
    for i, x in enumerate(f.breakpoints):
        left, right = out_segs[-1], segs[i + 1]
        v = f.value_poly(i)
        if left == right and sign_at(v - left, x) == 0:
            continue
        keep_pts.append(x)
        keep_vals.append(v)
        out_segs.append(right)
    if len(out_segs) == 1:
        return constant(out_segs[0].constant_value())
    return build(keep_pts, out_segs, keep_vals)


def same_function(f: PiecewiseFunction, g: PiecewiseFunction) -> bool:
    """Exact pointwise equality on the extended line."""
    pts, sf, vf, sg, vg = common_refinement(f, g)
    if any(a != b for a, b in zip(sf, sg)):
        return False
    return all(sign_at(a - b, x) == 0 for a, b, x in zip(vf, vg, pts))


def equivalent(f: PiecewiseFunction, g: PiecewiseFunction) -> bool:
    """Equal one-sided limits everywhere, i.e. equal as primitives of a distribution."""
    pts, sf, vf, sg, vg = common_refinement(f, g)
    return all(a == b for a, b in zip(sf, sg))


# -- basic analysis --------------------------------------------------------


def is_left_continuous(f: PiecewiseFunction) -> bool:
    segs = f.segments()
    return all(sign_at(f.value_poly(i) - segs[i], x) == 0 for i, x in enumerate(f.breakpoints))


def is_right_continuous(f: PiecewiseFunction) -> bool:
    segs = f.segments()
    return all(sign_at(f.value_poly(i) - segs[i + 1], x) == 0 for i, x in enumerate(f.breakpoints))


def is_continuous(f: PiecewiseFunction) -> bool:
    return is_left_continuous(f) and is_right_continuous(f)


def is_br(f: PiecewiseFunction) -> bool:
    """Left-continuous with zero left tail."""
    return f.left_tail == 0 and is_left_continuous(f)


def normalize_to_br(g: PiecewiseFunction) -> PiecewiseFunction:
    """x -> g(x-) - g(-inf): the canonical primitive of the derivative of g."""
    c = g.left_tail
    segs = [s - c for s in g.segments()]
    vals = [segs[i] for i in range(len(g.breakpoints))]
    return canonicalize(build(list(g.breakpoints), segs, vals))


def normalize_right(g: PiecewiseFunction) -> PiecewiseFunction:
    """Right-continuous version x -> g(x+)."""
    segs = g.segments()
    return canonicalize(build(list(g.breakpoints), segs, [segs[i + 1] for i in range(len(g.breakpoints))]))


def critical_points(p: Polynomial, a: Point, b: Point) -> list[Point]:
    """Roots of p' strictly inside (a, b)."""
    d = p.derivative()
    if d.is_zero() or d.degree == 0:
        return []
    lo = a.lo if isinstance(a, AlgebraicPoint) else a
    hi = b.hi if isinstance(b, AlgebraicPoint) else b
    roots = isolate_roots(d, lo, hi)
    return [r for r in roots if a < r < b]


def roots_between(p: Polynomial, a: Point, b: Point) -> list[Point]:
    """Distinct roots of a nonzero p strictly inside (a, b)."""
    if p.degree <= 0:
        return []
    lo = a.lo if isinstance(a, AlgebraicPoint) else a
    hi = b.hi if isinstance(b, AlgebraicPoint) else b
    return [r for r in isolate_roots(p, lo, hi) if a < r < b]


def _gap_bounds(f: PiecewiseFunction, j: int) -> tuple[Point, Point]:
    bps = f.breakpoints
    a = bps[j - 1] if j > 0 else -math.inf
    b = bps[j] if j < len(bps) else math.inf
    return a, b


def extreme_candidates(f: PiecewiseFunction, use_values: bool = True) -> list[tuple[Polynomial, Point]]:
    """(polynomial, point) pairs whose values have the same sup and inf as f.

    Gap endpoints enter through one-sided limits, so the list covers the
    closure of f's graph; assigned breakpoint values are included when
    ``use_values`` is set.
    """
    segs = f.segments()
    out: list[tuple[Polynomial, Point]] = [(segs[0], Fraction(0)), (segs[-1], Fraction(0))]
    for j in range(1, len(segs) - 1):
        p = segs[j]
        a, b = _gap_bounds(f, j)
        out.append((p, a))
        out.append((p, b))
        for c in critical_points(p, a, b):
            out.append((p, c))
    if use_values:
        for i, x in enumerate(f.breakpoints):
            out.append((f.value_poly(i), x))
    return out


def sup_value(f: PiecewiseFunction, eps=None) -> NormValue:
    return max_of(extreme_candidates(f), eps)


def inf_value(f: PiecewiseFunction, eps=None) -> NormValue:
    m = max_of([(-p, x) for p, x in extreme_candidates(f)], eps)
    return -m


def sup_norm(f: PiecewiseFunction, eps=None) -> NormValue:
    """sup over the real line of |f|, counting assigned breakpoint values."""
    cands = extreme_candidates(f)
    return max_of(cands + [(-p, x) for p, x in cands], eps)


def lipschitz_bound(p: Polynomial, a: Fraction, b: Fraction) -> Fraction:
    return p.derivative().bound_abs(a, b)


def step_approximate(f: PiecewiseFunction, eps) -> PiecewiseFunction:
    """Left-continuous step function S with sup |f - S| <= eps.

    Jumps of f are kept where they are; each piece is cut into equal cells
    short enough that the piece moves by at most eps across a cell.  The
    number of steps is len(S.breakpoints).
    """
    eps = as_fraction(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    f.require_rational("step approximation")
    bps = f.breakpoints
    pts, vals, consts = [], [], [f.left_tail]
    for i, x in enumerate(bps):
        pts.append(x)
        vals.append(f.values_at[i])
        if i + 1 == len(bps):
            break
        p, y = f.pieces[i], bps[i + 1]
        lip = lipschitz_bound(p, x, y)
        n = max(1, math.ceil(lip * (y - x) / eps))
        h = (y - x) / n
        for k in range(1, n):
            t = x + k * h
            consts.append(p(t))
            pts.append(t)
            vals.append(p(t))
        consts.append(p(y))
    consts.append(f.right_tail)
    segs = [Polynomial.constant(c) for c in consts]
    return canonicalize(PiecewiseFunction(pts, segs[1:-1], vals, segs[0].constant_value(),
                                          segs[-1].constant_value()))


def uniform_regulated_modulus(f: PiecewiseFunction, eps) -> Fraction:
    """A delta > 0 controlling one-sided oscillation and both tails.

    Guarantees, for every x and every y with |y - x| < delta such that no
    breakpoint lies strictly between them: |f(x-) - f(y)| < eps when y < x
    and |f(x+) - f(y)| < eps when y > x.  Also |f(y)| < eps for y < -1/delta
    when the left tail is below eps, and |f(inf) - f(y)| < eps for y > 1/delta.
    """
    eps = as_fraction(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    f.require_rational("the regulated modulus")
    if abs(f.left_tail) >= eps:
        raise PreconditionError("left tail is not below eps, no tail modulus exists")
    delta = Fraction(1)
    bps = f.breakpoints
    for i, p in enumerate(f.pieces):
        lip = lipschitz_bound(p, bps[i], bps[i + 1])
        if lip > 0:
            delta = min(delta, eps / lip)
    if bps:
        if bps[0] < 0:
            delta = min(delta, 1 / -bps[0])
        if bps[-1] > 0:
            delta = min(delta, 1 / bps[-1])
    return delta


def sample_points(f: PiecewiseFunction) -> list[Fraction]:
    """One rational inside every open gap of f."""
    bps = f.breakpoints
    out = []
    for j in range(len(bps) + 1):
        a, b = _gap_bounds(f, j)
        out.append(rational_between(a, b))
    return out
