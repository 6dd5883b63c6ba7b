"""Henstock-Stieltjes integrals of piecewise-polynomial integrands.

``hs_integral`` is the closed form: the smooth part integral of phi psi'
plus phi(c) [psi(c+) - psi(c-)] at every jump point c of psi that lies in
the interval.  A closed endpoint keeps the whole jump there and an open one
drops it; with phi = 1 this reproduces the distributional integral of psi'
over the same interval.

``gauge_oracle`` is an independent check.  It forms an actual
Riemann-Stieltjes sum over a tagged partition that uses every breakpoint as
a tag, and proves an error bound for it.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .distribution import INF, IntervalSpec
from .exact import Ball, ExactSum, NormValue, Polynomial, PreconditionError, as_fraction
from .regulated import PiecewiseFunction, lift, merge_points, refine_to


def _points_for(phi: PiecewiseFunction, psi: PiecewiseFunction, interval: IntervalSpec) -> list:
    pts = merge_points(phi.breakpoints, psi.breakpoints)
    ends = tuple(x for x in (interval.lower, interval.upper) if x not in (-INF, INF))
    return merge_points(tuple(pts), tuple(dict.fromkeys(ends)))


def hs_sum(phi, psi, interval: IntervalSpec) -> ExactSum:
    phi, psi = lift(phi), lift(psi)
    out = ExactSum()
    if interval.is_empty():
        return out
    pts = _points_for(phi, psi, interval)
    sp, vp = refine_to(phi, pts)
    sq, _ = refine_to(psi, pts)
    bounds = [-INF, *pts, INF]
    for j in range(len(sp)):
        a, b = bounds[j], bounds[j + 1]
        if not (interval.lower <= a and b <= interval.upper):
            continue
        dq = sq[j].derivative()
        if dq.is_zero():
            continue
        anti = (sp[j] * dq).antiderivative()
        out.add_at(anti, b, 1)
        out.add_at(anti, a, -1)
    for i, x in enumerate(pts):
        if interval.contains(x):
            out.add_at(vp[i] * (sq[i + 1] - sq[i]), x)
    return out


def hs_integral(phi, psi, interval: IntervalSpec | None = None, eps=None) -> NormValue:
    """Integral of phi d psi over an interval (the extended real line by default)."""
    interval = IntervalSpec.real_line() if interval is None else interval
    return hs_sum(phi, psi, interval).value(eps)


# -- gauge oracle ----------------------------------------------------------


def _sum_of_polynomial_values(values: list[Fraction], count: int) -> Fraction:
    """sum of R(j) for j = 0..count-1, given R(0..D) of a polynomial R of degree < len(values)."""
    diffs = []
    row = list(values)
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return sum((d * math.comb(count, k + 1) for k, d in enumerate(diffs)), Fraction(0))


def _region_sum(p: Polynomial, q: Polynomial, u: Fraction, v: Fraction,
                tag_u: Fraction, tag_v: Fraction, node_u: Fraction, node_v: Fraction,
                budget: Fraction) -> Fraction:
    """Riemann-Stieltjes sum over [u, v] with n equal cells, within ``budget`` of the limit.

    The first cell is tagged u, the last is tagged v, the rest at their left
    node.  node_u and node_v are the psi values used at the two ends.
    """
    span = v - u
    dq = q.derivative()
    lip_q = dq.bound_abs(u, v)
    if lip_q == 0:
        n = 2
    else:
        factor = lip_q * (abs(tag_u) + abs(tag_v) + 2 * p.bound_abs(u, v)
                          + span * p.derivative().bound_abs(u, v))
        n = max(2, math.ceil(span * factor / budget))
    h = span / n
    first = tag_u * (q(u + h) - node_u)
    last = tag_v * (node_v - q(v - h))
    deg = max(p.degree, 0) + max(q.degree, 0) + 1

    def term(j):
        x = u + j * h
        return p(x) * (q(x + h) - q(x))

    values = [term(j) for j in range(deg + 1)]
    middle = _sum_of_polynomial_values(values, n - 1) - values[0]
    return first + middle + last


def gauge_oracle(phi, psi, interval: IntervalSpec | None = None, eps=Fraction(1, 1000)) -> Ball:
    """A Ball of radius eps around a tagged Riemann-Stieltjes sum that provably contains the integral."""
    interval = IntervalSpec.real_line() if interval is None else interval
    eps = as_fraction(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    phi, psi = lift(phi), lift(psi)
    phi.require_rational("the gauge oracle")
    psi.require_rational("the gauge oracle")
    if interval.is_empty():
        return Ball(0, eps)
    lo, hi = interval.lower, interval.upper
    if lo == hi:
        return Ball(_point_sum(phi, psi, lo, eps), eps)

    inside = [x for x in merge_points(phi.breakpoints, psi.breakpoints) if lo < x < hi]
    nodes = []
    if lo == -INF:
        start = (inside[0] if inside else (hi if hi != INF else Fraction(0))) - 1
        nodes.append(start)
    else:
        nodes.append(lo)
    nodes.extend(inside)
    if hi == INF:
        nodes.append((nodes[-1] if nodes else Fraction(0)) + 1)
    else:
        nodes.append(hi)

    def node_value(x, k):
        if k == 0 and lo != -INF:
            return psi.left_limit(x) if interval.lower_closed else psi.right_limit(x)
        if k == len(nodes) - 1 and hi != INF:
            return psi.right_limit(x) if interval.upper_closed else psi.left_limit(x)
        return psi(x)

    total = Fraction(0)
    if lo == -INF:
        total += phi.left_tail * (psi(nodes[0]) - psi.left_tail)
    if hi == INF:
        total += phi.right_tail * (psi.right_tail - psi(nodes[-1]))
    regions = len(nodes) - 1
    budget = eps / regions
    for k in range(regions):
        u, v = nodes[k], nodes[k + 1]
        mid = (u + v) / 2
        p, q = phi.point_poly(mid), psi.point_poly(mid)
        total += _region_sum(p, q, u, v, phi(u), phi(v), node_value(u, k),
                             node_value(v, k + 1), budget)
    return Ball(total, eps)


def _point_sum(phi: PiecewiseFunction, psi: PiecewiseFunction, a: Fraction, eps: Fraction) -> Fraction:
    """phi(a) [psi(a + h) - psi(a - h)] for an h that keeps the error below eps."""
    near = [x for x in merge_points(phi.breakpoints, psi.breakpoints) if x != a]
    gap = min((abs(x - a) for x in near), default=Fraction(1))
    h = gap / 2
    left, right = psi.limit_poly(a, -1), psi.limit_poly(a, 1)
    lip = left.derivative().bound_abs(a - h, a) + right.derivative().bound_abs(a, a + h)
    va = phi(a)
    if lip and va:
        h = min(h, eps / (abs(va) * lip))
    return va * (psi(a + h) - psi(a - h))
