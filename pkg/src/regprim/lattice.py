"""Lattice operations on distributions through pointwise max/min of primitives.

Crossings of two pieces become new breakpoints; they are algebraic in
general and kept exact as AlgebraicPoints.
"""
from __future__ import annotations

import math
from typing import Callable

from .distribution import Distribution, primitive_of
from .exact import rational_between, sign_at
from .regulated import (
    PiecewiseFunction, _gap_bounds, build, canonicalize, common_refinement, constant, lift,
    roots_between,
)


def _pick(f: PiecewiseFunction, g: PiecewiseFunction, larger: bool) -> PiecewiseFunction:
    pts, sf, vf, sg, vg = common_refinement(f, g)
    want = 1 if larger else -1
    out_pts, out_segs, out_vals = [], [], []
    bounds = _bounds(pts)
    for j, (p, q) in enumerate(zip(sf, sg)):
        a, b = bounds[j], bounds[j + 1]
        if p == q:
            out_segs.append(p)
        else:
            diff = p - q
            cuts = roots_between(diff, a, b)
            edges = [a, *cuts, b]
            for k in range(len(edges) - 1):
                t = rational_between(edges[k], edges[k + 1])
                s = 1 if diff(t) > 0 else -1
                out_segs.append(p if s == want else q)
                if k < len(cuts):
                    out_pts.append(cuts[k])
                    out_vals.append(p)
        if j < len(pts):
            x = pts[j]
            s = sign_at(vf[j] - vg[j], x)
            out_pts.append(x)
            out_vals.append(vf[j] if s * want >= 0 else vg[j])
    return canonicalize(build(out_pts, out_segs, out_vals))


def _bounds(pts):
    return [-math.inf, *pts, math.inf]


def pointwise_max(f, g) -> PiecewiseFunction:
    return _pick(lift(f), lift(g), True)


def pointwise_min(f, g) -> PiecewiseFunction:
    return _pick(lift(f), lift(g), False)


def _on_primitives(op: Callable) -> Callable:
    def run(f: Distribution, g: Distribution) -> Distribution:
        return Distribution(op(primitive_of(f), primitive_of(g)))
    run.__name__ = op.__name__
    return run


join = _on_primitives(pointwise_max)
meet = _on_primitives(pointwise_min)


def abs_(f: Distribution) -> Distribution:
    F = primitive_of(f)
    return Distribution(pointwise_max(F, -F))


def pos(f: Distribution) -> Distribution:
    return Distribution(pointwise_max(primitive_of(f), constant(0)))


def neg(f: Distribution) -> Distribution:
    return Distribution(pointwise_max(-primitive_of(f), constant(0)))


def jordan(f: Distribution) -> tuple[Distribution, Distribution]:
    return pos(f), neg(f)


def nonnegative(h: PiecewiseFunction) -> bool:
    """Exact test of h >= 0 on the whole line."""
    segs = h.segments()
    for j, p in enumerate(segs):
        a, b = _gap_bounds(h, j)
        if p.is_zero():
            continue
        edges = [a, *roots_between(p, a, b), b]
        for u, w in zip(edges, edges[1:]):
            if p(rational_between(u, w)) < 0:
                return False
    return all(sign_at(h.value_poly(i), x) >= 0 for i, x in enumerate(h.breakpoints))


def leq(f, g) -> bool:
    """f <= g in the primitive order (Distributions) or pointwise (functions)."""
    if isinstance(f, Distribution) and isinstance(g, Distribution):
        return nonnegative(primitive_of(g) - primitive_of(f))
    return nonnegative(lift(g) - lift(f))

