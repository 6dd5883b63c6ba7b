"""Finitely additive set functions nu_f(E) = int f chi_E on finite unions of intervals."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import integrate_by_parts
from .bv import variation
from .distribution import INF, Distribution, IntervalSpec, alexiewicz_norm, indicator, primitive_of
from .exact import NormValue, rational_between, sign_at
from .regulated import PiecewiseFunction, _gap_bounds, constant, critical_points, merge_points


class BVSet:
    """A finite union of intervals kept as sorted, disjoint, non-touching components."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[IntervalSpec] = ()):
        comps = [c for c in components if not c.is_empty()]
        object.__setattr__(self, "components", tuple(_normalise(comps)))

    def __setattr__(self, name, value):
        raise AttributeError("BVSet is immutable")

    @classmethod
    def interval(cls, interval: IntervalSpec) -> "BVSet":
        return cls([interval])

    def contains(self, x) -> bool:
        return any(c.contains(x) for c in self.components)

    def indicator(self) -> PiecewiseFunction:
        out = constant(0)
        for c in self.components:
            out = out + indicator(c)
        return out

    def union(self, other: "BVSet") -> "BVSet":
        return BVSet(self.components + other.components)

    def intersect(self, other: "BVSet") -> "BVSet":
        return _from_membership(self, other, lambda a, b: a and b)

    def complement(self) -> "BVSet":
        return _from_membership(self, BVSet(), lambda a, b: not a)

    def difference(self, other: "BVSet") -> "BVSet":
        return _from_membership(self, other, lambda a, b: a and not b)

    def is_disjoint(self, other: "BVSet") -> bool:
        return self.intersect(other).is_empty()

    def is_empty(self) -> bool:
        return not self.components

    def variation(self) -> NormValue:
        return variation(self.indicator())

    def endpoints(self) -> tuple:
        pts = []
        for c in self.components:
            for x in (c.lower, c.upper):
                if x not in (-INF, INF):
                    pts.append(x)
        return tuple(dict.fromkeys(pts))

    def __eq__(self, other):
        if not isinstance(other, BVSet):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(len(self.components))

    def __repr__(self):
        return "BVSet(" + " U ".join(str(c) for c in self.components) + ")" if self.components else "BVSet()"

    __str__ = __repr__


def _atoms(points: list):
    """Alternating open gaps and points covering the line: ('gap', a, b) and ('point', x)."""
    bounds = [-math.inf, *points, math.inf]
    out = []
    for i in range(len(bounds) - 1):
        out.append(("gap", bounds[i], bounds[i + 1]))
        if i < len(points):
            out.append(("point", points[i]))
    return out


def _member(atom, comps) -> bool:
    if atom[0] == "point":
        return any(c.contains(atom[1]) for c in comps)
    a, b = atom[1], atom[2]
    t = rational_between(a, b)
    return any(c.contains(t) for c in comps)


def _runs(atoms, flags) -> list[IntervalSpec]:
    comps = []
    start = None
    for k, (atom, on) in enumerate(zip(atoms, flags)):
        if on and start is None:
            start = atom
        if start is not None and (not on or k == len(atoms) - 1):
            end = atom if on else atoms[k - 1]
            lo, lo_closed = (start[1], False) if start[0] == "gap" else (start[1], True)
            hi, hi_closed = (end[2], False) if end[0] == "gap" else (end[1], True)
            if lo == -INF:
                lo_closed = True
            if hi == INF:
                hi_closed = True
            comps.append(IntervalSpec(lo, hi, lo_closed, hi_closed))
            start = None
    return comps


def _sorted_points(comps) -> list:
    pts: tuple = ()
    for c in comps:
        ends = tuple(dict.fromkeys(x for x in (c.lower, c.upper) if x not in (-INF, INF)))
        pts = tuple(merge_points(pts, ends))
    return list(pts)


def _normalise(comps: list[IntervalSpec]) -> list[IntervalSpec]:
    pts = _sorted_points(comps)
    atoms = _atoms(pts)
    return _runs(atoms, [_member(a, comps) for a in atoms])


def _from_membership(s: BVSet, t: BVSet, rule) -> BVSet:
    pts = _sorted_points(s.components + t.components)
    atoms = _atoms(pts)
    flags = [rule(_member(a, s.components), _member(a, t.components)) for a in atoms]
    return BVSet(_runs(atoms, flags))


def nu(f: Distribution, E: BVSet, eps=None) -> NormValue:
    """int f chi_E, evaluated by integration by parts."""
    if E.is_empty():
        return Fraction(0)
    return integrate_by_parts(f, E.indicator(), eps)


@dataclass(frozen=True)
class FinitenessReport:
    total_variation: NormValue
    positive_variation: NormValue
    witness: BVSet
    witness_measure: NormValue


def increase_set(F: PiecewiseFunction) -> BVSet:
    """Open runs where F strictly increases, plus points where F jumps up."""
    comps = []
    segs = F.segments()
    for j, p in enumerate(segs):
        if p.is_constant():
            continue
        a, b = _gap_bounds(F, j)
        edges = [a, *critical_points(p, a, b), b]
        d = p.derivative()
        for u, w in zip(edges, edges[1:]):
            if d(rational_between(u, w)) > 0:
                comps.append(IntervalSpec(u, w, False, False))
    for i, x in enumerate(F.breakpoints):
        if sign_at(segs[i + 1] - F.value_poly(i), x) > 0:
            comps.append(IntervalSpec.point(x))
    return BVSet(comps)


def finiteness_report(f: Distribution, eps=None) -> FinitenessReport:
    """Total variation of the primitive and a set on which nu_f collects the positive part."""
    F = primitive_of(f)
    total = variation(F, eps)
    witness = increase_set(F)
    measure = nu(f, witness, eps)
    # V F = P + N and F(inf) = P - N
    positive = (total + F.right_tail) / 2
    return FinitenessReport(total, positive, witness, measure)


def nu_bound(f: Distribution, E: BVSet, eps=None) -> NormValue:
    """||f|| (1 + V chi_E)."""
    return alexiewicz_norm(f, eps) * (1 + E.variation())


def zigzag(teeth: int) -> Distribution:
    """Primitive climbing to 1 and back teeth - 1 times, then staying at 1.

    Sup norm 1 and variation 2 teeth - 1, so the two norms drift apart.
    """
    if teeth < 1:
        raise ValueError("need at least one tooth")
    F = constant(0)
    for k in range(teeth - 1):
        F = F + indicator(IntervalSpec.right_closed(2 * k, 2 * k + 1))
    F = F + indicator(IntervalSpec(2 * (teeth - 1), INF, False, True))
    return Distribution(F)
