"""Exact rational polynomials, real root isolation and enclosures.

Rationals are ``fractions.Fraction``.  Irrational points (roots of rational
polynomials) are carried as ``AlgebraicPoint`` values: a square-free defining
polynomial plus a rational isolating interval that contains exactly one root.
Order, equality and polynomial signs at such points are decided exactly; only
numeric *values* at them fall back to ``Ball`` enclosures.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

REFINE_BUDGET = 4000
RADIUS_ENV = "REGPRIM_RADIUS"


class PreconditionError(ValueError):
    """An input is outside the class an operation is defined on."""


class DegenerateInputError(PreconditionError):
    pass


class ResourceError(RuntimeError):
    """A refinement or iteration budget ran out before a decision was reached."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected a rational, got {type(x).__name__}")


def default_radius() -> Fraction:
    """Enclosure radius used when a caller does not pass one."""
    raw = os.environ.get(RADIUS_ENV)
    if raw:
        r = Fraction(raw)
        if r <= 0:
            raise PreconditionError(f"{RADIUS_ENV} must be positive")
        return r
    return Fraction(1, 2**40)


class Polynomial:
    """Polynomial with rational coefficients, stored in ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def linear(cls, slope, intercept) -> "Polynomial":
        return cls((intercept, slope))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def constant_value(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        return " + ".join(terms)

    @staticmethod
    def _lift(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(other)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            k = as_fraction(other)
            return Polynomial(k * c for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def antiderivative(self) -> "Polynomial":
        """Antiderivative vanishing at 0."""
        return Polynomial([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def compose(self, inner: "Polynomial") -> "Polynomial":
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, t) -> "Polynomial":
        """The polynomial x -> p(x - t)."""
        return self.compose(Polynomial((-as_fraction(t), 1)))

    def divmod(self, d: "Polynomial"):
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(d.coeffs) + 1, 0)
        lead = d.coeffs[-1]
        dd = len(d.coeffs) - 1
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] / lead
            if c == 0:
                continue
            q[k - dd] = c
            for j, b in enumerate(d.coeffs):
                rem[k - dd + j] -= c * b
        return Polynomial(q), Polynomial(rem[:dd] if dd else [])

    def __mod__(self, d):
        return self.divmod(d)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * (1 / self.lead())

    def integer_primitive(self) -> tuple[int, ...]:
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if self.is_zero():
            return ()
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return tuple(ints)

    def bound_abs(self, lo, hi) -> Fraction:
        """A rational upper bound for |p| on [lo, hi]."""
        m = max(abs(as_fraction(lo)), abs(as_fraction(hi)))
        return sum((abs(c) * m**k for k, c in enumerate(self.coeffs)), Fraction(0))

    def interval_eval(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        """Rigorous range enclosure of p over [lo, hi] by interval Horner."""
        a = b = Fraction(0)
        for c in reversed(self.coeffs):
            prods = (a * lo, a * hi, b * lo, b * hi)
            a, b = min(prods) + c, max(prods) + c
        return a, b


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def squarefree(p: Polynomial) -> Polynomial:
    if p.degree <= 1:
        return p.monic()
    g = poly_gcd(p, p.derivative())
    return p.divmod(g)[0].monic()


_STURM_CACHE: dict[tuple, tuple[Polynomial, ...]] = {}


def sturm_sequence(p: Polynomial) -> tuple[Polynomial, ...]:
    key = p.coeffs
    seq = _STURM_CACHE.get(key)
    if seq is not None:
        return seq
    out = [p, p.derivative()]
    while not out[-1].is_zero():
        out.append(-(out[-2] % out[-1]))
    out.pop()
    seq = tuple(out)
    if len(_STURM_CACHE) > 20000:
        _STURM_CACHE.clear()
    _STURM_CACHE[key] = seq
    return seq


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(seq, x) -> int:
    if x == math.inf:
        signs = [_sign(q.lead()) for q in seq]
    elif x == -math.inf:
        signs = [_sign(q.lead()) * (-1) ** q.degree for q in seq]
    else:
        signs = [_sign(q(x)) for q in seq]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: Polynomial, a, b) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b]."""
    if p.is_zero():
        raise DegenerateInputError("the zero polynomial has no isolated roots")
    if p.degree == 0:
        return 0
    seq = sturm_sequence(p)
    return _variations(seq, a) - _variations(seq, b)


def roots_in_closed(p: Polynomial, a: Fraction, b: Fraction) -> int:
    return sturm_count(p, a, b) + (1 if p(a) == 0 else 0)


def cauchy_bound(p: Polynomial) -> Fraction:
    lead = abs(p.lead())
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True, eq=False)
class Ball:
    """Closed interval [center - radius, center + radius] with rational data."""

    center: Fraction
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", as_fraction(self.center))
        object.__setattr__(self, "radius", as_fraction(self.radius))
        if self.radius < 0:
            raise PreconditionError("negative radius")

    @classmethod
    def from_bounds(cls, lo, hi) -> "Ball":
        return cls((lo + hi) / 2, (hi - lo) / 2)

    @property
    def lo(self) -> Fraction:
        return self.center - self.radius

    @property
    def hi(self) -> Fraction:
        return self.center + self.radius

    def contains(self, x) -> bool:
        if isinstance(x, Ball):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def overlaps(self, other) -> bool:
        o = to_ball(other)
        return self.lo <= o.hi and o.lo <= self.hi

    def __add__(self, other):
        o = to_ball(other)
        return Ball(self.center + o.center, self.radius + o.radius)

    __radd__ = __add__

    def __neg__(self):
        return Ball(-self.center, self.radius)

    def __sub__(self, other):
        return self + (-to_ball(other))

    def __rsub__(self, other):
        return to_ball(other) - self

    def __mul__(self, other):
        o = to_ball(other)
        prods = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Ball.from_bounds(min(prods), max(prods))

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = as_fraction(k)
        return Ball(self.center / k, self.radius / abs(k))

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Ball.from_bounds(Fraction(0), max(-self.lo, self.hi))

    def __repr__(self):
        return f"Ball({self.center}, {self.radius})"


NormValue = Union[Fraction, Ball]


def to_ball(x) -> Ball:
    if isinstance(x, Ball):
        return x
    return Ball(as_fraction(x), Fraction(0))


def lower(x) -> Fraction:
    return x.lo if isinstance(x, Ball) else as_fraction(x)


def upper(x) -> Fraction:
    return x.hi if isinstance(x, Ball) else as_fraction(x)


def certainly_le(a, b) -> bool:
    return upper(a) <= lower(b)


def possibly_le(a, b) -> bool:
    """False only when the enclosures prove a > b."""
    return lower(a) <= upper(b)


def consistent_eq(a, b) -> bool:
    if isinstance(a, Ball) or isinstance(b, Ball):
        return to_ball(a).overlaps(b)
    return a == b


def value_max(a, b):
    if not isinstance(a, Ball) and not isinstance(b, Ball):
        return max(a, b)
    A, B = to_ball(a), to_ball(b)
    if A.lo >= B.hi:
        return a
    if B.lo >= A.hi:
        return b
    return Ball.from_bounds(max(A.lo, B.lo), max(A.hi, B.hi))


class AlgebraicPoint:
    """The unique root of ``defining`` inside the open interval (lo, hi).

    ``defining`` is square-free, does not vanish at lo or hi, and changes
    sign across the interval.  Instances compare exactly with rationals,
    floats +-inf and each other.
    """

    __slots__ = ("defining", "lo", "hi")

    def __init__(self, defining: Polynomial, lo, hi, _checked: bool = False):
        lo, hi = as_fraction(lo), as_fraction(hi)
        object.__setattr__(self, "defining", defining)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not _checked:
            if not lo < hi:
                raise PreconditionError("isolating interval must have lo < hi")
            if defining(lo) == 0 or defining(hi) == 0:
                raise PreconditionError("isolating interval endpoint is a root")
            if sturm_count(defining, lo, hi) != 1:
                raise PreconditionError("isolating interval must contain exactly one root")

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicPoint is immutable")

    def __repr__(self):
        return f"AlgebraicPoint({self.defining}, ({self.lo}, {self.hi}))"

    def __float__(self):
        pt = self.narrowed(Fraction(1, 2**60) * max(1, abs(self.lo), abs(self.hi)))
        if isinstance(pt, AlgebraicPoint):
            return float((pt.lo + pt.hi) / 2)
        return float(pt)

    def bisect(self) -> "Point":
        """Halve the isolating interval; returns a rational if the midpoint is the root."""
        m = (self.lo + self.hi) / 2
        pm = self.defining(m)
        if pm == 0:
            return m
        if _sign(pm) == _sign(self.defining(self.lo)):
            return AlgebraicPoint(self.defining, m, self.hi, _checked=True)
        return AlgebraicPoint(self.defining, self.lo, m, _checked=True)

    def narrowed(self, width) -> "Point":
        pt: Point = self
        for _ in range(REFINE_BUDGET):
            if not isinstance(pt, AlgebraicPoint) or pt.hi - pt.lo <= width:
                return pt
            pt = pt.bisect()
        raise ResourceError("refinement budget exhausted")

    def affine(self, scale, offset) -> "AlgebraicPoint":
        """The point scale * self + offset (scale nonzero)."""
        s, t = as_fraction(scale), as_fraction(offset)
        if s == 0:
            raise PreconditionError("affine image with zero scale")
        inv = Polynomial(((-t) / s, 1 / s))
        p = self.defining.compose(inv).monic()
        a, b = s * self.lo + t, s * self.hi + t
        if a > b:
            a, b = b, a
        return AlgebraicPoint(p, a, b, _checked=True)

    def _cmp(self, other) -> int:
        if isinstance(other, AlgebraicPoint):
            return _cmp_algebraic(self, other)
        if isinstance(other, float):
            if math.isinf(other):
                return -1 if other > 0 else 1
            raise TypeError("floats other than +-inf are not exact points")
        q = as_fraction(other)
        if q <= self.lo:
            return 1
        if q >= self.hi:
            return -1
        pq = self.defining(q)
        if pq == 0:
            return 0
        # root lies between lo and q when the sign flips there
        return -1 if _sign(pq) != _sign(self.defining(self.lo)) else 1

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash("algebraic-point")


Point = Union[Fraction, AlgebraicPoint, float]


def _shared_root_in(p: Polynomial, q: Polynomial, lo: Fraction, hi: Fraction) -> bool:
    g = poly_gcd(p, q)
    if g.degree < 1:
        return False
    # lo and hi are isolator endpoints, never roots of either polynomial
    return sturm_count(g, lo, hi) > 0


def _cmp_algebraic(a: AlgebraicPoint, b: AlgebraicPoint) -> int:
    if a.hi <= b.lo:
        return -1
    if b.hi <= a.lo:
        return 1
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if a.defining == b.defining or _shared_root_in(a.defining, b.defining, lo, hi):
        return 0
    x, y = a, b
    for _ in range(REFINE_BUDGET):
        x = x.bisect() if isinstance(x, AlgebraicPoint) else x
        y = y.bisect() if isinstance(y, AlgebraicPoint) else y
        if not isinstance(x, AlgebraicPoint) or not isinstance(y, AlgebraicPoint):
            return _sign_cmp(x, y)
        if x.hi <= y.lo:
            return -1
        if y.hi <= x.lo:
            return 1
    raise ResourceError("could not separate algebraic points")


def _sign_cmp(x, y) -> int:
    if isinstance(y, AlgebraicPoint):
        return -y._cmp(x)
    if isinstance(x, AlgebraicPoint):
        return x._cmp(y)
    return _sign(x - y)


def is_rational(x) -> bool:
    return isinstance(x, Fraction)


def is_finite(x) -> bool:
    return not (isinstance(x, float) and math.isinf(x))


def isolate_roots(p: Polynomial, lo=-math.inf, hi=math.inf) -> list[Point]:
    """All distinct real roots of p in the closed interval [lo, hi], ascending.

    Rational roots come back as Fractions, the rest as AlgebraicPoints.
    """
    if p.is_zero():
        raise DegenerateInputError("the zero polynomial vanishes everywhere")
    if p.degree == 0:
        return []
    q = squarefree(p)
    bound = cauchy_bound(q) + 1
    a = -bound if lo == -math.inf else as_fraction(lo)
    b = bound if hi == math.inf else as_fraction(hi)
    if a > b:
        return []
    if q.degree == 1:
        r = -q.coeffs[0] / q.coeffs[1]
        return [r] if a <= r <= b else []
    out: list[Point] = []
    if q(a) == 0:
        out.append(a)
    if a == b:
        return out
    ints = q.integer_primitive()
    lead = abs(ints[-1])
    stack = [(a, b)]
    found = []
    while stack:
        u, v = stack.pop()
        n = sturm_count(q, u, v) - (1 if q(v) == 0 else 0)
        if n == 0:
            continue
        if n == 1 and q(u) != 0 and q(v) != 0:
            found.append(_finish_root(q, u, v, lead))
            continue
        m = (u + v) / 2
        if q(m) == 0:
            found.append(m)
        stack.append((u, m))
        stack.append((m, v))
    if q(b) == 0:
        found.append(b)
    found.sort()
    out.extend(found)
    return out


def _finish_root(q: Polynomial, u: Fraction, v: Fraction, lead: int) -> Point:
    # any rational root has denominator dividing the leading coefficient, so
    # once the interval is narrower than 1/lead^2 the nearest such fraction
    # is the only rational candidate
    pt: Point = AlgebraicPoint(q, u, v, _checked=True)
    target = Fraction(1, 2 * lead * lead)
    pt = pt.narrowed(target)
    if not isinstance(pt, AlgebraicPoint):
        return pt
    cand = ((pt.lo + pt.hi) / 2).limit_denominator(lead)
    if pt.lo < cand < pt.hi and q(cand) == 0:
        return cand
    return pt


def sign_at(r: Polynomial, x: Point) -> int:
    """Exact sign of r at a point."""
    if r.is_zero():
        return 0
    if r.degree == 0:
        return _sign(r.coeffs[0])
    if isinstance(x, float):
        lead = _sign(r.lead())
        return lead if x > 0 else lead * (-1) ** r.degree
    if not isinstance(x, AlgebraicPoint):
        return _sign(r(x))
    if _shared_root_in(x.defining, r, x.lo, x.hi):
        return 0
    pt: Point = x
    for _ in range(REFINE_BUDGET):
        if not isinstance(pt, AlgebraicPoint):
            return _sign(r(pt))
        if roots_in_closed(r, pt.lo, pt.hi) == 0:
            return _sign(r(pt.lo))
        pt = pt.bisect()
    raise ResourceError("sign undecided within refinement budget")


def reduce_at(v: Polynomial, x: Point) -> Polynomial:
    """A polynomial with the same value as v at x, of low degree."""
    if isinstance(x, AlgebraicPoint) and v.degree >= x.defining.degree:
        return v % x.defining
    return v


def enclose(r: Polynomial, x: Point, eps=None) -> NormValue:
    """Value of r at x: exact for rational x, otherwise a Ball of radius <= eps."""
    if r.degree <= 0:
        return r.constant_value()
    if not isinstance(x, AlgebraicPoint):
        return r(x)
    eps = default_radius() if eps is None else as_fraction(eps)
    pt: Point = x
    for _ in range(REFINE_BUDGET):
        if not isinstance(pt, AlgebraicPoint):
            return r(pt)
        lo, hi = r.interval_eval(pt.lo, pt.hi)
        if hi - lo <= 2 * eps:
            return Ball.from_bounds(lo, hi)
        pt = pt.bisect()
    raise ResourceError("enclosure did not reach the requested radius")


def refine(a: Point, eps=None) -> NormValue:
    """Rational enclosure of a real point with radius at most eps."""
    if not isinstance(a, AlgebraicPoint):
        return a
    eps = default_radius() if eps is None else as_fraction(eps)
    pt = a.narrowed(2 * eps)
    if not isinstance(pt, AlgebraicPoint):
        return pt
    return Ball.from_bounds(pt.lo, pt.hi)


def rational_between(a: Point, b: Point) -> Fraction:
    """Some rational strictly between a < b (either may be infinite)."""
    if a == -math.inf and b == math.inf:
        return Fraction(0)
    if a == -math.inf:
        return _rational_below(b) - 1
    if b == math.inf:
        return _rational_above(a) + 1
    x, y = a, b
    for _ in range(REFINE_BUDGET):
        u = x.hi if isinstance(x, AlgebraicPoint) else x
        w = y.lo if isinstance(y, AlgebraicPoint) else y
        if u < w:
            return (u + w) / 2
        if u == w and not isinstance(x, AlgebraicPoint) and not isinstance(y, AlgebraicPoint):
            raise PreconditionError("points are not strictly ordered")
        if isinstance(x, AlgebraicPoint):
            x = x.bisect()
        if isinstance(y, AlgebraicPoint):
            y = y.bisect()
    raise ResourceError("could not separate points")


def _rational_below(x: Point) -> Fraction:
    return x.lo if isinstance(x, AlgebraicPoint) else as_fraction(x)


def _rational_above(x: Point) -> Fraction:
    return x.hi if isinstance(x, AlgebraicPoint) else as_fraction(x)


def rational_lower_bound(x: Point) -> Fraction:
    return _rational_below(x)


def rational_upper_bound(x: Point) -> Fraction:
    return _rational_above(x)


class ExactSum:
    """Running sum of exact rationals and polynomial values at algebraic points."""

    def __init__(self):
        self.rational = Fraction(0)
        self.terms: list[tuple[Polynomial, AlgebraicPoint]] = []

    def add(self, value):
        if isinstance(value, ExactSum):
            self.rational += value.rational
            self.terms.extend(value.terms)
        else:
            self.rational += as_fraction(value)
        return self

    def add_at(self, poly: Polynomial, x: Point, scale=1):
        poly = poly * scale if scale != 1 else poly
        if poly.is_zero():
            return self
        if isinstance(x, AlgebraicPoint) and poly.degree > 0:
            self.terms.append((reduce_at(poly, x), x))
        else:
            self.rational += poly(x) if poly.degree > 0 else poly.constant_value()
        return self

    def negated(self) -> "ExactSum":
        out = ExactSum()
        out.rational = -self.rational
        out.terms = [(-p, x) for p, x in self.terms]
        return out

    def is_exact(self) -> bool:
        return not self.terms

    def value(self, eps=None) -> NormValue:
        if not self.terms:
            return self.rational
        eps = default_radius() if eps is None else as_fraction(eps)
        share = eps / len(self.terms)
        total: NormValue = self.rational
        for p, x in self.terms:
            total = total + enclose(p, x, share)
        return total


def max_of(candidates: list[tuple[Polynomial, Point]], eps=None) -> NormValue:
    """Maximum of polynomial values at points; exact whenever the maximum is provably rational."""
    exact = [p(x) if p.degree > 0 else p.constant_value()
             for p, x in candidates if not isinstance(x, AlgebraicPoint) or p.degree <= 0]
    algebraic = [(p, x) for p, x in candidates if isinstance(x, AlgebraicPoint) and p.degree > 0]
    if not exact and not algebraic:
        raise DegenerateInputError("maximum of an empty set")
    if exact:
        m0 = max(exact)
        if all(sign_at(p - m0, x) <= 0 for p, x in algebraic):
            return m0
    eps = default_radius() if eps is None else as_fraction(eps)
    best: NormValue | None = max(exact) if exact else None
    for p, x in algebraic:
        v = enclose(p, x, eps)
        best = v if best is None else value_max(best, v)
    return best
