import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regprim.exact import (
    AlgebraicPoint, Ball, DegenerateInputError, ExactSum, Polynomial, PreconditionError,
    enclose, isolate_roots, max_of, rational_between, refine, sign_at, sturm_count,
)

X = Polynomial.x()

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
polys = st.lists(rationals, min_size=1, max_size=5).map(Polynomial)


def from_roots(roots, lead=1):
    p = Polynomial.constant(lead)
    for r in roots:
        p = p * (X - r)
    return p


def test_linear_root():
    assert isolate_roots(X - 1, 0, 2) == [1]


def test_no_real_roots():
    assert isolate_roots(X * X + 1, -10, 10) == []


def test_sqrt_two_is_algebraic_and_refinable():
    (root,) = isolate_roots(X * X - 2, 0, 2)
    assert isinstance(root, AlgebraicPoint)
    ball = refine(root, Fraction(1, 500))
    assert ball.radius <= Fraction(1, 500)
    assert ball.lo ** 2 < 2 < ball.hi ** 2
    assert refine(root, 1).contains(Fraction(141421356, 10**8))


def test_zero_polynomial_is_degenerate():
    with pytest.raises(DegenerateInputError):
        isolate_roots(Polynomial(), 0, 1)


def test_polynomial_examples():
    assert (X ** 3).derivative() == Polynomial([0, 0, 3])
    assert Polynomial([0, 0, 3]).antiderivative() == X ** 3
    assert (X * X).compose(Polynomial.linear(2, -1)) == Polynomial([1, -4, 4])


def test_refine_of_rational_is_exact():
    (root,) = isolate_roots(X - 3)
    assert root == 3
    assert refine(Fraction(3), Fraction(1, 10)) == 3


def test_algebraic_comparisons():
    sqrt2 = isolate_roots(X * X - 2, 0, 2)[0]
    sqrt3 = isolate_roots(X * X - 3, 0, 2)[0]
    assert sqrt2 < sqrt3
    assert Fraction(7, 5) < sqrt2 < Fraction(71, 50)
    other = AlgebraicPoint((X * X - 2) * (X - 5), 1, 2)
    assert other == sqrt2
    assert sqrt2 != sqrt3
    assert -math.inf < sqrt2 < math.inf


def test_sign_at_algebraic_points():
    sqrt2 = isolate_roots(X * X - 2, 0, 2)[0]
    assert sign_at(X * X - 2, sqrt2) == 0
    assert sign_at(X - Fraction(141, 100), sqrt2) == 1
    assert sign_at(X - Fraction(142, 100), sqrt2) == -1
    assert sign_at(X ** 4 - 4, sqrt2) == 0


def test_enclosure_contains_value():
    sqrt2 = isolate_roots(X * X - 2, 0, 2)[0]
    ball = enclose(X ** 3 + X, sqrt2, Fraction(1, 10**6))
    assert isinstance(ball, Ball)
    assert ball.radius <= Fraction(1, 10**6)
    assert ball.lo < 3 * math.sqrt(2) < ball.hi


def test_exact_sum_mixes_rational_and_algebraic():
    sqrt2 = isolate_roots(X * X - 2, 0, 2)[0]
    s = ExactSum().add(1).add_at(X, sqrt2).add_at(X, sqrt2, -1)
    v = s.value(Fraction(1, 1000))
    assert isinstance(v, Ball) and v.contains(1)
    assert ExactSum().add(Fraction(1, 3)).add_at(X * X, Fraction(2)).value() == Fraction(13, 3)


def test_max_of_prefers_exact_answer():
    sqrt2 = isolate_roots(X * X - 2, 0, 2)[0]
    assert max_of([(X, sqrt2), (Polynomial.constant(2), Fraction(0))]) == 2
    v = max_of([(X, sqrt2), (Polynomial.constant(1), Fraction(0))], Fraction(1, 100))
    assert isinstance(v, Ball) and v.contains(Fraction(1414, 1000))


def test_ball_rejects_negative_radius():
    with pytest.raises(PreconditionError):
        Ball(Fraction(0), Fraction(-1))


def test_isolator_must_hold_one_root():
    with pytest.raises(PreconditionError):
        AlgebraicPoint(X * X - 2, -2, 2)


@given(st.lists(rationals, min_size=1, max_size=4), rationals, rationals)
@settings(max_examples=60, deadline=None)
def test_isolation_finds_exactly_the_known_roots(roots, lo, hi):
    lo, hi = min(lo, hi), max(lo, hi)
    p = from_roots(roots, Fraction(3, 2))
    expected = sorted({r for r in roots if lo <= r <= hi})
    assert isolate_roots(p, lo, hi) == expected


@given(st.lists(st.integers(2, 30), min_size=1, max_size=3, unique=True))
@settings(max_examples=40, deadline=None)
def test_irrational_root_count_matches_sturm(squares):
    p = Polynomial.constant(1)
    for k in squares:
        p = p * (X * X - k)
    found = isolate_roots(p, -10, 10)
    assert len(found) == sturm_count(p, Fraction(-10), Fraction(10))
    floats = sorted(s * math.sqrt(k) for k in squares for s in (-1, 1))
    for pt, target in zip(found, floats):
        ball = refine(pt, Fraction(1, 10**6))
        assert abs(float(ball.center if isinstance(ball, Ball) else ball) - target) < 1e-5


@given(polys)
@settings(max_examples=80, deadline=None)
def test_isolation_count_matches_sturm_count(p):
    if p.is_zero():
        return
    lo, hi = Fraction(-7), Fraction(7)
    roots = isolate_roots(p, lo, hi)
    at_lo = 1 if p(lo) == 0 else 0
    assert len(roots) == sturm_count(p, lo, hi) + at_lo
    assert roots == sorted(roots)
    for r in roots:
        assert sign_at(p, r) == 0


@given(polys)
@settings(max_examples=60, deadline=None)
def test_antiderivative_inverts_derivative_up_to_constant(p):
    back = p.derivative().antiderivative()
    assert back == p - p.coeffs[0] if p.coeffs else back == p
    assert p.antiderivative()(0) == 0


@given(polys, polys, rationals)
@settings(max_examples=60, deadline=None)
def test_ring_operations_evaluate_pointwise(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert p.compose(Polynomial.linear(2, -1))(x) == p(2 * x - 1)
    quotient, rest = (p * q + p).divmod(q) if not q.is_zero() else (None, None)
    if quotient is not None:
        assert quotient * q + rest == p * q + p
        assert rest.degree < q.degree or rest.is_zero()


@given(st.integers(2, 50), st.integers(1, 30))
@settings(max_examples=40, deadline=None)
def test_refinement_balls_nest_and_contain_root(k, depth):
    p = X * X - k
    roots = isolate_roots(p, 0, 8)
    root = roots[0]
    if not isinstance(root, AlgebraicPoint):
        assert root * root == k
        return
    outer = refine(root, Fraction(1, 2 ** depth))
    inner = refine(root, Fraction(1, 2 ** (depth + 5)))
    for ball in (outer, inner):
        if isinstance(ball, Ball):
            assert p(ball.lo) < 0 < p(ball.hi)
    if isinstance(outer, Ball) and isinstance(inner, Ball):
        assert outer.lo <= inner.lo and inner.hi <= outer.hi


@given(rationals, rationals)
def test_rational_between(a, b):
    if a == b:
        return
    lo, hi = min(a, b), max(a, b)
    t = rational_between(lo, hi)
    assert lo < t < hi
