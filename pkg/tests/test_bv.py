import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from regprim.bv import (
    BVFunction, bv_norm, bv_norm_anchored, normalization_parameter, normalize_lambda, variation,
)
from regprim.distribution import IntervalSpec, indicator
from regprim.exact import Ball, Polynomial, PreconditionError, lower, upper
from regprim.regulated import (
    constant, heaviside, heaviside_right, indicator_point, polynomial_on,
)

from strategies import regulated_functions, small_rationals

X = Polynomial.x()
Q = Fraction


def fine_partition_sum(g, step=Q(1, 500), radius=4):
    """Telescoping sum over a fine grid that straddles every breakpoint."""
    pts = set()
    k = -radius / step
    while k <= radius / step:
        pts.add(k * step)
        k += 1
    for b in g.breakpoints:
        pts.update((b - Q(1, 10**6), b, b + Q(1, 10**6)))
    pts.update((-10**6, 10**6))
    grid = sorted(pts)
    vals = [g(t) for t in grid]
    return sum(abs(b - a) for a, b in zip(vals, vals[1:]))


def test_variation_examples():
    assert variation(indicator(IntervalSpec.closed(0, 1))) == 2
    assert variation(indicator_point(0)) == 2
    assert variation(polynomial_on(X * (1 - X), 0, 1)) == Q(1, 2)


def test_bv_norm_examples():
    assert bv_norm(indicator(IntervalSpec.closed(0, 1))) == 3
    assert bv_norm(constant(1)) == 1
    assert bv_norm(heaviside()) == 2


def test_anchored_norm_examples():
    assert bv_norm_anchored(heaviside(), -math.inf) == 1
    assert bv_norm_anchored(heaviside(), math.inf) == 2
    assert bv_norm_anchored(constant(1), 0) == 1


def test_lambda_normalisation_examples():
    assert normalize_lambda(indicator_point(0), Q(1, 3)) == constant(0)
    assert normalize_lambda(heaviside_right(), 0) == heaviside()
    assert normalize_lambda(heaviside(), 1) == heaviside_right()
    assert normalization_parameter(heaviside()) == 0
    assert normalization_parameter(heaviside_right()) == 1
    assert normalization_parameter(indicator_point(0)) is None
    with pytest.raises(PreconditionError):
        normalize_lambda(heaviside(), 2)


def test_bv_function_caches_variation():
    g = BVFunction(indicator(IntervalSpec.closed(0, 1)))
    assert g.variation == 2 and g(0) == 1


def test_irrational_turning_point_gives_ball():
    # x^3/6 - x turns at +-sqrt 2
    g = polynomial_on(X ** 3 * Q(1, 6) - X, -2, 2)
    v = variation(g, Q(1, 10**9))
    assert isinstance(v, Ball)
    assert abs(float(v.center) - float(fine_partition_sum(g, Q(1, 2000), 3))) < 1e-3


@given(regulated_functions)
@settings(max_examples=40, deadline=None)
def test_variation_matches_fine_partition_oracle(g):
    v = variation(g)
    brute = fine_partition_sum(g)
    assert brute <= upper(v)
    assert lower(v) - brute < Q(1, 100)


@given(regulated_functions, regulated_functions)
@settings(max_examples=60, deadline=None)
def test_variation_subadditive_and_norm_submultiplicative(g1, g2):
    assert upper(variation(g1 + g2)) <= upper(variation(g1)) + upper(variation(g2))
    assert lower(bv_norm(g1 * g2)) <= upper(bv_norm(g1)) * upper(bv_norm(g2))


@given(regulated_functions, small_rationals)
@settings(max_examples=60, deadline=None)
def test_anchored_norm_equivalence(g, a):
    for anchor in (a, -math.inf, math.inf):
        anchored = bv_norm_anchored(g, anchor)
        full = bv_norm(g)
        assert lower(anchored) <= upper(full) <= 2 * upper(anchored)


@given(regulated_functions, small_rationals)
@settings(max_examples=60, deadline=None)
def test_lambda_normalisation_idempotent_and_variation_nonincreasing(g, raw):
    lam = abs(raw) / (abs(raw) + 1)
    n = normalize_lambda(g, lam)
    assert normalize_lambda(n, lam) == n
    assert upper(variation(n)) <= upper(variation(g))
    assert n(-math.inf) == g(-math.inf) and n(math.inf) == g(math.inf)
    assert normalization_parameter(n) is not None
