import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from regprim.exact import Ball, Polynomial, PreconditionError, upper
from regprim.regulated import (
    PiecewiseFunction, canonicalize, constant, equivalent, heaviside, heaviside_right, is_br,
    normalize_to_br, polynomial_on, ramp, sample_points, step_approximate, sup_norm,
    uniform_regulated_modulus,
)

from strategies import primitives, regulated_functions

X = Polynomial.x()
Q = Fraction


def probes(f):
    return sample_points(f) + list(f.breakpoints)


def test_heaviside_limits():
    h = heaviside()
    assert h.left_limit(0) == 0 and h.right_limit(0) == 1
    assert h.left_limit(1) == 1 and h.right_limit(-5) == 0
    assert h(0) == 0 and h(math.inf) == 1 and h(-math.inf) == 0


def test_polynomial_piece_limits():
    assert ramp(0, 1).left_limit(1) == 1
    assert polynomial_on(X * X, 0, 2).right_limit(0) == 0


def test_normalize_to_br_examples():
    assert normalize_to_br(heaviside_right()) == heaviside()
    assert normalize_to_br(heaviside()) == heaviside()
    assert normalize_to_br(constant(5)) == constant(0)


def test_equivalence_examples():
    assert equivalent(heaviside(), heaviside_right())
    assert not equivalent(heaviside(), constant(0))
    f = ramp(0, 1)
    g = PiecewiseFunction(f.breakpoints, f.pieces, [Q(7), f.values_at[1]], 0, 1)
    assert equivalent(f, g) and f != g


def test_sup_norm_examples():
    assert sup_norm(heaviside()) == 1
    assert sup_norm(polynomial_on(X * (1 - X), 0, 1)) == Q(1, 4)
    assert sup_norm(constant(0)) == 0


def test_sup_norm_uses_assigned_values():
    spike = PiecewiseFunction([0], [], [3], 0, 0)
    assert sup_norm(spike) == 3


def test_sup_norm_irrational_extremum_is_a_ball():
    # x - x^3/6 peaks at sqrt 2 on (0, 2)
    f = polynomial_on(X - X ** 3 * Q(1, 6), 0, 2)
    v = sup_norm(f, Q(1, 10**8))
    expected = math.sqrt(2) - 2 * math.sqrt(2) / 6
    assert isinstance(v, Ball) and abs(float(v.center) - expected) < 1e-7


def test_step_approximate_examples():
    s = step_approximate(ramp(0, 1), Q(1, 4))
    assert is_br(s)
    assert upper(sup_norm(ramp(0, 1) - s)) <= Q(1, 4)
    assert step_approximate(heaviside(), Q(1, 10)) == heaviside()
    assert step_approximate(constant(0), 1) == constant(0)


def test_uniform_regulated_modulus_examples():
    assert uniform_regulated_modulus(heaviside(), Q(1, 2)) == 1
    assert uniform_regulated_modulus(constant(0), 1) == 1
    assert uniform_regulated_modulus(ramp(0, 1), Q(1, 10)) == Q(1, 10)


def test_constructor_rejects_bad_shapes():
    with pytest.raises(PreconditionError):
        PiecewiseFunction([1, 0], [Polynomial()], [0, 0])
    with pytest.raises(PreconditionError):
        PiecewiseFunction([0, 1], [], [0, 0])
    with pytest.raises(PreconditionError):
        PiecewiseFunction([0], [], [0, 1])


@given(regulated_functions, regulated_functions)
@settings(max_examples=80, deadline=None)
def test_arithmetic_is_pointwise(f, g):
    for x in probes(f) + probes(g):
        assert (f + g)(x) == f(x) + g(x)
        assert (f * g)(x) == f(x) * g(x)
        assert (f - g).right_limit(x) == f.right_limit(x) - g.right_limit(x)


@given(regulated_functions)
@settings(max_examples=80, deadline=None)
def test_canonicalize_keeps_the_function(f):
    c = canonicalize(f)
    assert len(c.breakpoints) <= len(f.breakpoints)
    for x in probes(f):
        assert c(x) == f(x) and c.left_limit(x) == f.left_limit(x) and c.right_limit(x) == f.right_limit(x)


@given(regulated_functions)
@settings(max_examples=80, deadline=None)
def test_normalize_is_idempotent_and_equivalent_up_to_constant(g):
    n = normalize_to_br(g)
    assert is_br(n)
    assert normalize_to_br(n) == n
    assert equivalent(n, g - g.left_tail)


@given(regulated_functions)
@settings(max_examples=80, deadline=None)
def test_sup_norm_bounds_every_value_and_one_sided_limit(f):
    s = sup_norm(f)
    for x in probes(f):
        assert abs(f(x)) <= s
        assert abs(f.left_limit(x)) <= s and abs(f.right_limit(x)) <= s
    if s == 0:
        assert f == constant(0)


@given(regulated_functions, regulated_functions)
@settings(max_examples=60, deadline=None)
def test_sup_norm_triangle_inequality(f, g):
    assert upper(sup_norm(f + g)) <= upper(sup_norm(f)) + upper(sup_norm(g))


@given(primitives)
@settings(max_examples=60, deadline=None)
def test_step_approximation_error_per_piece(F):
    eps = Q(1, 3)
    S = step_approximate(F, eps)
    assert is_br(S)
    diff = F - S
    for x in probes(diff):
        assert abs(diff(x)) <= eps
        assert abs(diff.left_limit(x)) <= eps and abs(diff.right_limit(x)) <= eps


@given(primitives)
@settings(max_examples=60, deadline=None)
def test_modulus_clauses_hold_away_from_breakpoints(F):
    eps = Q(1, 2)
    try:
        delta = uniform_regulated_modulus(F, eps)
    except PreconditionError:
        return
    assert delta > 0
    for x in sample_points(F):
        if any(abs(x - b) < delta for b in F.breakpoints):
            continue
        for t in (x - delta / 2, x + delta / 2):
            if not any(min(x, t) <= b <= max(x, t) for b in F.breakpoints):
                assert abs(F(t) - F(x)) < eps
    assert abs(F(-1 / delta - 1)) < eps
    assert abs(F.right_tail - F(1 / delta + 1)) < eps
