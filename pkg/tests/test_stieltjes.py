from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regprim.distribution import Distribution, IntervalSpec, integrate
from regprim.exact import Ball, Polynomial, PreconditionError, ResourceError
from regprim.regulated import PiecewiseFunction, constant, heaviside, polynomial_on, ramp
from regprim.stieltjes import gauge_oracle, hs_integral

from strategies import primitives, regulated_functions, small_rationals

Q = Fraction
X = Polynomial.x()
R = IntervalSpec.real_line()

# g with a jump and an off-value at 0
g_jump = PiecewiseFunction([0, 2], [Polynomial([Q(1, 2), 1])], [Q(3), Q(5, 2)], -1, 4)

INTERVALS = [
    R, IntervalSpec.open(-1, 1), IntervalSpec.closed(-1, 1), IntervalSpec.left_closed(0, 2),
    IntervalSpec.right_closed(0, 2), IntervalSpec.point(0), IntervalSpec.closed(0, 0),
    IntervalSpec(-float("inf"), 0, True, False), IntervalSpec(0, float("inf"), True, True),
]


def test_heaviside_integrand():
    assert hs_integral(heaviside(), g_jump, R) == g_jump.right_tail - g_jump.right_limit(0)


def test_heaviside_integrator():
    assert hs_integral(g_jump, heaviside(), R) == g_jump(0)


def test_smooth_riemann_stieltjes():
    t = polynomial_on(X, -1, 2, left=-1, right=2)
    assert hs_integral(t, t, IntervalSpec.closed(0, 1)) == Q(1, 2)


def test_shared_jump():
    assert hs_integral(heaviside(), heaviside(), R) == 0


def test_oracle_examples():
    t = polynomial_on(X, -1, 2, left=-1, right=2)
    assert gauge_oracle(t, t, IntervalSpec.closed(0, 1), Q(1, 100)).contains(Q(1, 2))
    assert gauge_oracle(heaviside(), g_jump, R, Q(1, 100)).contains(Q(7, 2))
    assert gauge_oracle(g_jump, heaviside(), R, Q(1, 100)).contains(3)
    ball = gauge_oracle(heaviside(), heaviside(), R, Q(1, 1000))
    assert ball.radius == Q(1, 1000) and ball.contains(0)


def test_oracle_needs_positive_eps():
    with pytest.raises(PreconditionError):
        gauge_oracle(heaviside(), heaviside(), R, 0)


@pytest.mark.parametrize("interval", INTERVALS, ids=str)
def test_consistent_with_distribution_integral(interval):
    F = ramp(0, 2, 3) + heaviside().scale(2)
    assert hs_integral(constant(1), F, interval) == integrate(Distribution(F), interval)


@given(regulated_functions, regulated_functions, st.sampled_from(INTERVALS), st.sampled_from([Q(1, 10), Q(1, 1000)]))
@settings(max_examples=80, deadline=None)
def test_oracle_contains_exact_value(phi, psi, interval, eps):
    exact = hs_integral(phi, psi, interval)
    ball = gauge_oracle(phi, psi, interval, eps)
    assert isinstance(ball, Ball) and ball.radius == eps
    assert ball.contains(exact)


@given(regulated_functions, regulated_functions, regulated_functions, small_rationals, st.sampled_from(INTERVALS))
@settings(max_examples=60, deadline=None)
def test_bilinear(a, b, psi, k, interval):
    assert hs_integral(a + b.scale(k), psi, interval) == hs_integral(a, psi, interval) + k * hs_integral(b, psi, interval)
    assert hs_integral(psi, a + b.scale(k), interval) == hs_integral(psi, a, interval) + k * hs_integral(psi, b, interval)


@given(primitives, st.sampled_from(INTERVALS))
@settings(max_examples=60, deadline=None)
def test_unit_integrand_gives_distribution_integral(F, interval):
    assert hs_integral(constant(1), F, interval) == integrate(Distribution(F), interval)


def test_resource_error_is_a_runtime_error():
    assert issubclass(ResourceError, RuntimeError)
