import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from regprim.calculus import (
    MonotonePiecewiseMap, change_of_variables, change_of_variables_continuous,
    change_of_variables_direct, compose, continuity_bound, convolution_bound, convolve_eval,
    convolve_eval_swapped, resolve_endpoint, taylor,
)
from regprim.distribution import (
    Distribution, IntervalSpec, dirac, from_density, integrate, primitive_of, translate, zero,
)
from regprim.exact import Polynomial, PreconditionError, upper
from regprim.regulated import (
    LEFT, RIGHT, PiecewiseFunction, is_continuous, polynomial_on, ramp,
)

from strategies import (
    FINITE_CASES, INFINITE_CASES, continuous_functions, distribution, distributions,
    finite_case_instance, infinite_case_instance, monotone_maps, rational,
)

Q = Fraction
X = Polynomial.x()
INF = math.inf
delta = dirac()
identity = MonotonePiecewiseMap.affine(1, 0)
unit_step = MonotonePiecewiseMap((0,), (Polynomial(), Polynomial([1])), (0,))


def test_compose_examples():
    f = compose(delta, MonotonePiecewiseMap.affine(2, -1))
    assert f == translate(delta, Q(1, 2))
    assert integrate(f, IntervalSpec.real_line()) == 1
    g = distribution(random.Random(3))
    assert compose(g, identity) == g


def test_unit_step_composition():
    for seed in range(20):
        f = distribution(random.Random(seed))
        value = change_of_variables(f, unit_step, -INF, RIGHT, INF, LEFT)
        assert value == integrate(f, IntervalSpec.left_closed(0, 1))
        assert value == change_of_variables_direct(f, unit_step, -INF, RIGHT, INF, LEFT)


def test_identity_closed_interval():
    f = distribution(random.Random(11))
    assert change_of_variables(f, identity, -1, LEFT, 2, RIGHT) == integrate(f, IntervalSpec.closed(-1, 2))


def test_decreasing_after_upper_endpoint():
    # increasing before a = 0, decreasing after b = 1
    G = MonotonePiecewiseMap((0, 1), (Polynomial([0, 1]), Polynomial([0, 2]), Polynomial([4, -2])), (0, 2))
    f = delta + translate(delta, 2) * 3
    F = primitive_of(f)
    expected = F.left_limit(G.limit(1, RIGHT)) - F.left_limit(G.limit(0, LEFT))
    assert change_of_variables(f, G, 0, LEFT, 1, RIGHT) == expected == 1
    assert change_of_variables_direct(f, G, 0, LEFT, 1, RIGHT) == expected


def test_decreasing_to_a_limit_from_above():
    # G(y) = 1 - y on y < 0 approaches 1 from above
    G = MonotonePiecewiseMap((0,), (Polynomial([1, -1]), Polynomial([1, 1])), (1,))
    f = translate(delta, 1)
    assert resolve_endpoint(f, G, 0, LEFT) == primitive_of(f).right_limit(1) == 1
    assert change_of_variables(f, G, -1, RIGHT, 0, LEFT) == change_of_variables_direct(f, G, -1, RIGHT, 0, LEFT)


@pytest.mark.parametrize("case", FINITE_CASES, ids=str)
def test_finite_side_cases(case):
    rng = random.Random(hash(case) & 0xFFFF)
    for _ in range(8):
        G, (a1, s1, a2, s2) = finite_case_instance(rng, case)
        assert G.direction(a1, s1) == case[1] and G.direction(a2, s2) == case[3]
        f = distribution(rng)
        assert change_of_variables(f, G, a1, s1, a2, s2) == change_of_variables_direct(f, G, a1, s1, a2, s2)


@pytest.mark.parametrize("case", INFINITE_CASES, ids=str)
def test_infinite_side_cases(case):
    rng = random.Random(len(case[0]) * 7 + case[1])
    for _ in range(8):
        G, ends = infinite_case_instance(rng, case)
        f = distribution(rng)
        assert change_of_variables(f, G, *ends) == change_of_variables_direct(f, G, *ends)


@given(distributions, monotone_maps)
@settings(max_examples=80, deadline=None)
def test_two_paths_agree_on_random_maps(f, G):
    rng = random.Random(len(G.breakpoints))
    points = list(G.breakpoints) + [rational(rng) for _ in range(2)]
    for a1 in points:
        for a2 in points:
            for s1 in (LEFT, RIGHT):
                for s2 in (LEFT, RIGHT):
                    assert change_of_variables(f, G, a1, s1, a2, s2) == change_of_variables_direct(f, G, a1, s1, a2, s2)


@given(continuous_functions, monotone_maps)
@settings(max_examples=40, deadline=None)
def test_continuous_primitive_form(F, G):
    f = Distribution(F - F.left_tail)
    for a, b in ((-1, 1), (0, 2)):
        assert change_of_variables_continuous(f, G, a, b) == change_of_variables(f, G, a, RIGHT, b, LEFT)


def test_continuous_form_rejects_jumps():
    with pytest.raises(PreconditionError):
        change_of_variables_continuous(delta, identity, -1, 1)


def test_higher_degree_maps_rejected():
    with pytest.raises(PreconditionError):
        MonotonePiecewiseMap((), (Polynomial([0, 0, 1]),), ())


def test_taylor_of_a_polynomial():
    f = polynomial_on(X ** 3, -5, 5, left=-125, right=125)
    t = taylor(f, 0, 2, horizon=5)
    assert t.polynomial() == Polynomial()
    for x in (Q(1, 3), 1, Q(9, 2)):
        assert t.remainder(x) == x ** 3 == f(x) - t.polynomial()(x)


def kinked():
    """x^3 for x > 0 and 0 for x <= 0: f'' = 6 max(x, 0) has a kink at 0."""
    return PiecewiseFunction([0, 4], [X ** 3], [0, 64], 0, 64)


def test_taylor_kinked_second_derivative():
    f = kinked()
    t = taylor(f, -1, 2, horizon=4)
    probes = [Q(-1) + Q(k, 11) for k in range(1, 51)]
    for x in probes:
        rep = t.check(x)
        assert rep.holds
        assert rep.remainder == f(x) - t.polynomial()(x)
    for b in (Q(1, 2), 1, 3):
        assert upper(t.interval_norm(b)) <= upper(t.interval_bound(b))


def test_taylor_remainder_is_little_o():
    t = taylor(kinked(), 0, 2, horizon=4)
    ratios = [t.remainder(Q(1, 2 ** k)) / Q(1, 2 ** k) ** 2 for k in range(1, 12)]
    assert all(b < a for a, b in zip(ratios, ratios[1:]))
    assert ratios[-1] < Q(1, 1000)


def test_taylor_order_zero_is_ftc():
    f = ramp(0, 2, 3)
    t = taylor(f, Q(1, 2), 0, horizon=2)
    for x in (1, Q(3, 2)):
        assert f(x) == f(Q(1, 2)) + t.remainder(x)
        assert f(x) - f(Q(1, 2)) == integrate(Distribution(f), IntervalSpec.right_closed(Q(1, 2), x))


def test_taylor_checks_smoothness():
    with pytest.raises(PreconditionError):
        taylor(kinked(), -1, 4, horizon=4)
    with pytest.raises(PreconditionError):
        taylor(ramp(0, 1), -1, 2, horizon=2)


def test_convolution_examples():
    g = polynomial_on(1 - X * X, -1, 1)
    for x in (Q(-1, 2), 0, Q(1, 3)):
        assert convolve_eval(delta, g, x) == g(x)
        assert convolve_eval(zero(), g, x) == 0
    with pytest.raises(PreconditionError):
        convolve_eval(delta, ramp(0, 1) + PiecewiseFunction([0], [], [0], 0, 1), 0)


@given(distributions, continuous_functions)
@settings(max_examples=40, deadline=None)
def test_convolution_commutes_and_is_bounded(f, g):
    g = g - g.left_tail if g.left_tail == g.right_tail else g
    assert is_continuous(g)
    bound = upper(convolution_bound(f, g))
    values = {}
    for x in (Q(-2), Q(-1, 3), Q(0), Q(5, 4), Q(3)):
        v = convolve_eval(f, g, x)
        assert v == convolve_eval_swapped(f, g, x)
        assert abs(v) <= bound
        values[x] = v
    for x, z in ((Q(-2), Q(0)), (Q(-1, 3), Q(5, 4))):
        assert abs(values[x] - values[z]) <= upper(continuity_bound(f, g, x, z))


def test_box_convolved_with_ramp():
    box = from_density(PiecewiseFunction([0, 1], [Polynomial([1])], [0, 0], 0, 0))
    # int over (0,1) of g(x - y) dy with g(t) = t on [0, 1]
    assert convolve_eval(box, ramp(0, 1), 1) == Q(1, 2)
