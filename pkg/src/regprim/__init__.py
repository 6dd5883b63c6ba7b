"""Exact calculus of distributions with regulated primitives.

Functions are piecewise polynomials over rationals (with exact algebraic
breakpoints where lattice operations need them); integrals, norms,
products and Stieltjes integrals are computed exactly, or as certified
balls when the answer is irrational.
"""
from .exact import (
    AlgebraicPoint, Ball, DegenerateInputError, Polynomial, PreconditionError, ResourceError,
)
from .regulated import (
    LEFT, RIGHT, PiecewiseFunction, canonicalize, constant, heaviside, heaviside_right,
    indicator_point, jump_with_value, polynomial_on, ramp, sup_norm,
)
from .bv import BVFunction, bv_norm, normalize_lambda, variation
from .distribution import (
    Distribution, IntervalSpec, TestFunction, alexiewicz_norm, bump, delta_series, dirac,
    from_density, indicator, integrate, norm_prime, pair_with_test, primitive_of, translate, zero,
)
from .stieltjes import gauge_oracle, hs_integral
from .algebra import holder_bound, integrate_by_parts, product, psi_primitive
from .lattice import abs_, join, jordan, leq, meet
from .measure import BVSet, finiteness_report, nu
from .calculus import (
    MonotonePiecewiseMap, change_of_variables, compose, convolve_eval, taylor,
)
from .convergence import SequenceSpec, dominated_check, strong_distances, weak_pairings

__all__ = [name for name in dir() if not name.startswith("_")]
