"""Finite-horizon evidence for convergence theorems on explicit sequences.

Everything here inspects the first ``horizon`` members of a sequence and
reports what it sees; a finite prefix can refute a hypothesis but never
proves a limit.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import integrate_by_parts
from .bv import bv_norm, variation
from .distribution import (
    INF, Distribution, IntervalSpec, TestFunction, alexiewicz_norm, dirac, from_density,
    indicator, integrate, pair_with_test, primitive_of, translate,
)
from .exact import NormValue, Polynomial, as_fraction, possibly_le, upper
from .lattice import abs_, leq
from .regulated import PiecewiseFunction, lift, merge_points, sup_norm

FINITE_EVIDENCE = "finite-prefix evidence up to the horizon; no limit is computed"


@dataclass(frozen=True)
class SequenceSpec:
    generator: Callable[[int], object]
    claimed_limit: object
    horizon: int = 50
    start: int = 1

    def indices(self) -> range:
        return range(self.start, self.horizon + 1)

    def members(self) -> list:
        return [self.generator(n) for n in self.indices()]


@dataclass(frozen=True)
class StrongReport:
    distances: list
    envelope: list          # sup of distances from index n to the horizon
    first_increase: int | None
    note: str = FINITE_EVIDENCE

    @property
    def final(self) -> NormValue:
        return self.distances[-1]

    def envelope_below(self, tol) -> bool:
        return upper(self.envelope[-1]) <= as_fraction(tol)


def strong_distances(seq: SequenceSpec, eps=None) -> StrongReport:
    limit = seq.claimed_limit
    d = [alexiewicz_norm(f - limit, eps) for f in seq.members()]
    env = []
    run = None
    for v in reversed(d):
        run = v if run is None else (v if upper(v) >= upper(run) else run)
        env.append(run)
    env.reverse()
    first = next((seq.start + k + 1 for k in range(len(d) - 1) if upper(d[k + 1]) > upper(d[k])), None)
    return StrongReport(d, env, first)


@dataclass(frozen=True)
class WeakReport:
    pairings: list
    note: str = FINITE_EVIDENCE

    def decays(self) -> bool:
        """|pairing| at the horizon is below its value at the first index."""
        return abs(self.pairings[-1]) < abs(self.pairings[0]) or self.pairings[-1] == 0


def weak_pairings(seq: SequenceSpec, phi: TestFunction, eps=None) -> WeakReport:
    limit = seq.claimed_limit
    return WeakReport([pair_with_test(f - limit, phi, eps) for f in seq.members()])


@dataclass(frozen=True)
class UniformBVRecord:
    index: int
    f_distance: NormValue
    g_variation_distance: NormValue
    g_anchor_distance: NormValue
    g_sup_distance: NormValue
    integral_gap: NormValue
    chain_bound: NormValue
    chain_holds: bool
    sup_bound_holds: bool


@dataclass(frozen=True)
class UniformBVReport:
    records: list
    hypotheses_ok: bool
    conclusions_ok: bool
    chain_ok: bool
    note: str = FINITE_EVIDENCE


def _settles(values, tol) -> bool:
    """Upper bounds never increase and the last one is within tol."""
    ups = [upper(v) for v in values]
    return all(b <= a for a, b in zip(ups, ups[1:])) and ups[-1] <= tol


def uniform_bv_check(fseq: SequenceSpec, gseq: SequenceSpec, anchor=0, tol=None, eps=None,
                     conclusion_only: bool = False) -> UniformBVReport:
    """Hypotheses, conclusions and the per-index chain for int f_n g_n -> int f g.

    The default tolerance is the first-index value of each quantity, so the
    verdicts then only ask for non-increase.  With conclusion_only the
    hypothesis trio is not judged.
    """
    f, g = fseq.claimed_limit, lift(gseq.claimed_limit)
    target = integrate_by_parts(f, g, eps)
    g_bv = bv_norm(g, eps)
    records = []
    for n in fseq.indices():
        fn, gn = fseq.generator(n), lift(gseq.generator(n))
        dg = gn - g
        df = alexiewicz_norm(fn - f, eps)
        vdg = variation(dg, eps)
        anchor_gap = abs(dg(anchor))
        sup_gap = sup_norm(dg, eps)
        gap = abs(integrate_by_parts(fn, gn, eps) - target)
        chain = alexiewicz_norm(fn, eps) * bv_norm(dg, eps) + df * g_bv
        records.append(UniformBVRecord(n, df, vdg, anchor_gap, sup_gap, gap, chain,
                                       possibly_le(gap, chain), possibly_le(sup_gap, anchor_gap + vdg)))

    def settled(name):
        column = [getattr(r, name) for r in records]
        limit = upper(column[0]) if tol is None else as_fraction(tol)
        return _settles(column, limit)

    hyps = conclusion_only or all(settled(k) for k in ("f_distance", "g_variation_distance", "g_anchor_distance"))
    concl = all(settled(k) for k in ("g_sup_distance", "integral_gap"))
    chain = all(r.chain_holds and r.sup_bound_holds for r in records)
    return UniformBVReport(records, hyps, concl, chain)


@dataclass(frozen=True)
class ProbeTrend:
    probe: object
    values: list          # F_n(p) for every index
    gap: NormValue        # |F_N(p) - F(p)| at the horizon
    verdict: str          # settled, unsettled, or undecided


@dataclass(frozen=True)
class DominatedReport:
    dominated: bool
    probes: list
    infinity_gap: NormValue          # |F_N(inf) - F(inf)| at the horizon
    integrals: list                  # int over R of f_n
    limit_integral: NormValue
    boundary_ok: bool
    pointwise_ok: bool
    note: str = FINITE_EVIDENCE

    def conclusion_applies(self) -> bool:
        return self.dominated and self.pointwise_ok and self.boundary_ok

    def undecided(self) -> list:
        return [t.probe for t in self.probes if t.verdict == "undecided"]


def dominated_check(seq: SequenceSpec, dominator: Distribution, probes: Sequence = (),
                    tol=0, window: int = 10) -> DominatedReport:
    """Check |f_n| <= dominator and pointwise convergence of primitives on the probes plus +-inf.

    A probe is settled when |F_n(p) - F(p)| <= tol over the last ``window``
    indices.  Probes that are breakpoints of members inside that window are
    undecided: the prefix is too short to say anything there.
    """
    tol = as_fraction(tol)
    members = seq.members()
    n_last = len(members)
    window = max(1, min(window, n_last))
    F = primitive_of(seq.claimed_limit)
    prims = [primitive_of(fn) for fn in members]
    dominated = all(leq(abs_(fn), dominator) for fn in members)
    pts: tuple = tuple(sorted({as_fraction(p) for p in probes}))
    recent: tuple = ()
    for k, P in enumerate(prims):
        pts = tuple(merge_points(pts, P.breakpoints))
        if k >= n_last - window:
            recent = tuple(merge_points(recent, P.breakpoints))
    pts = tuple(merge_points(pts, F.breakpoints))
    trends = []
    for p in pts:
        vals = [P(p) for P in prims]
        target = F(p)
        tail_ok = all(upper(abs(v - target)) <= tol for v in vals[-window:])
        verdict = "settled" if tail_ok else ("undecided" if p in recent else "unsettled")
        trends.append(ProbeTrend(p, vals, abs(vals[-1] - target), verdict))
    inf_gap = abs(prims[-1].right_tail - F.right_tail)
    real_line = IntervalSpec.real_line()
    return DominatedReport(
        dominated=dominated,
        probes=trends,
        infinity_gap=inf_gap,
        integrals=[integrate(fn, real_line) for fn in members],
        limit_integral=integrate(seq.claimed_limit, real_line),
        boundary_ok=upper(inf_gap) <= tol,
        pointwise_ok=all(t.verdict != "unsettled" for t in trends),
    )


@dataclass(frozen=True)
class WindowWitness:
    point: object
    checkpoint: int
    index: int | None
    delta: Fraction | None


def quasi_uniform_windows(seq: SequenceSpec, eps, witnesses: Sequence, checkpoints: Sequence[int],
                          limit_at_infinity=None, depth: int = 40) -> list[WindowWitness]:
    """For each witness a and checkpoint N, look for n >= N and delta with |F_n - F| < eps near a.

    Near +-inf the window is (1/delta, inf] or [-inf, -1/delta).  Witnesses
    whose search fails carry index None.
    """
    eps = as_fraction(eps)
    F = primitive_of(seq.claimed_limit)
    at_inf = F.right_tail if limit_at_infinity is None else as_fraction(limit_at_infinity)
    out = []
    for a in witnesses:
        for N in checkpoints:
            found = None
            for n in range(N, seq.horizon + 1):
                Fn = primitive_of(seq.generator(n))
                delta = Fraction(1)
                for _ in range(depth):
                    if _window_gap(Fn, F, a, delta, at_inf) < eps:
                        found = (n, delta)
                        break
                    delta /= 2
                if found:
                    break
            out.append(WindowWitness(a, N, *(found or (None, None))))
    return out


def _window_gap(Fn: PiecewiseFunction, F: PiecewiseFunction, a, delta: Fraction, at_inf) -> Fraction:
    diff = Fn - F
    if a == INF:
        window = indicator(IntervalSpec(1 / delta, INF, False, True))
        return max(upper(sup_norm(diff * window)), abs(Fn.right_tail - at_inf))
    if a == -INF:
        window = indicator(IntervalSpec(-INF, -1 / delta, True, False))
        return upper(sup_norm(diff * window))
    a = as_fraction(a)
    window = indicator(IntervalSpec.open(a - delta, a + delta))
    return upper(sup_norm(diff * window))


# -- the standard example families ------------------------------------------


def spike_minus_mass(n: int) -> Distribution:
    """n chi_(0, 1/n) minus the Dirac mass at 1/n."""
    n = Fraction(n)
    density = PiecewiseFunction([0, 1 / n], [Polynomial.constant(n)], [0, 0], 0, 0)
    return from_density(density) - translate(dirac(), 1 / n)


def escaping_mass(n: int) -> Distribution:
    """The Dirac mass at n."""
    return translate(dirac(), n)
