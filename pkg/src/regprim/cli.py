"""Command-line access to every operation; documents in, JSON documents out.

Exit codes: 0 success, 2 usage, 3 document parse error, 4 precondition
failure, 5 resource limit, 6 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import algebra, bv, calculus, convergence, distribution, lattice, measure, regulated, stieltjes
from .distribution import INF, Distribution
from .documents import (
    DocumentError, distribution_to_document, format_value, function_to_document, parse_distribution,
    parse_family, parse_function, parse_interval, parse_map, parse_set, parse_test_function,
)
from .exact import RADIUS_ENV, PreconditionError, ResourceError, as_fraction
from .regulated import LEFT, RIGHT

EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_RESOURCE, EXIT_IO = 2, 3, 4, 5, 6

VERB_MAP = {
    "integrate": "distribution.integrate",
    "norm": "distribution.alexiewicz_norm / norm_prime, algebra.norm_double_prime_bounds, "
            "bv.bv_norm / bv_norm_anchored, regulated.sup_norm",
    "variation": "bv.variation",
    "translate": "distribution.translate",
    "pair": "distribution.pair_with_test",
    "stieltjes": "stieltjes.hs_integral (stieltjes.gauge_oracle with --oracle)",
    "product": "algebra.product",
    "ibp": "algebra.integrate_by_parts",
    "holder": "algebra.holder_bound / holder_alternative",
    "join": "lattice.join",
    "meet": "lattice.meet",
    "abs": "lattice.abs_",
    "jordan": "lattice.jordan",
    "measure": "measure.nu, measure.finiteness_report, measure.nu_bound",
    "compose": "calculus.compose",
    "changevar": "calculus.change_of_variables / change_of_variables_direct",
    "taylor": "calculus.taylor",
    "convolve": "calculus.convolve_eval / convolve_eval_swapped / convolution_bound",
    "converge": "convergence.strong_distances / weak_pairings / dominated_check / "
                "uniform_bv_check / quasi_uniform_windows",
    "canonicalize": "regulated.canonicalize",
}


class _Inputs:
    """Reads document arguments from files, or the primary one from stdin."""

    def __init__(self, args):
        self.args = args
        self._stdin_used = False

    def text(self, name: str) -> str:
        path = getattr(self.args, name, None)
        if path is None or path == "-":
            if not self.args.stdin and path is None:
                raise _Usage(f"--{name.replace('_', '-')} is required (or pass --stdin)")
            if self._stdin_used:
                raise _Usage("only one document can come from standard input")
            self._stdin_used = True
            return sys.stdin.read()
        try:
            with open(path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise _IOFailure(f"{path}: {exc.strerror}") from None

    def distribution(self, name: str) -> Distribution:
        return parse_distribution(self.text(name))

    def function(self, name: str):
        return parse_function(self.text(name))


class _Usage(Exception):
    pass


class _IOFailure(Exception):
    pass


def _side(text: str) -> int:
    return LEFT if text == "left" else RIGHT


def _point(text: str):
    t = text.strip().lower()
    if t in ("inf", "+inf"):
        return INF
    if t == "-inf":
        return -INF
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DocumentError("E_RATIONAL", f"malformed rational {text!r}", "argument") from None


def _rationals(text: str | None) -> list:
    if not text:
        return []
    return [_point(t) for t in text.split(",") if t.strip()]


# -- verbs -------------------------------------------------------------------


def _integrate(args, io):
    f = io.distribution("fn")
    return {"interval": str(parse_interval(args.interval)),
            "value": distribution.integrate(f, parse_interval(args.interval), args.eps)}


def _norm(args, io):
    kind = args.kind
    if kind in ("alexiewicz", "prime", "double-prime"):
        f = io.distribution("fn")
        if kind == "alexiewicz":
            return {"kind": kind, "value": distribution.alexiewicz_norm(f, args.eps)}
        if kind == "prime":
            return {"kind": kind, "value": distribution.norm_prime(f, args.eps)}
        lo, hi = algebra.norm_double_prime_bounds(f, args.eps)
        return {"kind": kind, "lower": lo, "upper": hi}
    g = io.function("fn")
    if kind == "bv":
        return {"kind": kind, "value": bv.bv_norm(g, args.eps)}
    if kind == "bv-anchored":
        return {"kind": kind, "anchor": _point(args.anchor), "value": bv.bv_norm_anchored(g, _point(args.anchor), args.eps)}
    return {"kind": kind, "value": regulated.sup_norm(g, args.eps)}


def _variation(args, io):
    return {"value": bv.variation(io.function("fn"), args.eps)}


def _translate(args, io):
    f = io.distribution("fn")
    return {"function": distribution_to_document(distribution.translate(f, _point(args.by)))}


def _pair(args, io):
    f = io.distribution("fn")
    phi = parse_test_function(io.text("test"))
    return {"value": distribution.pair_with_test(f, phi, args.eps)}


def _stieltjes(args, io):
    phi, psi = io.function("phi"), io.function("psi")
    interval = parse_interval(args.interval)
    out = {"interval": str(interval), "value": stieltjes.hs_integral(phi, psi, interval, args.eps)}
    if args.oracle:
        out["oracle"] = stieltjes.gauge_oracle(phi, psi, interval, as_fraction(args.oracle))
    return out


def _product(args, io):
    f, g = io.distribution("f"), io.function("g")
    return {"function": distribution_to_document(algebra.product(f, g))}


def _ibp(args, io):
    f, g = io.distribution("f"), io.function("g")
    return {"value": algebra.integrate_by_parts(f, g, args.eps)}


def _holder(args, io):
    f, g = io.distribution("f"), io.function("g")
    rep = (algebra.holder_alternative if args.alternative else algebra.holder_bound)(f, g, args.eps)
    return {"value": rep.value, "first": rep.first, "second": rep.second, "holds": rep.holds}


def _lattice(op):
    def run(args, io):
        f, g = io.distribution("f"), io.distribution("g")
        return {"function": distribution_to_document(op(f, g))}
    return run


def _abs(args, io):
    return {"function": distribution_to_document(lattice.abs_(io.distribution("fn")))}


def _jordan(args, io):
    plus, minus = lattice.jordan(io.distribution("fn"))
    return {"positive": distribution_to_document(plus), "negative": distribution_to_document(minus)}


def _measure(args, io):
    f = io.distribution("fn")
    out = {}
    if args.set is not None:
        E = parse_set(args.set)
        out["set"] = str(E)
        out["value"] = measure.nu(f, E, args.eps)
        out["bound"] = measure.nu_bound(f, E, args.eps)
    if args.report or args.set is None:
        rep = measure.finiteness_report(f, args.eps)
        out["total_variation"] = rep.total_variation
        out["positive_variation"] = rep.positive_variation
        out["witness"] = str(rep.witness)
        out["witness_measure"] = rep.witness_measure
    return out


def _compose(args, io):
    f = io.distribution("fn")
    G = parse_map(io.text("map"))
    return {"function": distribution_to_document(calculus.compose(f, G))}


def _changevar(args, io):
    f = io.distribution("fn")
    G = parse_map(io.text("map"))
    lo, hi = _point(args.lower), _point(args.upper)
    s1, s2 = _side(args.lower_side), _side(args.upper_side)
    resolved = calculus.change_of_variables(f, G, lo, s1, hi, s2)
    direct = calculus.change_of_variables_direct(f, G, lo, s1, hi, s2)
    return {"value": resolved, "direct": direct, "agree": resolved == direct}


def _taylor(args, io):
    fn = io.function("fn")
    horizon = _point(args.horizon) if args.horizon else INF
    exp = calculus.taylor(fn, _point(args.at), args.order, horizon)
    out = {"coefficients": [format_value(c) for c in exp.polynomial().coeffs], "probes": []}
    for x in _rationals(args.probes):
        rep = exp.check(x, args.eps)
        out["probes"].append({"x": x, "remainder": rep.remainder, "bound": rep.pointwise_bound, "holds": rep.holds})
    return out


def _convolve(args, io):
    f, g = io.distribution("f"), io.function("g")
    x = _point(args.at)
    return {"value": calculus.convolve_eval(f, g, x, args.eps),
            "swapped": calculus.convolve_eval_swapped(f, g, x, args.eps),
            "bound": calculus.convolution_bound(f, g, args.eps)}


def _converge(args, io):
    gen, limit, start = parse_family(io.text("family"))
    seq = convergence.SequenceSpec(gen, limit, args.horizon, start)
    mode = args.mode
    out: dict = {"mode": mode, "horizon": args.horizon, "note": convergence.FINITE_EVIDENCE}
    if mode == "strong":
        rep = convergence.strong_distances(seq, args.eps)
        out.update(distances=rep.distances, first_increase=rep.first_increase)
    elif mode == "weak":
        rep = convergence.weak_pairings(seq, parse_test_function(io.text("test")), args.eps)
        out.update(pairings=rep.pairings, decays=rep.decays())
    elif mode == "dominated":
        rep = convergence.dominated_check(seq, io.distribution("dominator"), _rationals(args.probes),
                                          args.tol or 0)
        out.update(dominated=rep.dominated, pointwise=rep.pointwise_ok, boundary=rep.boundary_ok,
                   infinity_gap=rep.infinity_gap, integrals=rep.integrals,
                   limit_integral=rep.limit_integral, undecided=rep.undecided(),
                   conclusion_applies=rep.conclusion_applies())
    elif mode == "uniform-bv":
        ggen, glimit, gstart = parse_family(io.text("g_family"))
        gseq = convergence.SequenceSpec(ggen, glimit, args.horizon, gstart)
        rep = convergence.uniform_bv_check(seq, gseq, _point(args.anchor), args.tol, args.eps)
        out.update(hypotheses=rep.hypotheses_ok, conclusions=rep.conclusions_ok, chain=rep.chain_ok,
                   integral_gaps=[r.integral_gap for r in rep.records],
                   chain_bounds=[r.chain_bound for r in rep.records])
    else:
        found = convergence.quasi_uniform_windows(seq, as_fraction(args.tol or "1/10"),
                                                  _rationals(args.probes) or [0], [start])
        out["windows"] = [{"point": w.point, "index": w.index, "delta": w.delta} for w in found]
    return out


def _canonicalize(args, io):
    text = io.text("fn")
    kind = json.loads(text).get("kind", "regulated")
    return {"function": function_to_document(regulated.canonicalize(parse_function(text)), kind)}


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    epilog = "verb -> operation:\n" + "\n".join(f"  {v:<13}{op}" for v, op in VERB_MAP.items())
    epilog += (f"\n\nEnclosure radius for irrational results defaults to {RADIUS_ENV} "
               "(a rational string) or 2^-40; --eps overrides it per call.")
    parser = argparse.ArgumentParser(prog="regprim", description="Exact regulated-primitive calculus.",
                                     epilog=epilog, formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--stdin", action="store_true", help="read the omitted document from standard input")
    common.add_argument("--eps", type=Fraction, default=None, help="enclosure radius for irrational values")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def verb(name, handler, help_text, **docs):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for key, what in docs.items():
            p.add_argument("--" + key.replace("_", "-"), dest=key, default=None, help=what)
        p.set_defaults(handler=handler)
        return p

    p = verb("integrate", _integrate, "integral over an interval", fn="distribution document")
    p.add_argument("--interval", required=True, help='"(a,b)", "[a,b)", "{a}", "R", ...')
    p = verb("norm", _norm, "Alexiewicz, primed, BV or sup norms", fn="function document")
    p.add_argument("--kind", default="alexiewicz",
                   choices=["alexiewicz", "prime", "double-prime", "bv", "bv-anchored", "sup"])
    p.add_argument("--anchor", default="0")
    verb("variation", _variation, "total variation", fn="function document")
    p = verb("translate", _translate, "translate by t", fn="distribution document")
    p.add_argument("--by", required=True)
    verb("pair", _pair, "pairing with a test function", fn="distribution document", test="test document")
    p = verb("stieltjes", _stieltjes, "Henstock-Stieltjes integral of phi d psi",
             phi="integrand function", psi="integrator function")
    p.add_argument("--interval", default="R")
    p.add_argument("--oracle", default=None, help="also return the gauge-sum ball of this radius")
    verb("product", _product, "product of a distribution and a BV function", f="distribution", g="BV function")
    verb("ibp", _ibp, "integral of fg by integration by parts", f="distribution", g="BV function")
    p = verb("holder", _holder, "Hoelder inequality report", f="distribution", g="BV function")
    p.add_argument("--alternative", action="store_true", help="use the inf |g| form")
    verb("join", _lattice(lattice.join), "lattice join", f="distribution", g="distribution")
    verb("meet", _lattice(lattice.meet), "lattice meet", f="distribution", g="distribution")
    verb("abs", _abs, "lattice absolute value", fn="distribution")
    verb("jordan", _jordan, "Jordan decomposition", fn="distribution")
    p = verb("measure", _measure, "set function of a BV set", fn="distribution")
    p.add_argument("--set", default=None, help='e.g. "[0,1] U (2,3)"')
    p.add_argument("--report", action="store_true", help="include the finiteness report")
    verb("compose", _compose, "composition with a monotone map", fn="distribution", map="map document")
    p = verb("changevar", _changevar, "change of variables", fn="distribution", map="map document")
    p.add_argument("--lower", required=True)
    p.add_argument("--lower-side", choices=["left", "right"], default="right")
    p.add_argument("--upper", required=True)
    p.add_argument("--upper-side", choices=["left", "right"], default="left")
    p = verb("taylor", _taylor, "Taylor expansion with remainder", fn="function document")
    p.add_argument("--at", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--horizon", default=None)
    p.add_argument("--probes", default=None, help="comma-separated rationals")
    p = verb("convolve", _convolve, "convolution value at a point", f="distribution", g="BV function")
    p.add_argument("--at", required=True)
    p = verb("converge", _converge, "finite-horizon convergence evidence", family="family document",
             test="test document", dominator="distribution", g_family="family of BV functions")
    p.add_argument("--mode", default="strong", choices=["strong", "weak", "dominated", "uniform-bv", "quasi-uniform"])
    p.add_argument("--horizon", type=int, default=50)
    p.add_argument("--probes", default=None)
    p.add_argument("--anchor", default="0")
    p.add_argument("--tol", type=Fraction, default=None)
    verb("canonicalize", _canonicalize, "canonical form of a function document", fn="function document")
    return parser


def _render(value, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        if set(value) == {"center", "radius"}:
            return f"{value['center']} +- {value['radius']}"
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and not (isinstance(v, dict) and set(v) == {"center", "radius"}):
                lines.append(f"{pad}{k}:\n{_render(v, indent + 1)}")
            else:
                lines.append(f"{pad}{k}: {_render(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return pad + "[" + ", ".join(_render(v) for v in value) + "]"
        return "\n".join(f"{pad}-\n{_render(v, indent + 1)}" for v in value)
    return str(value)


def _fail(status: int, kind: str, message: str, **extra) -> int:
    print(json.dumps({"error": {"kind": kind, "message": message, **extra}}), file=sys.stderr)
    return status


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.handler(args, _Inputs(args))
    except _Usage as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    except _IOFailure as exc:
        return _fail(EXIT_IO, "io", str(exc))
    except DocumentError as exc:
        return _fail(EXIT_PARSE, "parse", exc.message, code=exc.code, location=exc.location)
    except PreconditionError as exc:
        return _fail(EXIT_PRECONDITION, "precondition", str(exc))
    except ResourceError as exc:
        return _fail(EXIT_RESOURCE, "resource", str(exc))
    doc = format_value(result)
    print(_render(doc) if args.pretty else json.dumps(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
