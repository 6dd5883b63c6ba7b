"""JSON documents for functions, maps, test functions, sets and sequence families.

Rationals travel as strings ("3/4", "-2"); never as JSON numbers with a
fractional part.  Parse failures raise ``DocumentError`` carrying a short
code and a JSON-path style location.
"""
from __future__ import annotations

import ast
import json
import operator
import re
from fractions import Fraction
from typing import Any, Callable

from .calculus import MonotonePiecewiseMap
from .distribution import INF, Distribution, IntervalSpec, TestFunction, bump, primitive_of
from .exact import AlgebraicPoint, Ball, Polynomial, PreconditionError, squarefree
from .measure import BVSet
from .regulated import PiecewiseFunction

FUNCTION_KINDS = ("regulated", "bv", "distribution-primitive")


class DocumentError(ValueError):
    def __init__(self, code: str, message: str, location: str = "$"):
        super().__init__(f"{code} at {location}: {message}")
        self.code = code
        self.message = message
        self.location = location


# -- scalars ---------------------------------------------------------------

_BINARY = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


def evaluate_expression(text: str, variables: dict[str, Fraction] | None = None) -> Fraction:
    """Exact value of an arithmetic expression over integers and named variables."""
    variables = variables or {}
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"not an expression: {text!r}") from exc

    def walk(node) -> Fraction:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name) and node.id in variables:
            return Fraction(variables[node.id])
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base, exp = walk(node.left), walk(node.right)
                if exp.denominator != 1 or abs(exp) > 64:
                    raise ValueError("exponents must be small integers")
                return base ** int(exp)
            op = _BINARY.get(type(node.op))
            if op is not None:
                left, right = walk(node.left), walk(node.right)
                if op is operator.truediv and right == 0:
                    raise ValueError("division by zero")
                return op(left, right)
        raise ValueError(f"unsupported syntax in {text!r}")

    return walk(tree)


def _rational(raw, where: str, variables: dict | None = None) -> Fraction:
    if isinstance(raw, bool) or raw is None:
        raise DocumentError("E_RATIONAL", f"expected a rational string, got {raw!r}", where)
    if isinstance(raw, int):
        return Fraction(raw)
    if not isinstance(raw, str):
        raise DocumentError("E_RATIONAL", f"expected a rational string, got {raw!r}", where)
    if variables:
        try:
            return evaluate_expression(raw, variables)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError("E_EXPRESSION", str(exc), where) from None
    try:
        return Fraction(raw.strip())
    except (ValueError, ZeroDivisionError):
        raise DocumentError("E_RATIONAL", f"malformed rational {raw!r}", where) from None


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_value(v) -> Any:
    """Fractions as strings, Balls as center/radius, containers recursively."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, float):
        return "inf" if v > 0 else "-inf"
    if isinstance(v, Ball):
        return {"center": format_rational(v.center), "radius": format_rational(v.radius)}
    if isinstance(v, AlgebraicPoint):
        return _format_point(v)
    if isinstance(v, dict):
        return {str(k): format_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [format_value(x) for x in v]
    raise TypeError(f"cannot serialise {type(v).__name__}")


def _coeffs(raw, where: str, variables=None) -> Polynomial:
    if not isinstance(raw, list):
        raise DocumentError("E_TYPE", "expected an array of coefficients", where)
    return Polynomial([_rational(c, f"{where}[{k}]", variables) for k, c in enumerate(raw)])


def _format_poly(p: Polynomial) -> list[str]:
    return [format_rational(c) for c in p.coeffs] or ["0"]


def _format_point(x) -> Any:
    if isinstance(x, AlgebraicPoint):
        return {"root_of": _format_poly(x.defining), "between": [format_rational(x.lo), format_rational(x.hi)]}
    return format_rational(x)


def _parse_point(raw, where: str, variables=None):
    if isinstance(raw, dict):
        if set(raw) != {"root_of", "between"}:
            raise DocumentError("E_FIELD", "algebraic points need root_of and between", where)
        poly = _coeffs(raw["root_of"], where + ".root_of")
        between = raw["between"]
        if not isinstance(between, list) or len(between) != 2:
            raise DocumentError("E_TYPE", "between must hold two rationals", where + ".between")
        lo, hi = (_rational(b, f"{where}.between[{k}]") for k, b in enumerate(between))
        try:
            return AlgebraicPoint(squarefree(poly), lo, hi)
        except PreconditionError as exc:
            raise DocumentError("E_ALGEBRAIC", str(exc), where) from None
    return _rational(raw, where, variables)


# -- functions -------------------------------------------------------------


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise DocumentError("E_FIELD", f"missing field {key!r}", where)
    return doc[key]


def _load(text_or_doc) -> Any:
    if isinstance(text_or_doc, (dict, list)):
        return text_or_doc
    try:
        return json.loads(text_or_doc)
    except json.JSONDecodeError as exc:
        raise DocumentError("E_JSON", exc.msg, f"line {exc.lineno} column {exc.colno}") from None


def function_from_document(doc: dict, where: str = "$", variables=None) -> PiecewiseFunction:
    if not isinstance(doc, dict):
        raise DocumentError("E_TYPE", "a function document is a JSON object", where)
    bps_raw = _require(doc, "breakpoints", where)
    pieces_raw = doc.get("pieces", [])
    vals_raw = _require(doc, "values_at", where)
    for key, raw in (("breakpoints", bps_raw), ("pieces", pieces_raw), ("values_at", vals_raw)):
        if not isinstance(raw, list):
            raise DocumentError("E_TYPE", f"{key} must be an array", f"{where}.{key}")
    bps = [_parse_point(b, f"{where}.breakpoints[{k}]", variables) for k, b in enumerate(bps_raw)]
    for k in range(1, len(bps)):
        if not bps[k - 1] < bps[k]:
            raise DocumentError("E_ORDER", "breakpoints must be strictly increasing", f"{where}.breakpoints[{k}]")
    m = len(bps)
    if len(pieces_raw) != max(m - 1, 0):
        raise DocumentError("E_LENGTH", f"{m} breakpoints need {max(m - 1, 0)} pieces, got {len(pieces_raw)}",
                            f"{where}.pieces")
    if len(vals_raw) != m:
        raise DocumentError("E_LENGTH", f"{m} breakpoints need {m} values, got {len(vals_raw)}",
                            f"{where}.values_at")
    pieces = [_coeffs(p, f"{where}.pieces[{k}]", variables) for k, p in enumerate(pieces_raw)]
    vals = []
    for k, v in enumerate(vals_raw):
        if isinstance(v, dict):
            vals.append(_coeffs(_require(v, "poly", f"{where}.values_at[{k}]"), f"{where}.values_at[{k}].poly"))
        else:
            vals.append(_rational(v, f"{where}.values_at[{k}]", variables))
    left = _rational(doc.get("left_tail", "0"), f"{where}.left_tail", variables)
    right = _rational(doc.get("right_tail", "0"), f"{where}.right_tail", variables)
    if m == 0 and left != right:
        raise DocumentError("E_LENGTH", "without breakpoints the tails must agree", f"{where}.right_tail")
    return PiecewiseFunction(bps, pieces, vals, left, right)


def function_to_document(f: PiecewiseFunction, kind: str = "regulated", name: str | None = None) -> dict:
    doc: dict = {"kind": kind}
    if name:
        doc["name"] = name
    doc["breakpoints"] = [_format_point(x) for x in f.breakpoints]
    doc["left_tail"] = format_rational(f.left_tail)
    doc["right_tail"] = format_rational(f.right_tail)
    doc["pieces"] = [_format_poly(p) for p in f.pieces]
    doc["values_at"] = [{"poly": _format_poly(v)} if isinstance(v, Polynomial) else format_rational(v)
                        for v in f.values_at]
    return doc


def parse_function(text_or_doc) -> PiecewiseFunction:
    """A regulated, bv or distribution-primitive document as a PiecewiseFunction."""
    doc = _load(text_or_doc)
    if isinstance(doc, dict) and doc.get("kind", "regulated") not in FUNCTION_KINDS:
        raise DocumentError("E_KIND", f"unknown kind {doc.get('kind')!r}", "$.kind")
    return function_from_document(doc)


def serialize_function(f: PiecewiseFunction, kind: str = "regulated") -> str:
    return json.dumps(function_to_document(f, kind))


def parse_distribution(text_or_doc) -> Distribution:
    doc = _load(text_or_doc)
    kind = doc.get("kind") if isinstance(doc, dict) else None
    if kind != "distribution-primitive":
        raise DocumentError("E_KIND", "expected a distribution-primitive document", "$.kind")
    F = function_from_document(doc)
    try:
        return Distribution(F)
    except PreconditionError as exc:
        raise DocumentError("E_PRIMITIVE", str(exc), "$") from None


def distribution_to_document(f: Distribution) -> dict:
    return function_to_document(primitive_of(f), "distribution-primitive")


def parse_map(text_or_doc) -> MonotonePiecewiseMap:
    doc = _load(text_or_doc)
    if not isinstance(doc, dict) or doc.get("kind") != "map":
        raise DocumentError("E_KIND", "expected a map document", "$.kind")
    bps = [_rational(b, f"$.breakpoints[{k}]") for k, b in enumerate(_require(doc, "breakpoints", "$"))]
    pieces = [_coeffs(p, f"$.pieces[{k}]") for k, p in enumerate(_require(doc, "pieces", "$"))]
    vals = [_rational(v, f"$.values_at[{k}]") for k, v in enumerate(_require(doc, "values_at", "$"))]
    for k in range(1, len(bps)):
        if not bps[k - 1] < bps[k]:
            raise DocumentError("E_ORDER", "breakpoints must be strictly increasing", f"$.breakpoints[{k}]")
    if len(pieces) != len(bps) + 1:
        raise DocumentError("E_LENGTH", "a map needs m + 1 pieces", "$.pieces")
    if len(vals) != len(bps):
        raise DocumentError("E_LENGTH", "a map needs m values", "$.values_at")
    return MonotonePiecewiseMap(tuple(bps), tuple(pieces), tuple(vals))


def parse_test_function(text_or_doc) -> TestFunction:
    doc = _load(text_or_doc)
    kind = doc.get("kind") if isinstance(doc, dict) else None
    if kind == "bump":
        order = doc.get("order", 2)
        if not isinstance(order, int):
            raise DocumentError("E_TYPE", "order must be an integer", "$.order")
        return bump(_rational(_require(doc, "a", "$"), "$.a"), _rational(_require(doc, "b", "$"), "$.b"),
                    order, _rational(doc.get("scale", "1"), "$.scale"))
    if kind == "test":
        order = doc.get("order", 2)
        if not isinstance(order, int):
            raise DocumentError("E_TYPE", "order must be an integer", "$.order")
        return TestFunction(function_from_document(doc), order)
    raise DocumentError("E_KIND", "expected a bump or test document", "$.kind")


# -- intervals and sets ------------------------------------------------------

_INTERVAL = re.compile(r"^\s*([\[(])\s*([^,\s]+)\s*,\s*([^,\s]+)\s*([\])])\s*$")
_POINT = re.compile(r"^\s*\{\s*([^{}\s]+)\s*\}\s*$")


def _endpoint(token: str, where: str):
    t = token.strip().lower()
    if t in ("inf", "+inf"):
        return INF
    if t == "-inf":
        return -INF
    return _rational(token, where)


def parse_interval(text: str) -> IntervalSpec:
    """One of (a,b) (a,b] [a,b) [a,b] {a} R, with a, b rational or +-inf."""
    where = f"interval {text!r}"
    if text.strip() in ("R", "ℝ"):
        return IntervalSpec.real_line()
    m = _POINT.match(text)
    if m:
        return IntervalSpec.point(_endpoint(m.group(1), where))
    m = _INTERVAL.match(text)
    if not m:
        raise DocumentError("E_INTERVAL", "expected (a,b), (a,b], [a,b), [a,b], {a} or R", where)
    lo, hi = _endpoint(m.group(2), where), _endpoint(m.group(3), where)
    try:
        return IntervalSpec(lo, hi, m.group(1) == "[", m.group(4) == "]")
    except PreconditionError as exc:
        raise DocumentError("E_INTERVAL", str(exc), where) from None


def parse_set(text: str) -> BVSet:
    """A union of interval expressions joined by U or the union sign; {} is empty."""
    if text.strip() in ("{}", "∅", ""):
        return BVSet()
    parts = re.split(r"\s*(?:∪|\bU\b)\s*", text.strip())
    return BVSet([parse_interval(p) for p in parts])


# -- sequence families -------------------------------------------------------


def parse_family(text_or_doc) -> tuple[Callable[[int], Any], Any, int]:
    """(generator, claimed limit, start index) from a family document.

    The member template is a function document whose rational strings may
    be expressions in the index variable, e.g. "1/n".  Distribution-primitive
    templates give Distributions, other kinds give PiecewiseFunctions.
    """
    doc = _load(text_or_doc)
    if not isinstance(doc, dict) or doc.get("kind") != "family":
        raise DocumentError("E_KIND", "expected a family document", "$.kind")
    var = doc.get("index", "n")
    if not isinstance(var, str) or not var.isidentifier():
        raise DocumentError("E_FIELD", "index must be an identifier", "$.index")
    template = _require(doc, "member", "$")
    if not isinstance(template, dict):
        raise DocumentError("E_TYPE", "member must be a function document", "$.member")
    as_distribution = template.get("kind", "distribution-primitive") == "distribution-primitive"
    start = doc.get("start", 1)
    if not isinstance(start, int) or isinstance(start, bool):
        raise DocumentError("E_TYPE", "start must be an integer", "$.start")

    def wrap(F, where):
        if not as_distribution:
            return F
        try:
            return Distribution(F)
        except PreconditionError as exc:
            raise DocumentError("E_PRIMITIVE", str(exc), where) from None

    limit = wrap(function_from_document(_require(doc, "limit", "$"), "$.limit"), "$.limit")

    def generate(n: int):
        return wrap(function_from_document(template, "$.member", {var: Fraction(n)}), f"$.member (index {n})")

    generate(start)
    return generate, limit, start
