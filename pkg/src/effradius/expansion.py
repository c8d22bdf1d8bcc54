"""Taylor expansion of parsed expressions by truncated power-series arithmetic.

Every intermediate value is a list ``c`` of ``m + 1`` floats holding the
coefficients of ``(x - x0)**k``.  The elementary functions use the usual
recurrences obtained from ``w' = g(u) u'`` (see e.g. Griewank & Walther,
*Evaluating Derivatives*, ch. 13).
"""

from __future__ import annotations

import math

from .errors import SeriesError
from .expr import BinOp, Call, Const, ExprNode, NamedConst, Neg, Var, depends_on_x, eval_ast
from .series import PowerSeries

MAX_DEGREE = 1000
_TINY = 1e-300

TruncSeries = list[float]


def _check(c: TruncSeries, what: str) -> TruncSeries:
    for k, v in enumerate(c):
        if not math.isfinite(v):
            raise SeriesError(f"{what}: coefficient {k} is not finite")
    return c


def constant(value: float, m: int) -> TruncSeries:
    return [float(value)] + [0.0] * m


def variable(x0: float, m: int) -> TruncSeries:
    c = constant(x0, m)
    if m >= 1:
        c[1] = 1.0
    return c


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return [x + y for x, y in zip(a, b)]


def sub(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return [x - y for x, y in zip(a, b)]


def scale(a: TruncSeries, s: float) -> TruncSeries:
    return [s * x for x in a]


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated to the common order."""
    m = len(a)
    return [sum(a[j] * b[k - j] for j in range(k + 1)) for k in range(m)]


def reciprocal(b: TruncSeries) -> TruncSeries:
    b0 = b[0]
    if abs(b0) <= _TINY:
        raise SeriesError("division by a series with zero constant term")
    r = [1.0 / b0]
    for k in range(1, len(b)):
        r.append(-sum(b[j] * r[k - j] for j in range(1, k + 1)) / b0)
    return _check(r, "reciprocal")


def div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return mul(a, reciprocal(b))


def exp(u: TruncSeries) -> TruncSeries:
    try:
        e = [math.exp(u[0])]
    except OverflowError:
        raise SeriesError("exp overflows at the expansion point") from None
    for k in range(1, len(u)):
        e.append(sum(j * u[j] * e[k - j] for j in range(1, k + 1)) / k)
    return _check(e, "exp")


def log(u: TruncSeries) -> TruncSeries:
    u0 = u[0]
    if u0 <= 0.0:
        raise SeriesError("ln needs a positive constant term")
    w = [math.log(u0)]
    for k in range(1, len(u)):
        s = sum(j * w[j] * u[k - j] for j in range(1, k))
        w.append((u[k] - s / k) / u0)
    return _check(w, "ln")


def sin_cos(u: TruncSeries) -> tuple[TruncSeries, TruncSeries]:
    """Expand ``sin(u)`` and ``cos(u)`` together."""
    s = [math.sin(u[0])]
    c = [math.cos(u[0])]
    for k in range(1, len(u)):
        s.append(sum(j * u[j] * c[k - j] for j in range(1, k + 1)) / k)
        c.append(-sum(j * u[j] * s[k - j] for j in range(1, k + 1)) / k)
    return s, c


def sqrt(u: TruncSeries) -> TruncSeries:
    u0 = u[0]
    if u0 <= 0.0:
        raise SeriesError("sqrt needs a positive constant term")
    r = [math.sqrt(u0)]
    for k in range(1, len(u)):
        s = sum(r[j] * r[k - j] for j in range(1, k))
        r.append((u[k] - s) / (2.0 * r[0]))
    return _check(r, "sqrt")


def int_power(u: TruncSeries, n: int) -> TruncSeries:
    """``u**n`` by repeated squaring; negative ``n`` goes through the reciprocal."""
    if n < 0:
        return int_power(reciprocal(u), -n)
    result = constant(1.0, len(u) - 1)
    base = u
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return _check(result, "power")


def _expand(node: ExprNode, x0: float, m: int) -> TruncSeries:
    match node:
        case Const(value):
            return constant(value, m)
        case NamedConst():
            return constant(node.value, m)
        case Var():
            return variable(x0, m)
        case Neg(operand):
            return scale(_expand(operand, x0, m), -1.0)
        case BinOp("^", left, right):
            if depends_on_x(left):
                k = eval_ast(right, x0)
                if depends_on_x(right) or k != int(k):
                    raise SeriesError("a variable base needs a constant integer exponent")
                return int_power(_expand(left, x0, m), int(k))
            base = eval_ast(left, x0)
            if not depends_on_x(right):
                return constant(eval_ast(node, x0), m)
            if base <= 0.0:
                raise SeriesError("a variable exponent needs a positive constant base")
            return exp(scale(_expand(right, x0, m), math.log(base)))
        case BinOp(op, left, right):
            a = _expand(left, x0, m)
            b = _expand(right, x0, m)
            if op == "+":
                return add(a, b)
            if op == "-":
                return sub(a, b)
            if op == "*":
                return _check(mul(a, b), "product")
            if op == "/":
                return _check(div(a, b), "quotient")
            raise ValueError(f"unknown operator {op!r}")
        case Call(func, arg):
            u = _expand(arg, x0, m)
            if func == "exp":
                return exp(u)
            if func == "ln":
                return log(u)
            if func == "sqrt":
                return sqrt(u)
            if func in ("sin", "cos", "tan"):
                s, c = sin_cos(u)
                if func == "sin":
                    return s
                if func == "cos":
                    return c
                return _check(div(s, c), "tan")
            raise ValueError(f"unknown function {func!r}")
    raise TypeError(f"not an expression node: {node!r}")


def taylor(node: ExprNode, x0: float = 0.0, m: int = 10) -> PowerSeries:
    """Degree-``m`` Taylor polynomial of ``node`` about ``x0``."""
    if isinstance(m, bool) or int(m) != m or m < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {m!r}")
    if m > MAX_DEGREE:
        raise ValueError(f"degree {m} exceeds the cap of {MAX_DEGREE}")
    x0 = float(x0)
    if not math.isfinite(x0):
        raise ValueError("expansion point must be finite")
    coeffs = _check(_expand(node, x0, int(m)), "expansion")
    return PowerSeries(coeffs, x0)
