import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from effradius import expansion as ts
from effradius.coincidence import graph_distance
from effradius.errors import SeriesError
from effradius.expr import eval_ast, parse
from effradius.gallery import CASES, MIXED, RATIONAL
from effradius.series import evaluate
from effradius.expansion import taylor


def rational_long_division(num, den, m):
    """Exact quotient coefficients of two polynomials (Fraction arithmetic)."""
    num = list(num) + [Fraction(0)] * (m + 1 - len(num))
    den = list(den) + [Fraction(0)] * (m + 1 - len(den))
    q = []
    for k in range(m + 1):
        q.append((num[k] - sum(den[j] * q[k - j] for j in range(1, k + 1))) / den[0])
    return q


RATIONAL_EXACT = rational_long_division(
    [Fraction(0), Fraction(1, 8), Fraction(1, 2)], [Fraction(1), Fraction(1, 8), Fraction(1, 2)], 30
)


def test_sine_coefficients():
    s = taylor(parse("sin(x)"), 0.0, 11)
    expected = [0.0 if n % 2 == 0 else (-1) ** (n // 2) / math.factorial(n) for n in range(12)]
    assert s.coeffs == pytest.approx(expected, rel=1e-15, abs=0)
    assert s.coeffs[-1] == pytest.approx(-1 / 39916800, rel=1e-15)


def test_exp_coefficients():
    assert taylor(parse("exp(x)"), 0.0, 4).coeffs == pytest.approx([1, 1, 1 / 2, 1 / 6, 1 / 24], rel=1e-15)


def test_rational_first_terms():
    assert RATIONAL_EXACT[:4] == [0, Fraction(1, 8), Fraction(31, 64), Fraction(-63, 512)]
    s = taylor(parse(RATIONAL.expr), 0.0, 3)
    assert s.coeffs == (0.0, 0.125, 31 / 64, -63 / 512)


def test_rational_degree_30_against_exact_division(rational):
    _, s = rational
    assert s.coeffs == pytest.approx([float(q) for q in RATIONAL_EXACT], rel=1e-12, abs=1e-300)


def test_mixed_against_high_precision_oracle(mixed):
    _, s = mixed
    mpmath.mp.dps = 60
    f = lambda x: (mpmath.sin(3 * x) * mpmath.cos(5 * x) * mpmath.exp(-x)
                   + 3 * mpmath.sin(mpmath.pi * x) * mpmath.exp(x / 2))
    oracle = [float(c) for c in mpmath.taylor(f, 0, MIXED.degree)]
    scale = max(abs(c) for c in oracle)
    for got, want in zip(s.coeffs, oracle):
        assert abs(got - want) <= 1e-12 * max(abs(want), 1e-6 * scale)


@pytest.mark.parametrize(
    "text,x0",
    [("exp(2*x)", 0.5), ("ln(x)", 2.0), ("sqrt(x)", 4.0), ("cos(x)", 1.0), ("tan(x)", 0.3),
     ("1/(2 - x)", 0.0), ("x^-3", 1.5), ("(1+x)^7", -0.2), ("2^x", 1.0), ("sin(x)^2 + cos(x)^2", 0.7)],
)
def test_elementary_expansions_against_mpmath(text, x0):
    node = parse(text)
    m = 12
    s = taylor(node, x0, m)
    mpmath.mp.dps = 40
    oracle = mpmath.taylor(lambda t: _mp_eval(text, t), x0, m)
    for got, want in zip(s.coeffs, oracle):
        assert got == pytest.approx(float(want), rel=1e-11, abs=1e-13)


def _mp_eval(text, t):
    env = {"sin": mpmath.sin, "cos": mpmath.cos, "tan": mpmath.tan, "exp": mpmath.exp,
           "ln": mpmath.log, "sqrt": mpmath.sqrt, "x": t, "pi": mpmath.pi}
    return eval(text.replace("^", "**"), {"__builtins__": {}}, env)


def test_center_offset_exp():
    s = taylor(parse("exp(x)"), 1.0, 3)
    e = math.e
    assert s.coeffs == pytest.approx([e, e, e / 2, e / 6], rel=1e-15)
    assert s.center == 1.0


@pytest.mark.parametrize(
    "text,x0",
    [("1/x", 0.0), ("ln(x)", 0.0), ("ln(x)", -1.0), ("sqrt(x)", 0.0), ("sqrt(x - 1)", 0.0), ("x/sin(x)", 0.0), ("1/(x - 1)", 1.0)],
)
def test_expansion_errors(text, x0):
    with pytest.raises(SeriesError):
        taylor(parse(text), x0, 5)


def test_degree_validation():
    with pytest.raises(ValueError):
        taylor(parse("x"), 0.0, -1)
    with pytest.raises(ValueError):
        taylor(parse("x"), 0.0, 1001)
    assert taylor(parse("x"), 3.0, 0).coeffs == (3.0,)


def test_int_power_matches_repeated_product():
    u = [0.3, -1.2, 0.5, 2.0, 0.1]
    p = [1.0, 0, 0, 0, 0]
    for _ in range(5):
        p = ts.mul(p, u)
    assert ts.int_power(u, 5) == pytest.approx(p, rel=1e-14)
    assert ts.mul(ts.int_power(u, -2), ts.int_power(u, 2)) == pytest.approx([1, 0, 0, 0, 0], abs=1e-12)


poly_coeffs = st.lists(st.floats(-3, 3, allow_nan=False), min_size=1, max_size=9)


@settings(max_examples=100)
@given(poly_coeffs, st.floats(-2, 2, allow_nan=False), st.floats(-2, 2, allow_nan=False))
def test_polynomial_round_trip(cs, x0, dx):
    text = " + ".join(f"({c!r})*x^{n}" for n, c in enumerate(cs))
    node = parse(text)
    s = taylor(node, x0, 8)
    x = x0 + dx
    want = eval_ast(node, x)
    scale = sum(abs(c) * abs(x) ** n for n, c in enumerate(cs))
    assert abs(evaluate(s, x) - want) <= 1e-10 * max(abs(want), scale, 1e-300)


@pytest.mark.parametrize("name", sorted(CASES))
def test_first_derivative_matches_central_difference(name):
    case = CASES[name]
    node = parse(case.expr)
    for x0 in (0.0, 0.3):
        s = taylor(node, x0, case.degree)
        h = 1e-5
        fd = (eval_ast(node, x0 + h) - eval_ast(node, x0 - h)) / (2 * h)
        assert abs(s.coeffs[1] - fd) < 1e-6


@pytest.mark.parametrize("text", ["sin(x)", "exp(x)", "exp(-x^2/2)/sqrt(2*pi)"])
def test_remainder_decays_with_degree(text):
    node = parse(text)
    errors = [graph_distance(node, taylor(node, 0.0, m), -1.0, 1.0).distance for m in range(4, 17)]
    assert all(b <= a for a, b in zip(errors, errors[1:]))
