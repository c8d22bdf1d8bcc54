"""Exit criteria.  Each check records a PASS/FAIL line that is printed in
the terminal summary; run ``pytest tests/test_acceptance.py`` to see them."""

import math
import random
import time

import pytest
from conftest import ACCEPTANCE_LINES

from effradius.cli import run
from effradius.coincidence import effective_radius, graph_distance
from effradius.estimators import ols_estimate, root_sequence
from effradius.series import PowerSeries, evaluate, split_parity

SIN_ODD = [1.0, 1.565, 2.221, 2.903, 3.597, 4.300]
PDF_EVEN = [2.507, 1.711, 1.822, 1.982, 2.145, 2.302]


def check(criterion, label, ok, detail, started):
    elapsed = time.perf_counter() - started
    ok = bool(ok) and elapsed < 1.0
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  [{criterion}] {label}: {detail} ({elapsed:.3f}s)")
    assert ok, f"{label}: {detail}"


def close(got, want, *, rel=None, abs_=None):
    tol = rel * abs(want) if rel is not None else abs_
    return abs(got - want) <= tol


def test_c1_root_sequences(sine, pdf):
    t = time.perf_counter()
    sin_seq = root_sequence(sine[1], "empirical", "odd").values
    pdf_seq = root_sequence(pdf[1], "empirical", "even").values
    ok = (
        len(sin_seq) == 6 and len(pdf_seq) == 6
        and all(close(g, w, abs_=1e-3) for g, w in zip(sin_seq, SIN_ODD))
        and all(close(g, w, abs_=1e-3) for g, w in zip(pdf_seq, PDF_EVEN))
    )
    detail = f"sin {[round(v, 3) for v in sin_seq]}, pdf {[round(v, 3) for v in pdf_seq]}"
    check(1, "empirical root sequences", ok, detail, t)


@pytest.mark.parametrize(
    "r,want,rel",
    [(3.5973, 2.55e-3, 0.03), (4.5973, 5.97e-2, 0.03), (0.665, 7.93e-13, 0.05)],
)
def test_c2_sine_distances(sine, r, want, rel):
    t = time.perf_counter()
    got = graph_distance(sine[0], sine[1], -r, r, 100, "linf").distance
    check(2, f"sin eps({r})", close(got, want, rel=rel), f"{got:.4e} vs {want:.3g} +-{rel:.0%}", t)


def test_c3_pdf_distance(pdf):
    t = time.perf_counter()
    got = graph_distance(pdf[0], pdf[1], -0.752, 0.752, 100, "linf").distance
    check(3, "pdf eps(0.752)", close(got, 2.71e-7, rel=0.05), f"{got:.4e} vs 2.71e-07 +-5%", t)


def test_c3_rational_distance(rational):
    # the published value is for the one-sided interval [0, 0.9318]
    t = time.perf_counter()
    got = graph_distance(rational[0], rational[1], 0.0, 0.9318, 100, "linf").distance
    check(3, "rational eps on [0, 0.9318]", close(got, 4.74e-7, rel=0.10), f"{got:.4e} vs 4.74e-07 +-10%", t)


@pytest.mark.parametrize(
    "name,eps,want,tol,side",
    [
        ("pdf", 0.1377, 2.3, 0.01, "both"),
        ("rational", 0.217, 1.402, 0.005, "right"),
        ("mixed", 0.1377, 1.54, 0.02, "both"),
    ],
)
def test_c4_effective_radius(request, name, eps, want, tol, side):
    t = time.perf_counter()
    f, s = request.getfixturevalue(name)
    res = effective_radius(f, s, 0.0, eps, 100, "linf", 10.0, side)
    check(4, f"{name} R_ef({eps}, {side})", close(res.r_ef, want, abs_=tol),
          f"{res.r_ef:.5f} vs {want} +-{tol}", t)


def test_c5_true_radius(rational):
    t = time.perf_counter()
    last = root_sequence(rational[1], "stated").last
    geo = root_sequence(PowerSeries([(1 / 3) ** n for n in range(31)]), "stated").values
    worst = max(abs(v - 3.0) for v in geo)
    ok = abs(last - math.sqrt(2)) < 0.15 and worst <= 1e-12
    check(5, "true-radius recovery", ok, f"rational last {last:.6f} vs sqrt2; geometric max err {worst:.1e}", t)


def test_c6_ols_properties():
    t = time.perf_counter()
    errs = []
    for r in (0.25, 0.5, 2.0):
        fit = ols_estimate(PowerSeries([r**n for n in range(11)]))
        errs.append(abs(fit.radius_estimate - 1 / r))
    for c in (0.1, 3.0):
        for r in (0.25, 0.5, 2.0):
            fit = ols_estimate(PowerSeries([c * r**n for n in range(11)]), with_intercept=True)
            errs.append(abs(fit.radius_estimate - 1 / r))
    base = [0.5**n for n in range(11)]
    padded = ols_estimate(PowerSeries(base + [0.0] * 4)).radius_estimate
    holes = ols_estimate(PowerSeries([0.0 if n in (2, 7) else v for n, v in enumerate(base)])).radius_estimate
    windowed = ols_estimate(PowerSeries(base), window=(4, 9)).radius_estimate
    windowed_i = ols_estimate(PowerSeries([3 * v for v in base]), True, (2, 6)).radius_estimate
    errs += [abs(v - 2.0) for v in (padded, holes, windowed, windowed_i)]
    check(6, "OLS exactness", max(errs) <= 1e-12, f"max |R - 1/r| = {max(errs):.1e}", t)


def test_c7_structural_invariants(sine, pdf, mixed, rational, tmp_path):
    t = time.perf_counter()
    rng = random.Random(2024)
    recon = True
    horner_worst = 0.0
    for _ in range(1000):
        s = PowerSeries([rng.uniform(-1, 1) for _ in range(rng.randint(1, 31))], rng.uniform(-2, 2))
        split = split_parity(s)
        recon &= (split.even + split.odd) == s
        x = s.center + rng.uniform(-2, 2)
        h = x - s.center
        naive = sum(c * h**n for n, c in enumerate(s.coeffs))
        scale = sum(abs(c) * abs(h) ** n for n, c in enumerate(s.coeffs))
        horner_worst = max(horner_worst, abs(evaluate(s, x) - naive) / scale)
    ordered = True
    for f, s in (sine, pdf, mixed, rational):
        for r in (0.5, 1.0, 1.5):
            d = [graph_distance(f, s, -r, r, 100, nm).distance for nm in ("linf", "l2", "l1")]
            ordered &= d[0] <= d[1] <= d[2]
    outputs = []
    for fmt in ("svg", "csv"):
        argv = ["plot", "--expr", "sin(x)", "--degree", "11", "--a", "-8", "--b", "8", "--format", fmt]
        outputs.append(run(argv) == run(argv))
    ok = recon and horner_worst <= 1e-12 and ordered and all(outputs)
    detail = (f"reconstruction {'exact' if recon else 'BROKEN'}, Horner rel {horner_worst:.1e}, "
              f"norm order {'ok' if ordered else 'BROKEN'}, deterministic output {'ok' if all(outputs) else 'BROKEN'}")
    check(7, "structural invariants", ok, detail, t)
