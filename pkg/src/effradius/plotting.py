"""Plot data as CSV text and a self-contained SVG line chart.

Everything here returns strings built with fixed formatting, so equal
inputs always give byte-identical output.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Sequence
from xml.sax.saxutils import escape

from .coincidence import Function, function_values
from .estimators import FitResult, RadiusSequence
from .series import PowerSeries, evaluate, make_grid

WIDTH = 800
HEIGHT = 600
MARGIN_LEFT = 80
MARGIN_RIGHT = 30
MARGIN_TOP = 50
MARGIN_BOTTOM = 60
COLORS = ("#1f77b4", "#d62728")


def overlay_rows(f: Function, series: PowerSeries, a: float, b: float, n: int = 100) -> list[tuple[float, float, float]]:
    grid = make_grid(a, b, n)
    fv = function_values(f, grid)
    return [(x, y, evaluate(series, x)) for x, y in zip(grid.points, fv)]


def ols_rows(fit: FitResult) -> list[tuple[int, float]]:
    return list(fit.points_used)


def sequence_rows(seq: RadiusSequence) -> list[tuple[int, float]]:
    return list(seq.entries)


def to_csv(header: Sequence[str], rows: Sequence[Sequence[float]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([v if isinstance(v, int) else repr(float(v)) for v in row])
    return buf.getvalue()


@dataclass(frozen=True)
class Line:
    label: str
    xs: tuple[float, ...]
    ys: tuple[float, ...]
    markers: bool = False
    dashed: bool = False


def _ticks(lo: float, hi: float, count: int = 6) -> list[float]:
    span = hi - lo
    raw = span / (count - 1)
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    first = math.ceil(lo / step - 1e-9) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return ticks


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def line_chart_svg(
    lines: Sequence[Line],
    title: str = "",
    xlabel: str = "x",
    ylabel: str = "y",
    ylim: tuple[float, float] | None = None,
) -> str:
    """Render up to a few polylines with axes, ticks and a legend.

    Points outside ``ylim`` are clipped by the plot area rather than dropped.
    """
    if not lines or any(len(ln.xs) != len(ln.ys) or not ln.xs for ln in lines):
        raise ValueError("every line needs matching, non-empty x and y data")
    xs_all = [x for ln in lines for x in ln.xs]
    x0, x1 = min(xs_all), max(xs_all)
    if ylim is None:
        ys_all = [y for ln in lines for y in ln.ys if math.isfinite(y)]
        y0, y1 = min(ys_all), max(ys_all)
    else:
        y0, y1 = ylim
    if x1 == x0:
        x0, x1 = x0 - 1.0, x1 + 1.0
    if y1 == y0:
        y0, y1 = y0 - 1.0, y1 + 1.0
    pad = 0.05 * (y1 - y0)
    y0, y1 = y0 - pad, y1 + pad

    left, right = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
    top, bottom = MARGIN_TOP, HEIGHT - MARGIN_BOTTOM

    def sx(x: float) -> float:
        return left + (x - x0) / (x1 - x0) * (right - left)

    def sy(y: float) -> float:
        y = min(max(y, y0 - 10 * (y1 - y0)), y1 + 10 * (y1 - y0))
        return bottom - (y - y0) / (y1 - y0) * (bottom - top)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        "<defs>",
        f'<clipPath id="plot-area"><rect x="{left}" y="{top}" width="{right - left}" height="{bottom - top}"/></clipPath>',
        "</defs>",
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2:.1f}" y="30" text-anchor="middle" font-size="18">{escape(title)}</text>')

    for t in _ticks(x0, x1):
        px = _fmt(sx(t))
        out.append(f'<line x1="{px}" y1="{top}" x2="{px}" y2="{bottom}" stroke="#eeeeee"/>')
        out.append(f'<text x="{px}" y="{bottom + 18}" text-anchor="middle" font-size="12">{t:.4g}</text>')
    for t in _ticks(y0, y1):
        py = _fmt(sy(t))
        out.append(f'<line x1="{left}" y1="{py}" x2="{right}" y2="{py}" stroke="#eeeeee"/>')
        out.append(f'<text x="{left - 6}" y="{py}" text-anchor="end" dominant-baseline="middle" font-size="12">{t:.4g}</text>')
    out.append(f'<rect x="{left}" y="{top}" width="{right - left}" height="{bottom - top}" fill="none" stroke="black"/>')
    if y0 < 0 < y1:
        out.append(f'<line x1="{left}" y1="{_fmt(sy(0))}" x2="{right}" y2="{_fmt(sy(0))}" stroke="#888888"/>')
    if x0 < 0 < x1:
        out.append(f'<line x1="{_fmt(sx(0))}" y1="{top}" x2="{_fmt(sx(0))}" y2="{bottom}" stroke="#888888"/>')
    out.append(f'<text x="{(left + right) / 2:.1f}" y="{HEIGHT - 15}" text-anchor="middle" font-size="14">{escape(xlabel)}</text>')
    out.append(
        f'<text x="20" y="{(top + bottom) / 2:.1f}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 20 {(top + bottom) / 2:.1f})">{escape(ylabel)}</text>'
    )

    out.append('<g clip-path="url(#plot-area)">')
    for i, ln in enumerate(lines):
        color = COLORS[i % len(COLORS)]
        pts = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in zip(ln.xs, ln.ys) if math.isfinite(y))
        dash = ' stroke-dasharray="6 4"' if ln.dashed else ""
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="2"{dash}/>')
        if ln.markers:
            for x, y in zip(ln.xs, ln.ys):
                if math.isfinite(y):
                    out.append(f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="3" fill="{color}"/>')
    out.append("</g>")

    for i, ln in enumerate(lines):
        color = COLORS[i % len(COLORS)]
        ly = top + 20 + 20 * i
        out.append(f'<line x1="{right - 160}" y1="{ly}" x2="{right - 130}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{right - 124}" y="{ly + 4}" font-size="12">{escape(ln.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def overlay_svg(rows: Sequence[tuple[float, float, float]], title: str = "") -> str:
    xs = tuple(r[0] for r in rows)
    fv = tuple(r[1] for r in rows)
    pv = tuple(r[2] for r in rows)
    lo, hi = min(fv), max(fv)
    extra = 0.25 * (hi - lo) if hi > lo else 1.0
    return line_chart_svg(
        [Line("f(x)", xs, fv), Line("Taylor polynomial", xs, pv, dashed=True)],
        title=title, xlabel="x", ylabel="y", ylim=(lo - extra, hi + extra),
    )


def ols_svg(fit: FitResult, title: str = "") -> str:
    ns = tuple(float(n) for n, _ in fit.points_used)
    ys = tuple(y for _, y in fit.points_used)
    level = fit.intercept or 0.0
    line_x = (min(0.0, ns[0]), ns[-1])
    line_y = tuple(level + fit.slope * x for x in line_x)
    return line_chart_svg(
        [Line("ln|a_n|", ns, ys, markers=True), Line(f"fit, R = {fit.radius_estimate:.4g}", line_x, line_y, dashed=True)],
        title=title, xlabel="n", ylabel="ln|a_n|",
    )


def sequence_svg(seq: RadiusSequence, title: str = "") -> str:
    ns = tuple(float(n) for n in seq.indices)
    rs = tuple(seq.values)
    final = (seq.last, seq.last)
    return line_chart_svg(
        [Line("R_n", ns, rs, markers=True), Line(f"final R_n = {seq.last:.4g}", (ns[0], ns[-1]), final, dashed=True)],
        title=title, xlabel="n", ylabel="R_n",
    )
