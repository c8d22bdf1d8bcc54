"""Truncated power series values, parity decomposition and evaluation grids."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .errors import NumericError

Parity = Literal["even", "odd", "neither"]

DEFAULT_PARITY_TOL = 1e-12


@dataclass(frozen=True)
class PowerSeries:
    """``sum(coeffs[n] * (x - center)**n for n in range(len(coeffs)))``."""

    coeffs: tuple[float, ...]
    center: float = 0.0

    def __init__(self, coeffs: Iterable[float], center: float = 0.0):
        values = tuple(float(c) for c in coeffs)
        if not values:
            raise ValueError("a power series needs at least one coefficient")
        for n, c in enumerate(values):
            if not math.isfinite(c):
                raise ValueError(f"coefficient a_{n} is not finite: {c!r}")
        center = float(center)
        if not math.isfinite(center):
            raise ValueError(f"center must be finite, got {center!r}")
        object.__setattr__(self, "coeffs", values)
        object.__setattr__(self, "center", center)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        if other.center != self.center:
            raise ValueError("cannot add series with different centers")
        size = max(len(self), len(other))
        a = self.coeffs + (0.0,) * (size - len(self))
        b = other.coeffs + (0.0,) * (size - len(other))
        return PowerSeries([x + y for x, y in zip(a, b)], self.center)

    def nonzero_terms(self) -> list[tuple[int, float]]:
        return [(n, c) for n, c in enumerate(self.coeffs) if c != 0.0]


@dataclass(frozen=True)
class ParitySplit:
    even: PowerSeries
    odd: PowerSeries


@dataclass(frozen=True)
class Grid:
    a: float
    b: float
    points: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points)


def evaluate(series: PowerSeries, x: float) -> float:
    """Evaluate ``series`` at ``x`` by Horner's scheme.

    Raises NumericError if a finite input overflows to an infinite result.
    """
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x!r}")
    h = x - series.center
    acc = 0.0
    for c in reversed(series.coeffs):
        acc = acc * h + c
    if not math.isfinite(acc):
        raise NumericError(f"series value overflows at x={x!r}")
    return acc


def split_parity(series: PowerSeries) -> ParitySplit:
    even = [c if n % 2 == 0 else 0.0 for n, c in enumerate(series.coeffs)]
    odd = [c if n % 2 == 1 else 0.0 for n, c in enumerate(series.coeffs)]
    return ParitySplit(PowerSeries(even, series.center), PowerSeries(odd, series.center))


def classify_parity(series: PowerSeries, tol: float = DEFAULT_PARITY_TOL) -> Parity:
    """Classify as ``even``/``odd`` when the other parity's coefficients are
    negligible relative to the largest ``|a_k|``.  The zero series is even."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    scale = max(abs(c) for c in series.coeffs)
    limit = tol * scale
    odd_small = all(abs(c) <= limit for c in series.coeffs[1::2])
    if odd_small:
        return "even"
    even_small = all(abs(c) <= limit for c in series.coeffs[0::2])
    if even_small:
        return "odd"
    return "neither"


def make_grid(a: float, b: float, n: int) -> Grid:
    """``n`` uniformly spaced points on ``[a, b]``, both endpoints included."""
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("grid endpoints must be finite")
    if not a < b:
        raise ValueError(f"need a < b, got a={a!r}, b={b!r}")
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise ValueError(f"need an integer N >= 2, got {n!r}")
    n = int(n)
    span = b - a
    last = n - 1
    points = [a + span * i / last for i in range(last)]
    points.append(b)
    return Grid(a, b, tuple(points))


def series_from_terms(terms: Sequence[tuple[int, float]], center: float = 0.0) -> PowerSeries:
    """Build a series from sparse ``(n, a_n)`` pairs; missing indices are zero."""
    if not terms:
        raise ValueError("no terms given")
    degree = max(n for n, _ in terms)
    coeffs = [0.0] * (degree + 1)
    for n, c in terms:
        if n < 0:
            raise ValueError(f"negative index {n}")
        coeffs[n] = float(c)
    return PowerSeries(coeffs, center)
