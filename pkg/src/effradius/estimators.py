"""Radius-of-convergence estimates from a finite list of coefficients.

Two families are provided:

* root-test sequences ``R_n = |a_n|**(-1/p(n))`` over all, even or odd
  indices, whose final terms serve as radius estimates;
* a least-squares line through the points ``(n, ln|a_n|)``, whose slope
  ``beta1`` gives ``R = exp(-beta1)``.

Two exponent rules exist for the root test.  ``stated`` uses
``p(n) = n`` (the textbook Cauchy-Hadamard form, undefined at ``n = 0``).
``empirical`` uses ``p(n) = n + 1`` (so the ``x**3`` term of ``sin``
gives ``6**(1/4) = 1.565``); it is the default.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Literal

from .errors import EstimationError
from .series import DEFAULT_PARITY_TOL, PowerSeries, classify_parity

Convention = Literal["stated", "empirical"]
ParityFilter = Literal["all", "even", "odd"]

CONVENTIONS = ("stated", "empirical")
PARITY_FILTERS = ("all", "even", "odd")
DEFAULT_CONVENTION: Convention = "empirical"
DEFAULT_SCREEN_WINDOW = 3


class ShortTailWarning(UserWarning):
    """Too few nonzero coefficients for the divergence screen."""


@dataclass(frozen=True)
class RadiusSequence:
    entries: tuple[tuple[int, float], ...]
    convention: Convention
    parity_filter: ParityFilter

    @property
    def indices(self) -> list[int]:
        return [n for n, _ in self.entries]

    @property
    def values(self) -> list[float]:
        return [r for _, r in self.entries]

    @property
    def last(self) -> float:
        return self.entries[-1][1]

    def to_dict(self) -> dict:
        return {
            "convention": self.convention,
            "parity_filter": self.parity_filter,
            "entries": [[n, r] for n, r in self.entries],
        }

    @classmethod
    def from_dict(cls, data: dict) -> RadiusSequence:
        entries = tuple((int(n), float(r)) for n, r in data["entries"])
        return cls(entries, data["convention"], data["parity_filter"])


@dataclass(frozen=True)
class RootEstimate:
    r_all: float | None
    r_even: float | None
    r_odd: float | None
    selected: float
    selected_branch: ParityFilter
    selected_reason: str
    divergence_flags: dict[str, bool] = field(default_factory=dict)
    parity: str = "neither"
    convention: Convention = DEFAULT_CONVENTION

    def to_dict(self) -> dict:
        return {
            "r_all": self.r_all,
            "r_even": self.r_even,
            "r_odd": self.r_odd,
            "selected": self.selected,
            "selected_branch": self.selected_branch,
            "selected_reason": self.selected_reason,
            "divergence_flags": dict(self.divergence_flags),
            "parity": self.parity,
            "convention": self.convention,
        }

    @classmethod
    def from_dict(cls, data: dict) -> RootEstimate:
        return cls(**{**data, "divergence_flags": dict(data["divergence_flags"])})


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float | None
    radius_estimate: float
    points_used: tuple[tuple[int, float], ...]
    residual_sum_squares: float

    def to_dict(self) -> dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "radius_estimate": self.radius_estimate,
            "points_used": [[n, y] for n, y in self.points_used],
            "residual_sum_squares": self.residual_sum_squares,
        }

    @classmethod
    def from_dict(cls, data: dict) -> FitResult:
        points = tuple((int(n), float(y)) for n, y in data["points_used"])
        return cls(
            data["slope"], data["intercept"], data["radius_estimate"], points,
            data["residual_sum_squares"],
        )


def _filtered_terms(series: PowerSeries, parity_filter: ParityFilter) -> list[tuple[int, float]]:
    if parity_filter not in PARITY_FILTERS:
        raise ValueError(f"unknown parity filter {parity_filter!r}")
    terms = series.nonzero_terms()
    if parity_filter == "even":
        return [(n, c) for n, c in terms if n % 2 == 0]
    if parity_filter == "odd":
        return [(n, c) for n, c in terms if n % 2 == 1]
    return terms


def root_sequence(
    series: PowerSeries,
    convention: Convention = DEFAULT_CONVENTION,
    parity_filter: ParityFilter = "all",
) -> RadiusSequence:
    """Reciprocal root-test values for every nonzero coefficient."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    entries = []
    for n, c in _filtered_terms(series, parity_filter):
        if convention == "stated":
            if n == 0:
                continue
            power = n
        else:
            power = n + 1
        r = abs(c) ** (-1.0 / power)
        if r > 0.0 and math.isfinite(r):
            entries.append((n, r))
    if not entries:
        raise EstimationError(
            f"no root-test terms for parity filter {parity_filter!r} under the {convention!r} convention"
        )
    return RadiusSequence(tuple(entries), convention, parity_filter)


def divergence_screen(
    series: PowerSeries, parity_filter: ParityFilter = "all", k: int = DEFAULT_SCREEN_WINDOW
) -> bool:
    """True when the last ``k`` nonzero ``|a_n|`` of the branch never decrease.

    With fewer than ``k`` nonzero terms a ``ShortTailWarning`` is issued and
    the result is False.
    """
    if k < 2:
        raise ValueError("screen window k must be at least 2")
    tail = [abs(c) for _, c in _filtered_terms(series, parity_filter)][-k:]
    if len(tail) < k:
        warnings.warn(
            f"only {len(tail)} nonzero {parity_filter} terms, screen needs {k}",
            ShortTailWarning,
            stacklevel=2,
        )
        return False
    return all(a <= b for a, b in zip(tail, tail[1:]))


def _last_or_none(series: PowerSeries, convention: Convention, parity_filter: ParityFilter) -> float | None:
    try:
        return root_sequence(series, convention, parity_filter).last
    except EstimationError:
        return None


def root_estimate(
    series: PowerSeries,
    convention: Convention = DEFAULT_CONVENTION,
    *,
    tol: float = DEFAULT_PARITY_TOL,
    k: int = DEFAULT_SCREEN_WINDOW,
) -> RootEstimate:
    """Final root-test terms per branch and the one matching the series' parity.

    An even series uses the even branch, an odd series the odd branch, and
    anything else the full sequence.  A branch whose tail fails the
    divergence screen is skipped in favour of the next surviving one.
    """
    values = {f: _last_or_none(series, convention, f) for f in PARITY_FILTERS}
    flags = {}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ShortTailWarning)
        for f in PARITY_FILTERS:
            flags[f] = divergence_screen(series, f, k)

    parity = classify_parity(series, tol)
    preferred: ParityFilter = {"even": "even", "odd": "odd", "neither": "all"}[parity]
    order = [preferred] + [f for f in ("all", "even", "odd") if f != preferred]
    for f in order:
        if values[f] is None or flags[f]:
            continue
        if f == preferred:
            reason = f"series is {parity}; final term of the {f} sequence"
        else:
            reason = f"preferred {preferred} branch unusable; fell back to the {f} sequence"
        return RootEstimate(
            values["all"], values["even"], values["odd"], values[f], f, reason,
            flags, parity, convention,
        )
    raise EstimationError("every root-test branch is empty or fails the divergence screen")


def parse_window(text: str | None) -> tuple[int | None, int | None] | None:
    """Parse ``"lo:hi"`` (either side may be empty) into an inclusive range."""
    if text is None:
        return None
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"window must look like n_min:n_max, got {text!r}")
    try:
        bounds = (int(lo) if lo.strip() else None, int(hi) if hi.strip() else None)
    except ValueError:
        raise ValueError(f"window bounds must be integers, got {text!r}") from None
    if bounds[0] is not None and bounds[1] is not None and bounds[0] > bounds[1]:
        raise ValueError(f"empty window {text!r}")
    return bounds


def ols_data(
    series: PowerSeries, window: tuple[int | None, int | None] | None = None
) -> list[tuple[int, float]]:
    """Points ``(n, ln|a_n|)`` for nonzero coefficients inside ``window``."""
    lo, hi = window if window is not None else (None, None)
    return [
        (n, math.log(abs(c)))
        for n, c in series.nonzero_terms()
        if (lo is None or n >= lo) and (hi is None or n <= hi)
    ]


def ols_estimate(
    series: PowerSeries,
    with_intercept: bool = False,
    window: tuple[int | None, int | None] | None = None,
) -> FitResult:
    """Least-squares fit of ``ln|a_n|`` against ``n``; ``R = exp(-slope)``.

    Without an intercept the line passes through the origin.
    """
    if not series.nonzero_terms():
        raise EstimationError("all coefficients are zero")
    points = ols_data(series, window)
    ns = [float(n) for n, _ in points]
    ys = [y for _, y in points]

    if with_intercept:
        if len(points) < 2:
            raise EstimationError("an intercept fit needs at least 2 nonzero coefficients")
        n_bar = math.fsum(ns) / len(ns)
        y_bar = math.fsum(ys) / len(ys)
        sxx = math.fsum((n - n_bar) ** 2 for n in ns)
        sxy = math.fsum((n - n_bar) * (y - y_bar) for n, y in zip(ns, ys))
        slope = sxy / sxx
        intercept = y_bar - slope * n_bar
    else:
        sxx = math.fsum(n * n for n in ns)
        if sxx == 0.0:
            raise EstimationError("a through-origin fit needs a nonzero coefficient with n >= 1")
        slope = math.fsum(n * y for n, y in zip(ns, ys)) / sxx
        intercept = None

    level = intercept or 0.0
    rss = math.fsum((y - level - slope * n) ** 2 for n, y in zip(ns, ys))
    return FitResult(slope, intercept, math.exp(-slope), tuple(points), rss)
