"""Grid distance between a function and its truncated series, and the
largest half-width on which that distance stays below a threshold."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal, Union

from .errors import DomainError, NumericError
from .expr import ExprNode, eval_ast
from .series import Grid, PowerSeries, evaluate, make_grid

Norm = Literal["l1", "l2", "linf"]
Side = Literal["both", "right", "left"]

NORMS = ("l1", "l2", "linf")
SIDES = ("both", "right", "left")
DEFAULT_N = 100
DEFAULT_NORM: Norm = "linf"
DEFAULT_R_MAX = 10.0
SCAN_STEPS = 64
REL_WIDTH = 1e-6
MAX_BISECTIONS = 200

Function = Union[ExprNode, Callable[[float], float]]


@dataclass(frozen=True)
class CoincidenceReport:
    a: float
    b: float
    n: int
    norm: Norm
    distance: float
    argmax_x: float | None = None

    def to_dict(self) -> dict:
        return {
            "a": self.a, "b": self.b, "n": self.n, "norm": self.norm,
            "distance": self.distance, "argmax_x": self.argmax_x,
        }

    @classmethod
    def from_dict(cls, data: dict) -> CoincidenceReport:
        return cls(**data)


@dataclass(frozen=True)
class EffectiveRadius:
    r_ef: float
    epsilon: float
    n: int
    norm: Norm
    bracket: tuple[float, float]
    binding: bool = True
    side: Side = "both"
    center: float = 0.0

    def to_dict(self) -> dict:
        return {
            "r_ef": self.r_ef, "epsilon": self.epsilon, "n": self.n, "norm": self.norm,
            "bracket": list(self.bracket), "binding": self.binding, "side": self.side,
            "center": self.center,
        }

    @classmethod
    def from_dict(cls, data: dict) -> EffectiveRadius:
        return cls(**{**data, "bracket": tuple(data["bracket"])})


def _as_callable(f: Function) -> Callable[[float], float]:
    if callable(f):
        return f
    return lambda x: eval_ast(f, x)


def function_values(f: Function, grid: Grid) -> list[float]:
    fn = _as_callable(f)
    values = []
    for x in grid.points:
        try:
            v = fn(x)
        except DomainError:
            raise
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise DomainError(f"function undefined on the grid ({exc})", x) from None
        values.append(float(v))
    return values


def difference_vector(f: Function, series: PowerSeries, grid: Grid) -> list[float]:
    vf = function_values(f, grid)
    return [y - evaluate(series, x) for x, y in zip(grid.points, vf)]


def vector_norm(diff: list[float], norm: Norm) -> tuple[float, int]:
    """Norm of ``diff`` and, for ``linf``, the index of the largest entry.

    Sums run in index order so results are reproducible bit for bit.
    """
    if norm == "linf":
        best = 0
        for i, d in enumerate(diff):
            if abs(d) > abs(diff[best]):
                best = i
        return abs(diff[best]), best
    if norm == "l1":
        total = 0.0
        for d in diff:
            total += abs(d)
        return total, -1
    if norm == "l2":
        total = 0.0
        for d in diff:
            total += d * d
        return math.sqrt(total), -1
    raise ValueError(f"unknown norm {norm!r}")


def graph_distance(
    f: Function,
    series: PowerSeries,
    a: float,
    b: float,
    n: int = DEFAULT_N,
    norm: Norm = DEFAULT_NORM,
) -> CoincidenceReport:
    """``||V_f - V_p||`` over an ``n``-point uniform partition of ``[a, b]``.

    ``l1`` and ``l2`` are plain vector norms, not scaled by ``n``.
    """
    if norm not in NORMS:
        raise ValueError(f"unknown norm {norm!r}")
    grid = make_grid(a, b, n)
    diff = difference_vector(f, series, grid)
    dist, idx = vector_norm(diff, norm)
    if not math.isfinite(dist):
        raise NumericError(f"graph distance on [{a}, {b}] is not finite")
    argmax = grid.points[idx] if norm == "linf" else None
    return CoincidenceReport(grid.a, grid.b, grid.n, norm, dist, argmax)


def coincide(
    f: Function,
    series: PowerSeries,
    a: float,
    b: float,
    n: int = DEFAULT_N,
    norm: Norm = DEFAULT_NORM,
    epsilon: float = 0.0,
) -> bool:
    return graph_distance(f, series, a, b, n, norm).distance < epsilon


def interval(center: float, r: float, side: Side = "both") -> tuple[float, float]:
    if side == "both":
        return center - r, center + r
    if side == "right":
        return center, center + r
    if side == "left":
        return center - r, center
    raise ValueError(f"unknown side {side!r}")


def effective_radius(
    f: Function,
    series: PowerSeries,
    x0: float | None = None,
    epsilon: float = 0.1,
    n: int = DEFAULT_N,
    norm: Norm = DEFAULT_NORM,
    r_max: float = DEFAULT_R_MAX,
    side: Side = "both",
) -> EffectiveRadius:
    """Largest half-width ``R`` around ``x0`` where the graph distance stays below ``epsilon``.

    The distance is recomputed on a fresh ``n``-point grid for every trial
    radius, so it need not be monotone in ``R``.  The solver scans
    ``R = r_max * j / 64`` for the first ``j`` with distance >= ``epsilon``,
    then bisects that bracket to relative width ``1e-6`` and returns its
    lower end.  If the distance never reaches ``epsilon`` up to ``r_max``
    the result is ``r_max`` with ``binding=False``.

    ``side`` selects ``[x0-R, x0+R]`` (``both``), ``[x0, x0+R]`` or ``[x0-R, x0]``.
    """
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    if not r_max > 0:
        raise ValueError(f"r_max must be positive, got {r_max!r}")
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    x0 = series.center if x0 is None else float(x0)

    def dist(r: float) -> float:
        a, b = interval(x0, r, side)
        return graph_distance(f, series, a, b, n, norm).distance

    lo = 0.0
    hi = None
    for j in range(1, SCAN_STEPS + 1):
        r = r_max * j / SCAN_STEPS
        if dist(r) >= epsilon:
            hi = r
            break
        lo = r
    if hi is None:
        return EffectiveRadius(r_max, epsilon, n, norm, (r_max, r_max), False, side, x0)

    # distance at lo=0 is taken as 0 (degenerate interval)
    for _ in range(MAX_BISECTIONS):
        if hi - lo <= REL_WIDTH * hi:
            break
        mid = 0.5 * (lo + hi)
        if dist(mid) < epsilon:
            lo = mid
        else:
            hi = mid
    if lo == 0.0:
        raise NumericError(f"graph distance is >= {epsilon!r} even on the narrowest interval tried")
    return EffectiveRadius(lo, epsilon, n, norm, (lo, hi), True, side, x0)
