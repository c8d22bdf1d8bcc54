"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 numeric or domain failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import coincidence as co
from . import estimators as est
from . import plotting
from .errors import NumericError, ParseError
from .expr import parse
from .series import PowerSeries
from .seriesio import load_series, series_to_csv, series_to_json
from .expansion import taylor

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


@dataclass(frozen=True)
class JobConfig:
    command: str
    expr: str | None = None
    series_path: str | None = None
    center: float | None = None
    degree: int = 10
    epsilon: float | None = None
    a: float | None = None
    b: float | None = None
    n_points: int = co.DEFAULT_N
    norm: str = co.DEFAULT_NORM
    convention: str = est.DEFAULT_CONVENTION
    intercept: bool = False
    window: tuple[int | None, int | None] | None = None
    r_max: float = co.DEFAULT_R_MAX
    side: str = "both"
    kind: str = "overlay"
    parity: str = "all"
    out: str | None = None
    format: str | None = None
    precision: int = 4

    def validate(self) -> None:
        if self.command == "taylor" and not self.expr:
            raise UsageError("taylor needs --expr")
        if self.command in ("radius", "ols") and bool(self.expr) == bool(self.series_path):
            raise UsageError(f"{self.command} needs exactly one of --expr or --series")
        if self.command in ("coincide", "effective") and not self.expr:
            raise UsageError(f"{self.command} needs --expr for the function to compare against")
        if self.command == "plot":
            if self.kind == "overlay" and not self.expr:
                raise UsageError("an overlay plot needs --expr")
            if self.kind != "overlay" and not (self.expr or self.series_path):
                raise UsageError("plot needs --expr or --series")
        if self.command == "coincide" or (self.command == "plot" and self.kind == "overlay"):
            if self.a is None or self.b is None:
                raise UsageError("--a and --b are required")
            if not self.a < self.b:
                raise UsageError("need --a < --b")
        if self.command == "effective" and self.epsilon is None:
            raise UsageError("effective needs --epsilon")
        if self.epsilon is not None and self.command == "effective" and self.epsilon <= 0:
            raise UsageError("--epsilon must be positive")
        if self.degree < 0:
            raise UsageError("--degree must be nonnegative")
        if self.n_points < 2:
            raise UsageError("--n-points must be at least 2")
        if self.r_max <= 0:
            raise UsageError("--r-max must be positive")
        if self.precision < 1:
            raise UsageError("--precision must be at least 1")
        allowed = {
            "taylor": ("json", "csv"),
            "radius": ("text", "json", "csv"),
            "ols": ("text", "json", "csv"),
            "coincide": ("text", "json"),
            "effective": ("text", "json"),
            "plot": ("csv", "svg"),
        }[self.command]
        if self.format is not None and self.format not in allowed:
            raise UsageError(f"{self.command} supports --format {', '.join(allowed)}")

    @property
    def output_format(self) -> str:
        if self.format:
            return self.format
        return {"taylor": "json", "plot": "csv"}.get(self.command, "text")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="effradius",
        description="Radius-of-convergence estimates and effective radius for truncated Taylor series.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--expr", help="expression in x, e.g. 'sin(x)'")
        p.add_argument("--series", dest="series_path", help="series file (.json or .csv)")
        p.add_argument("--center", type=float, default=None, help="expansion point (default 0, or the file's)")
        p.add_argument("--degree", type=int, default=10, help="Taylor degree when expanding --expr")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--format", choices=("text", "json", "csv", "svg"))
        p.add_argument("--precision", type=int, default=4, help="significant digits in text output")

    def grid_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n-points", type=int, default=co.DEFAULT_N)
        p.add_argument("--norm", choices=co.NORMS, default=co.DEFAULT_NORM)

    p = sub.add_parser("taylor", help="expand an expression into a series file")
    common(p)

    p = sub.add_parser("radius", help="root-test sequences and the selected estimate")
    common(p)
    p.add_argument("--convention", choices=est.CONVENTIONS, default=est.DEFAULT_CONVENTION)

    p = sub.add_parser("ols", help="least-squares fit of ln|a_n| against n")
    common(p)
    p.add_argument("--intercept", action="store_true", help="fit an intercept as well as a slope")
    p.add_argument("--window", help="restrict to indices n_min:n_max (inclusive)")

    p = sub.add_parser("coincide", help="graph distance between f and its series on [a, b]")
    common(p)
    grid_opts(p)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--epsilon", type=float, help="also report whether the distance is below this")

    p = sub.add_parser("effective", help="effective radius for a tolerance")
    common(p)
    grid_opts(p)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--r-max", type=float, default=co.DEFAULT_R_MAX)
    p.add_argument("--side", choices=co.SIDES, default="both",
                   help="interval shape: [x0-R,x0+R], [x0,x0+R] or [x0-R,x0]")

    p = sub.add_parser("plot", help="CSV or SVG plot data")
    common(p)
    grid_opts(p)
    p.add_argument("--kind", choices=("overlay", "ols", "sequence"), default="overlay")
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--convention", choices=est.CONVENTIONS, default=est.DEFAULT_CONVENTION)
    p.add_argument("--parity", choices=est.PARITY_FILTERS, default="all", help="branch for --kind sequence")
    p.add_argument("--intercept", action="store_true")
    p.add_argument("--window")
    return parser


def config_from_args(ns: argparse.Namespace) -> JobConfig:
    fields = dict(vars(ns))
    try:
        fields["window"] = est.parse_window(fields.get("window"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cfg = JobConfig(**fields)
    cfg.validate()
    return cfg


def _series(cfg: JobConfig) -> PowerSeries:
    if cfg.series_path:
        try:
            return load_series(cfg.series_path, cfg.center)
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.series_path}: {exc.strerror or exc}") from None
        except ValueError as exc:
            raise UsageError(f"bad series file {cfg.series_path}: {exc}") from None
    return taylor(parse(cfg.expr), cfg.center or 0.0, cfg.degree)


def _g(v: float | None, digits: int) -> str:
    return "-" if v is None else f"{v:#.{digits}g}"


def _dumps(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def cmd_taylor(cfg: JobConfig) -> str:
    series = taylor(parse(cfg.expr), cfg.center or 0.0, cfg.degree)
    if cfg.output_format == "csv":
        return series_to_csv(series)
    return series_to_json(series)


def cmd_radius(cfg: JobConfig) -> str:
    series = _series(cfg)
    conv = cfg.convention
    seqs = {}
    for f in est.PARITY_FILTERS:
        try:
            seqs[f] = est.root_sequence(series, conv, f)
        except est.EstimationError:
            seqs[f] = None
    estimate = est.root_estimate(series, conv)
    fmt = cfg.output_format
    if fmt == "json":
        return _dumps({
            "estimate": estimate.to_dict(),
            "sequences": {f: (s.to_dict() if s else None) for f, s in seqs.items()},
        })
    if fmt == "csv":
        rows = [(f, n, r) for f, s in seqs.items() if s for n, r in s.entries]
        return "branch,n,R_n\n" + "".join(f"{f},{n},{r!r}\n" for f, n, r in rows)
    p = cfg.precision
    lines = [f"convention: {conv}", f"parity: {estimate.parity}"]
    for f, s in seqs.items():
        body = "[" + ", ".join(_g(r, p) for r in s.values) + "]" if s else "(empty)"
        flag = "  (divergent tail)" if estimate.divergence_flags.get(f) else ""
        lines.append(f"{f:>4} sequence: {body}{flag}")
    lines.append(f"R_all = {_g(estimate.r_all, p)}  R_even = {_g(estimate.r_even, p)}  R_odd = {_g(estimate.r_odd, p)}")
    lines.append(f"selected ({estimate.selected_branch}): {_g(estimate.selected, p)}")
    lines.append(f"reason: {estimate.selected_reason}")
    return "\n".join(lines) + "\n"


def _fit(cfg: JobConfig, series: PowerSeries) -> est.FitResult:
    return est.ols_estimate(series, cfg.intercept, cfg.window)


def cmd_ols(cfg: JobConfig) -> str:
    fit = _fit(cfg, _series(cfg))
    fmt = cfg.output_format
    if fmt == "json":
        return _dumps(fit.to_dict())
    if fmt == "csv":
        return plotting.to_csv(["n", "ln_abs_a"], plotting.ols_rows(fit))
    p = cfg.precision
    lines = [
        f"model: {'ln|a_n| = b0 + b1*n' if fit.intercept is not None else 'ln|a_n| = b1*n'}",
        f"points used: {len(fit.points_used)} (n = {fit.points_used[0][0]}..{fit.points_used[-1][0]})",
        f"slope b1 = {_g(fit.slope, p)}",
    ]
    if fit.intercept is not None:
        lines.append(f"intercept b0 = {_g(fit.intercept, p)}")
    lines.append(f"residual sum of squares = {_g(fit.residual_sum_squares, p)}")
    lines.append(f"R = exp(-b1) = {_g(fit.radius_estimate, p)}")
    return "\n".join(lines) + "\n"


def cmd_coincide(cfg: JobConfig) -> str:
    f = parse(cfg.expr)
    series = _series(cfg)
    report = co.graph_distance(f, series, cfg.a, cfg.b, cfg.n_points, cfg.norm)
    verdict = None if cfg.epsilon is None else report.distance < cfg.epsilon
    if cfg.output_format == "json":
        data = {"report": report.to_dict()}
        if verdict is not None:
            data["epsilon"] = cfg.epsilon
            data["coincide"] = verdict
        return _dumps(data)
    p = cfg.precision
    lines = [
        f"interval: [{report.a!r}, {report.b!r}], N = {report.n}, norm = {report.norm}",
        f"distance: {_g(report.distance, p)}",
    ]
    if report.argmax_x is not None:
        lines.append(f"largest difference at x = {_g(report.argmax_x, p)}")
    if verdict is not None:
        lines.append(f"coincide at epsilon = {cfg.epsilon!r}: {'yes' if verdict else 'no'}")
    return "\n".join(lines) + "\n"


def cmd_effective(cfg: JobConfig) -> str:
    f = parse(cfg.expr)
    series = _series(cfg)
    result = co.effective_radius(
        f, series, series.center, cfg.epsilon, cfg.n_points, cfg.norm, cfg.r_max, cfg.side
    )
    if cfg.output_format == "json":
        return _dumps(result.to_dict())
    p = cfg.precision
    lo, hi = result.bracket
    lines = [
        f"epsilon = {cfg.epsilon!r}, N = {result.n}, norm = {result.norm}, side = {result.side}",
        f"R_ef = {_g(result.r_ef, p)}",
        f"bracket: [{lo!r}, {hi!r}]",
    ]
    if not result.binding:
        lines.append(f"not binding: distance stays below epsilon up to r-max = {cfg.r_max!r}")
    return "\n".join(lines) + "\n"


def cmd_plot(cfg: JobConfig) -> str:
    svg = cfg.output_format == "svg"
    if cfg.kind == "overlay":
        f = parse(cfg.expr)
        series = _series(cfg)
        rows = plotting.overlay_rows(f, series, cfg.a, cfg.b, cfg.n_points)
        if svg:
            return plotting.overlay_svg(rows, title=f"{cfg.expr} and its degree-{series.degree()} Taylor polynomial")
        return plotting.to_csv(["x", "f", "p"], rows)
    series = _series(cfg)
    if cfg.kind == "ols":
        fit = _fit(cfg, series)
        if svg:
            return plotting.ols_svg(fit, title="log-coefficient data")
        return plotting.to_csv(["n", "ln_abs_a"], plotting.ols_rows(fit))
    seq = est.root_sequence(series, cfg.convention, cfg.parity)
    if svg:
        return plotting.sequence_svg(seq, title=f"root-test sequence ({seq.parity_filter}, {seq.convention})")
    return plotting.to_csv(["n", "R_n"], plotting.sequence_rows(seq))


COMMANDS = {
    "taylor": cmd_taylor,
    "radius": cmd_radius,
    "ols": cmd_ols,
    "coincide": cmd_coincide,
    "effective": cmd_effective,
    "plot": cmd_plot,
}


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run a command; return ``(exit_code, stdout_text, stderr_text)``."""
    try:
        cfg = config_from_args(build_parser().parse_args(list(argv)))
        text = COMMANDS[cfg.command](cfg)
        if cfg.out:
            try:
                Path(cfg.out).write_text(text, encoding="utf-8", newline="\n")
            except OSError as exc:
                raise UsageError(f"cannot write {cfg.out}: {exc.strerror or exc}") from None
            return EXIT_OK, "", ""
        return EXIT_OK, text, ""
    except (UsageError, ParseError) as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    except NumericError as exc:
        return EXIT_NUMERIC, "", f"error: {exc}\n"
    except ValueError as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
