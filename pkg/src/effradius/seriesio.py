"""Reading and writing series files.

JSON: ``{"center": 0.0, "coeffs": [a_0, a_1, ...]}``.
CSV: header ``n,a_n`` followed by one row per coefficient; omitted indices
are zero.  A CSV file carries no center, so the caller supplies one.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .series import PowerSeries, series_from_terms


def series_to_json(series: PowerSeries) -> str:
    return json.dumps({"center": series.center, "coeffs": list(series.coeffs)}, indent=2) + "\n"


def series_from_json(text: str) -> PowerSeries:
    data = json.loads(text)
    if not isinstance(data, dict) or "coeffs" not in data:
        raise ValueError('series JSON must be an object with a "coeffs" array')
    return PowerSeries(data["coeffs"], data.get("center", 0.0))


def series_to_csv(series: PowerSeries) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "a_n"])
    for n, c in enumerate(series.coeffs):
        writer.writerow([n, repr(c)])
    return buf.getvalue()


def series_from_csv(text: str, center: float = 0.0) -> PowerSeries:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != ["n", "a_n"]:
        raise ValueError("series CSV must start with the header 'n,a_n'")
    terms: dict[int, float] = {}
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 2:
            raise ValueError(f"line {lineno}: expected 2 columns, got {len(row)}")
        try:
            n = int(row[0])
            value = float(row[1])
        except ValueError:
            raise ValueError(f"line {lineno}: cannot parse {row!r}") from None
        if n in terms:
            raise ValueError(f"line {lineno}: duplicate index {n}")
        terms[n] = value
    if not terms:
        raise ValueError("series CSV has no rows")
    return series_from_terms(sorted(terms.items()), center)


def load_series(path: str | Path, center: float | None = None) -> PowerSeries:
    """Load a ``.json`` or ``.csv`` series file (decided by extension, JSON otherwise).

    ``center`` overrides the file's center when given.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".csv":
        return series_from_csv(text, 0.0 if center is None else center)
    series = series_from_json(text)
    if center is not None and center != series.center:
        series = PowerSeries(series.coeffs, center)
    return series
