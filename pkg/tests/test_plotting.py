import xml.etree.ElementTree as ET

import pytest

from effradius.estimators import ols_estimate, root_sequence
from effradius.plotting import (
    Line,
    line_chart_svg,
    ols_svg,
    overlay_rows,
    overlay_svg,
    sequence_svg,
    to_csv,
)

NS = "{http://www.w3.org/2000/svg}"


def _check_svg(text, polylines=2):
    root = ET.fromstring(text)
    assert root.get("width") == "800" and root.get("height") == "600"
    assert len(root.findall(f".//{NS}polyline")) == polylines
    return root


def test_overlay_rows_and_csv(sine):
    f, s = sine
    rows = overlay_rows(f, s, -8.0, 8.0, 100)
    assert len(rows) == 100
    x, fv, pv = rows[-1]
    assert x == 8.0 and abs(fv - pv) > 1
    text = to_csv(["x", "f", "p"], rows)
    lines = text.split("\n")
    assert lines[0] == "x,f,p" and len(lines) == 102 and lines[-1] == ""
    assert "\r" not in text


def test_overlay_svg(sine):
    f, s = sine
    rows = overlay_rows(f, s, -8.0, 8.0, 100)
    root = _check_svg(overlay_svg(rows, title="sin & P<11>"))
    assert root.find(f".//{NS}clipPath") is not None
    assert overlay_svg(rows) == overlay_svg(rows)


def test_ols_and_sequence_svg(rational):
    fit = ols_estimate(rational[1])
    _check_svg(ols_svg(fit))
    _check_svg(sequence_svg(root_sequence(rational[1], "stated")))


def test_line_chart_degenerate_ranges():
    _check_svg(line_chart_svg([Line("flat", (1.0,), (2.0,))]), polylines=1)


def test_line_chart_rejects_bad_data():
    with pytest.raises(ValueError):
        line_chart_svg([Line("bad", (1.0, 2.0), (1.0,))])
    with pytest.raises(ValueError):
        line_chart_svg([])
