import re
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from hitofrieze.pattern import SegmentId, back_present, front_present, new_frieze
from hitofrieze.render import RenderOptions, parse_ascii, presence_grid, render_ascii, render_svg

SVG = "{http://www.w3.org/2000/svg}"


def presence_sum(p, periods, orientation):
    total = 0
    for i in range(periods * p.period):
        if orientation == "V":
            total += sum(front_present(p, SegmentId.v(i, j)) for j in range(p.height - 1))
        else:
            total += sum(front_present(p, SegmentId.h(i, j)) for j in range(p.height))
    return total


def test_ascii_glyph_count():
    p = new_frieze("10", "1010")
    text = render_ascii(p, RenderOptions(periods=1))
    front = text.split("\n")[: 2 * p.height - 1]
    assert sum(line.count("|") for line in front) == presence_sum(p, 1, "V")
    assert sum(line.count("-") for line in front) == presence_sum(p, 1, "H")


def test_ascii_blocks_complementary_and_round_trip():
    p = new_frieze("0011", "01110")
    (fv, fh), (bv, bh) = parse_ascii(render_ascii(p), p.height)
    assert (fv ^ bv).all() and (fh ^ bh).all()
    for i in range(fv.shape[0]):
        for j in range(p.height - 1):
            assert fv[i, j] == front_present(p, SegmentId.v(i, j))
            assert bv[i, j] == back_present(p, SegmentId.v(i, j))
        for j in range(p.height):
            assert fh[i, j] == front_present(p, SegmentId.h(i, j))


def test_ascii_layout():
    p = new_frieze("10", "1010")
    lines = render_ascii(p, RenderOptions(periods=2, gap_rows=2)).rstrip("\n").split("\n")
    assert len(lines) == 2 * (2 * p.height - 1) + 2
    assert all(len(line) == 2 * 2 * p.period + 1 for line in lines)
    # top line of the front block is the top row
    assert lines[0] == "+ +-+ +-+"


def test_ascii_deterministic():
    p = new_frieze("011", "010")
    assert render_ascii(p) == render_ascii(p)


def test_svg_front_count_and_metadata():
    p = new_frieze("01", "0100")
    doc = render_svg(p, RenderOptions(periods=2))
    root = ET.fromstring(doc.split("\n", 1)[1])
    groups = {g.get("id"): g for g in root.iter(f"{SVG}g")}
    n_front = len(groups["front"].findall(f"{SVG}line"))
    n_back = len(groups["back"].findall(f"{SVG}line"))
    assert n_front == presence_sum(p, 2, "V") + presence_sum(p, 2, "H")
    slots = 2 * p.period * ((p.height - 1) + p.height)
    assert n_front + n_back == slots
    assert root.get("data-x") == "01" and root.get("data-y") == "0100"
    assert groups["front"].get("stroke-linecap") == "round"


def test_svg_label_metadata():
    doc = render_svg(new_frieze("001", "1010"))
    assert re.search(r'data-label="pma2"', doc)
    assert '"label": "pma2"' in doc


def test_svg_stroke_length_and_gap():
    p = new_frieze("10", "1010")
    opts = RenderOptions(periods=1, cell_size=10, gap_rows=3)
    root = ET.fromstring(render_svg(p, opts).split("\n", 1)[1])
    ys = {}
    for g in root.iter(f"{SVG}g"):
        ys[g.get("id")] = []
        for ln in g.findall(f"{SVG}line"):
            x1, y1, x2, y2 = (float(ln.get(k)) for k in ("x1", "y1", "x2", "y2"))
            assert np.hypot(x2 - x1, y2 - y1) == pytest.approx(10)
            ys[g.get("id")] += [y1, y2]
    assert min(ys["back"]) - max(ys["front"]) == pytest.approx(3 * 10)


def test_options_validated():
    with pytest.raises(ValueError):
        RenderOptions(periods=0)
    with pytest.raises(ValueError):
        RenderOptions(cell_size=0)


def test_presence_grid_tiles():
    p = new_frieze("001", "1010")
    V, H = presence_grid(p, 3)
    assert V.shape == (3 * p.period, p.height - 1) and H.shape == (3 * p.period, p.height)
