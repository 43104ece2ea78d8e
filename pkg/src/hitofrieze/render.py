"""Character-grid and SVG renderings of both sides of a frieze.

The reverse is drawn as seen in a mirror held behind the fabric, so both
blocks share the same left/right and up/down sense and are cell-wise
complementary.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from xml.sax.saxutils import quoteattr

import numpy as np

from .classify import classify
from .pattern import FriezePattern

V_GLYPH = "|"
H_GLYPH = "-"
VERTEX = "+"


class SideOrder(enum.Enum):
    FRONT_ABOVE_BACK = "front-above-back"


@dataclass(frozen=True)
class RenderOptions:
    periods: int = 2
    cell_size: float = 20.0
    gap_rows: int = 1
    side_order: SideOrder = SideOrder.FRONT_ABOVE_BACK

    def __post_init__(self) -> None:
        if self.periods < 1:
            raise ValueError("periods must be >= 1")
        if self.cell_size <= 0:
            raise ValueError("cell_size must be positive")
        if self.gap_rows < 0:
            raise ValueError("gap_rows must be >= 0")


def presence_grid(p: FriezePattern, periods: int) -> tuple[np.ndarray, np.ndarray]:
    """Front presence tiled over ``periods`` translation periods: ``V (W, h-1)``, ``H (W, h)``."""
    V, H = p.presence_arrays
    return np.tile(V, (periods, 1)), np.tile(H, (periods, 1))


def _ascii_block(V: np.ndarray, H: np.ndarray) -> list[str]:
    W, h = H.shape
    lines = []
    for j in range(h - 1, -1, -1):
        lines.append("".join(VERTEX + (H_GLYPH if H[i, j] else " ") for i in range(W)) + VERTEX)
        if j > 0:
            lines.append("".join((V_GLYPH if V[i, j - 1] else " ") + " " for i in range(W)) + " ")
    return lines


def render_ascii(p: FriezePattern, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions()
    V, H = presence_grid(p, opts.periods)
    front = _ascii_block(V, H)
    back = _ascii_block(1 - V, 1 - H)
    band = [" " * len(front[0])] * max(opts.gap_rows, 1)
    return "\n".join(front + band + back) + "\n"


def parse_ascii(text: str, height: int) -> tuple[tuple[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]:
    """Read a rendering back into ``((V, H) front, (V, H) back)`` presence arrays."""
    lines = text.split("\n")
    rows = 2 * height - 1
    blocks, k = [], 0
    while len(blocks) < 2:
        while k < len(lines) and not lines[k].strip():
            k += 1
        if k + rows > len(lines):
            raise ValueError("rendering truncated")
        blocks.append(lines[k : k + rows])
        k += rows
    out = []
    for block in blocks:
        W = (len(block[0]) - 1) // 2
        V = np.zeros((W, height - 1), dtype=np.uint8)
        H = np.zeros((W, height), dtype=np.uint8)
        for r, line in enumerate(block):
            line = line.ljust(2 * W + 1)
            if r % 2 == 0:
                j = height - 1 - r // 2
                for i in range(W):
                    H[i, j] = line[2 * i + 1] == H_GLYPH
            else:
                j = height - 2 - r // 2
                for i in range(W):
                    V[i, j] = line[2 * i] == V_GLYPH
        out.append((V, H))
    return out[0], out[1]


_STYLE = {"front": "#1f3a5f", "back": "#a23b2a"}


def _svg_lines(V, H, cell, top, margin) -> list[str]:
    W, h = H.shape
    out = []

    def ypix(j):
        return top + (h - 1 - j) * cell

    for i in range(W):
        for j in range(h - 1):
            if V[i, j]:
                x0 = margin + i * cell
                out.append(f'<line x1="{x0:g}" y1="{ypix(j):g}" x2="{x0:g}" y2="{ypix(j + 1):g}"/>')
        for j in range(h):
            if H[i, j]:
                x0 = margin + i * cell
                out.append(f'<line x1="{x0:g}" y1="{ypix(j):g}" x2="{x0 + cell:g}" y2="{ypix(j):g}"/>')
    return out


def render_svg(p: FriezePattern, opts: RenderOptions | None = None, label: str | None = None) -> str:
    """Standalone SVG; one ``<line>`` per present stitch, front group above back group."""
    opts = opts or RenderOptions()
    if label is None:
        label = classify(p).label
    V, H = presence_grid(p, opts.periods)
    W, h = H.shape
    cell = opts.cell_size
    margin = cell
    block = (h - 1) * cell
    back_top = margin + block + opts.gap_rows * cell
    width = 2 * margin + W * cell
    height = back_top + block + margin
    meta = json.dumps({"x": str(p.x), "y": str(p.y), "label": label, "period": p.period, "periods": opts.periods})
    stroke = max(cell / 6, 1)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}" data-x="{p.x}" data-y="{p.y}" data-label={quoteattr(label)} '
        f'data-period="{p.period}">',
        f"<metadata>{meta}</metadata>",
        f"<title>{label}  x={p.x}  y={p.y}</title>",
    ]
    for side, (v, hh, top) in (("front", (V, H, margin)), ("back", (1 - V, 1 - H, back_top))):
        parts.append(
            f'<g id="{side}" stroke="{_STYLE[side]}" stroke-width="{stroke:g}" stroke-linecap="round" fill="none">'
        )
        parts.extend(_svg_lines(v, hh, cell, top, margin))
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
