"""
Standalone SVG heatmaps of labelled matrices with values in [0, 1].

The diverging scale is centred on 1/2: values below are drawn in blue, values
above in red, 1/2 itself in the neutral midpoint colour. Absent cells get no
rectangle at all, so the background shows through.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import TYPE_CHECKING, Any, NamedTuple

from importlib_resources import files
from jinja2 import Environment
from matplotlib import colormaps
from matplotlib.colors import CenteredNorm, Normalize, to_hex

from moodgauge.enums import ColorScale
from moodgauge.errors import EmptyInput, InvalidCell, NonFiniteCell
from moodgauge.report.matrix import ABSENT, format_value

if TYPE_CHECKING:
    from matplotlib.colors import Colormap

    from moodgauge.report.matrix import Cell, Matrix

log = logging.getLogger(__name__)

CELL_SIZE = 14
FONT_SIZE = 10
MARGIN = 10
CHAR_WIDTH = 7
LEGEND_STOPS = 11

_SCALES: dict[ColorScale, tuple[str, Normalize]] = {
    ColorScale.DIVERGING: ("RdBu_r", CenteredNorm(vcenter=0.5, halfrange=0.5)),
    ColorScale.SEQUENTIAL: ("YlGnBu", Normalize(vmin=0.0, vmax=1.0)),
}

_CAPTIONS = {
    ColorScale.DIVERGING: "below 0.5 (blue) / above 0.5 (red)",
    ColorScale.SEQUENTIAL: "0 (light) to 1 (dark)",
}


class _Label(NamedTuple):
    x: int
    y: int
    text: str


class _Rect(NamedTuple):
    x: int
    y: int
    fill: str
    tooltip: str


@lru_cache(maxsize=None)
def _environment() -> Environment:
    return Environment(
        autoescape=True,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )


@lru_cache(maxsize=None)
def _template_text() -> str:
    return (
        files("moodgauge")
        .joinpath("data/templates/heatmap.svg.j2")
        .read_text(encoding="utf-8")
    )


def _colormap(scale: ColorScale) -> tuple[Colormap, Normalize]:
    name, norm = _SCALES[scale]
    return colormaps[name], norm


def color_of(value: float, scale: ColorScale = ColorScale.DIVERGING) -> str:
    """Hex colour of a value in [0, 1] on the given scale"""
    cmap, norm = _colormap(scale)
    return to_hex(cmap(float(norm(value))), keep_alpha=False)


def _cell_value(cell: Cell, row: str, col: str) -> float | None:
    if cell is ABSENT:
        return None
    try:
        value = float(cell)
    except (TypeError, ValueError) as err:
        raise InvalidCell(
            f"cell ({row}, {col}) holds {cell!r}, not a number"
        ) from err
    if not math.isfinite(value):
        raise NonFiniteCell(f"cell ({row}, {col}) is not finite: {cell!r}")
    if not 0.0 <= value <= 1.0:
        raise InvalidCell(f"cell ({row}, {col}) = {value} lies outside [0, 1]")
    return value


def emit_heatmap_svg(
    matrix: Matrix,
    color_scale: ColorScale = ColorScale.DIVERGING,
    *,
    title: str = "",
) -> bytes:
    """Render ``matrix`` as a standalone SVG; equal input gives equal bytes"""
    n_rows, n_cols = matrix.shape
    if n_rows == 0 or n_cols == 0:
        raise EmptyInput(f"cannot draw a heatmap of shape {n_rows}x{n_cols}")

    label_width = CHAR_WIDTH * max(len(label) for label in matrix.row_labels)
    header_height = CHAR_WIDTH * max(len(label) for label in matrix.col_labels)
    title_height = FONT_SIZE + 8 if title else 0
    left = MARGIN + label_width + 4
    top = MARGIN + title_height + header_height + 4

    col_labels = [
        _Label(left + j * CELL_SIZE + CELL_SIZE - 3, top - 4, text)
        for j, text in enumerate(matrix.col_labels)
    ]
    row_labels = [
        _Label(left - 4, top + i * CELL_SIZE + CELL_SIZE - 3, text)
        for i, text in enumerate(matrix.row_labels)
    ]

    cells = []
    for i, (row_label, row) in enumerate(zip(matrix.row_labels, matrix.cells)):
        for j, (col_label, cell) in enumerate(zip(matrix.col_labels, row)):
            value = _cell_value(cell, row_label, col_label)
            if value is None:
                continue
            cells.append(
                _Rect(
                    x=left + j * CELL_SIZE,
                    y=top + i * CELL_SIZE,
                    fill=color_of(value, color_scale),
                    tooltip=f"{row_label} / {col_label}: {format_value(cell)}",
                )
            )

    step = CELL_SIZE * 2
    legend_y = top + n_rows * CELL_SIZE + 2 * FONT_SIZE + 8
    stops = [k / (LEGEND_STOPS - 1) for k in range(LEGEND_STOPS)]
    legend: dict[str, Any] = {
        "x": left,
        "y": legend_y,
        "step": step,
        "caption": _CAPTIONS[color_scale],
        "stops": [
            {"x": left + k * step, "fill": color_of(value, color_scale)}
            for k, value in enumerate(stops)
        ],
        "ticks": [
            {"x": left + k * step + step // 2, "text": text}
            for k, text in (
                (0, "0"),
                (LEGEND_STOPS // 2, "0.5"),
                (LEGEND_STOPS - 1, "1"),
            )
        ],
    }

    width = max(left + n_cols * CELL_SIZE, left + LEGEND_STOPS * step) + MARGIN
    height = legend_y + CELL_SIZE + FONT_SIZE + 2 + MARGIN

    svg = (
        _environment()
        .from_string(_template_text())
        .render(
            title=title,
            width=width,
            height=height,
            margin=MARGIN,
            font_size=FONT_SIZE,
            cell_size=CELL_SIZE,
            col_labels=col_labels,
            row_labels=row_labels,
            cells=cells,
            legend=legend,
        )
    )
    log.debug("rendered %sx%s heatmap with %s cells", n_rows, n_cols, len(cells))
    return svg.encode("utf-8")
