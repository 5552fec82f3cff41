"""
Labelled matrices and their CSV serialization.

A cell is a number, a preformatted string, or absent (``None``). Absent cells are
written as empty fields, never as 0, since 0 is a meaningful indicator value.
"""

from __future__ import annotations

import io
import logging
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import TYPE_CHECKING, Union

import pandas as pd

from moodgauge.const import CSV_LINE_TERMINATOR, VALUE_DECIMALS
from moodgauge.errors import NonFiniteCell, ShapeMismatch

if TYPE_CHECKING:
    from typing import Callable, Iterable, Sequence

log = logging.getLogger(__name__)

Cell = Union[Fraction, Decimal, float, int, str, None]

ABSENT = None


@dataclass(frozen=True)
class Matrix:
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    cells: tuple[tuple[Cell, ...], ...]
    corner: str = ""

    def __post_init__(self) -> None:
        check_shape(self.row_labels, self.col_labels, self.cells)

    @classmethod
    def build(
        cls,
        row_labels: Iterable[object],
        col_labels: Iterable[object],
        lookup: Callable[[object, object], Cell],
        corner: str = "",
    ) -> Matrix:
        """Fill a matrix by calling ``lookup(row, col)`` for every position"""
        rows, cols = tuple(row_labels), tuple(col_labels)
        return cls(
            row_labels=tuple(str(row) for row in rows),
            col_labels=tuple(str(col) for col in cols),
            cells=tuple(tuple(lookup(row, col) for col in cols) for row in rows),
            corner=corner,
        )

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def present_values(self) -> list[float]:
        return [
            float(cell) for row in self.cells for cell in row if cell is not ABSENT
        ]


def check_shape(
    row_labels: Sequence[str],
    col_labels: Sequence[str],
    cells: Sequence[Sequence[Cell]],
) -> None:
    if len(cells) != len(row_labels):
        raise ShapeMismatch(
            f"{len(row_labels)} row labels but {len(cells)} rows of cells"
        )
    for label, row in zip(row_labels, cells):
        if len(row) != len(col_labels):
            raise ShapeMismatch(
                f"row {label!r} has {len(row)} cells for {len(col_labels)} columns"
            )


def format_value(cell: Cell) -> str:
    """
    Render one cell: absent as an empty field, strings unchanged, integers as
    integers and any other number with six decimals.
    """
    if cell is ABSENT:
        return ""
    if isinstance(cell, str):
        return cell
    if isinstance(cell, bool):
        raise TypeError(f"{cell!r} is not a matrix value")
    if isinstance(cell, int):
        return str(cell)
    value = float(cell)
    if not math.isfinite(value):
        raise NonFiniteCell(f"cannot write non-finite value {cell!r}")
    # round exact values directly rather than their float approximation
    if isinstance(cell, Decimal):
        return f"{cell:.{VALUE_DECIMALS}f}"
    if isinstance(cell, Fraction):
        exact = Decimal(cell.numerator) / Decimal(cell.denominator)
        return f"{exact:.{VALUE_DECIMALS}f}"
    return f"{value:.{VALUE_DECIMALS}f}"


def emit_matrix_csv(
    row_labels: Sequence[str],
    col_labels: Sequence[str],
    cells: Sequence[Sequence[Cell]],
    corner: str = "",
) -> bytes:
    """
    RFC 4180 CSV with CRLF line endings: a header row holding ``corner`` and the
    column labels, then one row per row label.
    """
    check_shape(row_labels, col_labels, cells)
    frame = pd.DataFrame(
        [[format_value(cell) for cell in row] for row in cells],
        index=pd.Index(list(row_labels), name=corner, dtype=object),
        columns=list(col_labels),
        dtype=object,
    )
    buffer = io.StringIO()
    frame.to_csv(buffer, lineterminator=CSV_LINE_TERMINATOR)
    return buffer.getvalue().encode("utf-8")


def emit_matrix(matrix: Matrix) -> bytes:
    return emit_matrix_csv(
        matrix.row_labels, matrix.col_labels, matrix.cells, matrix.corner
    )


def emit_table_csv(header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> bytes:
    """A plain table: header row, then one formatted line per row"""
    frame = pd.DataFrame(
        [[format_value(cell) for cell in row] for row in rows],
        columns=list(header),
        dtype=object,
    )
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator=CSV_LINE_TERMINATOR)
    return buffer.getvalue().encode("utf-8")


def parse_matrix_csv(content: bytes) -> Matrix:
    """Read back a matrix written by :func:`emit_matrix_csv`; cells stay text"""
    frame = pd.read_csv(
        io.BytesIO(content),
        dtype=str,
        keep_default_na=False,
        index_col=0,
    )
    return Matrix(
        row_labels=tuple(str(label) for label in frame.index),
        col_labels=tuple(str(label) for label in frame.columns),
        cells=tuple(
            tuple(cell if cell != "" else ABSENT for cell in row)
            for row in frame.itertuples(index=False, name=None)
        ),
        corner="" if frame.index.name is None else str(frame.index.name),
    )
