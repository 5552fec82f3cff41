from __future__ import annotations

from decimal import Decimal
from fractions import Fraction

import pytest

from moodgauge.errors import NonFiniteCell, ShapeMismatch
from moodgauge.report import (
    ABSENT,
    Matrix,
    emit_matrix,
    emit_matrix_csv,
    emit_table_csv,
    format_value,
    parse_matrix_csv,
)

from tests.const import GOLDEN_DIR


@pytest.mark.parametrize(
    "cell, expected",
    [
        (ABSENT, ""),
        ("2020-W11", "2020-W11"),
        (0, "0"),
        (42, "42"),
        (Fraction(1, 2), "0.500000"),
        (Fraction(1, 3), "0.333333"),
        (Fraction(2, 3), "0.666667"),
        (Fraction(0), "0.000000"),
        (Decimal("21345.67"), "21345.670000"),
        (0.25, "0.250000"),
    ],
)
def test_format_value(cell, expected: str):
    assert format_value(cell) == expected


def test_format_value_rejects_booleans():
    with pytest.raises(TypeError):
        format_value(True)


@pytest.mark.parametrize("cell", [float("nan"), float("inf"), Decimal("NaN")])
def test_format_value_rejects_non_finite(cell):
    with pytest.raises(NonFiniteCell):
        format_value(cell)


def test_emit_matrix_csv():
    content = emit_matrix_csv(
        ["ITA", "GRC"],
        ["2020-W10", "2020-W11"],
        [[Fraction(1, 2), ABSENT], [Fraction(1, 4), 1]],
        corner="country",
    )
    assert content == (
        b"country,2020-W10,2020-W11\r\n"
        b"ITA,0.500000,\r\n"
        b"GRC,0.250000,1\r\n"
    )


def test_absent_is_not_zero():
    content = emit_matrix_csv(["ITA"], ["a", "b"], [[0, ABSENT]], corner="country")
    assert content.endswith(b"ITA,0,\r\n")


@pytest.mark.parametrize(
    "rows, cols, cells",
    [
        (["ITA"], ["a"], []),
        (["ITA"], ["a", "b"], [[1]]),
        (["ITA", "GRC"], ["a"], [[1], [1, 2]]),
    ],
)
def test_shape_mismatch(rows, cols, cells):
    with pytest.raises(ShapeMismatch):
        emit_matrix_csv(rows, cols, cells)
    with pytest.raises(ShapeMismatch):
        Matrix(tuple(rows), tuple(cols), tuple(tuple(row) for row in cells))


def test_matrix_build():
    matrix = Matrix.build(
        ["ITA", "GRC"],
        [0, 1, 2],
        lambda row, col: ABSENT if (row, col) == ("GRC", 1) else col,
        corner="country",
    )

    assert matrix.shape == (2, 3)
    assert matrix.col_labels == ("0", "1", "2")
    assert matrix.present_values() == [0.0, 1.0, 2.0, 0.0, 2.0]


def test_emit_table_csv_quotes_fields():
    content = emit_table_csv(("week", "detail"), [["2020-W11", "bad, very bad"]])
    assert content == b'week,detail\r\n2020-W11,"bad, very bad"\r\n'


def test_emit_table_csv_without_rows():
    assert emit_table_csv(("week", "rank"), []) == b"week,rank\r\n"


def test_parse_matrix_csv_reads_labels_and_absent_cells():
    matrix = Matrix(
        row_labels=("ITA:FTSEMIB", "GRC:ATHEX"),
        col_labels=("0", "1"),
        cells=((Fraction(1, 2), Fraction(3, 4)), (ABSENT, 1)),
        corner="pair",
    )

    parsed = parse_matrix_csv(emit_matrix(matrix))

    assert parsed.corner == "pair"
    assert parsed.row_labels == matrix.row_labels
    assert parsed.col_labels == matrix.col_labels
    assert parsed.cells == (("0.500000", "0.750000"), (ABSENT, "1"))


def test_emit_matrix_matches_golden_file(small_mood_matrix: Matrix):
    golden = (GOLDEN_DIR / "matrix_small.csv").read_bytes()

    assert emit_matrix(small_mood_matrix) == golden
    assert emit_matrix(parse_matrix_csv(golden)) == golden
