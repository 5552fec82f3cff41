"""
Parsing of the two-column ``date,value`` input files.

Every cell is read as text so that prices keep their exact decimal value and
search values can be checked for being integers.
"""

from __future__ import annotations

import io
import logging
import re
from datetime import datetime
from decimal import Decimal, InvalidOperation
from typing import TYPE_CHECKING

import pandas as pd

from moodgauge.const import CSV_HEADER, ISO_DATE_FORMAT, SCALE_MAX
from moodgauge.enums import SeriesKind
from moodgauge.errors import (
    EmptySeries,
    MalformedRow,
    NonMonotoneDates,
    OutOfRange,
)
from moodgauge.helpers import logged_function
from moodgauge.model import Observation, ObservationSeries

if TYPE_CHECKING:
    from moodgauge.model import TradingDate

log = logging.getLogger(__name__)

_INTEGER_RE = re.compile(r"^[+-]?\d+$")


def _read_frame(csv_bytes: bytes) -> pd.DataFrame:
    try:
        text = csv_bytes.decode("utf-8-sig")
    except UnicodeDecodeError as err:
        raise MalformedRow(f"input is not valid UTF-8: {err}") from err

    if not text.strip():
        raise EmptySeries("input holds neither a header nor any rows")

    # No header inference: the header row fixes the field count, so a row with
    # extra fields is a parser error instead of becoming an index column
    try:
        frame = pd.read_csv(
            io.StringIO(text),
            header=None,
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
        )
    except pd.errors.EmptyDataError as err:
        raise EmptySeries("input holds neither a header nor any rows") from err
    except pd.errors.ParserError as err:
        raise MalformedRow(f"wrong number of fields: {err}") from err

    header = tuple(
        "" if pd.isna(cell) else str(cell).strip() for cell in frame.iloc[0]
    )
    if header != CSV_HEADER:
        raise MalformedRow(
            f"expected header {','.join(CSV_HEADER)!r}, got {','.join(header)!r}"
        )
    return frame.iloc[1:]


def _parse_date(text: str, date_format: str, line: int) -> TradingDate:
    try:
        return datetime.strptime(text, date_format).date()
    except ValueError as err:
        raise MalformedRow(
            f"line {line}: cannot parse {text!r} with date format {date_format!r}"
        ) from err


def _parse_search_value(text: str, line: int) -> int:
    if not _INTEGER_RE.match(text):
        raise MalformedRow(f"line {line}: search value {text!r} is not an integer")
    value = int(text)
    if not 0 <= value <= SCALE_MAX:
        raise OutOfRange(
            f"line {line}: search value {value} is outside [0, {SCALE_MAX}]"
        )
    return value


def _parse_price(text: str, line: int) -> Decimal:
    try:
        value = Decimal(text)
    except InvalidOperation as err:
        raise MalformedRow(f"line {line}: price {text!r} is not a number") from err
    if not value.is_finite():
        raise MalformedRow(f"line {line}: price {text!r} is not a finite number")
    if value < 0:
        raise OutOfRange(f"line {line}: price {text} is negative")
    return value


@logged_function(log)
def parse_series(
    csv_bytes: bytes, kind: SeriesKind, date_format: str = ISO_DATE_FORMAT
) -> ObservationSeries:
    """
    Parse a UTF-8 ``date,value`` CSV (LF or CRLF line endings) into a series.

    Rows must be in strictly increasing date order; a date seen twice is a
    malformed row, never resolved by keeping one of the values.
    """
    frame = _read_frame(csv_bytes)
    if frame.empty:
        raise EmptySeries(f"{kind} input has a header but no rows")

    points: list[Observation] = []
    seen: set[TradingDate] = set()
    for line, (date_text, value_text) in enumerate(
        frame.itertuples(index=False, name=None), start=2
    ):
        if pd.isna(date_text) or pd.isna(value_text):
            raise MalformedRow(f"line {line}: expected 2 fields")

        day = _parse_date(str(date_text).strip(), date_format, line)
        if day in seen:
            raise MalformedRow(f"line {line}: date {day} appears more than once")
        if points and day < points[-1].date:
            raise NonMonotoneDates(
                f"line {line}: date {day} comes after {points[-1].date}"
            )
        seen.add(day)

        value_text = str(value_text).strip()
        value = (
            _parse_search_value(value_text, line)
            if kind is SeriesKind.SEARCH
            else _parse_price(value_text, line)
        )
        points.append(Observation(day, value))

    log.debug(
        "parsed %s %s rows from %s to %s",
        len(points),
        kind,
        points[0].date,
        points[-1].date,
    )
    return ObservationSeries(points=tuple(points), kind=kind)
