from __future__ import annotations

import logging
from dataclasses import dataclass
from datetime import date
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, NamedTuple, Union

from moodgauge.const import SCALE_MAX
from moodgauge.enums import SeriesKind
from moodgauge.errors import InvalidSeries

if TYPE_CHECKING:
    from typing import Iterable, Iterator, Mapping

log = logging.getLogger(__name__)

# Houses the time grid t = 1, ..., T; equality is exact-day equality
TradingDate = date

PriceLike = Union[Decimal, Fraction, int, float, str]


def as_decimal(value: PriceLike) -> Decimal:
    """
    Convert a price to an exact Decimal. Floats go through their shortest
    round-tripping representation, so ``as_decimal(0.1) == Decimal("0.1")``.
    """
    if isinstance(value, bool):
        raise InvalidSeries(f"{value!r} is not a price")
    if isinstance(value, Decimal):
        result = value
    elif isinstance(value, Fraction):
        raise InvalidSeries(
            f"{value!r} is a Fraction, prices must have a finite decimal expansion"
        )
    else:
        try:
            result = Decimal(repr(value) if isinstance(value, float) else str(value))
        except InvalidOperation as err:
            raise InvalidSeries(f"{value!r} is not a number") from err

    if not result.is_finite():
        raise InvalidSeries(f"{value!r} is not a finite price")
    return result


class Observation(NamedTuple):
    date: TradingDate
    value: int | Decimal


@dataclass(frozen=True)
class ObservationSeries:
    """
    A dated sequence of either attention (search) values or closing prices.

    Search values are integers on the provider's 0..100 scale, prices are exact
    nonnegative decimals. Dates are strictly increasing and the series is never
    empty.
    """

    points: tuple[Observation, ...]
    kind: SeriesKind

    def __post_init__(self) -> None:
        if not self.points:
            raise InvalidSeries(f"A {self.kind} series needs at least one point")

        previous: TradingDate | None = None
        for point in self.points:
            if not isinstance(point.date, date):
                raise InvalidSeries(f"{point.date!r} is not a date")
            if previous is not None and point.date <= previous:
                raise InvalidSeries(
                    f"dates must be strictly increasing, {point.date} follows {previous}"
                )
            previous = point.date
            self._check_value(point.value)

    def _check_value(self, value: int | Decimal) -> None:
        if self.kind is SeriesKind.SEARCH:
            if type(value) is not int or not 0 <= value <= SCALE_MAX:
                raise InvalidSeries(
                    f"search values are integers in [0, {SCALE_MAX}], got {value!r}"
                )
            return

        if not isinstance(value, Decimal) or not value.is_finite() or value < 0:
            raise InvalidSeries(
                f"price values are finite nonnegative decimals, got {value!r}"
            )

    @classmethod
    def from_values(
        cls,
        dates: Iterable[TradingDate],
        values: Iterable[int | PriceLike],
        kind: SeriesKind,
    ) -> ObservationSeries:
        """Build a series from parallel iterables, converting prices to Decimal"""
        dates = tuple(dates)
        values = tuple(values)
        if len(dates) != len(values):
            raise InvalidSeries(
                f"got {len(dates)} dates but {len(values)} values for a {kind} series"
            )
        if kind is SeriesKind.PRICE:
            values = tuple(as_decimal(v) for v in values)
        return cls(
            points=tuple(Observation(d, v) for d, v in zip(dates, values)),  # type: ignore[arg-type]
            kind=kind,
        )

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Observation]:
        return iter(self.points)

    @property
    def dates(self) -> tuple[TradingDate, ...]:
        return tuple(p.date for p in self.points)

    @property
    def values(self) -> tuple[int | Decimal, ...]:
        return tuple(p.value for p in self.points)

    @property
    def start(self) -> TradingDate:
        return self.points[0].date

    @property
    def end(self) -> TradingDate:
        return self.points[-1].date

    @cached_property
    def by_date(self) -> Mapping[TradingDate, int | Decimal]:
        return {p.date: p.value for p in self.points}

    def since(self, first_day: TradingDate) -> ObservationSeries:
        """The points dated on or after ``first_day``; never empty"""
        kept = tuple(p for p in self.points if p.date >= first_day)
        return ObservationSeries(points=kept, kind=self.kind)
