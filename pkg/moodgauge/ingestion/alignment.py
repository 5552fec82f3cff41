"""
Reduction of an attention series and a price series to a common trading-day grid.

The trading calendar is whatever the price file records: a date is a trading day
iff it has a price row. The attention series starts on its first nonnull day and
is reduced to the trading days from then on.
"""

from __future__ import annotations

import logging
from itertools import dropwhile
from typing import TYPE_CHECKING

from moodgauge.enums import SeriesKind
from moodgauge.errors import (
    AllZero,
    InsufficientOverlap,
    InvalidSeries,
    MissingSearchValue,
)
from moodgauge.helpers import logged_function
from moodgauge.indicators.normalization import normalize_prices
from moodgauge.model import AlignedPair, CountryCode, ObservationSeries

if TYPE_CHECKING:
    from decimal import Decimal

    from moodgauge.model import CountryCodeLike, TradingDate

log = logging.getLogger(__name__)


def _require_kind(series: ObservationSeries, kind: SeriesKind) -> None:
    if series.kind is not kind:
        raise InvalidSeries(f"expected a {kind} series, got a {series.kind} series")


def trim_to_first_nonnull(search: ObservationSeries) -> ObservationSeries:
    """
    Drop the leading zeros of an attention series. Zeros after the first nonnull
    value are kept.
    """
    _require_kind(search, SeriesKind.SEARCH)
    for point in search:
        if point.value > 0:
            return search.since(point.date)
    raise AllZero(f"none of the {len(search)} search values is above zero")


@logged_function(log)
def align(
    search: ObservationSeries,
    price: ObservationSeries,
    *,
    country: CountryCodeLike = "XXX",
    index_id: str = "INDEX",
    allow_search_gaps: bool = False,
) -> AlignedPair:
    """
    Pair the attention series with the prices of one index.

    The grid holds the trading days from the first nonnull search day to the last
    search day. A trading day inside that span without a search row is an error
    unless ``allow_search_gaps`` is set, in which case the day is left out. Grid
    days before the first trading day with a nonnull search value are dropped, so
    trimming the search series first gives the same pair. Prices are normalized
    over the resulting grid.
    """
    _require_kind(search, SeriesKind.SEARCH)
    _require_kind(price, SeriesKind.PRICE)
    country = CountryCode.parse(country)
    label = f"{country}:{index_id}"

    search = trim_to_first_nonnull(search)
    search_values = search.by_date

    grid: list[tuple[TradingDate, int, Decimal]] = []
    gaps: list[TradingDate] = []
    for point in price:
        if not search.start <= point.date <= search.end:
            continue
        if point.date not in search_values:
            gaps.append(point.date)
            continue
        grid.append((point.date, search_values[point.date], point.value))  # type: ignore[arg-type]

    if gaps:
        if not allow_search_gaps:
            raise MissingSearchValue(
                f"{label}: {len(gaps)} trading day(s) have no search value, first on "
                f"{gaps[0]}"
            )
        log.warning(
            "%s: dropping %s trading day(s) without a search value, first on %s",
            label,
            len(gaps),
            gaps[0],
        )

    # the first nonnull search day may have been a non-trading day
    grid = list(dropwhile(lambda row: row[1] == 0, grid))
    if len(grid) < 2:
        raise InsufficientOverlap(
            f"{label}: {len(grid)} common trading day(s) from {search.start}, "
            "at least 2 are needed"
        )

    dates, w, raw_prices = zip(*grid)
    pair = AlignedPair(
        country=country,
        index_id=index_id,
        dates=dates,
        w=w,
        p_norm=normalize_prices(raw_prices),
        raw_prices=raw_prices,
    )
    if not pair.search_peak_on_grid:
        log.warning(
            "%s: search peak on the trading-day grid is %s, the maximum of the "
            "attention series fell on a non-trading day",
            label,
            pair.search_peak,
        )
    return pair
